#pragma once

#include <string>

namespace genstab {

enum class FormKind { Orthogonal, Symplectic };

std::string to_string(FormKind f);
/// Accepts "orthogonal" or "symplectic".
FormKind parse_form_kind(const std::string& s);

}  // namespace genstab
