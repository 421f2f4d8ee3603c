#pragma once

#include <cstdint>

#include "genstab/report.hpp"

namespace genstab {

inline constexpr std::uint64_t default_seed = 20240531;

/// Randomised invariants: form preservation, one-parameter laws, Clifford associativity and
/// squares, weight-space orthogonality and rref canonicality, each on `instances` draws.
VerificationReport property_suite(std::uint64_t seed = default_seed, int instances = 1000);

}  // namespace genstab
