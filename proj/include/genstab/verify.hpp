#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "genstab/chevmod.hpp"
#include "genstab/linalg.hpp"
#include "genstab/report.hpp"

namespace genstab {

/// Raised when a closure or census exceeds its configured cap.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t default_closure_cap = 1000000;
inline constexpr std::size_t default_census_cap = 10000000;

/// f vanishes on W x W and, for orthogonal modules, Q vanishes on the basis and on pairwise sums.
bool is_totally_singular(const FieldSubspace& w, const ExplicitModule& m);
bool is_totally_singular(const Matrix& columns, const ExplicitModule& m);

/// g W = W; throws std::invalid_argument when g is singular or dimensions differ.
bool fixes_subspace(const Matrix& g, const FieldSubspace& w);
bool fixes_subspace(const Matrix& g, const Matrix& columns);

/// Dimension of {sum c_i X_i : (sum c_i X_i) W in W}, computed on the coefficient space of the basis.
int lie_stabilizer_dim(const std::vector<Matrix>& basis, const FieldSubspace& w);
int lie_stabilizer_dim(const std::vector<Matrix>& basis, const Matrix& columns);

struct GroupClosure {
    std::vector<Matrix> elements;  // identity first, then breadth-first order
    std::size_t order() const { return elements.size(); }
};
/// All products of the generators; throws CapExceeded past `cap` elements.
GroupClosure group_closure(const std::vector<Matrix>& gens, const FieldDescriptor& field,
                           std::size_t cap = default_closure_cap);

/// Number of totally singular k-spaces of a polar space of rank r and parameter e over GF(q)
/// (e = 0 for O+(2r), 1 for O(2r+1) and Sp(2r), 2 for O-(2r+2)).
std::uint64_t polar_space_count(int r, int e, std::uint64_t q, int k);

/// All totally singular k-spaces of a module over a finite field, as canonical subspaces.
/// With `component` set (orthogonal, k = dim/2) only spaces meeting it in codimension 0 mod 2 are kept.
std::vector<FieldSubspace> totally_singular_subspaces(const ExplicitModule& m, int k,
                                                      const std::optional<FieldSubspace>& component = std::nullopt,
                                                      std::size_t cap = default_census_cap);

struct OrbitCensus {
    std::size_t points = 0;                  // enumerated totally singular k-spaces
    std::vector<std::size_t> orbit_sizes;    // descending
    std::size_t singular_vectors = 0;        // nonzero singular vectors found by a full pass over V
    std::optional<std::uint64_t> independent_count;  // from singular_vectors and the polar-space formula
};
/// Orbits of the group generated by gens on the totally singular k-spaces (union-find over canonical keys).
OrbitCensus orbit_census(const std::vector<Matrix>& gens, const ExplicitModule& m, int k,
                         const std::optional<FieldSubspace>& component = std::nullopt,
                         std::size_t cap = default_census_cap);

struct CaseOptions {
    std::optional<long> characteristic;
    std::optional<int> conductor;
    std::uint64_t seed = 20240531;
    std::size_t closure_cap = default_closure_cap;
    std::size_t census_cap = default_census_cap;
};

/// Registered case ids in a fixed order.
std::vector<std::string> case_ids();
bool has_case(const std::string& id);
/// Runs the scripted checks of one case; throws std::invalid_argument for unknown ids.
VerificationReport case_verify(const std::string& id, const CaseOptions& opts = {});

/// Case ids accepted by orbit_case.
std::vector<std::string> census_case_ids();
/// Census of a registered group action over GF(q), with checks on the point count.
VerificationReport orbit_case(const std::string& id, std::int64_t q, int k = 1, std::size_t cap = default_census_cap);

}  // namespace genstab
