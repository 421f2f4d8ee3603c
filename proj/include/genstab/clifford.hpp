#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "genstab/chevmod.hpp"

namespace genstab {

/// Element of the Clifford algebra of the hyperbolic 2n-space with basis e_1..e_n, f_1..f_n.
///
/// Monomials are bitmasks over generator indices 0..2n-1 (e_i is i-1, f_i is n+i-1),
/// read as the product of the generators in increasing index order.
class CliffordElement {
public:
    CliffordElement() = default;
    CliffordElement(int n, const FieldDescriptor& f) : n_(n), field_(f) {}

    static CliffordElement scalar(int n, const FieldDescriptor& f, const FieldElement& c);
    static CliffordElement e(int n, const FieldDescriptor& f, int i);
    static CliffordElement f(int n, const FieldDescriptor& fd, int i);
    /// Monomial e_S for a set of 1-based e indices.
    static CliffordElement e_monomial(int n, const FieldDescriptor& f, const std::vector<int>& indices);

    int n() const { return n_; }
    const FieldDescriptor& field() const { return field_; }
    const std::map<std::uint32_t, FieldElement>& terms() const { return terms_; }
    FieldElement coefficient(std::uint32_t mask) const;
    bool is_zero() const { return terms_.empty(); }
    /// Scalar part when the element is a scalar.
    bool is_scalar() const;

    CliffordElement& operator+=(const CliffordElement& o);
    CliffordElement& operator-=(const CliffordElement& o);
    friend CliffordElement operator+(CliffordElement a, const CliffordElement& b) { return a += b; }
    friend CliffordElement operator-(CliffordElement a, const CliffordElement& b) { return a -= b; }
    friend CliffordElement operator*(const CliffordElement& a, const CliffordElement& b);
    friend CliffordElement operator*(const FieldElement& c, CliffordElement a);
    friend bool operator==(const CliffordElement& a, const CliffordElement& b);

    /// Reversal anti-automorphism.
    CliffordElement reversal() const;
    /// Inverse for elements with s s^rev a nonzero scalar (Clifford group); throws otherwise.
    CliffordElement inverse() const;

    void add_term(std::uint32_t mask, const FieldElement& c);
    std::string to_string() const;

private:
    int n_ = 0;
    FieldDescriptor field_;
    std::map<std::uint32_t, FieldElement> terms_;
};

/// Clifford product expanding in the canonical monomial basis.
CliffordElement cl_mul(const CliffordElement& a, const CliffordElement& b);

/// A polynomial in t with Clifford coefficients; entry k is the t^k coefficient.
using CliffordPoly = std::vector<CliffordElement>;
/// (1 + t*u) for a Clifford element u.
CliffordPoly cl_linear(const CliffordElement& u);
CliffordPoly cl_poly_mul(const CliffordPoly& a, const CliffordPoly& b);
CliffordElement cl_poly_at(const CliffordPoly& p, const FieldElement& t);

/// Spinor basis given as e-monomial masks.
struct SpinorBasis {
    int n = 0;
    std::vector<std::uint32_t> masks;
    std::vector<std::string> labels;
};
/// The 16 spinors v1..v16 of the B4 spin module (n = 5).
SpinorBasis b4_spinor_basis();
/// Even spinors of D4 (n = 4): 1, e1e2, e1e3, e1e4, e2e3, e2e4, e3e4, e1e2e3e4.
SpinorBasis d4_even_spinor_basis();

/// s x e_M = y e_M with x, y in C_L; returns y.
CliffordElement spin_action(const CliffordElement& s, const CliffordElement& x);
/// Matrix of spin_action(s, .) on the spinor basis; throws if the image leaves the span.
Matrix spin_matrix(const CliffordElement& s, const SpinorBasis& basis);
/// Coordinates of an e-only Clifford element in a spinor basis.
Vector spinor_coordinates(const CliffordElement& x, const SpinorBasis& basis);
/// Matrix of v -> s v s^{-1} on e_1..e_n, f_1..f_n.
Matrix vector_rep(const CliffordElement& s);

/// x_alpha(t) of B4 = Spin9 in Clifford form, alpha an index of RootSystem('B', 4).
CliffordPoly b4_root_element(int root, const FieldDescriptor& f);
/// x_alpha(t) of B3 inside the D4 Clifford algebra (B3 fixes e4 - f4).
CliffordPoly b3_root_element(int root, const FieldDescriptor& f);
/// n_alpha(kappa) = x_alpha(kappa) x_{-alpha}(-1/kappa) x_alpha(kappa).
CliffordElement b4_weyl_element(int root, const FieldElement& kappa);
/// h_alpha(kappa) = n_alpha(kappa) n_alpha(1)^{-1}.
CliffordElement b4_torus_element(int root, const FieldElement& kappa);

/// B4 spin module on v1..v16 with Q = antidiag(1,-1,1,-1,1,-1,1,-1,0,...) read as sum_i s_i a_i a_{17-i}.
ExplicitModule b4_spin_module(const FieldDescriptor& f);
/// B3 spin module on the D4 even spinors; its quadratic form is solved for.
ExplicitModule b3_spin_module(const FieldDescriptor& f);

/// Data attached to the B4 spin cases.
struct B4CaseData {
    Matrix phi;                          // V8 -> V8' on v1..v16, zero on V8'
    std::vector<CliffordPoly> a2_gens;   // the A2 generators for p != 3
    CliffordElement tau2;                // h_{a1}(-1) n1 n2 n1 n3 n4 n3 n2 n1
    std::vector<std::pair<int, int>> tau2_printed_cycles;
    std::vector<CliffordPoly> a2_gens_p3;
    Matrix w_p3;                         // 16 x 8 basis of the p = 3 space
    CliffordElement tau_p3;              // h1(-1) h2(-1) h3(-1) h4(i) n_{0122}
    std::vector<std::pair<int, int>> tau_p3_printed_cycles;
};
B4CaseData b4_case_data(const FieldDescriptor& f);

/// {v + lambda phi(v)} as 16 x 8 basis columns.
Matrix b4_w_lambda(const B4CaseData& d, const FieldElement& lambda);
/// The characteristic 2 family W_abc as 16 x 8 basis columns.
Matrix b4_w_abc(const FieldDescriptor& f, const FieldElement& a, const FieldElement& b, const FieldElement& c);
/// Generators of A_1^{(i-1)}(lambda), i in {2, 3, 4}.
std::vector<CliffordPoly> b4_a1_generators(const FieldDescriptor& f, int i, const FieldElement& lambda);

/// Root permutation induced by conjugation with g on the spin module (0-based root indices),
/// or an empty vector if g does not normalise the root groups.
std::vector<int> b4_root_permutation(const CliffordElement& g, const ExplicitModule& spin);
/// Cycles of a permutation with 1-based points, fixed points omitted.
std::vector<std::pair<int, int>> involution_cycles(const std::vector<int>& perm);

}  // namespace genstab
