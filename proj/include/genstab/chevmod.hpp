#pragma once

#include <functional>
#include <string>
#include <vector>

#include "genstab/form.hpp"
#include "genstab/linalg.hpp"
#include "genstab/rootsys.hpp"

namespace genstab {

/// One-parameter family x(t) = I + t C1 + t^2 C2 + ...
struct RootElementFamily {
    std::string label;
    int root = -1;  // index in the owning root system, -1 when not a root element
    std::vector<Matrix> coeffs;

    Matrix at(const FieldElement& t) const;
    const Matrix& linear() const { return coeffs.front(); }
};

/// A concrete module: basis, invariant form, root-element families and Lie algebra image.
struct ExplicitModule {
    std::string name;
    FieldDescriptor field;
    int dim = 0;
    FormKind form = FormKind::Orthogonal;
    Matrix gram;                     // f(b_i, b_j)
    std::vector<FieldElement> quad;  // Q(b_i), orthogonal modules only
    std::vector<RootElementFamily> families;
    std::vector<Matrix> lie_basis;
    std::vector<std::string> basis_labels;

    FieldElement bilinear(const Vector& u, const Vector& v) const;
    /// Q(v) = sum v_i^2 Q(b_i) + sum_{i<j} v_i v_j f(b_i, b_j); f(v,v)/2 is not used.
    FieldElement quadratic(const Vector& v) const;
    /// g preserves f and, for orthogonal modules, Q.
    bool preserves_form(const Matrix& g) const;
    /// X is skew for f (Lie algebra condition).
    bool lie_preserves_form(const Matrix& x) const;
    const RootElementFamily& family(const std::string& label) const;
};

enum class HyperbolicOrder {
    Interleaved,  // (v0,) e1, f1, ..., el, fl
    Split,        // e1..el, f1..fl (, v0)
    Mirrored      // e1..el, fl..f1 (, v0)
};

/// Natural module of B_l, C_l or D_l with the hyperbolic root-element formulas.
/// C_1 is realised through A_1 with alpha = 2 eps_1.
ExplicitModule natural_module(char series, int rank, const FieldDescriptor& field,
                              HyperbolicOrder order = HyperbolicOrder::Interleaved);

/// Adjoint module on the Chevalley basis (e_roots in root order, then h_1..h_l).
ExplicitModule adjoint_module(const RootSystem& rs, const FieldDescriptor& field);

/// A2 adjoint modulo <h1 - h2> in characteristic 3; basis e_{a1..a6}, h_{a1}.
ExplicitModule a2_adjoint_quotient(const FieldDescriptor& field);
/// Torus element h_{alpha_i}(kappa) on the A2 quotient.
Matrix a2_quotient_torus(int simple, const FieldElement& kappa);

/// 14-dimensional constituent of Lambda^2 of the C3 natural module, basis v1..v14.
ExplicitModule c3_lambda2(const FieldDescriptor& field);
/// Coordinates of a Lambda^2 vector in the v1..v14 basis.
Matrix c3_lambda2_basis(const FieldDescriptor& field);
/// Action of a 6x6 symplectic matrix (basis e1,e2,e3,f1,f2,f3) on v1..v14.
Matrix c3_lambda2_action(const Matrix& g, const FieldDescriptor& field);

/// Adjoint Sp4 on 4x4 matrices in basis order (e1, e2, f1, f2), Q(v) = Trace(v^2).
ExplicitModule sp4_adjoint(const FieldDescriptor& field);
/// 4x4 matrices forming the sp4 basis used by sp4_adjoint.
std::vector<Matrix> sp4_basis(const FieldDescriptor& field);
/// Coordinates of an sp4 matrix in that basis.
Vector sp4_coordinates(const Matrix& v, const FieldDescriptor& field);
/// Conjugation action of a 4x4 symplectic matrix on sp4.
Matrix sp4_action(const Matrix& g, const FieldDescriptor& field);

/// V1 (x) V2 with product form and product root families.
ExplicitModule tensor_module(const ExplicitModule& a, const ExplicitModule& b);

/// Twisted A1 module M2(K) with g.v = g^T v g^sigma, sigma = p^s Frobenius, Q = det.
struct TwistedA1Module {
    ExplicitModule module;
    int frobenius_power = 1;
    Matrix act(const Matrix& g) const;
};
TwistedA1Module a1_twisted_module(const FieldDescriptor& field, int frobenius_power = 1);

enum class ZeroWeightFamily { ClLambda2, A2, A3p2, G2, B2 };
/// Quadratic form restricted to the zero weight space, in the family's coordinates.
FieldElement zero_weight_form(ZeroWeightFamily family, const std::vector<FieldElement>& a);
ZeroWeightFamily parse_zero_weight_family(const std::string& s);

/// Kronecker product.
Matrix kron(const Matrix& a, const Matrix& b);
/// Quadratic forms sum_{i<=j} q_ij x_i x_j fixed by every generator, as columns of q_ij in row-major pair order.
Matrix invariant_quadratic_forms(const std::vector<Matrix>& gens, const FieldDescriptor& field);
/// Installs the quadratic form with pair coefficients q (scaled to a leading 1) as gram and quad.
void apply_quadratic_form(ExplicitModule& m, const Vector& q);
/// Appends commutators [X_a, X_{-a}] for simple roots a to lie_basis.
void add_cartan_elements(ExplicitModule& m, const RootSystem& rs);

}  // namespace genstab
