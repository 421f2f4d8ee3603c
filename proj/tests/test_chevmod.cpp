#include <random>

#include "a2_golden.hpp"
#include "doctest.h"
#include "genstab/chevmod.hpp"
#include "genstab/verify.hpp"

using namespace genstab;

namespace {

bool equal(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            if (a(i, j) != b(i, j)) return false;
    return true;
}

bool equal_up_to_scalar(const Matrix& a, const Matrix& b) {
    FieldElement s;
    bool found = false;
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero() != b(i, j).is_zero()) return false;
            if (a(i, j).is_zero()) continue;
            if (!found) {
                s = a(i, j) / b(i, j);
                found = true;
            } else if (a(i, j) != s * b(i, j)) {
                return false;
            }
        }
    return true;
}

Vector unit(int n, int i, const FieldDescriptor& f) {
    Vector v = Vector::Constant(n, FieldElement::zero(f));
    v(i) = FieldElement::one(f);
    return v;
}

// Lambda^2 of a 6-space on pairs i < j of (e1, e2, e3, f1, f2, f3).
struct Wedge {
    FieldDescriptor f;
    std::vector<std::pair<int, int>> pairs;
    explicit Wedge(const FieldDescriptor& fd) : f(fd) {
        for (int i = 0; i < 6; ++i)
            for (int j = i + 1; j < 6; ++j) pairs.emplace_back(i, j);
    }
    int index(int i, int j) const {
        for (std::size_t k = 0; k < pairs.size(); ++k)
            if (pairs[k] == std::make_pair(i, j)) return static_cast<int>(k);
        return -1;
    }
    Vector wedge(const Vector& x, const Vector& y) const {
        Vector w = Vector::Constant(15, FieldElement::zero(f));
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            auto [i, j] = pairs[k];
            w(static_cast<Eigen::Index>(k)) = x(i) * y(j) - x(j) * y(i);
        }
        return w;
    }
    Vector basis(int i, int j, const FieldElement& c) const {
        Vector w = Vector::Constant(15, FieldElement::zero(f));
        w(index(i, j)) = c;
        return w;
    }
    static FieldElement omega(int i, int j, const FieldDescriptor& f) {
        if (j == i + 3) return FieldElement::one(f);
        if (i == j + 3) return FieldElement::integer(f, -1);
        return FieldElement::zero(f);
    }
    // B(x^y, z^w) = omega(x,z) omega(y,w) - omega(x,w) omega(y,z)
    FieldElement form(const Vector& a, const Vector& b) const {
        FieldElement s = FieldElement::zero(f);
        for (std::size_t k = 0; k < pairs.size(); ++k)
            for (std::size_t l = 0; l < pairs.size(); ++l) {
                auto [x, y] = pairs[k];
                auto [z, w] = pairs[l];
                FieldElement c = a(static_cast<Eigen::Index>(k)) * b(static_cast<Eigen::Index>(l));
                if (c.is_zero()) continue;
                s += c * (omega(x, z, f) * omega(y, w, f) - omega(x, w, f) * omega(y, z, f));
            }
        return s;
    }
    // v1..v14 with alpha, beta the roots of x^2 + x + 1
    std::vector<Vector> v_basis(const FieldElement& alpha, const FieldElement& beta) const {
        auto one = FieldElement::one(f);
        std::vector<Vector> v{basis(0, 1, one), basis(0, 2, one), basis(1, 2, one), basis(0, 5, one), basis(1, 5, one),
                              basis(0, 4, one)};
        for (const auto& a : {alpha, beta}) v.push_back(basis(0, 3, one) + basis(1, 4, a) + basis(2, 5, a * a));
        v.push_back(basis(1, 3, one));
        v.push_back(basis(2, 4, one));
        v.push_back(basis(2, 3, one));
        v.push_back(basis(4, 5, one));
        v.push_back(basis(3, 5, one));
        v.push_back(basis(3, 4, one));
        return v;
    }
};

}  // namespace

TEST_CASE("A2 quotient matrices equal the printed ones coefficient by coefficient") {
    for (auto f : {FieldDescriptor::finite(3), FieldDescriptor::finite(3, 2)}) {
        auto m = a2_adjoint_quotient(f);
        for (const auto& [label, printed] : golden::a2_quotient_matrices()) {
            CAPTURE(label);
            const auto& fam = m.family(label);
            CHECK(equal(golden::printed_coefficients(printed, 0, f), identity(7, f)));
            REQUIRE(fam.coeffs.size() >= 1);
            CHECK(equal(fam.coeffs[0], golden::printed_coefficients(printed, 1, f)));
            Matrix c2 = fam.coeffs.size() > 1 ? fam.coeffs[1] : zeros(7, 7, f);
            CHECK(equal(c2, golden::printed_coefficients(printed, 2, f)));
            for (std::size_t d = 2; d < fam.coeffs.size(); ++d) CHECK(equal(fam.coeffs[d], zeros(7, 7, f)));
            for (const auto& t : all_elements(f)) CHECK(equal(fam.at(t), golden::printed_at(printed, t, f)));
        }
    }
}

TEST_CASE("A2 quotient torus and form") {
    auto f = FieldDescriptor::finite(3, 2);
    auto m = a2_adjoint_quotient(f);
    for (const auto& k : all_elements(f)) {
        if (k.is_zero()) continue;
        CHECK(equal(a2_quotient_torus(0, k), golden::printed_torus(0, k)));
        CHECK(equal(a2_quotient_torus(1, k), golden::printed_torus(1, k)));
    }
    Matrix b = golden::printed_form(f);
    CHECK(equal_up_to_scalar(m.gram, b));
    for (const auto& fam : m.families)
        for (const auto& t : all_elements(f)) {
            Matrix g = fam.at(t);
            CHECK(equal(Matrix(g.transpose() * b * g), b));
        }
    CHECK(m.lie_basis.size() == 8);
    CHECK_THROWS_AS(a2_adjoint_quotient(FieldDescriptor::finite(5)), std::invalid_argument);
}

TEST_CASE("A2 quotient: W3 has a two-dimensional Lie stabilizer") {
    auto f = FieldDescriptor::finite(3);
    auto m = a2_adjoint_quotient(f);
    Matrix w(7, 3);
    w << unit(7, 0, f), unit(7, 1, f), unit(7, 5, f);
    CHECK(is_totally_singular(w, m));
    CHECK(lie_stabilizer_dim(m.lie_basis, w) == 2);
}

TEST_CASE("root element commutator follows the structure constant") {
    RootSystem rs('A', 2);
    for (auto f : {FieldDescriptor::rational(), FieldDescriptor::finite(3)}) {
        auto m = f.characteristic() == 3 ? a2_adjoint_quotient(f) : adjoint_module(rs, f);
        auto xa = m.family("x[1,0]"), xb = m.family("x[0,1]"), xab = m.family("x[1,1]");
        auto one = FieldElement::one(f);
        Matrix c = xa.at(one) * xb.at(one) * xa.at(-one) * xb.at(-one);
        CHECK(equal(c, xab.at(FieldElement::integer(f, rs.structure_constant(0, 1)))));
    }
}

TEST_CASE("natural module root elements") {
    auto q = FieldDescriptor::rational();
    auto t = FieldElement(mpq_class(3, 7));
    auto d4 = natural_module('D', 4, q);
    REQUIRE(d4.basis_labels[0] == "e1");
    REQUIRE(d4.basis_labels[2] == "e2");
    Vector e2 = unit(8, 2, q);
    CHECK(equal(Matrix(d4.family("x[1,0,0,0]").at(t) * e2), Matrix(e2 + t * unit(8, 0, q))));

    auto b3 = natural_module('B', 3, q);
    REQUIRE(b3.basis_labels[0] == "v0");
    Matrix x = b3.family("x[1,1,1]").at(t);
    Vector v0 = unit(7, 0, q), e1 = unit(7, 1, q), f1 = unit(7, 2, q);
    CHECK(equal(Matrix(x * v0), Matrix(v0 + FieldElement(2) * t * e1)));
    CHECK(equal(Matrix(x * f1), Matrix(f1 - t * v0 - t * t * e1)));

    for (auto [s, l, f] : std::vector<std::tuple<char, int, FieldDescriptor>>{
             {'B', 3, q}, {'C', 3, FieldDescriptor::finite(5)}, {'D', 5, FieldDescriptor::finite(3, 2)}, {'C', 1, q}}) {
        auto m = natural_module(s, l, f, HyperbolicOrder::Mirrored);
        for (const auto& fam : m.families) {
            CHECK(equal(fam.at(FieldElement::zero(f)), identity(m.dim, f)));
            CHECK(m.preserves_form(fam.at(FieldElement::integer(f, 2))));
        }
        for (const auto& x : m.lie_basis) CHECK(m.lie_preserves_form(x));
    }
    CHECK_THROWS(natural_module('A', 3, q));
}

TEST_CASE("C3 Lambda^2 constituent") {
    auto f = FieldDescriptor::finite(7);
    auto m = c3_lambda2(f);
    REQUIRE(m.dim == 14);
    Wedge w(f);
    auto alpha = FieldElement::integer(f, 2), beta = FieldElement::integer(f, 4);
    REQUIRE((alpha * alpha + alpha + FieldElement::one(f)).is_zero());
    auto v = w.v_basis(alpha, beta);
    for (int i = 0; i < 14; ++i)
        for (int j = 0; j < 14; ++j) {
            CAPTURE(i);
            CAPTURE(j);
            CHECK(m.gram(i, j) == w.form(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(j)]));
        }
    CHECK(w.form(v[6], v[6]).is_zero());
    CHECK(w.form(v[6], v[7]) == FieldElement::integer(f, 3));
    CHECK(m.quadratic(unit(14, 6, f)).is_zero());
    for (const auto& fam : m.families)
        for (int t = 1; t < 7; ++t) CHECK(m.preserves_form(fam.at(FieldElement::integer(f, t))));

    auto a = FieldElement::integer(f, 2), b = FieldElement::integer(f, 3), c = FieldElement::integer(f, 5);
    Matrix d = zeros(6, 6, f);
    d(0, 0) = a;
    d(1, 1) = b;
    d(2, 2) = c;
    d(3, 3) = a.inverse();
    d(4, 4) = b.inverse();
    d(5, 5) = c.inverse();
    Matrix act = c3_lambda2_action(d, f);
    CHECK(equal(Matrix(act * unit(14, 0, f)), Matrix(a * b * unit(14, 0, f))));
}

TEST_CASE("C3 Lambda^2 action agrees with g x ^ g y") {
    auto f = FieldDescriptor::finite(7);
    auto nat = natural_module('C', 3, f, HyperbolicOrder::Split);
    Wedge w(f);
    auto v = w.v_basis(FieldElement::integer(f, 2), FieldElement::integer(f, 4));
    Matrix basis(15, 14);
    for (int i = 0; i < 14; ++i) basis.col(i) = v[static_cast<std::size_t>(i)];
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        Matrix g = identity(6, f);
        for (int s = 0; s < 4; ++s) {
            const auto& fam = nat.families[rng() % nat.families.size()];
            g = g * fam.at(FieldElement::integer(f, static_cast<long>(rng() % 7)));
        }
        Matrix act = c3_lambda2_action(g, f);
        for (int i = 0; i < 14; ++i) {
            Vector image = Vector::Constant(15, FieldElement::zero(f));
            const Vector& x = v[static_cast<std::size_t>(i)];
            for (int k = 0; k < 15; ++k) {
                if (x(k).is_zero()) continue;
                auto [a, b] = w.pairs[static_cast<std::size_t>(k)];
                image += x(k) * w.wedge(Vector(g.col(a)), Vector(g.col(b)));
            }
            CHECK(equal(Matrix(basis * act.col(i)), Matrix(image)));
        }
    }
}

TEST_CASE("sp4 adjoint module") {
    auto f = FieldDescriptor::finite(5);
    auto m = sp4_adjoint(f);
    CHECK(m.dim == 10);
    CHECK(sp4_basis(f).size() == 10);
    std::mt19937_64 rng(5);
    auto nat = natural_module('C', 2, f, HyperbolicOrder::Split);
    for (int trial = 0; trial < 30; ++trial) {
        Matrix g = identity(4, f);
        for (int s = 0; s < 3; ++s)
            g = g * nat.families[rng() % nat.families.size()].at(FieldElement::integer(f, static_cast<long>(rng() % 5)));
        Vector c = Vector::Constant(10, FieldElement::zero(f));
        for (int i = 0; i < 10; ++i) c(i) = FieldElement::integer(f, static_cast<long>(rng() % 5));
        Matrix x = zeros(4, 4, f);
        for (int i = 0; i < 10; ++i) x += c(i) * sp4_basis(f)[static_cast<std::size_t>(i)];
        CHECK(equal(Matrix(sp4_coordinates(x, f)), Matrix(c)));
        Vector y = sp4_action(g, f) * c;
        CHECK(m.quadratic(y) == m.quadratic(c));
        CHECK(m.preserves_form(sp4_action(g, f)));
    }
}

TEST_CASE("tensor products") {
    auto f = FieldDescriptor::rational();
    auto c1 = natural_module('C', 1, f), c2 = natural_module('C', 2, f), b2 = natural_module('B', 2, f);
    CHECK(tensor_module(c1, c2).form == FormKind::Orthogonal);
    CHECK(tensor_module(c1, b2).form == FormKind::Symplectic);
    CHECK(tensor_module(c1, c2).dim == 8);
    for (const auto& fam : tensor_module(c1, c2).families)
        CHECK(tensor_module(c1, c2).preserves_form(fam.at(FieldElement(3))));
    auto f2 = FieldDescriptor::finite(2, 2);
    auto t = tensor_module(natural_module('C', 1, f2), natural_module('C', 2, f2));
    CHECK(t.form == FormKind::Orthogonal);
    Matrix w(8, 1);
    w.col(0) = kron(unit(2, 0, f2), unit(4, 0, f2));
    CHECK(t.quadratic(Vector(w.col(0))).is_zero());
    CHECK(is_totally_singular(w, t));
}

TEST_CASE("twisted A1 module") {
    auto f = FieldDescriptor::finite(3, 2);
    auto tw = a1_twisted_module(f);
    CHECK(tw.module.dim == 4);
    Matrix id = identity(2, f);
    CHECK(equal(tw.act(id), identity(4, f)));
    // Q = det on M2, so a vector is singular iff its matrix has rank at most one
    for (const auto& a : all_elements(f))
        for (const auto& d : {FieldElement::zero(f), FieldElement::one(f), FieldElement::generator(f)}) {
            Vector v(4);
            v << a, FieldElement::one(f), a * d, d;
            Matrix mv(2, 2);
            mv << v(0), v(1), v(2), v(3);
            CHECK(tw.module.quadratic(v).is_zero() == (rank(mv) <= 1));
        }
}

TEST_CASE("zero weight forms") {
    auto q = FieldDescriptor::rational();
    CHECK(zero_weight_form(ZeroWeightFamily::ClLambda2, {FieldElement(1), FieldElement(-1), FieldElement(0), FieldElement(0)}) ==
          FieldElement(1));
    auto c3 = FieldDescriptor::cyclotomic(3);
    auto w = FieldElement::generator(c3), a = FieldElement(mpq_class(2, 5)).in(c3);
    CHECK(zero_weight_form(ZeroWeightFamily::A2, {a, w * a}).is_zero());
    auto c4 = FieldDescriptor::cyclotomic(4);
    CHECK(zero_weight_form(ZeroWeightFamily::B2, {FieldElement::one(c4), FieldElement::generator(c4)}).is_zero());
    CHECK_FALSE(zero_weight_form(ZeroWeightFamily::B2, {FieldElement(1), FieldElement(1)}).is_zero());
    CHECK(parse_zero_weight_family("G2") == ZeroWeightFamily::G2);
    CHECK_THROWS(parse_zero_weight_family("E9"));
}

TEST_CASE("invariant quadratic forms") {
    auto f = FieldDescriptor::finite(5);
    auto m = natural_module('B', 2, f);
    std::vector<Matrix> gens;
    for (const auto& fam : m.families) gens.push_back(fam.at(FieldElement::one(f)));
    CHECK(invariant_quadratic_forms(gens, f).cols() == 1);
    CHECK(kron(identity(2, f), identity(3, f)).rows() == 6);
}

TEST_CASE("adjoint modules") {
    for (auto [t, l] : std::vector<std::pair<char, int>>{{'A', 2}, {'B', 2}, {'G', 2}, {'C', 3}}) {
        RootSystem rs(t, l);
        auto m = adjoint_module(rs, FieldDescriptor::rational());
        CHECK(m.dim == group_dim(t, l));
        CHECK(static_cast<int>(m.lie_basis.size()) == m.dim);
        for (const auto& fam : m.families) CHECK(m.preserves_form(fam.at(FieldElement(mpq_class(-2, 3)))));
    }
}
