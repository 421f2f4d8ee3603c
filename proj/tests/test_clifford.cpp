#include <map>
#include <random>

#include "doctest.h"
#include "genstab/clifford.hpp"
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

// Normal form by rewriting words in the generators: x x = 0 and y x = -x y + B(x, y) for x < y,
// where B(e_i, f_i) = 1 and all other pairings vanish.
std::map<std::uint32_t, FieldElement> rewrite(int n, std::vector<std::pair<std::vector<int>, FieldElement>> todo) {
    std::map<std::uint32_t, FieldElement> out;
    while (!todo.empty()) {
        auto [w, c] = todo.back();
        todo.pop_back();
        std::size_t k = 0;
        while (k + 1 < w.size() && w[k] < w[k + 1]) ++k;
        if (k + 1 >= w.size()) {
            std::uint32_t mask = 0;
            for (int g : w) mask |= 1u << g;
            auto it = out.find(mask);
            if (it == out.end()) out.emplace(mask, c);
            else it->second += c;
            continue;
        }
        int y = w[k], x = w[k + 1];
        if (x == y) continue;
        auto swapped = w;
        std::swap(swapped[k], swapped[k + 1]);
        todo.emplace_back(swapped, -c);
        if (std::abs(x - y) == n) {
            std::vector<int> shorter(w.begin(), w.begin() + static_cast<long>(k));
            shorter.insert(shorter.end(), w.begin() + static_cast<long>(k) + 2, w.end());
            todo.emplace_back(shorter, c);
        }
    }
    for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

std::vector<int> word_of(std::uint32_t mask) {
    std::vector<int> w;
    for (int g = 0; g < 32; ++g)
        if (mask & (1u << g)) w.push_back(g);
    return w;
}

std::map<std::uint32_t, FieldElement> oracle_product(const CliffordElement& a, const CliffordElement& b) {
    std::vector<std::pair<std::vector<int>, FieldElement>> todo;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            auto w = word_of(ma);
            auto wb = word_of(mb);
            w.insert(w.end(), wb.begin(), wb.end());
            todo.emplace_back(w, ca * cb);
        }
    return rewrite(a.n(), todo);
}

CliffordElement random_element(std::mt19937_64& rng, int n, const FieldDescriptor& f) {
    CliffordElement x(n, f);
    int terms = static_cast<int>(rng() % 4) + 1;
    for (int i = 0; i < terms; ++i)
        x.add_term(static_cast<std::uint32_t>(rng() % (1u << (2 * n))), FieldElement::integer(f, static_cast<long>(rng() % 7) - 3));
    return x;
}

CliffordElement E(int n, const FieldDescriptor& f, int i) { return CliffordElement::e(n, f, i); }
CliffordElement F(int n, const FieldDescriptor& f, int i) { return CliffordElement::f(n, f, i); }
CliffordElement scalar(int n, const FieldDescriptor& f, long c) {
    return CliffordElement::scalar(n, f, FieldElement::integer(f, c));
}

Matrix hyperbolic_gram(int n, const FieldDescriptor& f) {
    Matrix j = zeros(2 * n, 2 * n, f);
    for (int i = 0; i < n; ++i) j(i, n + i) = j(n + i, i) = FieldElement::one(f);
    return j;
}

int spinor_index(const SpinorBasis& b, std::vector<int> e_indices) {
    std::uint32_t mask = 0;
    for (int i : e_indices) mask |= 1u << (i - 1);
    for (std::size_t k = 0; k < b.masks.size(); ++k)
        if (b.masks[k] == mask) return static_cast<int>(k);
    return -1;
}

}  // namespace

TEST_CASE("Clifford squares of vectors") {
    auto q = FieldDescriptor::rational();
    CHECK((E(2, q, 1) * E(2, q, 1)).is_zero());
    auto u = E(2, q, 1) + F(2, q, 1);
    CHECK(u * u == scalar(2, q, 1));
}

TEST_CASE("e1 e2 f2 in normal form") {
    auto q = FieldDescriptor::rational();
    auto lhs = E(2, q, 1) * E(2, q, 2) * F(2, q, 2);
    CHECK(lhs == E(2, q, 1) - E(2, q, 1) * F(2, q, 2) * E(2, q, 2));
    CHECK(lhs.terms().size() == 1);
    CHECK(lhs.terms().begin()->first == ((1u << 0) | (1u << 1) | (1u << 3)));
}

TEST_CASE("Clifford product agrees with the rewriting oracle") {
    std::mt19937_64 rng(23);
    for (auto f : {FieldDescriptor::rational(), FieldDescriptor::finite(3), FieldDescriptor::finite(2)}) {
        for (int trial = 0; trial < 300; ++trial) {
            int n = static_cast<int>(rng() % 3) + 2;
            auto a = random_element(rng, n, f), b = random_element(rng, n, f);
            auto got = a * b;
            auto expected = oracle_product(a, b);
            REQUIRE(got.terms().size() == expected.size());
            for (const auto& [m, c] : expected) CHECK(got.coefficient(m) == c);
            CHECK(cl_mul(a, b) == got);
        }
    }
}

TEST_CASE("spin action on spinors") {
    auto q = FieldDescriptor::rational();
    auto t = FieldElement(mpq_class(5, 3));
    auto x = E(3, q, 2) * E(3, q, 3);
    CHECK(spin_action(scalar(3, q, 1), x) == x);
    auto s = scalar(3, q, 1) + t * (E(3, q, 1) * F(3, q, 2));
    CHECK(spin_action(s, x) == x + t * (E(3, q, 1) * E(3, q, 3)));
    CHECK_THROWS(spin_action(s, F(3, q, 1)));

    std::mt19937_64 rng(29);
    auto basis = d4_even_spinor_basis();
    for (int trial = 0; trial < 50; ++trial) {
        auto s1 = cl_poly_at(b3_root_element(static_cast<int>(rng() % 18), q), FieldElement(static_cast<long>(rng() % 5) - 2));
        auto s2 = cl_poly_at(b3_root_element(static_cast<int>(rng() % 18), q), FieldElement(static_cast<long>(rng() % 5) - 2));
        CliffordElement y(4, q);
        for (std::uint32_t m : basis.masks) y.add_term(m, FieldElement(static_cast<long>(rng() % 7) - 3));
        CHECK(spin_action(s1 * s2, y) == spin_action(s1, spin_action(s2, y)));
        CHECK(equal(spin_matrix(s1 * s2, basis), Matrix(spin_matrix(s1, basis) * spin_matrix(s2, basis))));
    }
}

TEST_CASE("vector representation") {
    auto q = FieldDescriptor::rational();
    int n = 3;
    auto lambda = FieldElement(mpq_class(-2, 7));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            auto s = scalar(n, q, 1) + lambda * (E(n, q, i) * E(n, q, j));
            // v -> v + lambda (e_j, v) e_i - lambda (e_i, v) e_j
            Matrix expected = identity(2 * n, q);
            expected(i - 1, n + j - 1) += lambda;
            expected(j - 1, n + i - 1) -= lambda;
            CHECK(equal(vector_rep(s), expected));
        }
    CHECK_THROWS(vector_rep(E(n, q, 1)));

    auto t = FieldElement(mpq_class(3, 2));
    Matrix x = vector_rep(cl_poly_at(b4_root_element(0, q), t));
    Matrix natural = identity(10, q);
    natural(0, 1) = t;       // e2 -> e2 + t e1
    natural(6, 5) = -t;      // f1 -> f1 - t f2
    CHECK(equal(x, natural));

    std::mt19937_64 rng(31);
    Matrix j = hyperbolic_gram(5, q);
    for (int trial = 0; trial < 40; ++trial) {
        auto s1 = cl_poly_at(b4_root_element(static_cast<int>(rng() % 32), q), FieldElement(static_cast<long>(rng() % 5) - 2));
        auto s2 = cl_poly_at(b4_root_element(static_cast<int>(rng() % 32), q), FieldElement(static_cast<long>(rng() % 5) - 2));
        Matrix m = vector_rep(s1 * s2);
        CHECK(equal(m, Matrix(vector_rep(s1) * vector_rep(s2))));
        CHECK(equal(Matrix(m.transpose() * j * m), j));
        CHECK(s1 * s1.inverse() == scalar(5, q, 1));
    }
}

TEST_CASE("Clifford polynomials") {
    auto q = FieldDescriptor::rational();
    auto u = E(3, q, 1) * E(3, q, 2), v = E(3, q, 2) * F(3, q, 3);
    auto p = cl_poly_mul(cl_linear(u), cl_linear(v));
    auto t = FieldElement(mpq_class(4, 5));
    CHECK(cl_poly_at(p, t) == (scalar(3, q, 1) + t * u) * (scalar(3, q, 1) + t * v));
    CHECK(cl_poly_at(p, FieldElement(0)) == scalar(3, q, 1));
}

TEST_CASE("B4 spin module") {
    RootSystem rs('B', 4);
    for (auto f : {FieldDescriptor::rational(), FieldDescriptor::finite(5), FieldDescriptor::finite(2, 2)}) {
        auto m = b4_spin_module(f);
        CHECK(m.dim == 16);
        int root = rs.index({1, 2, 2, 2});
        REQUIRE(root >= 0);
        auto t = FieldElement::integer(f, 3);
        CHECK(cl_poly_at(b4_root_element(root, f), t) == scalar(5, f, 1) + t * (E(5, f, 1) * E(5, f, 2)));
        Matrix x = m.family("x[1,2,2,2]").at(t);
        auto basis = b4_spinor_basis();
        Vector v1 = zeros(16, 1, f);
        v1(spinor_index(basis, {})) = FieldElement::one(f);
        Vector expected = v1;
        expected(spinor_index(basis, {1, 2})) = t;
        CHECK(equal(Matrix(x * v1), Matrix(expected)));
        CHECK(spinor_index(basis, {1, 2}) == 1);
        for (const auto& fam : m.families) {
            CHECK(equal(fam.at(FieldElement::zero(f)), identity(16, f)));
            CHECK(m.preserves_form(fam.at(t)));
        }
    }
}

TEST_CASE("B4 torus and Weyl elements") {
    auto f = FieldDescriptor::finite(7);
    auto basis = b4_spinor_basis();
    auto k = FieldElement::integer(f, 3), l = FieldElement::integer(f, 5);
    for (int r = 0; r < 4; ++r) {
        Matrix hk = spin_matrix(b4_torus_element(r, k), basis), hl = spin_matrix(b4_torus_element(r, l), basis);
        CHECK(equal(Matrix(hk * hl), spin_matrix(b4_torus_element(r, k * l), basis)));
        CHECK(equal(spin_matrix(b4_torus_element(r, FieldElement::one(f)), basis), identity(16, f)));
    }
    auto n = b4_weyl_element(0, FieldElement::one(f));
    auto perm = b4_root_permutation(n, b4_spin_module(f));
    REQUIRE(perm.size() == 32);
    RootSystem rs('B', 4);
    for (int i = 0; i < 32; ++i) CHECK(perm[static_cast<std::size_t>(i)] == rs.reflect(i, 0));
    CHECK(involution_cycles({1, 0, 2, 4, 3}) == std::vector<std::pair<int, int>>{{1, 2}, {4, 5}});
}

TEST_CASE("the isomorphism phi and the spaces v + lambda phi(v)") {
    auto f = FieldDescriptor::cyclotomic(12);
    auto d = b4_case_data(f);
    auto basis = b4_spinor_basis();
    auto w = root_of_unity(3, f);
    auto col = [&](std::vector<int> from) { return Vector(d.phi.col(spinor_index(basis, from))); };
    auto unit = [&](std::vector<int> at, const FieldElement& c) {
        Vector v = zeros(16, 1, f);
        v(spinor_index(basis, at)) = c;
        return v;
    };
    auto one = FieldElement::one(f);
    CHECK(equal(Matrix(col({})), Matrix(unit({1, 5}, one))));
    CHECK(equal(Matrix(col({2, 3})), Matrix(unit({4, 5}, one))));
    CHECK(equal(Matrix(col({3, 4})), Matrix(unit({1, 3, 4, 5}, w * w))));

    auto m = b4_spin_module(f);
    auto i = FieldElement::generator(f).pow(3);
    std::vector<Matrix> gens;
    for (const auto& g : d.a2_gens) gens.push_back(spin_matrix(cl_poly_at(g, FieldElement(mpq_class(2, 3)).in(f)), basis));
    for (const auto& lambda : {i, -i, one, FieldElement::integer(f, 2), w, -one}) {
        Matrix wl = b4_w_lambda(d, lambda);
        bool singular = (lambda * lambda + one).is_zero();
        CHECK(is_totally_singular(wl, m) == singular);
        if (singular)
            for (const auto& g : gens) CHECK(fixes_subspace(g, wl));
    }
}

TEST_CASE("W_abc in characteristic 2 is totally singular iff a + b + c = 0") {
    auto f = FieldDescriptor::finite(2, 2);
    auto m = b4_spin_module(f);
    auto elems = all_elements(f);
    int checked = 0;
    for (const auto& a : elems)
        for (const auto& b : elems)
            for (const auto& c : elems) {
                CHECK(is_totally_singular(b4_w_abc(f, a, b, c), m) == (a + b + c).is_zero());
                ++checked;
            }
    CHECK(checked == 64);
}

TEST_CASE("B3 spin module") {
    auto f = FieldDescriptor::finite(2);
    auto m = b3_spin_module(f);
    CHECK(m.dim == 8);
    CHECK(m.form == FormKind::Orthogonal);
    for (const auto& fam : m.families) CHECK(m.preserves_form(fam.at(FieldElement::one(f))));
}
