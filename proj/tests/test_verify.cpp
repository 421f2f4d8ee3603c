#include <algorithm>
#include <random>

#include "doctest.h"
#include "genstab/catalog.hpp"
#include "genstab/clifford.hpp"
#include "genstab/verify.hpp"

using namespace genstab;

namespace {

Vector unit(Eigen::Index n, Eigen::Index i, const FieldDescriptor& f) {
    Vector v = zeros(n, 1, f);
    v(i) = FieldElement::one(f);
    return v;
}

// Totally singular k-spaces of a polar space of rank r and parameter e over GF(q).
std::uint64_t oracle_polar_count(int r, int e, std::uint64_t q, int k) {
    auto pw = [](std::uint64_t b, int x) {
        std::uint64_t v = 1;
        for (int i = 0; i < x; ++i) v *= b;
        return v;
    };
    std::uint64_t num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        num *= (pw(q, r - i) - 1) * (pw(q, r + e - i - 1) + 1);
        den *= pw(q, i + 1) - 1;
    }
    return num / den;
}

// Nonzero singular vectors, by enumeration of the whole space.
long singular_vectors(const ExplicitModule& m) {
    auto elems = all_elements(m.field);
    std::vector<std::size_t> idx(static_cast<std::size_t>(m.dim), 0);
    long count = 0;
    while (true) {
        Vector v(m.dim);
        bool nonzero = false;
        for (int i = 0; i < m.dim; ++i) {
            v(i) = elems[idx[static_cast<std::size_t>(i)]];
            nonzero = nonzero || idx[static_cast<std::size_t>(i)] != 0;
        }
        bool singular = m.form == FormKind::Symplectic || m.quadratic(v).is_zero();
        if (nonzero && singular) ++count;
        int i = 0;
        while (i < m.dim && ++idx[static_cast<std::size_t>(i)] == elems.size()) idx[static_cast<std::size_t>(i++)] = 0;
        if (i == m.dim) break;
    }
    return count;
}

// dim {sum c_i X_i : X W in W} from the annihilator of W.
int oracle_lie_stabilizer(const std::vector<Matrix>& basis, const Matrix& w) {
    Matrix ann = kernel(Matrix(w.transpose())).transpose();
    Matrix rows(ann.rows() * w.cols(), static_cast<Eigen::Index>(basis.size()));
    for (std::size_t i = 0; i < basis.size(); ++i) {
        Matrix img = ann * basis[i] * w;
        for (Eigen::Index r = 0; r < img.rows(); ++r)
            for (Eigen::Index c = 0; c < img.cols(); ++c) rows(r * img.cols() + c, static_cast<Eigen::Index>(i)) = img(r, c);
    }
    return static_cast<int>(basis.size()) - static_cast<int>(rank(rows));
}

Matrix sp2_tensor_w(int n, const std::vector<FieldElement>& a, const ExplicitModule& c1) {
    auto f = c1.field;
    Matrix w(4 * n, 2 * n);
    Vector e = unit(2, 0, f), fv = unit(2, 1, f);
    for (int i = 1; i <= n; ++i) {
        Vector x = e + a[static_cast<std::size_t>(i - 1)] * fv;
        w.col(2 * i - 2) = kron(x, unit(2 * n, i - 1, f));
        w.col(2 * i - 1) = kron(x, unit(2 * n, 2 * n - i, f));
    }
    return w;
}

std::vector<Matrix> generators_at_one(const ExplicitModule& m) {
    std::vector<Matrix> g;
    for (const auto& fam : m.families) g.push_back(fam.at(FieldElement::one(m.field)));
    return g;
}

}  // namespace

TEST_CASE("total singularity") {
    auto q = FieldDescriptor::rational();
    for (char s : {'B', 'C', 'D'}) {
        auto m = natural_module(s, 3, q, HyperbolicOrder::Split);
        Matrix hyp(m.dim, 2);
        hyp << unit(m.dim, 0, q), unit(m.dim, 3, q);
        CHECK_FALSE(is_totally_singular(hyp, m));
        Matrix iso(m.dim, 3);
        iso << unit(m.dim, 0, q), unit(m.dim, 1, q), unit(m.dim, 2, q);
        CHECK(is_totally_singular(iso, m));
    }
    auto f2 = FieldDescriptor::finite(2);
    auto t = tensor_module(natural_module('C', 1, f2), natural_module('C', 2, f2));
    Matrix w(8, 1);
    w.col(0) = kron(unit(2, 0, f2), unit(4, 0, f2));
    CHECK(is_totally_singular(w, t));
}

TEST_CASE("fixing subspaces") {
    auto q = FieldDescriptor::rational();
    Matrix w(4, 2);
    w << unit(4, 0, q), unit(4, 1, q);
    CHECK(fixes_subspace(identity(4, q), w));
    Matrix swap = zeros(4, 4, q);
    swap(0, 2) = swap(2, 0) = swap(1, 1) = swap(3, 3) = FieldElement(1);
    CHECK_FALSE(fixes_subspace(swap, w));
    CHECK_THROWS_AS(fixes_subspace(zeros(4, 4, q), w), std::invalid_argument);
    CHECK_THROWS_AS(fixes_subspace(identity(3, q), w), std::invalid_argument);
}

TEST_CASE("Lie stabilizer dimension agrees with the annihilator oracle") {
    std::mt19937_64 rng(37);
    std::vector<ExplicitModule> modules{natural_module('B', 3, FieldDescriptor::finite(5)),
                                        adjoint_module(RootSystem('A', 2), FieldDescriptor::finite(7)),
                                        sp4_adjoint(FieldDescriptor::finite(5)), c3_lambda2(FieldDescriptor::finite(7))};
    for (const auto& m : modules) {
        auto elems = all_elements(m.field);
        for (int trial = 0; trial < 25; ++trial) {
            int k = static_cast<int>(rng() % 3) + 1;
            Matrix w(m.dim, k);
            for (int i = 0; i < m.dim; ++i)
                for (int j = 0; j < k; ++j) w(i, j) = rng() % 3 == 0 ? elems[rng() % elems.size()] : FieldElement::zero(m.field);
            if (rank(w) == 0) continue;
            CHECK(lie_stabilizer_dim(m.lie_basis, w) == oracle_lie_stabilizer(m.lie_basis, w));
        }
        CHECK(lie_stabilizer_dim(m.lie_basis, identity(m.dim, m.field)) == static_cast<int>(m.lie_basis.size()));
    }
}

TEST_CASE("Sp2 x Sp6, k = 3") {
    auto q = FieldDescriptor::rational();
    auto c1 = natural_module('C', 1, q);
    auto m = tensor_module(c1, natural_module('C', 3, q, HyperbolicOrder::Mirrored));
    REQUIRE(m.lie_basis.size() == 24);
    auto e = unit(2, 0, q), f = unit(2, 1, q);
    auto u = [&](int i) { return unit(6, i, q); };  // e1 e2 e3 f3 f2 f1
    Matrix w(12, 3);
    w.col(0) = kron(e, u(0)) + kron(f, u(1));
    w.col(1) = kron(e, u(4)) + kron(f, u(5));
    w.col(2) = kron(e, Vector(u(1) + u(2))) + kron(f, Vector(u(3) - u(4)));
    CHECK(is_totally_singular(w, m));
    CHECK(lie_stabilizer_dim(m.lie_basis, w) == 3);
}

TEST_CASE("Sp2 x Sp2n maximal totally singular family") {
    auto q = FieldDescriptor::rational();
    auto c1 = natural_module('C', 1, q);
    for (int n = 3; n <= 4; ++n) {
        auto m = tensor_module(c1, natural_module('C', n, q, HyperbolicOrder::Mirrored));
        std::vector<FieldElement> a;
        for (int i = 1; i <= n; ++i) a.emplace_back(i);
        Matrix w = sp2_tensor_w(n, a, c1);
        CHECK(is_totally_singular(w, m));
        CHECK(lie_stabilizer_dim(m.lie_basis, w) == 3 * n);
    }
    int g = 3 + group_dim('C', 3);
    CHECK(g - 9 == grass_dim(12, parse_k("6'"), FormKind::Orthogonal));
}

TEST_CASE("group closure") {
    auto f3 = FieldDescriptor::finite(3);
    CHECK(group_closure({identity(3, f3)}, f3).order() == 1);
    auto sl2 = generators_at_one(natural_module('C', 1, f3));
    CHECK(group_closure(sl2, f3).order() == 24);
    auto f5 = FieldDescriptor::finite(5);
    auto sl2_5 = generators_at_one(natural_module('C', 1, f5));
    CHECK(group_closure(sl2_5, f5).order() == 120);
    CHECK_THROWS_AS(group_closure(sl2_5, f5, 50), CapExceeded);

    auto c7 = FieldDescriptor::cyclotomic(7);
    auto w = FieldElement::generator(c7);
    Matrix d = zeros(6, 6, c7);
    int exps[6] = {1, 2, 3, 6, 5, 4};
    for (int i = 0; i < 6; ++i) d(i, i) = -w.pow(exps[i]);
    CHECK(group_closure({d}, c7).order() == 14);
}

TEST_CASE("closure order does not depend on generator order") {
    std::mt19937_64 rng(41);
    auto f = FieldDescriptor::finite(3);
    auto b2 = natural_module('B', 2, f);
    std::vector<Matrix> gens;
    for (const auto& fam : b2.families)
        if (fam.root >= 0 && fam.root < 2) gens.push_back(fam.at(FieldElement::one(f)));
    gens.push_back(b2.family("x[-1,0]").at(FieldElement::one(f)));
    auto base = group_closure(gens, f).order();
    for (int trial = 0; trial < 5; ++trial) {
        std::shuffle(gens.begin(), gens.end(), rng);
        CHECK(group_closure(gens, f).order() == base);
    }
    auto sl2 = generators_at_one(natural_module('C', 1, FieldDescriptor::finite(7)));
    std::reverse(sl2.begin(), sl2.end());
    CHECK(group_closure(sl2, FieldDescriptor::finite(7)).order() == 336);
}

TEST_CASE("polar space counts") {
    for (auto [r, e] : std::vector<std::pair<int, int>>{{2, 0}, {2, 1}, {3, 1}, {2, 2}, {4, 0}})
        for (std::uint64_t q : {2, 3, 4, 5})
            for (int k = 1; k <= r; ++k) CHECK(polar_space_count(r, e, q, k) == oracle_polar_count(r, e, q, k));
}

TEST_CASE("singular points and totally singular lines by enumeration") {
    struct Case {
        ExplicitModule m;
        int r, e;
    };
    std::vector<Case> cases{{natural_module('C', 2, FieldDescriptor::finite(3)), 2, 1},
                            {natural_module('B', 2, FieldDescriptor::finite(3)), 2, 1},
                            {natural_module('D', 3, FieldDescriptor::finite(2)), 3, 0},
                            {natural_module('D', 4, FieldDescriptor::finite(2)), 4, 0},
                            {natural_module('C', 2, FieldDescriptor::finite(2, 2)), 2, 1}};
    for (const auto& [m, r, e] : cases) {
        CAPTURE(m.name);
        auto q = static_cast<std::uint64_t>(m.field.order());
        long vectors = singular_vectors(m);
        CHECK(static_cast<std::uint64_t>(vectors) == oracle_polar_count(r, e, q, 1) * (q - 1));
        CHECK(totally_singular_subspaces(m, 1).size() == oracle_polar_count(r, e, q, 1));
        CHECK(totally_singular_subspaces(m, 2).size() == oracle_polar_count(r, e, q, 2));
    }
    auto d4 = natural_module('D', 4, FieldDescriptor::finite(2), HyperbolicOrder::Split);
    auto f2 = d4.field;
    Matrix e(8, 4);
    e << unit(8, 0, f2), unit(8, 1, f2), unit(8, 2, f2), unit(8, 3, f2);
    auto all = totally_singular_subspaces(d4, 4);
    auto one = totally_singular_subspaces(d4, 4, FieldSubspace::from_columns(e));
    CHECK(all.size() == oracle_polar_count(4, 0, 2, 4));
    CHECK(one.size() * 2 == all.size());
    CHECK_THROWS_AS(totally_singular_subspaces(d4, 2, std::nullopt, 10), CapExceeded);
}

TEST_CASE("orbit census") {
    auto f = FieldDescriptor::finite(3);
    auto m = natural_module('C', 2, f);
    auto trivial = orbit_census({identity(4, f)}, m, 1);
    CHECK(trivial.points == 40);
    CHECK(trivial.orbit_sizes.size() == 40);
    for (auto s : trivial.orbit_sizes) CHECK(s == 1);

    auto full = orbit_census(generators_at_one(m), m, 1);
    CHECK(full.orbit_sizes == std::vector<std::size_t>{40});
    REQUIRE(full.independent_count);
    CHECK(*full.independent_count == full.points);

    auto b3 = b3_spin_module(FieldDescriptor::finite(2));
    auto spin = orbit_census(generators_at_one(b3), b3, 1);
    CHECK(spin.orbit_sizes == std::vector<std::size_t>{135});
    CHECK(spin.singular_vectors == 135);

    CHECK_THROWS_AS(orbit_census(generators_at_one(m), m, 1, std::nullopt, 10), CapExceeded);
}

TEST_CASE("census cases") {
    CHECK(census_case_ids() == std::vector<std::string>{"A1_TWIST", "B3_SPIN"});
    auto r9 = orbit_case("A1_TWIST", 9);
    CHECK(r9.pass());
    auto r4 = orbit_case("A1_TWIST", 4);
    CHECK(r4.pass());
    CHECK(orbit_case("B3_SPIN", 2).pass());
    CHECK_THROWS_AS(orbit_case("A1_TWIST", 7), std::invalid_argument);
    CHECK_THROWS_AS(orbit_case("C2_K5", 9), std::invalid_argument);
    CHECK_THROWS_AS(orbit_case("A1_TWIST", 25, 1, 100), CapExceeded);
}

TEST_CASE("case registry") {
    auto ids = case_ids();
    for (const char* id : {"A2_P3_K3", "B4_SPIN", "B4_K8P", "B4_K8PP_P2", "C2_K5", "C3_K7", "SP2SP6_K3", "SP2SP2N_TS",
                           "A1_TWIST", "B3_SPIN", "TABLE1", "G2_K2"})
        CHECK(std::find(ids.begin(), ids.end(), id) != ids.end());
    CHECK(has_case("C2_K5"));
    CHECK_FALSE(has_case("C2_K6"));
    CHECK_THROWS_AS(case_verify("C2_K6"), std::invalid_argument);
}

TEST_CASE("every scripted construction verifies") {
    for (const auto& id : case_ids()) {
        if (id == "TABLE1") continue;
        CAPTURE(id);
        auto r = case_verify(id);
        for (const auto& e : r.entries)
            if (e.status == CheckStatus::Fail) MESSAGE(e.check << ": expected " << e.expected << ", computed " << e.computed);
        CHECK(r.pass());
    }
}

TEST_CASE("case options") {
    CaseOptions o;
    o.conductor = 40;
    CHECK(case_verify("C2_K5", o).pass());
    o.conductor = 7;
    CHECK_THROWS_AS(case_verify("C2_K5", o), std::invalid_argument);
    CaseOptions p;
    p.characteristic = 3;
    CHECK(case_verify("C2_K5", p).pass());
    p.characteristic = 5;
    CHECK_THROWS(case_verify("C2_K5", p));
    CaseOptions both;
    both.characteristic = 3;
    both.conductor = 40;
    CHECK_THROWS_AS(case_verify("C2_K5", both), std::invalid_argument);
    CaseOptions tiny;
    tiny.closure_cap = 10;
    CHECK_THROWS_AS(case_verify("C2_K5", tiny), CapExceeded);
}
