#include "genstab/properties.hpp"

#include <memory>
#include <random>

#include "genstab/chevmod.hpp"
#include "genstab/clifford.hpp"
#include "genstab/rootsys.hpp"

namespace genstab {

namespace {

using Rng = std::mt19937_64;

bool same_matrix(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            if (a(i, j) != b(i, j)) return false;
    return true;
}

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

FieldElement random_element(Rng& rng, const FieldDescriptor& f) {
    if (f.kind == FieldKind::Finite) {
        auto q = static_cast<std::uint32_t>(f.order());
        return FieldElement::from_code(f, static_cast<std::uint32_t>(uniform(rng, 0, static_cast<int>(q) - 1)));
    }
    FieldElement v = FieldElement(mpq_class(uniform(rng, -9, 9), uniform(rng, 1, 4))).in(f);
    if (f.kind == FieldKind::Cyclotomic && uniform(rng, 0, 1) == 1)
        v += FieldElement::integer(f, uniform(rng, -3, 3)) * FieldElement::generator(f);
    return v;
}

struct Pool {
    std::vector<std::shared_ptr<ExplicitModule>> modules;
    std::vector<std::pair<std::shared_ptr<ExplicitModule>, std::shared_ptr<RootSystem>>> adjoint;
};

Pool build_pool() {
    Pool p;
    auto add = [&](ExplicitModule m) { p.modules.push_back(std::make_shared<ExplicitModule>(std::move(m))); };
    FieldDescriptor q = FieldDescriptor::rational(), f5 = FieldDescriptor::finite(5), f7 = FieldDescriptor::finite(7),
                    f9 = FieldDescriptor::finite(3, 2), f4 = FieldDescriptor::finite(2, 2);
    add(natural_module('B', 3, q));
    add(natural_module('C', 3, f5, HyperbolicOrder::Split));
    add(natural_module('D', 4, f7, HyperbolicOrder::Mirrored));
    add(natural_module('C', 2, f4));
    add(sp4_adjoint(q));
    add(c3_lambda2(f7));
    add(a2_adjoint_quotient(f9));
    add(tensor_module(natural_module('C', 1, f5), natural_module('C', 2, f5)));
    add(b3_spin_module(f4));
    add(b4_spin_module(f5));
    for (auto [t, l, f] : std::vector<std::tuple<char, int, FieldDescriptor>>{
             {'A', 2, q}, {'B', 2, f5}, {'G', 2, q}, {'A', 3, f7}, {'C', 3, q}, {'D', 4, f5}}) {
        auto rs = std::make_shared<RootSystem>(t, l);
        auto m = std::make_shared<ExplicitModule>(adjoint_module(*rs, f));
        p.modules.push_back(m);
        p.adjoint.emplace_back(m, rs);
    }
    return p;
}

CliffordElement random_clifford(Rng& rng, int n, const FieldDescriptor& f) {
    CliffordElement x(n, f);
    int terms = uniform(rng, 1, 5);
    for (int i = 0; i < terms; ++i)
        x.add_term(static_cast<std::uint32_t>(uniform(rng, 0, (1 << (2 * n)) - 1)), random_element(rng, f));
    return x;
}

}  // namespace

VerificationReport property_suite(std::uint64_t seed, int instances) {
    VerificationReport r;
    r.case_id = "PROPERTIES";
    r.info("seed", "", std::to_string(seed));
    Rng rng(seed);
    Pool pool = build_pool();
    const std::string n = std::to_string(instances);

    long forms = 0, laws = 0, lie = 0;
    for (int i = 0; i < instances; ++i) {
        const auto& m = *pool.modules[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(pool.modules.size()) - 1))];
        const auto& fam = m.families[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(m.families.size()) - 1))];
        FieldElement s = random_element(rng, m.field), t = random_element(rng, m.field);
        Matrix xs = fam.at(s), xt = fam.at(t);
        forms += m.preserves_form(xs) ? 1 : 0;
        laws += same_matrix(Matrix(xs * xt), fam.at(s + t)) ? 1 : 0;
        const auto& x = m.lie_basis[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(m.lie_basis.size()) - 1))];
        lie += m.lie_preserves_form(x) ? 1 : 0;
    }
    r.expect_equal("root elements preserve the form (" + n + " draws)", instances, forms);
    r.expect_equal("x(s) x(t) = x(s + t) (" + n + " draws)", instances, laws);
    r.expect_equal("Lie basis is skew for the form (" + n + " draws)", instances, lie);

    long assoc = 0, squares = 0;
    const std::vector<FieldDescriptor> cl_fields = {FieldDescriptor::rational(), FieldDescriptor::finite(3),
                                                    FieldDescriptor::finite(2, 2), FieldDescriptor::cyclotomic(3)};
    for (int i = 0; i < instances; ++i) {
        int dim = uniform(rng, 1, 4);
        const auto& f = cl_fields[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(cl_fields.size()) - 1))];
        auto a = random_clifford(rng, dim, f), b = random_clifford(rng, dim, f), c = random_clifford(rng, dim, f);
        assoc += (a * b) * c == a * (b * c) ? 1 : 0;
        CliffordElement u(dim, f);
        FieldElement q = FieldElement::zero(f);
        for (int k = 1; k <= dim; ++k) {
            FieldElement ce = random_element(rng, f), cf = random_element(rng, f);
            u += ce * CliffordElement::e(dim, f, k);
            u += cf * CliffordElement::f(dim, f, k);
            q += ce * cf;
        }
        squares += u * u == CliffordElement::scalar(dim, f, q) ? 1 : 0;
    }
    r.expect_equal("Clifford product is associative (" + n + " draws)", instances, assoc);
    r.expect_equal("u^2 = Q(u) for vectors (" + n + " draws)", instances, squares);

    long ortho = 0;
    for (int i = 0; i < instances; ++i) {
        const auto& [m, rs] = pool.adjoint[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(pool.adjoint.size()) - 1))];
        int a = uniform(rng, 0, m->dim - 1), b = uniform(rng, 0, m->dim - 1);
        int nr = rs->num_roots();
        auto weight = [&](int idx) { return idx < nr ? rs->root(idx) : Root(static_cast<std::size_t>(rs->rank()), 0); };
        Root sum = weight(a);
        for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += weight(b)[k];
        bool zero_sum = std::all_of(sum.begin(), sum.end(), [](int v) { return v == 0; });
        bool ok = zero_sum || m->gram(a, b).is_zero();
        if (a < nr) ok = ok && m->quad[static_cast<std::size_t>(a)].is_zero();
        ortho += ok ? 1 : 0;
    }
    r.expect_equal("weight spaces pair only with opposite weights (" + n + " draws)", instances, ortho);

    long canon = 0;
    const std::vector<FieldDescriptor> lin_fields = {FieldDescriptor::rational(), FieldDescriptor::finite(2),
                                                     FieldDescriptor::finite(3, 2), FieldDescriptor::cyclotomic(5)};
    for (int i = 0; i < instances; ++i) {
        const auto& f = lin_fields[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(lin_fields.size()) - 1))];
        int rows = uniform(rng, 1, 6), cols = uniform(rng, 1, 6);
        Matrix m(rows, cols);
        for (int a = 0; a < rows; ++a)
            for (int b = 0; b < cols; ++b) m(a, b) = uniform(rng, 0, 2) == 0 ? FieldElement::zero(f) : random_element(rng, f);
        Matrix p(rows, rows);
        do {
            for (int a = 0; a < rows; ++a)
                for (int b = 0; b < rows; ++b) p(a, b) = random_element(rng, f);
        } while (rank(p) != rows);
        auto r1 = rref(m);
        auto r2 = rref(Matrix(p * m));
        auto r3 = rref(r1.reduced);
        bool ok = same_matrix(r1.reduced, r2.reduced) && same_matrix(r1.reduced, r3.reduced) && r1.pivots == r2.pivots;
        ok = ok && FieldSubspace::from_rows(m) == FieldSubspace::from_rows(Matrix(p * m));
        canon += ok ? 1 : 0;
    }
    r.expect_equal("rref is invariant under row operations and idempotent (" + n + " draws)", instances, canon);
    return r;
}

}  // namespace genstab
