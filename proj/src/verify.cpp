#include "genstab/verify.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <gmpxx.h>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <unordered_map>

#include "genstab/catalog.hpp"
#include "genstab/clifford.hpp"
#include "genstab/rootsys.hpp"

namespace genstab {

namespace {

std::string str(long v) { return std::to_string(v); }

bool same_matrix(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            if (a(i, j) != b(i, j)) return false;
    return true;
}

bool is_zero_vector(const Vector& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i)
        if (!v(i).is_zero()) return false;
    return true;
}

FieldElement num(const FieldDescriptor& f, long n) { return FieldElement::integer(f, n); }

Vector unit(int n, int i, const FieldDescriptor& f) {
    Vector v = zeros(n, 1, f);
    v(i) = FieldElement::one(f);
    return v;
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::pair<long, int> prime_power(std::int64_t q) {
    for (long p = 2; p <= q; ++p) {
        if (q % p != 0) continue;
        if (!is_prime(p)) break;
        int k = 0;
        std::int64_t r = q;
        while (r % p == 0) {
            r /= p;
            ++k;
        }
        if (r != 1) break;
        return {p, k};
    }
    throw std::invalid_argument("not a prime power: " + std::to_string(q));
}

/// Field for a case needing an m-th root of unity; honours --char and --conductor.
FieldDescriptor pick_field(const CaseOptions& o, int m, int default_conductor) {
    if (o.characteristic && o.conductor) throw std::invalid_argument("--char and --conductor are mutually exclusive");
    if (o.conductor) {
        int c = *o.conductor;
        if (c < 1 || (m > 2 && c % m != 0))
            throw std::invalid_argument("conductor " + str(c) + " must be a multiple of " + str(m));
        return c <= 2 ? FieldDescriptor::rational() : FieldDescriptor::cyclotomic(c);
    }
    long p = o.characteristic ? *o.characteristic : 0;
    if (p == 0) return default_conductor <= 2 ? FieldDescriptor::rational() : FieldDescriptor::cyclotomic(default_conductor);
    if (!is_prime(p)) throw std::invalid_argument("characteristic must be 0 or a prime");
    std::int64_t q = 1;
    for (int k = 1; k <= 24; ++k) {
        q *= p;
        if ((q - 1) % m == 0) return FieldDescriptor::finite(p, k);
    }
    throw std::invalid_argument("no GF(" + str(p) + "^k) contains a primitive " + str(m) + "-th root of unity");
}

long characteristic_of(const CaseOptions& o) { return o.characteristic ? *o.characteristic : 0; }

Matrix symplectic_gram(int l, const FieldDescriptor& f) {
    Matrix j = zeros(2 * l, 2 * l, f);
    for (int i = 0; i < l; ++i) {
        j(i, l + i) = FieldElement::one(f);
        j(l + i, i) = -FieldElement::one(f);
    }
    return j;
}

bool is_symplectic(const Matrix& g, int l, const FieldDescriptor& f) {
    Matrix j = symplectic_gram(l, f);
    return same_matrix(Matrix(g.transpose() * j * g), j);
}

/// Lie dimension checks: the lower bound always, equality where the characteristic is treated.
void lie_dim_check(VerificationReport& r, const std::string& name, long expected, long computed, bool treated) {
    if (treated) {
        r.expect_equal(name, expected, computed);
    } else {
        r.expect_true(name + " >= " + str(expected), computed >= expected);
        r.info(name, str(expected), str(computed));
    }
}

std::string key_of(const FieldSubspace& s) {
    std::string k;
    const Matrix& rows = s.rows();
    k.reserve(static_cast<std::size_t>(rows.size()) * 4 + 4);
    auto put = [&](std::uint32_t c) {
        for (int b = 0; b < 4; ++b) k.push_back(static_cast<char>((c >> (8 * b)) & 0xff));
    };
    put(static_cast<std::uint32_t>(rows.rows()));
    for (Eigen::Index i = 0; i < rows.rows(); ++i)
        for (Eigen::Index j = 0; j < rows.cols(); ++j) put(rows(i, j).code());
    return k;
}

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

/// Vector of GF(q)^n with the given mixed-radix code.
Vector vector_from_index(std::uint64_t idx, int n, const std::vector<FieldElement>& elems) {
    Vector v(n);
    std::uint64_t q = elems.size();
    for (int i = n - 1; i >= 0; --i) {
        v(i) = elems[idx % q];
        idx /= q;
    }
    return v;
}

bool vector_singular(const ExplicitModule& m, const Vector& v) {
    return m.form == FormKind::Symplectic || m.quadratic(v).is_zero();
}

std::uint64_t ipow(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// primitives

bool is_totally_singular(const FieldSubspace& w, const ExplicitModule& m) { return is_totally_singular(w.columns(), m); }

bool is_totally_singular(const Matrix& columns, const ExplicitModule& m) {
    if (columns.rows() != m.dim) throw std::invalid_argument("is_totally_singular: subspace is not in the module");
    const bool quadratic = m.form == FormKind::Orthogonal && !m.quad.empty();
    for (Eigen::Index i = 0; i < columns.cols(); ++i) {
        Vector u = columns.col(i);
        if (quadratic && !m.quadratic(u).is_zero()) return false;
        for (Eigen::Index j = i; j < columns.cols(); ++j) {
            Vector v = columns.col(j);
            if (!m.bilinear(u, v).is_zero()) return false;
            if (quadratic && j > i && !m.quadratic(Vector(u + v)).is_zero()) return false;
        }
    }
    return true;
}

bool fixes_subspace(const Matrix& g, const FieldSubspace& w) {
    if (g.rows() != g.cols() || g.cols() != w.ambient()) throw std::invalid_argument("fixes_subspace: dimension mismatch");
    if (rank(g) != g.rows()) throw std::invalid_argument("fixes_subspace: matrix is singular");
    return FieldSubspace::from_columns(Matrix(g * w.columns())) == w;
}

bool fixes_subspace(const Matrix& g, const Matrix& columns) {
    return fixes_subspace(g, FieldSubspace::from_columns(columns));
}

int lie_stabilizer_dim(const std::vector<Matrix>& basis, const FieldSubspace& w) {
    const Eigen::Index n = w.ambient(), k = w.dim();
    const int count = static_cast<int>(basis.size());
    if (count == 0) return 0;
    if (k == 0 || k == n) return count;
    Matrix cols = w.columns();
    FieldDescriptor f = cols(0, 0).field();
    Matrix induced = zeros(n * k, count, f);
    for (int c = 0; c < count; ++c) {
        const Matrix& x = basis[static_cast<std::size_t>(c)];
        if (x.rows() != n || x.cols() != n) throw std::invalid_argument("lie_stabilizer_dim: basis element has wrong size");
        Matrix img = x * cols;
        for (Eigen::Index j = 0; j < k; ++j) induced.block(j * n, c, n, 1) = w.reduce(Vector(img.col(j)));
    }
    return count - static_cast<int>(rank(induced));
}

int lie_stabilizer_dim(const std::vector<Matrix>& basis, const Matrix& columns) {
    return lie_stabilizer_dim(basis, FieldSubspace::from_columns(columns));
}

GroupClosure group_closure(const std::vector<Matrix>& gens, const FieldDescriptor& field, std::size_t cap) {
    GroupClosure out;
    if (gens.empty()) {
        out.elements.push_back(identity(0, field));
        return out;
    }
    const Eigen::Index n = gens.front().rows();
    std::vector<Matrix> g;
    for (const auto& x : gens) {
        if (x.rows() != n || x.cols() != n) throw std::invalid_argument("group_closure: generators of different sizes");
        g.push_back(in_field(x, field));
    }
    std::unordered_map<std::size_t, std::vector<std::size_t>> buckets;
    auto insert = [&](Matrix m) {
        std::size_t h = matrix_hash(m, field);
        auto& b = buckets[h];
        for (auto i : b)
            if (same_matrix(out.elements[i], m)) return;
        if (out.elements.size() >= cap) throw CapExceeded("group closure exceeded " + std::to_string(cap) + " elements");
        b.push_back(out.elements.size());
        out.elements.push_back(std::move(m));
    };
    insert(identity(n, field));
    for (std::size_t i = 0; i < out.elements.size(); ++i)
        for (const auto& x : g) insert(Matrix(out.elements[i] * x));
    return out;
}

std::uint64_t polar_space_count(int r, int e, std::uint64_t q, int k) {
    if (k < 0 || r < 0) throw std::invalid_argument("polar_space_count: negative rank");
    if (k > r) return 0;
    mpz_class num = 1, den = 1;
    mpz_class qq = static_cast<unsigned long>(q);
    auto qpow = [&](int e2) {
        mpz_class x;
        mpz_pow_ui(x.get_mpz_t(), qq.get_mpz_t(), static_cast<unsigned long>(e2));
        return x;
    };
    for (int i = 0; i < k; ++i) {
        num *= (qpow(r - i) - 1) * (qpow(r - i - 1 + e) + 1);
        den *= qpow(i + 1) - 1;
    }
    if (num % den != 0) throw std::logic_error("polar_space_count: non-integral count");
    mpz_class res = num / den;
    return static_cast<std::uint64_t>(res.get_ui());
}

std::vector<FieldSubspace> totally_singular_subspaces(const ExplicitModule& m, int k,
                                                      const std::optional<FieldSubspace>& component,
                                                      std::size_t cap) {
    const FieldDescriptor& f = m.field;
    if (f.kind != FieldKind::Finite) throw std::invalid_argument("totally_singular_subspaces needs a finite field");
    if (k < 1 || k > m.dim / 2) throw std::invalid_argument("totally_singular_subspaces: k out of range");
    auto elems = all_elements(f);
    const std::uint64_t q = elems.size();
    const int n = m.dim;
    std::uint64_t candidates = (ipow(q, n) - 1) / (q - 1);
    if (candidates > cap) throw CapExceeded("census would enumerate " + std::to_string(candidates) + " points");

    // normalised vectors: leading coordinate 1
    std::vector<Vector> points;
    for (int lead = 0; lead < n; ++lead) {
        int rest = n - 1 - lead;
        std::uint64_t count = ipow(q, rest);
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            Vector v = zeros(n, 1, f);
            v(lead) = FieldElement::one(f);
            Vector tail = vector_from_index(idx, rest, elems);
            for (int i = 0; i < rest; ++i) v(lead + 1 + i) = tail(i);
            if (vector_singular(m, v)) points.push_back(v);
        }
    }

    std::vector<FieldSubspace> level;
    for (const auto& v : points) level.push_back(FieldSubspace::from_columns(Matrix(v)));
    for (int dim = 2; dim <= k; ++dim) {
        std::unordered_map<std::string, std::size_t> seen;
        std::vector<FieldSubspace> next;
        for (const auto& s : level) {
            Matrix cols = s.columns();
            for (const auto& p : points) {
                if (s.contains(p)) continue;
                bool perp = true;
                for (Eigen::Index j = 0; j < cols.cols() && perp; ++j) perp = m.bilinear(Vector(cols.col(j)), p).is_zero();
                if (!perp) continue;
                Matrix rows(s.dim() + 1, n);
                rows << s.rows(), p.transpose();
                FieldSubspace t = FieldSubspace::from_rows(rows);
                auto key = key_of(t);
                if (seen.count(key)) continue;
                if (next.size() >= cap) throw CapExceeded("census exceeded " + std::to_string(cap) + " subspaces");
                seen.emplace(std::move(key), next.size());
                next.push_back(std::move(t));
            }
        }
        level = std::move(next);
    }
    if (component) {
        if (component->dim() != k) throw std::invalid_argument("component reference must have dimension k");
        std::vector<FieldSubspace> kept;
        for (auto& s : level)
            if ((k - subspace_intersect(s, *component).dim()) % 2 == 0) kept.push_back(std::move(s));
        level = std::move(kept);
    }
    return level;
}

OrbitCensus orbit_census(const std::vector<Matrix>& gens, const ExplicitModule& m, int k,
                         const std::optional<FieldSubspace>& component, std::size_t cap) {
    OrbitCensus out;
    auto spaces = totally_singular_subspaces(m, k, component, cap);
    out.points = spaces.size();
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < spaces.size(); ++i) index.emplace(key_of(spaces[i]), i);
    UnionFind uf(spaces.size());
    for (std::size_t i = 0; i < spaces.size(); ++i) {
        Matrix cols = spaces[i].columns();
        for (const auto& g : gens) {
            auto img = FieldSubspace::from_columns(Matrix(in_field(g, m.field) * cols));
            auto it = index.find(key_of(img));
            if (it == index.end()) throw std::logic_error("orbit_census: generator does not preserve the point set");
            uf.unite(i, it->second);
        }
    }
    std::map<std::size_t, std::size_t> sizes;
    for (std::size_t i = 0; i < spaces.size(); ++i) ++sizes[uf.find(i)];
    for (auto [root, size] : sizes) out.orbit_sizes.push_back(size);
    std::sort(out.orbit_sizes.rbegin(), out.orbit_sizes.rend());

    // second pass: every vector of V, independent of the point enumeration
    auto elems = all_elements(m.field);
    const std::uint64_t q = elems.size();
    const std::uint64_t total = ipow(q, m.dim);
    if (total > cap) return out;
    for (std::uint64_t idx = 1; idx < total; ++idx)
        if (vector_singular(m, vector_from_index(idx, m.dim, elems))) ++out.singular_vectors;
    const std::uint64_t pts = out.singular_vectors / (q - 1);
    int r = -1, e = -1;
    if (m.form == FormKind::Symplectic) {
        r = m.dim / 2;
        e = 1;
    } else if (m.dim % 2 == 1) {
        r = (m.dim - 1) / 2;
        e = 1;
    } else if (pts == polar_space_count(m.dim / 2, 0, q, 1)) {
        r = m.dim / 2;
        e = 0;
    } else if (m.dim >= 2 && pts == polar_space_count(m.dim / 2 - 1, 2, q, 1)) {
        r = m.dim / 2 - 1;
        e = 2;
    }
    if (r >= 0 && pts == polar_space_count(r, e, q, 1)) {
        std::uint64_t c = polar_space_count(r, e, q, k);
        if (component && e == 0 && k == r) c /= 2;
        out.independent_count = c;
    }
    return out;
}

// ---------------------------------------------------------------------------
// cases

namespace {

using CaseFn = std::function<VerificationReport(const CaseOptions&)>;

VerificationReport start(const std::string& id, const FieldDescriptor& f) {
    VerificationReport r;
    r.case_id = id;
    r.info("field", "", f.name());
    return r;
}

VerificationReport case_c2_k5(const CaseOptions& o) {
    long p = characteristic_of(o);
    if (p == 2) throw std::invalid_argument("C2_K5 needs characteristic other than 2");
    FieldDescriptor f = pick_field(o, 40, 40);
    auto r = start("C2_K5", f);
    ExplicitModule m = sp4_adjoint(f);
    FieldElement i = root_of_unity(4, f);
    FieldElement z = sqrt_of(-FieldElement::one(f) / num(f, 2), f);
    FieldElement w = root_of_unity(10, f);

    auto w5 = [&](const FieldElement& ii) {
        Matrix cols = zeros(10, 5, f);
        for (int c = 0; c < 5; ++c) {
            FieldElement a = num(f, c == 0), b = num(f, c == 1), cc = num(f, c == 2), d = num(f, c == 3), e = num(f, c == 4);
            Matrix v(4, 4);
            v << e, z * cc, num(f, 2) * z * a, z * b,
                 -d, ii * e, z * b, cc,
                 -b, a, -e, d,
                 a, num(f, 2) * z * d, -z * cc, -ii * e;
            cols.col(c) = sp4_coordinates(v, f);
        }
        return cols;
    };
    Matrix w5i = w5(i);
    r.expect_equal("dim W5", 5, rank(w5i));
    r.expect_true("W5 totally singular", is_totally_singular(w5i, m));

    Matrix x = zeros(4, 4, f);
    x(0, 0) = w.pow(3);
    x(1, 1) = w;
    x(2, 2) = w.pow(7);
    x(3, 3) = w.pow(9);
    Matrix tau = zeros(4, 4, f);
    tau(0, 1) = tau(1, 2) = tau(2, 3) = -FieldElement::one(f);
    tau(3, 0) = FieldElement::one(f);
    r.expect_true("x in Sp4", is_symplectic(x, 2, f));
    r.expect_true("tau in Sp4", is_symplectic(tau, 2, f));
    r.expect_equal("order of tau", 8, static_cast<long>(group_closure({tau}, f, o.closure_cap).order()));
    r.expect_true("x fixes W5", fixes_subspace(sp4_action(x, f), w5i));
    r.expect_true("tau fixes W5", fixes_subspace(sp4_action(tau, f), w5i));

    auto s = group_closure({x, tau}, f, o.closure_cap);
    r.expect_equal("order of <x, tau>", 40, static_cast<long>(s.order()));
    r.expect_equal("order of <tau, x>", 40, static_cast<long>(group_closure({tau, x}, f, o.closure_cap).order()));
    bool all_fix = true;
    for (const auto& g : s.elements) all_fix = all_fix && fixes_subspace(sp4_action(g, f), w5i);
    r.expect_true("every element of <x, tau> fixes W5", all_fix);

    lie_dim_check(r, "Lie stabilizer of W5", 0, lie_stabilizer_dim(m.lie_basis, w5i), true);
    r.expect_equal("dim G - dim S_5'", 0, group_dim('C', 2) - grass_dim(10, {5, 1}, FormKind::Orthogonal));

    Matrix w5m = w5(-i);
    r.expect_true("W5 with -i totally singular", is_totally_singular(w5m, m));
    long meet = subspace_intersect(FieldSubspace::from_columns(w5i), FieldSubspace::from_columns(w5m)).dim();
    r.expect_true("the two choices of i lie in different families", (5 - meet) % 2 == 1);
    return r;
}

Matrix c3_x(const FieldDescriptor& f, const FieldElement& w, const FieldElement& scale) {
    Matrix x = zeros(6, 6, f);
    const int e[6] = {1, 2, 3, 6, 5, 4};
    for (int k = 0; k < 6; ++k) x(k, k) = scale * w.pow(e[k]);
    return x;
}

VerificationReport case_c3_k7(const CaseOptions& o) {
    long p = characteristic_of(o);
    if (p == 3) throw std::invalid_argument("C3_K7 needs characteristic other than 3");
    FieldDescriptor f = pick_field(o, p == 2 ? 21 : 84, 84);
    auto r = start("C3_K7", f);
    ExplicitModule m = c3_lambda2(f);
    FieldElement g = sqrt_of(-FieldElement::one(f), f);
    FieldElement w = root_of_unity(7, f);
    auto v = [&](int i) { return unit(14, i - 1, f); };
    std::vector<Vector> gens = {v(1) + g * v(13), v(2) - g * v(14), v(3) + g * v(4), v(5) + g * v(6),
                                v(11) - g * v(12), v(9) - g * v(10), v(7)};
    Matrix w7(14, 7);
    for (int c = 0; c < 7; ++c) w7.col(c) = gens[static_cast<std::size_t>(c)];
    r.expect_equal("dim W7", 7, rank(w7));
    r.expect_true("W7 totally singular", is_totally_singular(w7, m));

    Matrix x = c3_x(f, w, FieldElement::one(f));
    Matrix printed = zeros(6, 6, f);
    printed(0, 5) = -FieldElement::one(f);
    printed(1, 2) = printed(2, 0) = printed(3, 1) = printed(4, 5) = printed(5, 3) = FieldElement::one(f);
    r.info("rank of the printed tau", "6", str(rank(printed)));
    Matrix tau = printed;
    tau(0, 5) = FieldElement::zero(f);
    tau(0, 4) = -FieldElement::one(f);
    r.expect_true("x in Sp6", is_symplectic(x, 3, f));
    r.expect_true("tau in Sp6", is_symplectic(tau, 3, f));
    Matrix conj = tau * x * solve_exact<FieldElement>(tau, identity(6, f));
    int power = 0;
    for (int j = 1; j < 7 && power == 0; ++j)
        if (same_matrix(conj, Matrix(c3_x(f, w.pow(j), FieldElement::one(f))))) power = j;
    r.expect_true("tau normalises <x>", power != 0);
    r.info("tau x tau^-1 = x^j", "", "j = " + str(power));
    r.expect_true("x fixes W7", fixes_subspace(c3_lambda2_action(x, f), w7));
    r.expect_true("tau fixes W7", fixes_subspace(c3_lambda2_action(tau, f), w7));

    auto s = group_closure({x, tau}, f, o.closure_cap);
    r.expect_equal("order of <x, tau>", 84, static_cast<long>(s.order()));
    bool all_fix = true;
    for (const auto& h : s.elements) all_fix = all_fix && fixes_subspace(c3_lambda2_action(h, f), w7);
    r.expect_true("every element of <x, tau> fixes W7", all_fix);

    Matrix t = c3_x(f, w, -FieldElement::one(f));
    r.expect_equal("order of diag(-w, ..., -w^4)", 14, static_cast<long>(group_closure({t}, f, o.closure_cap).order()));
    r.expect_true("diag(-w, ..., -w^4) fixes W7", fixes_subspace(c3_lambda2_action(t, f), w7));

    lie_dim_check(r, "Lie stabilizer of W7", 0, lie_stabilizer_dim(m.lie_basis, w7), true);
    r.expect_equal("dim G - dim S_7'", 0, group_dim('C', 3) - grass_dim(14, {7, 1}, FormKind::Orthogonal));
    return r;
}

int tensor_index(const ExplicitModule& m, const std::string& a, const std::string& b) {
    std::string label = a + "(x)" + b;
    for (std::size_t i = 0; i < m.basis_labels.size(); ++i)
        if (m.basis_labels[i] == label) return static_cast<int>(i);
    throw std::logic_error("missing tensor basis label " + label);
}

VerificationReport case_sp2sp6_k3(const CaseOptions& o) {
    FieldDescriptor f = pick_field(o, 1, 1);
    long p = f.characteristic();
    auto r = start("SP2SP6_K3", f);
    ExplicitModule m = tensor_module(natural_module('C', 1, f), natural_module('C', 3, f, HyperbolicOrder::Mirrored));
    auto t = [&](const std::string& a, const std::string& b) { return unit(m.dim, tensor_index(m, a, b), f); };
    Matrix w(m.dim, 3);
    w.col(0) = t("e1", "e1") + t("f1", "e2");
    w.col(1) = t("e1", "f2") + t("f1", "f1");
    w.col(2) = t("e1", "e2") + t("e1", "e3") + t("f1", "f3") - t("f1", "f2");
    r.expect_equal("dim W", 3, rank(w));
    r.expect_true("W totally singular", is_totally_singular(w, m));
    r.expect_equal("dim G", 24, static_cast<long>(m.lie_basis.size()));
    lie_dim_check(r, "Lie stabilizer of W", 3, lie_stabilizer_dim(m.lie_basis, w), p != 2);
    r.expect_equal("dim G - dim S_3", 3, 24 - grass_dim(12, {3, 0}, FormKind::Orthogonal));
    return r;
}

VerificationReport case_sp2sp2n(const CaseOptions& o) {
    FieldDescriptor f = pick_field(o, 1, 1);
    long p = f.characteristic();
    if (p != 0 && p <= 4) throw std::invalid_argument("SP2SP2N_TS needs characteristic 0 or greater than 4");
    auto r = start("SP2SP2N_TS", f);
    for (int n = 2; n <= 4; ++n) {
        std::string pre = "n=" + str(n) + ": ";
        ExplicitModule m = tensor_module(natural_module('C', 1, f), natural_module('C', n, f, HyperbolicOrder::Mirrored));
        auto t = [&](const std::string& a, const std::string& b) { return unit(m.dim, tensor_index(m, a, b), f); };
        Matrix w(m.dim, 2 * n), w2(m.dim, 2 * n);
        for (int i = 1; i <= n; ++i) {
            FieldElement a = num(f, i);
            std::string e = "e" + str(i), fi = "f" + str(i);
            w.col(2 * i - 2) = t("e1", e) + a * t("f1", e);
            w.col(2 * i - 1) = t("e1", fi) + a * t("f1", fi);
            if (i == 1) {
                w2.col(0) = t("e1", e) + a * t("e1", fi);
                w2.col(1) = t("f1", e) + a * t("f1", fi);
            } else {
                w2.col(2 * i - 2) = w.col(2 * i - 2);
                w2.col(2 * i - 1) = w.col(2 * i - 1);
            }
        }
        int gd = 3 + n * (2 * n + 1);
        r.expect_true(pre + "W_a totally singular", is_totally_singular(w, m));
        r.expect_equal(pre + "dim W_a", 2 * n, rank(w));
        int ls = lie_stabilizer_dim(m.lie_basis, w);
        int gr = grass_dim(4 * n, {2 * n, 1}, FormKind::Orthogonal);
        if (n >= 3) {
            lie_dim_check(r, pre + "Lie stabilizer of W_a", 3 * n, ls, true);
        } else {
            // every stabilizer has dimension at least dim G - dim S_2n' > 3n here
            r.expect_equal(pre + "Lie stabilizer of W_a = dim G - dim S_2n'", gd - gr, ls);
            r.info(pre + "3n", str(3 * n), str(ls));
        }
        r.expect_true(pre + "swapped W_a totally singular", is_totally_singular(w2, m));
        long meet = subspace_intersect(FieldSubspace::from_columns(w), FieldSubspace::from_columns(w2)).dim();
        r.expect_true(pre + "swapped W_a lies in the other family", (2 * n - meet) % 2 == 1);
        r.info(pre + "Lie stabilizer of swapped W_a", str(3 * n), str(lie_stabilizer_dim(m.lie_basis, w2)));
        if (n == 3) r.expect_equal(pre + "dim G - 3n = dim S_2n'", gr, gd - 3 * n);
        else if (n > 3) r.expect_true(pre + "dim G - 3n < dim S_2n'", gd - 3 * n < gr);
    }
    return r;
}

Matrix sl2(const FieldDescriptor& f, const FieldElement& a, const FieldElement& b, const FieldElement& c, const FieldElement& d) {
    Matrix g(2, 2);
    g << a, b, c, d;
    return in_field(g, f);
}

std::vector<Matrix> sl2_generators(const FieldDescriptor& f) {
    FieldElement one = FieldElement::one(f), zero = FieldElement::zero(f), gen = FieldElement::generator(f);
    return {sl2(f, one, one, zero, one), sl2(f, one, gen, zero, one), sl2(f, one, zero, one, one), sl2(f, one, zero, gen, one)};
}

const std::map<std::int64_t, std::vector<std::size_t>>& a1_twist_goldens() {
    static const std::map<std::int64_t, std::vector<std::size_t>> g = {{4, {20, 5}}, {9, {90, 10}}, {25, {650, 26}}};
    return g;
}

void a1_twist_census(VerificationReport& r, std::int64_t q, std::size_t cap) {
    auto [p, k] = prime_power(q);
    if (k < 2) throw std::invalid_argument("A1_TWIST needs q = p^k with k >= 2");
    FieldDescriptor f = FieldDescriptor::finite(p, k);
    TwistedA1Module tw = a1_twisted_module(f, 1);
    std::string pre = "q=" + std::to_string(q) + ": ";
    std::vector<Matrix> gens;
    for (const auto& g : sl2_generators(f)) gens.push_back(tw.act(g));
    bool pres = true;
    for (const auto& g : gens) pres = pres && tw.module.preserves_form(g);
    r.expect_true(pre + "generators preserve Q = det", pres);

    auto elems = all_elements(f);
    Matrix e12 = unit(4, 1, f);
    auto line = FieldSubspace::from_columns(e12);
    long order = 0, stab = 0;
    bool pattern = true;
    for (const auto& a : elems)
        for (const auto& b : elems)
            for (const auto& c : elems)
                for (const auto& d : elems) {
                    if (!(a * d - b * c).is_one()) continue;
                    ++order;
                    Matrix g = sl2(f, a, b, c, d);
                    bool fixes = FieldSubspace::from_columns(Matrix(tw.act(g) * e12)) == line;
                    bool shape = b.is_zero() && c.is_zero() && (a * d).is_one();
                    if (fixes) ++stab;
                    pattern = pattern && (fixes == shape);
                }
    r.expect_true(pre + "stabilizer of <E12> is b = c = 0, d = a^-1", pattern);
    r.expect_equal(pre + "stabilizer order", static_cast<long>(q - 1), stab);

    auto census = orbit_census(gens, tw.module, 1, std::nullopt, cap);
    long points = static_cast<long>(census.points);
    r.expect_equal(pre + "singular points", static_cast<long>((q + 1) * (q + 1)), points);
    if (census.independent_count)
        r.expect_equal(pre + "point count from the second pass", static_cast<long>(*census.independent_count), points);
    long largest = static_cast<long>(census.orbit_sizes.front());
    r.expect_equal(pre + "largest orbit = |SL2(q)| / |stabilizer|", order / stab, largest);
    std::ostringstream sizes;
    for (std::size_t i = 0; i < census.orbit_sizes.size(); ++i) sizes << (i ? "+" : "") << census.orbit_sizes[i];
    auto it = a1_twist_goldens().find(q);
    if (it != a1_twist_goldens().end()) {
        std::ostringstream gold;
        for (std::size_t i = 0; i < it->second.size(); ++i) gold << (i ? "+" : "") << it->second[i];
        r.expect_equal(pre + "orbit sizes", gold.str(), sizes.str());
    } else {
        r.info(pre + "orbit sizes", "", sizes.str());
    }
    std::ostringstream prop;
    prop << largest << "/" << points;
    r.info(pre + "share of the largest orbit (q/(q+1))", std::to_string(q) + "/" + std::to_string(q + 1), prop.str());
}

VerificationReport case_a1_twist(const CaseOptions& o) {
    if (o.conductor) throw std::invalid_argument("A1_TWIST runs over finite fields only");
    long p = o.characteristic ? *o.characteristic : 3;
    if (!is_prime(p)) throw std::invalid_argument("A1_TWIST needs a prime characteristic");
    FieldDescriptor f = FieldDescriptor::finite(p, 2);
    auto r = start("A1_TWIST", f);
    TwistedA1Module tw = a1_twisted_module(f, 1);
    auto line = unit(4, 1, f);
    r.expect_true("<E12> singular", is_totally_singular(Matrix(line), tw.module));
    lie_dim_check(r, "Lie stabilizer of <E12>", 1, lie_stabilizer_dim(tw.module.lie_basis, Matrix(line)), false);
    r.expect_equal("dim G - dim S_1", 1, group_dim('A', 1) - grass_dim(4, {1, 0}, FormKind::Orthogonal));
    a1_twist_census(r, f.order(), o.census_cap);
    return r;
}

std::vector<Matrix> b3_generators(const ExplicitModule& m) {
    std::vector<Matrix> gens;
    FieldElement t = FieldElement::generator(m.field);
    for (const auto& fam : m.families) {
        gens.push_back(fam.at(FieldElement::one(m.field)));
        if (!t.is_one()) gens.push_back(fam.at(t));
    }
    return gens;
}

void b3_census(VerificationReport& r, std::int64_t q, int k, std::size_t cap) {
    auto [p, e] = prime_power(q);
    FieldDescriptor f = FieldDescriptor::finite(p, e);
    ExplicitModule m = b3_spin_module(f);
    std::string pre = "q=" + std::to_string(q) + ": ";
    auto gens = b3_generators(m);
    bool pres = true;
    for (const auto& g : gens) pres = pres && m.preserves_form(g);
    r.expect_true(pre + "generators preserve the quadratic form", pres);
    auto census = orbit_census(gens, m, k, std::nullopt, cap);
    r.expect_equal(pre + "totally singular " + str(k) + "-spaces", static_cast<long>(polar_space_count(4, 0, static_cast<std::uint64_t>(q), k)),
                   static_cast<long>(census.points));
    if (census.independent_count)
        r.expect_equal(pre + "count from the second pass", static_cast<long>(*census.independent_count), static_cast<long>(census.points));
    else
        r.info(pre + "count from the second pass", "", "skipped (q^8 above cap)");
    r.info(pre + "orbits", "", str(static_cast<long>(census.orbit_sizes.size())));
    if (k == 1) r.expect_equal(pre + "orbits on singular points", 1, static_cast<long>(census.orbit_sizes.size()));
}

VerificationReport case_b3_spin(const CaseOptions& o) {
    if (o.conductor || (o.characteristic && *o.characteristic != 2))
        throw std::invalid_argument("B3_SPIN runs over GF(2)");
    FieldDescriptor f = FieldDescriptor::finite(2, 1);
    auto r = start("B3_SPIN", f);
    b3_census(r, 2, 1, o.census_cap);
    return r;
}

VerificationReport case_a2_p3_k3(const CaseOptions& o) {
    if (o.conductor || (o.characteristic && *o.characteristic != 3))
        throw std::invalid_argument("A2_P3_K3 needs characteristic 3");
    FieldDescriptor f = FieldDescriptor::finite(3, 2);
    auto r = start("A2_P3_K3", f);
    ExplicitModule m = a2_adjoint_quotient(f);
    RootSystem rs('A', 2);
    Matrix w3(7, 3);
    w3.col(0) = unit(7, 0, f);
    w3.col(1) = unit(7, 1, f);
    w3.col(2) = unit(7, rs.negative(2), f);
    r.expect_true("W3 totally singular", is_totally_singular(w3, m));
    FieldElement kappa = FieldElement::generator(f);
    bool pres = true;
    for (const auto& fam : m.families)
        for (const auto& t : {FieldElement::one(f), kappa}) pres = pres && m.preserves_form(fam.at(t));
    for (int i = 0; i < 2; ++i) pres = pres && m.preserves_form(a2_quotient_torus(i, kappa));
    r.expect_true("generators preserve the form", pres);
    r.expect_true("h_a1(k) fixes W3", fixes_subspace(a2_quotient_torus(0, kappa), w3));
    r.expect_true("h_a2(k) fixes W3", fixes_subspace(a2_quotient_torus(1, kappa), w3));

    auto x = [&](int root, const FieldElement& t) {
        for (const auto& fam : m.families)
            if (fam.root == root) return fam.at(t);
        throw std::logic_error("missing root family");
    };
    auto n = [&](int i) {
        FieldElement one = FieldElement::one(f);
        return Matrix(x(i, one) * x(rs.negative(i), -one) * x(i, one));
    };
    Matrix n1 = n(0), n2 = n(1);
    r.expect_true("n1 n2 fixes W3", fixes_subspace(Matrix(n1 * n2), w3));
    r.expect_true("n2 n1 fixes W3", fixes_subspace(Matrix(n2 * n1), w3));
    r.expect_true("n1 does not fix W3", !fixes_subspace(n1, w3));
    r.expect_true("n2 does not fix W3", !fixes_subspace(n2, w3));
    r.expect_true("n1 n2 n1 does not fix W3", !fixes_subspace(Matrix(n1 * n2 * n1), w3));
    r.info("Weyl representatives", "", "n_a(1) = x_a(1) x_-a(-1) x_a(1)");
    lie_dim_check(r, "Lie stabilizer of W3", 2, lie_stabilizer_dim(m.lie_basis, w3), true);
    r.expect_equal("dim G - dim S_3", stabilizer_dim(parse_stabilizer("T_2.3")),
                   group_dim('A', 2) - grass_dim(7, {3, 0}, FormKind::Orthogonal));
    return r;
}

/// m / <v> for v in the radical of the form with Q(v) = 0 and v invariant under the Lie basis.
ExplicitModule quotient_module(const ExplicitModule& m, const Vector& v) {
    const FieldDescriptor& f = m.field;
    int n = m.dim, j = -1;
    for (int i = 0; i < n; ++i)
        if (!v(i).is_zero()) j = i;
    if (j < 0) throw std::invalid_argument("quotient_module: zero vector");
    if (!is_zero_vector(Vector(m.gram * v)) || !m.quadratic(v).is_zero())
        throw std::invalid_argument("quotient_module: vector is not in the singular radical");
    Matrix s = zeros(n, n - 1, f), p = zeros(n - 1, n, f);
    ExplicitModule out;
    for (int i = 0, c = 0; i < n; ++i) {
        if (i == j) continue;
        s(i, c) = FieldElement::one(f);
        p(c, i) = FieldElement::one(f);
        p(c, j) = -v(i) / v(j);
        if (!m.quad.empty()) out.quad.push_back(m.quad[static_cast<std::size_t>(i)]);
        if (!m.basis_labels.empty()) out.basis_labels.push_back(m.basis_labels[static_cast<std::size_t>(i)]);
        ++c;
    }
    auto line = FieldSubspace::from_columns(Matrix(v));
    out.name = m.name + " / <" + (m.basis_labels.empty() ? "v" : "radical") + ">";
    out.field = f;
    out.dim = n - 1;
    out.form = m.form;
    out.gram = s.transpose() * m.gram * s;
    for (const auto& x : m.lie_basis) {
        if (!line.contains(Vector(x * v))) throw std::invalid_argument("quotient_module: Lie element moves the vector");
        out.lie_basis.push_back(p * x * s);
    }
    for (const auto& fam : m.families) {
        RootElementFamily g{fam.label, fam.root, {}};
        for (const auto& c : fam.coeffs) g.coeffs.push_back(p * c * s);
        out.families.push_back(g);
    }
    return out;
}

struct ZeroWeightSpec {
    std::string id;
    char type;
    int rank;
    ZeroWeightFamily family;
    int root;                // root of unity giving the singular line (1, zeta)
    std::vector<long> treated_excluded;  // characteristics outside the treated range
    bool only_char2;
    int weyl_order;
    std::string stab;
};

VerificationReport zero_weight_case(const ZeroWeightSpec& spec, const CaseOptions& o) {
    long p = characteristic_of(o);
    if (spec.only_char2) {
        if (o.conductor || (o.characteristic && p != 2)) throw std::invalid_argument(spec.id + " needs characteristic 2");
        p = 2;
    }
    CaseOptions oo = o;
    if (spec.only_char2) oo.characteristic = 2;
    FieldDescriptor f = pick_field(oo, spec.root, spec.root);
    p = f.characteristic();
    auto r = start(spec.id, f);
    const bool treated = std::find(spec.treated_excluded.begin(), spec.treated_excluded.end(), p) == spec.treated_excluded.end();
    RootSystem rs(spec.type, spec.rank);
    const int nr = rs.num_roots(), l = rs.rank();
    ExplicitModule m = adjoint_module(rs, f);
    Vector centre;
    if (spec.only_char2) {
        centre = zeros(m.dim, 1, f);
        centre(nr) = centre(nr + 2) = FieldElement::one(f);
        m = quotient_module(m, centre);
    }

    auto h_coords = [&](const FieldElement& a, const FieldElement& b) {
        std::vector<FieldElement> x;
        switch (spec.family) {
        case ZeroWeightFamily::A2: x = {a, a + b}; break;
        case ZeroWeightFamily::B2: x = {a, (a + b) / num(f, 2)}; break;
        case ZeroWeightFamily::G2: x = {a + b, a + num(f, 2) * b}; break;
        case ZeroWeightFamily::A3p2: x = {a, a + b, FieldElement::zero(f)}; break;
        default: throw std::logic_error("unsupported zero-weight family");
        }
        return x;
    };
    auto embed = [&](const std::vector<FieldElement>& x) {
        Vector v = zeros(m.dim, 1, f);
        if (spec.only_char2) {
            v(nr) = x[0] - x[2];
            v(nr + 1) = x[1];
        } else {
            for (int i = 0; i < l; ++i) v(nr + i) = x[static_cast<std::size_t>(i)];
        }
        return v;
    };

    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<int> coef(-6, 6);
    FieldElement scale = m.quadratic(embed(h_coords(FieldElement::one(f), FieldElement::zero(f))));
    bool proportional = !scale.is_zero();
    for (int s = 0; s < 12 && proportional; ++s) {
        FieldElement a = num(f, coef(rng)), b = num(f, coef(rng));
        proportional = m.quadratic(embed(h_coords(a, b))) == scale * zero_weight_form(spec.family, {a, b});
    }
    r.expect_true("Q on the zero weight space is a multiple of the family form", proportional);
    r.info("scale factor", "", scale.to_string());

    FieldElement zeta = root_of_unity(spec.root, f);
    FieldElement a = FieldElement::one(f), b = zeta;
    r.expect_true("family form vanishes at (1, zeta)", zero_weight_form(spec.family, {a, b}).is_zero());
    std::vector<FieldElement> hx = h_coords(a, b);
    Vector v = embed(hx);
    r.expect_true("<v> totally singular", is_totally_singular(Matrix(v), m));

    Matrix adv = zeros(m.dim, m.dim, f);
    for (int i = 0; i < l; ++i) adv += hx[static_cast<std::size_t>(i)] * m.lie_basis[static_cast<std::size_t>(nr + i)];
    int zero_dim = spec.only_char2 ? 2 : l;
    r.expect_equal("centraliser of v = zero weight space (v regular)", zero_dim, static_cast<long>(m.dim - rank(adv)));

    lie_dim_check(r, "Lie stabilizer of <v>", l, lie_stabilizer_dim(m.lie_basis, Matrix(v)), treated);

    std::vector<Matrix> refl;
    for (int i = 0; i < l; ++i) {
        Matrix s = identity(l, f);
        for (int j = 0; j < l; ++j) s(i, j) = s(i, j) - num(f, rs.cartan(i, j));
        refl.push_back(s);
    }
    auto weyl = group_closure(refl, f, o.closure_cap);
    Matrix line(l, spec.only_char2 ? 2 : 1);
    for (int i = 0; i < l; ++i) line(i, 0) = hx[static_cast<std::size_t>(i)];
    if (spec.only_char2) {
        for (int i = 0; i < l; ++i) line(i, 1) = FieldElement::zero(f);
        line(0, 1) = line(2, 1) = FieldElement::one(f);
    }
    long fixing = 0;
    for (const auto& w : weyl.elements) fixing += fixes_subspace(w, line) ? 1 : 0;
    r.info("order of W", "", str(static_cast<long>(weyl.order())));
    r.expect_equal("order of the Weyl stabilizer of <v>", spec.weyl_order, fixing);
    int n = m.dim;
    r.expect_equal("dim G - dim S_1", stabilizer_dim(parse_stabilizer(spec.stab)),
                   group_dim(spec.type, spec.rank) - grass_dim(n, {1, 0}, FormKind::Orthogonal));
    return r;
}

struct ClLambda2 {
    ExplicitModule module;
    Matrix pair_basis;  // columns: basis of X1 in the e_i ^ e_j coordinates
};

/// X1 = kernel of the contraction on Lambda^2 of the C_l natural module, with Q = B/2.
ClLambda2 cl_lambda2_module(int l, const FieldDescriptor& f) {
    ExplicitModule nat = natural_module('C', l, f, HyperbolicOrder::Split);
    const int n = 2 * l;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    const int d = static_cast<int>(pairs.size());
    // u wedge v in pair coordinates
    auto wedge = [&](const Vector& u, const Vector& v) {
        Vector out = zeros(d, 1, f);
        for (int k = 0; k < d; ++k) {
            auto [i, j] = pairs[static_cast<std::size_t>(k)];
            out(k) = u(i) * v(j) - u(j) * v(i);
        }
        return out;
    };
    Matrix contraction = zeros(1, d, f);
    for (int k = 0; k < d; ++k) contraction(0, k) = nat.gram(pairs[static_cast<std::size_t>(k)].first, pairs[static_cast<std::size_t>(k)].second);
    Matrix basis = kernel<FieldElement>(contraction);
    Matrix pair_gram = zeros(d, d, f);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            auto [i1, i2] = pairs[static_cast<std::size_t>(a)];
            auto [j1, j2] = pairs[static_cast<std::size_t>(b)];
            pair_gram(a, b) = nat.gram(i1, j1) * nat.gram(i2, j2) - nat.gram(i1, j2) * nat.gram(i2, j1);
        }
    ExplicitModule m;
    m.name = "C" + str(l) + " Lambda^2 / contraction";
    m.field = f;
    m.dim = static_cast<int>(basis.cols());
    m.form = FormKind::Orthogonal;
    m.gram = basis.transpose() * pair_gram * basis;
    for (int c = 0; c < m.dim; ++c) m.quad.push_back(m.gram(c, c) / num(f, 2));
    for (const auto& x : nat.lie_basis) {
        Matrix der = zeros(d, d, f);
        for (int k = 0; k < d; ++k) {
            auto [i, j] = pairs[static_cast<std::size_t>(k)];
            Vector ui = unit(n, i, f), uj = unit(n, j, f);
            der.col(k) = wedge(Vector(x * ui), uj) + wedge(ui, Vector(x * uj));
        }
        m.lie_basis.push_back(solve_exact<FieldElement>(basis, Matrix(der * basis)));
    }
    return {m, basis};
}

VerificationReport case_cl_lambda2(const CaseOptions& o) {
    const int l = 4;
    long p = characteristic_of(o);
    if (p == 2 || (p != 0 && l % p == 0)) throw std::invalid_argument("CL_LAMBDA2_ZW needs p odd and not dividing 4");
    FieldDescriptor f = p == 0 ? pick_field(o, 4, 4) : FieldDescriptor::finite(p, 1);
    auto r = start("CL_LAMBDA2_ZW", f);
    auto [m, pair_basis] = cl_lambda2_module(l, f);
    r.expect_equal("dim X1", 2 * l * l - l - 1, m.dim);
    bool lie_ok = true;
    for (const auto& x : m.lie_basis) lie_ok = lie_ok && m.lie_preserves_form(x);
    r.expect_true("Lie basis preserves the form", lie_ok);

    const int n = 2 * l;
    auto zero_weight = [&](const std::vector<FieldElement>& a) {
        Vector pv = zeros(pair_basis.rows(), 1, f);
        int k = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++k)
                if (j == i + l) pv(k) = a[static_cast<std::size_t>(i)];
        return Vector(solve_exact<FieldElement>(pair_basis, Matrix(pv)));
    };
    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<int> coef(-6, 6);
    bool match = true;
    for (int s = 0; s < 12; ++s) {
        std::vector<FieldElement> a(l, FieldElement::zero(f));
        FieldElement sum = FieldElement::zero(f);
        for (int i = 0; i + 1 < l; ++i) {
            a[static_cast<std::size_t>(i)] = num(f, coef(rng));
            sum += a[static_cast<std::size_t>(i)];
        }
        a[static_cast<std::size_t>(l - 1)] = -sum;
        match = match && m.quadratic(zero_weight(a)) == zero_weight_form(ZeroWeightFamily::ClLambda2, a);
    }
    r.expect_true("Q on the zero weight space matches the family form", match);

    std::vector<FieldElement> a;
    if (f.kind == FieldKind::Finite) {
        auto elems = all_elements(f);
        for (const auto& a0 : elems) {
            for (const auto& a1 : elems)
                for (const auto& a2 : elems) {
                    FieldElement a3 = -(a0 + a1 + a2);
                    std::vector<FieldElement> c = {a0, a1, a2, a3};
                    bool distinct = true;
                    for (int i = 0; i < 4; ++i)
                        for (int j = i + 1; j < 4; ++j) distinct = distinct && c[static_cast<std::size_t>(i)] != c[static_cast<std::size_t>(j)];
                    if (distinct && zero_weight_form(ZeroWeightFamily::ClLambda2, c).is_zero()) {
                        a = c;
                        break;
                    }
                }
            if (!a.empty()) break;
        }
        if (a.empty()) throw std::invalid_argument("no singular zero weight vector with distinct coordinates over " + f.name());
    } else {
        FieldElement i = root_of_unity(4, f);
        a = {FieldElement::one(f), -FieldElement::one(f), i, -i};
    }
    std::ostringstream as;
    for (std::size_t k = 0; k < a.size(); ++k) as << (k ? ", " : "") << a[k];
    r.info("a", "", "(" + as.str() + ")");
    Vector v = zero_weight(a);
    r.expect_true("<v> totally singular", is_totally_singular(Matrix(v), m));
    lie_dim_check(r, "Lie stabilizer of <v>", 3 * l, lie_stabilizer_dim(m.lie_basis, Matrix(v)), true);
    int deficit = group_dim('C', l) - grass_dim(m.dim, {1, 0}, FormKind::Orthogonal);
    r.expect_true("dim G - dim S_1 < dim A_1^l (no dense orbit)", deficit < stabilizer_dim(parse_stabilizer("A_1^l", l)));
    return r;
}

VerificationReport case_g2_k2(const CaseOptions&) {
    VerificationReport r;
    r.case_id = "G2_K2";
    RootSystem rs('G', 2);
    std::vector<int> word = parse_weyl_word("n2n1n2n1n2");
    int mu1 = rs.index({2, 1}), mu2 = rs.index({1, 1});
    r.expect_true("w maps mu1 to -mu2", rs.apply_word(word, mu1) == rs.negative(mu2));
    auto inter = parabolic_common_roots(rs, {0}, word);
    r.expect_equal("P1 and its w-conjugate", "U3T2", inter.shape);
    int stab = stabilizer_dim(parse_stabilizer("U_3A_1T_1"));
    r.expect_equal("dim G - dim S_2 (p != 2)", stab, group_dim('G', 2) - grass_dim(7, {2, 0}, FormKind::Orthogonal));
    r.expect_equal("dim G - dim S_2 (p = 2)", stab, group_dim('G', 2) - grass_dim(6, {2, 0}, FormKind::Symplectic));
    r.expect_true("U3T2 fits inside U3A1T1", inter.unipotent_dim + inter.torus_rank <= stab);
    return r;
}

Matrix spin_at(const CliffordPoly& g, const FieldElement& t) { return spin_matrix(cl_poly_at(g, t), b4_spinor_basis()); }

std::vector<FieldElement> sample_parameters(const FieldDescriptor& f) {
    FieldElement one = FieldElement::one(f);
    if (f.kind == FieldKind::Finite) return {one, FieldElement::generator(f), FieldElement::generator(f) + one};
    return {one, num(f, 2), num(f, -3)};
}

VerificationReport case_b4_spin(const CaseOptions& o) {
    long p = characteristic_of(o);
    FieldDescriptor f = pick_field(o, p == 2 || p == 3 ? 1 : 12, 12);
    if (p == 2 || p == 3) f = FieldDescriptor::finite(p, 2);
    auto r = start("B4_SPIN", f);
    ExplicitModule spin = b4_spin_module(f);
    RootSystem rs('B', 4);
    auto params = sample_parameters(f);
    bool pres = true;
    for (const auto& fam : spin.families)
        for (const auto& t : params) pres = pres && spin.preserves_form(fam.at(t));
    r.expect_true("spin root elements preserve the quadratic form", pres);
    bool lie = true;
    for (const auto& x : spin.lie_basis) lie = lie && spin.lie_preserves_form(x);
    r.expect_true("spin Lie basis preserves the form", lie);
    r.expect_equal("spin Lie basis size", group_dim('B', 4), static_cast<long>(spin.lie_basis.size()));

    if (p != 2) {
        ExplicitModule nat = natural_module('B', 4, f);
        Matrix pm = zeros(10, 9, f);
        pm(4, 0) = pm(9, 0) = FieldElement::one(f);
        for (int i = 0; i < 4; ++i) {
            pm(i, 1 + 2 * i) = FieldElement::one(f);
            pm(5 + i, 2 + 2 * i) = FieldElement::one(f);
        }
        Vector d = zeros(10, 1, f);
        d(4) = FieldElement::one(f);
        d(9) = -FieldElement::one(f);
        bool compat = true, fixes_d = true;
        for (int a = 0; a < rs.num_roots(); ++a)
            for (const auto& t : params) {
                Matrix vr = vector_rep(cl_poly_at(b4_root_element(a, f), t));
                compat = compat && same_matrix(Matrix(vr * pm), Matrix(pm * nat.families[static_cast<std::size_t>(a)].at(t)));
                fixes_d = fixes_d && same_matrix(Matrix(vr * d), Matrix(d));
            }
        r.expect_true("vector representation matches the natural module on every root", compat);
        r.expect_true("every root element fixes e5 - f5", fixes_d);
    } else {
        r.info("vector representation check", "", "skipped in characteristic 2");
    }

    if (p != 2) {
        auto d = b4_case_data(f);
        auto cyc = involution_cycles(b4_root_permutation(d.tau2, spin));
        if (p != 3) r.expect_true("tau2 root permutation matches the printed cycles", cyc == d.tau2_printed_cycles);
        auto cyc3 = involution_cycles(b4_root_permutation(d.tau_p3, spin));
        r.expect_true("p=3 tau root permutation matches the printed cycles", cyc3 == d.tau_p3_printed_cycles);
    }
    return r;
}

VerificationReport case_b4_k8p(const CaseOptions& o) {
    long p = characteristic_of(o);
    if (p == 2) throw std::invalid_argument("B4_K8P in characteristic 2 is the B4_K8PP_P2 family");
    VerificationReport r;
    r.case_id = "B4_K8P";
    if (p != 3) {
        FieldDescriptor f = pick_field(o, 12, 12);
        r.info("field", "", f.name());
        ExplicitModule spin = b4_spin_module(f);
        auto d = b4_case_data(f);
        std::vector<FieldElement> lambdas;
        if (f.kind == FieldKind::Finite) {
            lambdas = all_elements(f);
        } else {
            FieldElement i = root_of_unity(4, f), w = root_of_unity(3, f), one = FieldElement::one(f);
            lambdas = {i, -i, FieldElement::zero(f), one, -one, num(f, 2), w, w * w, one + i, num(f, 3) * i, i / num(f, 2), w * i};
            std::mt19937_64 rng(o.seed);
            std::uniform_int_distribution<int> coef(-5, 5);
            for (int s = 0; s < 8; ++s) lambdas.push_back(num(f, coef(rng)) + num(f, coef(rng)) * i);
        }
        bool iff = true;
        long singular = 0;
        for (const auto& lam : lambdas) {
            bool ts = is_totally_singular(b4_w_lambda(d, lam), spin);
            singular += ts ? 1 : 0;
            iff = iff && ts == (lam * lam == -FieldElement::one(f));
        }
        r.expect_true("W_lambda totally singular iff lambda^2 = -1 (" + str(static_cast<long>(lambdas.size())) + " values)", iff);
        r.info("totally singular members found", "", str(singular));
        FieldElement i = root_of_unity(4, f);
        auto params = sample_parameters(f);
        for (const auto& lam : {i, -i}) {
            std::string pre = lam == i ? "lambda=i: " : "lambda=-i: ";
            Matrix w = b4_w_lambda(d, lam);
            bool fixed = true;
            for (const auto& g : d.a2_gens)
                for (const auto& t : params) fixed = fixed && fixes_subspace(spin_at(g, t), w);
            r.expect_true(pre + "A2 generators fix W", fixed);
            r.expect_true(pre + "tau2 fixes W", fixes_subspace(spin_matrix(d.tau2, b4_spinor_basis()), w));
            lie_dim_check(r, pre + "Lie stabilizer of W", 8, lie_stabilizer_dim(spin.lie_basis, w), true);
        }
        auto cyc = involution_cycles(b4_root_permutation(d.tau2, spin));
        r.expect_true("tau2 root permutation matches the printed cycles", cyc == d.tau2_printed_cycles);
    }
    if (p == 0 || p == 3) {
        FieldDescriptor f9 = FieldDescriptor::finite(3, 2);
        r.info("field (p=3 part)", "", f9.name());
        ExplicitModule spin = b4_spin_module(f9);
        auto d = b4_case_data(f9);
        r.expect_true("p=3: W totally singular", is_totally_singular(d.w_p3, spin));
        bool fixed = true;
        for (const auto& g : d.a2_gens_p3)
            for (const auto& t : all_elements(f9)) fixed = fixed && fixes_subspace(spin_at(g, t), d.w_p3);
        r.expect_true("p=3: A2 generators fix W", fixed);
        r.expect_true("p=3: tau fixes W", fixes_subspace(spin_matrix(d.tau_p3, b4_spinor_basis()), d.w_p3));
        auto cyc = involution_cycles(b4_root_permutation(d.tau_p3, spin));
        r.expect_true("p=3: tau root permutation matches the printed cycles", cyc == d.tau_p3_printed_cycles);
        lie_dim_check(r, "p=3: Lie stabilizer of W", 8, lie_stabilizer_dim(spin.lie_basis, d.w_p3), true);
    }
    r.expect_equal("dim G - dim S_8'", stabilizer_dim(parse_stabilizer("A_2.Z_2")),
                   group_dim('B', 4) - grass_dim(16, {8, 1}, FormKind::Orthogonal));
    return r;
}

VerificationReport case_b4_k8pp_p2(const CaseOptions& o) {
    if (o.conductor || (o.characteristic && *o.characteristic != 2))
        throw std::invalid_argument("B4_K8PP_P2 needs characteristic 2");
    FieldDescriptor f = FieldDescriptor::finite(2, 4);
    auto r = start("B4_K8PP_P2", f);
    ExplicitModule spin = b4_spin_module(f);
    auto elems = all_elements(f);
    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
    long agree = 0, total = 0;
    for (int s = 0; s < 40; ++s) {
        FieldElement a = elems[pick(rng)], b = elems[pick(rng)];
        FieldElement c = s % 2 == 0 ? a + b : elems[pick(rng)];
        bool ts = is_totally_singular(b4_w_abc(f, a, b, c), spin);
        agree += ts == (a + b + c).is_zero() ? 1 : 0;
        ++total;
    }
    r.expect_equal("W_abc totally singular iff a+b+c = 0 (sampled triples)", total, agree);

    FieldElement w = root_of_unity(3, f), one = FieldElement::one(f);
    std::vector<std::array<FieldElement, 3>> triples = {{one, w, w * w}};
    for (int s = 0; s < 3; ++s) {
        FieldElement a, b;
        do {
            a = elems[pick(rng)];
            b = elems[pick(rng)];
        } while (a.is_zero() || b.is_zero() || a == b || (a + b).is_zero() || (a + b) == a || (a + b) == b);
        triples.push_back({a, b, a + b});
    }
    auto params = sample_parameters(f);
    for (const auto& t : triples) {
        std::ostringstream pre;
        pre << "(" << t[0] << ", " << t[1] << ", " << t[2] << "): ";
        Matrix wm = b4_w_abc(f, t[0], t[1], t[2]);
        r.expect_true(pre.str() + "totally singular", is_totally_singular(wm, spin));
        bool fixed = true;
        // generators A_1^(i-1)(lambda) with lambda = a, c, b for i = 2, 3, 4
        const FieldElement* lam[3] = {&t[0], &t[2], &t[1]};
        for (int i = 2; i <= 4; ++i)
            for (const auto& g : b4_a1_generators(f, i, *lam[i - 2]))
                for (const auto& s : params) fixed = fixed && fixes_subspace(spin_at(g, s), wm);
        r.expect_true(pre.str() + "A1 generators fix W_abc", fixed);
        lie_dim_check(r, pre.str() + "Lie stabilizer of W_abc", 9, lie_stabilizer_dim(spin.lie_basis, wm), true);
    }
    r.expect_true("dim G - dim S_8'' < dim A_1^3 (no dense orbit)",
                  group_dim('B', 4) - grass_dim(16, {8, 2}, FormKind::Orthogonal) < stabilizer_dim(parse_stabilizer("A_1^3")));
    return r;
}

VerificationReport case_table1(const CaseOptions&) { return table1_consistency(default_catalog()); }

const std::vector<std::pair<std::string, CaseFn>>& registry() {
    static const std::vector<std::pair<std::string, CaseFn>> reg = [] {
        std::vector<std::pair<std::string, CaseFn>> v;
        v.emplace_back("A2_P3_K3", case_a2_p3_k3);
        auto zw = [&v](ZeroWeightSpec s) {
            std::string id = s.id;
            v.emplace_back(id, [s](const CaseOptions& o) { return zero_weight_case(s, o); });
        };
        zw({"A2_ADJ_SINGLOCUS", 'A', 2, ZeroWeightFamily::A2, 3, {3}, false, 3, "T_2.3"});
        zw({"B2_ADJ", 'B', 2, ZeroWeightFamily::B2, 4, {2}, false, 4, "T_2.4"});
        zw({"A3_P2", 'A', 3, ZeroWeightFamily::A3p2, 3, {}, true, 12, "T_3.Alt(4)"});
        zw({"G2_ADJ", 'G', 2, ZeroWeightFamily::G2, 3, {3}, false, 6, "T_2.6"});
        v.emplace_back("CL_LAMBDA2_ZW", case_cl_lambda2);
        v.emplace_back("G2_K2", case_g2_k2);
        v.emplace_back("B4_SPIN", case_b4_spin);
        v.emplace_back("B4_K8P", case_b4_k8p);
        v.emplace_back("B4_K8PP_P2", case_b4_k8pp_p2);
        v.emplace_back("C2_K5", case_c2_k5);
        v.emplace_back("C3_K7", case_c3_k7);
        v.emplace_back("SP2SP6_K3", case_sp2sp6_k3);
        v.emplace_back("SP2SP2N_TS", case_sp2sp2n);
        v.emplace_back("A1_TWIST", case_a1_twist);
        v.emplace_back("B3_SPIN", case_b3_spin);
        v.emplace_back("TABLE1", case_table1);
        return v;
    }();
    return reg;
}

}  // namespace

std::vector<std::string> case_ids() {
    std::vector<std::string> ids;
    for (const auto& [id, fn] : registry()) ids.push_back(id);
    return ids;
}

bool has_case(const std::string& id) {
    for (const auto& [k, fn] : registry())
        if (k == id) return true;
    return false;
}

VerificationReport case_verify(const std::string& id, const CaseOptions& opts) {
    for (const auto& [k, fn] : registry())
        if (k == id) return fn(opts);
    throw std::invalid_argument("unknown case id: " + id);
}

std::vector<std::string> census_case_ids() { return {"A1_TWIST", "B3_SPIN"}; }

VerificationReport orbit_case(const std::string& id, std::int64_t q, int k, std::size_t cap) {
    VerificationReport r;
    r.case_id = id;
    if (id == "A1_TWIST") {
        if (k != 1) throw std::invalid_argument("A1_TWIST census is on singular points (k = 1)");
        a1_twist_census(r, q, cap);
    } else if (id == "B3_SPIN") {
        if (prime_power(q).first != 2) throw std::invalid_argument("B3_SPIN census needs q a power of 2");
        b3_census(r, q, k, cap);
    } else {
        throw std::invalid_argument("no census for case " + id);
    }
    return r;
}

}  // namespace genstab
