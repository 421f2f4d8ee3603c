#include "genstab/clifford.hpp"

#include <bit>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace genstab {

namespace {

using Term = std::pair<std::uint32_t, int>;

std::uint32_t bit(int g) { return std::uint32_t{1} << g; }

int top_bit(std::uint32_t m) { return 31 - std::countl_zero(m); }

/// word * x_g expanded into canonical monomials, for generators of a 2n-space.
std::vector<Term> rmul_generator(std::uint32_t word, int g, int n) {
    if (word == 0) return {{bit(g), 1}};
    int last = top_bit(word);
    if (last < g) return {{word | bit(g), 1}};
    if (last == g) return {};
    std::uint32_t prefix = word & ~bit(last);
    std::vector<Term> out;
    for (auto [m, c] : rmul_generator(prefix, g, n)) out.emplace_back(m | bit(last), -c);
    if (last == g + n) out.emplace_back(prefix, 1);  // f_i e_i = 1 - e_i f_i
    return out;
}

std::mutex cache_mutex;
std::unordered_map<std::uint64_t, std::vector<Term>> product_cache;

const std::vector<Term>& monomial_product(std::uint32_t a, std::uint32_t b, int n) {
    std::uint64_t key = (std::uint64_t(n) << 48) | (std::uint64_t(a) << 24) | b;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = product_cache.find(key);
        if (it != product_cache.end()) return it->second;
    }
    std::map<std::uint32_t, int> cur{{a, 1}};
    for (int g = 0; g < 2 * n; ++g) {
        if (!(b & bit(g))) continue;
        std::map<std::uint32_t, int> next;
        for (auto [m, c] : cur)
            for (auto [m2, c2] : rmul_generator(m, g, n)) next[m2] += c * c2;
        cur.clear();
        for (auto [m, c] : next)
            if (c) cur[m] = c;
    }
    std::vector<Term> terms(cur.begin(), cur.end());
    std::lock_guard<std::mutex> lock(cache_mutex);
    return product_cache.emplace(key, std::move(terms)).first->second;
}

void check_compatible(const CliffordElement& a, const CliffordElement& b) {
    if (a.n() != b.n()) throw std::invalid_argument("Clifford elements over different dimensions");
    if (!(a.field() == b.field())) throw FieldError("Clifford elements over different fields");
}

}  // namespace

CliffordElement CliffordElement::scalar(int n, const FieldDescriptor& f, const FieldElement& c) {
    CliffordElement r(n, f);
    r.add_term(0, c);
    return r;
}

CliffordElement CliffordElement::e(int n, const FieldDescriptor& f, int i) {
    if (i < 1 || i > n) throw std::out_of_range("e index out of range");
    CliffordElement r(n, f);
    r.add_term(bit(i - 1), FieldElement::one(f));
    return r;
}

CliffordElement CliffordElement::f(int n, const FieldDescriptor& fd, int i) {
    if (i < 1 || i > n) throw std::out_of_range("f index out of range");
    CliffordElement r(n, fd);
    r.add_term(bit(n + i - 1), FieldElement::one(fd));
    return r;
}

CliffordElement CliffordElement::e_monomial(int n, const FieldDescriptor& f, const std::vector<int>& indices) {
    CliffordElement r = scalar(n, f, FieldElement::one(f));
    for (int i : indices) r = r * e(n, f, i);
    return r;
}

FieldElement CliffordElement::coefficient(std::uint32_t mask) const {
    auto it = terms_.find(mask);
    return it == terms_.end() ? FieldElement::zero(field_) : it->second;
}

bool CliffordElement::is_scalar() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

void CliffordElement::add_term(std::uint32_t mask, const FieldElement& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(mask);
    if (it == terms_.end()) {
        terms_.emplace(mask, c.in(field_));
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

CliffordElement& CliffordElement::operator+=(const CliffordElement& o) {
    check_compatible(*this, o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

CliffordElement& CliffordElement::operator-=(const CliffordElement& o) {
    check_compatible(*this, o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

CliffordElement operator*(const CliffordElement& a, const CliffordElement& b) {
    check_compatible(a, b);
    CliffordElement r(a.n_, a.field_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            FieldElement c = ca * cb;
            for (auto [m, k] : monomial_product(ma, mb, a.n_)) r.add_term(m, c * FieldElement(k));
        }
    return r;
}

CliffordElement operator*(const FieldElement& c, CliffordElement a) {
    if (c.is_zero()) return CliffordElement(a.n_, a.field_);
    for (auto& [m, x] : a.terms_) x *= c;
    return a;
}

bool operator==(const CliffordElement& a, const CliffordElement& b) {
    return a.n_ == b.n_ && a.field_ == b.field_ && a.terms_ == b.terms_;
}

CliffordElement CliffordElement::reversal() const {
    CliffordElement r(n_, field_);
    for (const auto& [m, c] : terms_) {
        CliffordElement w = scalar(n_, field_, c);
        for (int g = 2 * n_ - 1; g >= 0; --g) {
            if (!(m & bit(g))) continue;
            CliffordElement x(n_, field_);
            x.add_term(bit(g), FieldElement::one(field_));
            w = w * x;
        }
        r += w;
    }
    return r;
}

CliffordElement CliffordElement::inverse() const {
    CliffordElement rev = reversal();
    CliffordElement norm = (*this) * rev;
    if (!norm.is_scalar() || norm.is_zero()) throw std::domain_error("Clifford element is not in the Clifford group");
    return norm.coefficient(0).inverse() * rev;
}

std::string CliffordElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += "(" + c.to_string() + ")";
        for (int g = 0; g < 2 * n_; ++g)
            if (m & bit(g)) s += (g < n_ ? "e" : "f") + std::to_string(g < n_ ? g + 1 : g - n_ + 1);
    }
    return s;
}

CliffordElement cl_mul(const CliffordElement& a, const CliffordElement& b) { return a * b; }

CliffordPoly cl_linear(const CliffordElement& u) {
    return {CliffordElement::scalar(u.n(), u.field(), FieldElement::one(u.field())), u};
}

CliffordPoly cl_poly_mul(const CliffordPoly& a, const CliffordPoly& b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("empty Clifford polynomial");
    CliffordPoly r(a.size() + b.size() - 1, CliffordElement(a.front().n(), a.front().field()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    while (r.size() > 1 && r.back().is_zero()) r.pop_back();
    return r;
}

CliffordElement cl_poly_at(const CliffordPoly& p, const FieldElement& t) {
    CliffordElement r(p.front().n(), p.front().field());
    FieldElement tp = FieldElement::one(p.front().field());
    for (const auto& c : p) {
        r += tp * c;
        tp *= t;
    }
    return r;
}

namespace {

std::uint32_t e_mask(const std::vector<int>& idx) {
    std::uint32_t m = 0;
    for (int i : idx) m |= bit(i - 1);
    return m;
}

std::string e_label(const std::vector<int>& idx) {
    if (idx.empty()) return "1";
    std::string s;
    for (int i : idx) s += "e" + std::to_string(i);
    return s;
}

SpinorBasis make_basis(int n, const std::vector<std::vector<int>>& sets) {
    SpinorBasis b;
    b.n = n;
    for (const auto& s : sets) {
        b.masks.push_back(e_mask(s));
        b.labels.push_back(e_label(s));
    }
    return b;
}

}  // namespace

SpinorBasis b4_spinor_basis() {
    return make_basis(5, {{}, {1, 2}, {1, 3}, {2, 3}, {1, 5}, {2, 5}, {3, 5}, {4, 5},
                          {1, 2, 3, 5}, {1, 2, 4, 5}, {1, 3, 4, 5}, {2, 3, 4, 5}, {1, 4}, {2, 4}, {3, 4}, {1, 2, 3, 4}});
}

SpinorBasis d4_even_spinor_basis() {
    return make_basis(4, {{}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}, {1, 2, 3, 4}});
}

CliffordElement spin_action(const CliffordElement& s, const CliffordElement& x) {
    std::uint32_t emask = bit(x.n()) - 1;
    for (const auto& [m, c] : x.terms())
        if (m & ~emask) throw std::invalid_argument("spinor has support outside C_L");
    CliffordElement p = s * x;
    CliffordElement y(x.n(), x.field());
    // e_A f_B e_M vanishes for nonempty B since e_M = f_1 ... f_n
    for (const auto& [m, c] : p.terms())
        if (!(m & ~emask)) y.add_term(m, c);
    return y;
}

Vector spinor_coordinates(const CliffordElement& x, const SpinorBasis& basis) {
    Vector v = zeros(static_cast<Eigen::Index>(basis.masks.size()), 1, x.field());
    std::size_t found = 0;
    for (std::size_t i = 0; i < basis.masks.size(); ++i) {
        FieldElement c = x.coefficient(basis.masks[i]);
        if (!c.is_zero()) ++found;
        v(static_cast<Eigen::Index>(i)) = c;
    }
    if (found != x.terms().size()) throw std::domain_error("spinor leaves the span of the basis");
    return v;
}

Matrix spin_matrix(const CliffordElement& s, const SpinorBasis& basis) {
    if (s.n() != basis.n) throw std::invalid_argument("spin_matrix: dimension mismatch");
    auto d = static_cast<Eigen::Index>(basis.masks.size());
    Matrix m(d, d);
    for (Eigen::Index j = 0; j < d; ++j) {
        CliffordElement x(s.n(), s.field());
        x.add_term(basis.masks[static_cast<std::size_t>(j)], FieldElement::one(s.field()));
        m.col(j) = spinor_coordinates(spin_action(s, x), basis);
    }
    return m;
}

Matrix vector_rep(const CliffordElement& s) {
    int n = s.n();
    CliffordElement inv = s.inverse();
    Matrix m = zeros(2 * n, 2 * n, s.field());
    for (int g = 0; g < 2 * n; ++g) {
        CliffordElement x(n, s.field());
        x.add_term(bit(g), FieldElement::one(s.field()));
        CliffordElement y = s * x * inv;
        for (const auto& [mask, c] : y.terms()) {
            if (std::popcount(mask) != 1) throw std::domain_error("Clifford element does not normalise V");
            m(std::countr_zero(mask), g) = c;
        }
    }
    return m;
}

namespace {

/// x_alpha(t) for a root of B_l written in epsilon coordinates, inside the D_{l+1} Clifford algebra.
CliffordPoly b_root_clifford(const std::vector<int>& eps, const FieldDescriptor& f) {
    int l = static_cast<int>(eps.size());
    int n = l + 1;
    auto E = [&](int i) { return CliffordElement::e(n, f, i); };
    auto F = [&](int i) { return CliffordElement::f(n, f, i); };
    FieldElement one = FieldElement::one(f);
    std::vector<int> nz;
    for (int i = 0; i < l; ++i)
        if (eps[static_cast<std::size_t>(i)]) nz.push_back(i + 1);
    if (nz.size() == 2) {
        int i = nz[0], j = nz[1];
        int si = eps[static_cast<std::size_t>(i - 1)], sj = eps[static_cast<std::size_t>(j - 1)];
        if (si == 1 && sj == -1) return cl_linear(E(i) * F(j));
        if (si == -1 && sj == 1) return cl_linear(E(j) * F(i));
        if (si == 1 && sj == 1) return cl_linear(E(i) * E(j));
        return cl_linear(-one * (F(i) * F(j)));
    }
    if (nz.size() == 1) {
        int i = nz[0];
        if (eps[static_cast<std::size_t>(i - 1)] == 1) return cl_poly_mul(cl_linear(E(i) * E(n)), cl_linear(E(i) * F(n)));
        return cl_poly_mul(cl_linear(-one * (F(i) * E(n))), cl_linear(-one * (F(i) * F(n))));
    }
    throw std::invalid_argument("not a root of type B");
}

std::vector<int> b_eps(const RootSystem& rs, int root) {
    int l = rs.rank();
    std::vector<int> eps(static_cast<std::size_t>(l), 0);
    const Root& r = rs.root(root);
    for (int k = 0; k < l; ++k) {
        eps[static_cast<std::size_t>(k)] += r[static_cast<std::size_t>(k)];
        if (k + 1 < l) eps[static_cast<std::size_t>(k + 1)] -= r[static_cast<std::size_t>(k)];
    }
    return eps;
}

const RootSystem& b4_roots() {
    static const RootSystem rs('B', 4);
    return rs;
}

const RootSystem& b3_roots() {
    static const RootSystem rs('B', 3);
    return rs;
}

ExplicitModule spin_module_from(const std::string& name, const FieldDescriptor& f, const RootSystem& rs,
                                const SpinorBasis& basis, CliffordPoly (*root_element)(int, const FieldDescriptor&)) {
    ExplicitModule m;
    m.name = name;
    m.field = f;
    m.dim = static_cast<int>(basis.masks.size());
    m.form = FormKind::Orthogonal;
    m.basis_labels = basis.labels;
    for (int r = 0; r < rs.num_roots(); ++r) {
        CliffordPoly p = root_element(r, f);
        RootElementFamily fam;
        std::string label = "x[";
        for (std::size_t i = 0; i < rs.root(r).size(); ++i) label += (i ? "," : "") + std::to_string(rs.root(r)[i]);
        fam.label = label + "]";
        fam.root = r;
        for (std::size_t k = 1; k < p.size(); ++k) fam.coeffs.push_back(spin_matrix(p[k], basis));
        m.lie_basis.push_back(fam.linear());
        m.families.push_back(std::move(fam));
    }
    add_cartan_elements(m, rs);
    return m;
}

}  // namespace

CliffordPoly b4_root_element(int root, const FieldDescriptor& f) {
    const RootSystem& rs = b4_roots();
    if (root < 0 || root >= rs.num_roots()) throw std::out_of_range("not a B4 root index");
    return b_root_clifford(b_eps(rs, root), f);
}

CliffordPoly b3_root_element(int root, const FieldDescriptor& f) {
    const RootSystem& rs = b3_roots();
    if (root < 0 || root >= rs.num_roots()) throw std::out_of_range("not a B3 root index");
    return b_root_clifford(b_eps(rs, root), f);
}

CliffordElement b4_weyl_element(int root, const FieldElement& kappa) {
    FieldDescriptor f = kappa.field();
    const RootSystem& rs = b4_roots();
    CliffordElement x = cl_poly_at(b4_root_element(root, f), kappa);
    CliffordElement y = cl_poly_at(b4_root_element(rs.negative(root), f), -kappa.inverse());
    return x * y * x;
}

CliffordElement b4_torus_element(int root, const FieldElement& kappa) {
    FieldDescriptor f = kappa.field();
    return b4_weyl_element(root, kappa) * b4_weyl_element(root, FieldElement::one(f)).inverse();
}

ExplicitModule b4_spin_module(const FieldDescriptor& f) {
    ExplicitModule m = spin_module_from("B4 spin", f, b4_roots(), b4_spinor_basis(), &b4_root_element);
    m.gram = zeros(16, 16, f);
    m.quad.assign(16, FieldElement::zero(f));
    for (int i = 0; i < 8; ++i) {
        FieldElement s = i % 2 ? -FieldElement::one(f) : FieldElement::one(f);
        m.gram(i, 15 - i) = s;
        m.gram(15 - i, i) = s;
    }
    return m;
}

ExplicitModule b3_spin_module(const FieldDescriptor& f) {
    ExplicitModule m = spin_module_from("B3 spin", f, b3_roots(), d4_even_spinor_basis(), &b3_root_element);
    std::vector<Matrix> gens;
    FieldElement t = f.kind == FieldKind::Rational ? FieldElement::one(f) : FieldElement::generator(f);
    for (const auto& fam : m.families) {
        gens.push_back(fam.at(FieldElement::one(f)));
        gens.push_back(fam.at(t));
    }
    Matrix q = invariant_quadratic_forms(gens, f);
    if (q.cols() != 1) throw std::logic_error("B3 spin module: invariant quadratic form is not unique");
    apply_quadratic_form(m, q.col(0));
    return m;
}

B4CaseData b4_case_data(const FieldDescriptor& f) {
    B4CaseData d;
    const RootSystem& rs = b4_roots();
    auto v = [](int i) { return i - 1; };
    FieldElement one = FieldElement::one(f);

    if (f.characteristic() != 3) {
        FieldElement w = root_of_unity(3, f);
        FieldElement w2 = w * w;
        d.phi = zeros(16, 16, f);
        auto set = [&](int from, int to, const FieldElement& c) { d.phi(v(to), v(from)) = c; };
        set(16, 12, one);
        set(4, 8, one);
        set(15, 11, w2);
        set(2, 6, w);
        set(13, 9, one);
        set(1, 5, one);
        set(3, 7, w2);
        set(14, 10, w);

        auto E = [&](int i) { return CliffordElement::e(5, f, i); };
        auto F = [&](int i) { return CliffordElement::f(5, f, i); };
        auto lin = [&](const FieldElement& c, const CliffordElement& u) { return cl_linear(c * u); };
        d.a2_gens.push_back(cl_poly_mul(cl_poly_mul(lin(one, E(1) * F(2)), lin(w2, E(3) * F(4))), lin(-w, F(1) * F(2))));
        d.a2_gens.push_back(cl_poly_mul(cl_poly_mul(lin(one, E(2) * F(1)), lin(w, E(4) * F(3))), lin(w2, E(1) * E(2))));
        d.a2_gens.push_back(cl_poly_mul(cl_poly_mul(lin(one, E(1) * F(3)), lin(-w, E(2) * F(4))), lin(-w2, F(1) * F(3))));
        d.a2_gens.push_back(cl_poly_mul(cl_poly_mul(lin(one, E(3) * F(1)), lin(-w2, E(4) * F(2))), lin(w, E(1) * E(3))));
    }

    FieldElement minus_one = -one;
    CliffordElement n = CliffordElement::scalar(5, f, one);
    for (int s : {1, 2, 1, 3, 4, 3, 2, 1}) n = n * b4_weyl_element(s - 1, one);
    d.tau2 = b4_torus_element(0, minus_one) * n;
    d.tau2_printed_cycles = {{1, 31}, {2, 18}, {3, 6}, {5, 32}, {7, 9}, {8, 29}, {10, 12},
                             {11, 27}, {13, 24}, {15, 17}, {16, 21}, {19, 22}, {23, 25}, {26, 28}};

    {
        auto E = [&](int i) { return CliffordElement::e(5, f, i); };
        auto F = [&](int i) { return CliffordElement::f(5, f, i); };
        auto lin = [&](const FieldElement& c, const CliffordElement& u) { return cl_linear(c * u); };
        auto prod = [&](std::vector<CliffordPoly> fs) {
            CliffordPoly r = fs.front();
            for (std::size_t i = 1; i < fs.size(); ++i) r = cl_poly_mul(r, fs[i]);
            return r;
        };
        d.a2_gens_p3.push_back(prod({lin(one, E(2) * F(3)), lin(minus_one, E(4) * E(5)), lin(minus_one, E(4) * F(5))}));
        d.a2_gens_p3.push_back(prod({lin(one, E(3) * F(2)), lin(one, F(4) * E(5)), lin(one, F(4) * F(5))}));
        d.a2_gens_p3.push_back(
            prod({lin(one, E(2) * F(4)), lin(one, E(3) * E(5)), lin(one, E(3) * F(5)), lin(one, E(1) * E(3))}));
        d.a2_gens_p3.push_back(prod({lin(one, E(4) * F(2)), lin(minus_one, F(3) * E(5)), lin(minus_one, F(3) * F(5)),
                                     lin(minus_one, E(1) * F(3))}));
    }
    d.w_p3 = zeros(16, 8, f);
    auto w = [&](int col, std::initializer_list<std::pair<int, int>> entries) {
        for (auto [i, c] : entries) d.w_p3(v(i), col) = FieldElement::integer(f, c);
    };
    w(0, {{7, 1}});
    w(1, {{6, 1}, {15, -1}});
    w(2, {{14, 1}});
    w(3, {{1, 1}, {5, -1}});
    w(4, {{16, 1}, {12, 1}});
    w(5, {{4, 1}, {9, 1}});
    w(6, {{2, 1}, {11, 1}});
    w(7, {{13, 1}, {8, -1}});

    try {
        FieldElement i = sqrt_of(minus_one, f);
        d.tau_p3 = b4_torus_element(0, minus_one) * b4_torus_element(1, minus_one) * b4_torus_element(2, minus_one) *
                   b4_torus_element(3, i) * b4_weyl_element(rs.index({0, 1, 2, 2}), one);
    } catch (const FieldError&) {
        d.tau_p3 = CliffordElement(5, f);
    }
    d.tau_p3_printed_cycles = {{1, 15}, {3, 28}, {5, 16}, {6, 26}, {7, 25}, {9, 23},
                               {10, 22}, {12, 19}, {14, 30}, {17, 31}, {21, 32}};
    return d;
}

Matrix b4_w_lambda(const B4CaseData& d, const FieldElement& lambda) {
    if (d.phi.size() == 0) throw FieldError("phi needs a primitive cube root of unity");
    FieldDescriptor f = d.phi(0, 0).field();
    Matrix w = zeros(16, 8, f);
    const int v8[] = {1, 2, 3, 4, 13, 14, 15, 16};
    for (int c = 0; c < 8; ++c) {
        int i = v8[c] - 1;
        w(i, c) = FieldElement::one(f);
        w.col(c) += lambda * d.phi.col(i);
    }
    return w;
}

Matrix b4_w_abc(const FieldDescriptor& f, const FieldElement& a, const FieldElement& b, const FieldElement& c) {
    if (f.characteristic() != 2) throw FieldError("W_abc is defined in characteristic 2");
    FieldElement one = FieldElement::one(f);
    Matrix w = zeros(16, 8, f);
    auto set = [&](int col, int v, const FieldElement& x) { w(v - 1, col) = x; };
    set(0, 11, one), set(0, 15, one);
    set(1, 16, a + one), set(1, 12, one);
    set(2, 4, one), set(2, 9, a + b + one);
    set(3, 7, one), set(3, 3, one + b);
    set(4, 10, one + a + c), set(4, 14, one);
    set(5, 13, c + one), set(5, 8, one);
    set(6, 1, one), set(6, 5, b + c + one);
    set(7, 6, one), set(7, 2, one + a + b + c);
    return w;
}

std::vector<CliffordPoly> b4_a1_generators(const FieldDescriptor& f, int i, const FieldElement& lambda) {
    if (i < 2 || i > 4) throw std::out_of_range("A1 generator index must be 2, 3 or 4");
    auto E = [&](int k) { return CliffordElement::e(5, f, k); };
    auto F = [&](int k) { return CliffordElement::f(5, f, k); };
    CliffordPoly lower = cl_poly_mul(cl_poly_mul(cl_linear(F(i) * E(5)), cl_linear(F(i) * F(5))), cl_linear(lambda * (F(i) * E(1))));
    CliffordPoly upper = cl_poly_mul(cl_poly_mul(cl_linear(E(i) * E(5)), cl_linear(E(i) * F(5))), cl_linear(lambda * (E(i) * E(1))));
    return {lower, upper};
}

std::vector<int> b4_root_permutation(const CliffordElement& g, const ExplicitModule& spin) {
    Matrix gm = spin_matrix(g, b4_spinor_basis());
    Matrix gi = spin_matrix(g.inverse(), b4_spinor_basis());
    std::vector<int> perm;
    for (const auto& fam : spin.families) {
        Matrix c = gm * fam.linear() * gi;
        int image = -1;
        for (const auto& other : spin.families) {
            const Matrix& x = other.linear();
            Eigen::Index pi = -1, pj = -1;
            for (Eigen::Index i = 0; i < x.rows() && pi < 0; ++i)
                for (Eigen::Index j = 0; j < x.cols(); ++j)
                    if (!x(i, j).is_zero()) {
                        pi = i, pj = j;
                        break;
                    }
            FieldElement s = c(pi, pj) / x(pi, pj);
            if (s.is_zero()) continue;
            bool same = true;
            for (Eigen::Index i = 0; i < x.rows() && same; ++i)
                for (Eigen::Index j = 0; j < x.cols(); ++j)
                    if (c(i, j) != s * x(i, j)) {
                        same = false;
                        break;
                    }
            if (same) {
                image = other.root;
                break;
            }
        }
        if (image < 0) return {};
        perm.push_back(image);
    }
    return perm;
}

std::vector<std::pair<int, int>> involution_cycles(const std::vector<int>& perm) {
    std::vector<std::pair<int, int>> out;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        int j = perm[i];
        if (j == static_cast<int>(i)) continue;
        if (perm[static_cast<std::size_t>(j)] != static_cast<int>(i)) throw std::domain_error("permutation is not an involution");
        if (static_cast<int>(i) < j) out.emplace_back(static_cast<int>(i) + 1, j + 1);
    }
    return out;
}

}  // namespace genstab
