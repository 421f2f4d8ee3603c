#include "genstab/chevmod.hpp"

#include <stdexcept>

namespace genstab {

namespace {

std::string root_label(const Root& r) {
    std::string s = "x[";
    for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + std::to_string(r[i]);
    return s + "]";
}

/// Coefficients of sum_{a+b=m} (-1)^b C_a v C_b, the expansion of x(t) v x(-t).
std::vector<std::vector<std::pair<Matrix, Matrix>>> conjugation_terms(const RootElementFamily& fam, const FieldDescriptor& f,
                                                                      Eigen::Index n) {
    std::vector<Matrix> c;
    c.push_back(identity(n, f));
    for (const auto& m : fam.coeffs) c.push_back(m);
    int d = static_cast<int>(c.size()) - 1;
    std::vector<std::vector<std::pair<Matrix, Matrix>>> out(static_cast<std::size_t>(2 * d + 1));
    for (int a = 0; a <= d; ++a)
        for (int b = 0; b <= d; ++b) {
            Matrix right = b % 2 ? Matrix(-c[static_cast<std::size_t>(b)]) : c[static_cast<std::size_t>(b)];
            out[static_cast<std::size_t>(a + b)].emplace_back(c[static_cast<std::size_t>(a)], right);
        }
    return out;
}

}  // namespace

Matrix RootElementFamily::at(const FieldElement& t) const {
    Matrix m = coeffs.front();
    Eigen::Index n = m.rows();
    FieldDescriptor f = coeffs.front()(0, 0).field();
    Matrix r = identity(n, t.is_typed() ? t.field() : f);
    FieldElement tp = t;
    for (const auto& c : coeffs) {
        if (!tp.is_zero()) r += tp * c;
        tp *= t;
    }
    return r;
}

FieldElement ExplicitModule::bilinear(const Vector& u, const Vector& v) const {
    FieldElement s = FieldElement::zero(field);
    for (Eigen::Index i = 0; i < dim; ++i) {
        if (u(i).is_zero()) continue;
        for (Eigen::Index j = 0; j < dim; ++j)
            if (!v(j).is_zero() && !gram(i, j).is_zero()) s += u(i) * gram(i, j) * v(j);
    }
    return s;
}

FieldElement ExplicitModule::quadratic(const Vector& v) const {
    if (form != FormKind::Orthogonal) throw std::logic_error("quadratic form requested on a symplectic module");
    FieldElement s = FieldElement::zero(field);
    for (Eigen::Index i = 0; i < dim; ++i) {
        if (v(i).is_zero()) continue;
        s += v(i) * v(i) * quad[static_cast<std::size_t>(i)];
        for (Eigen::Index j = i + 1; j < dim; ++j)
            if (!v(j).is_zero() && !gram(i, j).is_zero()) s += v(i) * v(j) * gram(i, j);
    }
    return s;
}

bool ExplicitModule::preserves_form(const Matrix& g) const {
    Matrix t = g.transpose() * gram * g;
    for (Eigen::Index i = 0; i < dim; ++i)
        for (Eigen::Index j = 0; j < dim; ++j)
            if (t(i, j) != gram(i, j)) return false;
    if (form == FormKind::Orthogonal)
        for (Eigen::Index i = 0; i < dim; ++i)
            if (quadratic(g.col(i)) != quad[static_cast<std::size_t>(i)]) return false;
    return true;
}

bool ExplicitModule::lie_preserves_form(const Matrix& x) const {
    Matrix t = x.transpose() * gram + gram * x;
    for (Eigen::Index i = 0; i < dim; ++i)
        for (Eigen::Index j = 0; j < dim; ++j)
            if (!t(i, j).is_zero()) return false;
    if (form == FormKind::Orthogonal) {
        // dQ(b_i)(X b_i) = f(b_i, X b_i) must vanish
        for (Eigen::Index i = 0; i < dim; ++i) {
            Vector b = zeros(dim, 1, field);
            b(i) = FieldElement::one(field);
            if (!bilinear(b, x.col(i)).is_zero()) return false;
        }
    }
    return true;
}

const RootElementFamily& ExplicitModule::family(const std::string& label) const {
    for (const auto& f : families)
        if (f.label == label) return f;
    throw std::out_of_range("no root element family " + label + " in " + name);
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            for (Eigen::Index k = 0; k < b.rows(); ++k)
                for (Eigen::Index l = 0; l < b.cols(); ++l) r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    return r;
}

Matrix invariant_quadratic_forms(const std::vector<Matrix>& gens, const FieldDescriptor& field) {
    if (gens.empty()) throw std::invalid_argument("invariant_quadratic_forms needs generators");
    Eigen::Index n = gens.front().rows();
    Eigen::Index np = n * (n + 1) / 2;
    std::vector<std::pair<Eigen::Index, Eigen::Index>> pairs;
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = i; j < n; ++j) pairs.emplace_back(i, j);
    Matrix eq = zeros(np * static_cast<Eigen::Index>(gens.size()), np, field);
    Eigen::Index row = 0;
    for (const auto& g : gens)
        for (Eigen::Index r = 0; r < np; ++r, ++row) {
            auto [a, b] = pairs[static_cast<std::size_t>(r)];
            for (Eigen::Index u = 0; u < np; ++u) {
                auto [i, j] = pairs[static_cast<std::size_t>(u)];
                FieldElement c = g(i, a) * g(j, b);
                if (a != b) c += g(i, b) * g(j, a);
                eq(row, u) = c;
            }
            eq(row, r) -= FieldElement::one(field);
        }
    return kernel(eq);
}

void apply_quadratic_form(ExplicitModule& m, const Vector& q) {
    Eigen::Index n = m.dim;
    FieldElement lead;
    for (Eigen::Index i = 0; i < q.size(); ++i)
        if (!q(i).is_zero()) {
            lead = q(i);
            break;
        }
    if (lead.is_zero()) throw std::invalid_argument("apply_quadratic_form: zero form");
    FieldElement s = lead.inverse();
    m.form = FormKind::Orthogonal;
    m.gram = zeros(n, n, m.field);
    m.quad.assign(static_cast<std::size_t>(n), FieldElement::zero(m.field));
    Eigen::Index u = 0;
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = i; j < n; ++j, ++u) {
            FieldElement c = s * q(u);
            if (i == j) {
                m.quad[static_cast<std::size_t>(i)] = c;
                m.gram(i, i) = c + c;
            } else {
                m.gram(i, j) = c;
                m.gram(j, i) = c;
            }
        }
}

void add_cartan_elements(ExplicitModule& m, const RootSystem& rs) {
    for (int i = 0; i < rs.rank(); ++i) {
        const Matrix* xp = nullptr;
        const Matrix* xn = nullptr;
        for (const auto& f : m.families) {
            if (f.root == i) xp = &f.linear();
            if (f.root == rs.negative(i)) xn = &f.linear();
        }
        if (!xp || !xn) throw std::logic_error("missing simple root family in " + m.name);
        m.lie_basis.push_back(Matrix((*xp) * (*xn) - (*xn) * (*xp)));
    }
}

// ---------------------------------------------------------------------------

ExplicitModule natural_module(char series, int rank, const FieldDescriptor& field, HyperbolicOrder order) {
    if (series != 'B' && series != 'C' && series != 'D') throw std::invalid_argument("natural_module needs series B, C or D");
    bool c1 = series == 'C' && rank == 1;
    RootSystem rs = c1 ? RootSystem('A', 1) : RootSystem(series, rank);
    int l = rank;
    bool hasv0 = series == 'B';
    int n = 2 * l + (hasv0 ? 1 : 0);
    auto e = [&](int i) {
        return order == HyperbolicOrder::Interleaved ? (hasv0 ? 1 : 0) + 2 * i : i;
    };
    auto f = [&](int i) {
        switch (order) {
        case HyperbolicOrder::Interleaved: return (hasv0 ? 1 : 0) + 2 * i + 1;
        case HyperbolicOrder::Split: return l + i;
        case HyperbolicOrder::Mirrored: return 2 * l - 1 - i;
        }
        return 0;
    };
    int v0 = order == HyperbolicOrder::Interleaved ? 0 : 2 * l;

    ExplicitModule m;
    m.field = field;
    m.dim = n;
    m.name = std::string(1, series) + std::to_string(rank) + " natural";
    m.form = series == 'C' ? FormKind::Symplectic : FormKind::Orthogonal;
    m.gram = zeros(n, n, field);
    m.basis_labels.assign(static_cast<std::size_t>(n), "");
    for (int i = 0; i < l; ++i) {
        m.gram(e(i), f(i)) = FieldElement::one(field);
        m.gram(f(i), e(i)) = series == 'C' ? -FieldElement::one(field) : FieldElement::one(field);
        m.basis_labels[static_cast<std::size_t>(e(i))] = "e" + std::to_string(i + 1);
        m.basis_labels[static_cast<std::size_t>(f(i))] = "f" + std::to_string(i + 1);
    }
    if (hasv0) {
        m.gram(v0, v0) = FieldElement::integer(field, 2);
        m.basis_labels[static_cast<std::size_t>(v0)] = "v0";
    }
    if (m.form == FormKind::Orthogonal) {
        m.quad.assign(static_cast<std::size_t>(n), FieldElement::zero(field));
        if (hasv0) m.quad[static_cast<std::size_t>(v0)] = FieldElement::one(field);
    }

    // simple roots in epsilon coordinates
    std::vector<std::vector<int>> simple_eps(static_cast<std::size_t>(rs.rank()), std::vector<int>(static_cast<std::size_t>(l), 0));
    if (c1) {
        simple_eps[0][0] = 2;
    } else {
        for (int k = 0; k + 1 < l; ++k) {
            simple_eps[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] = 1;
            simple_eps[static_cast<std::size_t>(k)][static_cast<std::size_t>(k + 1)] = -1;
        }
        auto& last = simple_eps[static_cast<std::size_t>(l - 1)];
        if (series == 'B') last[static_cast<std::size_t>(l - 1)] = 1;
        if (series == 'C') last[static_cast<std::size_t>(l - 1)] = 2;
        if (series == 'D') last[static_cast<std::size_t>(l - 2)] = 1, last[static_cast<std::size_t>(l - 1)] = 1;
    }

    for (int r = 0; r < rs.num_roots(); ++r) {
        std::vector<int> eps(static_cast<std::size_t>(l), 0);
        for (int k = 0; k < rs.rank(); ++k)
            for (int i = 0; i < l; ++i)
                eps[static_cast<std::size_t>(i)] += rs.root(r)[static_cast<std::size_t>(k)] * simple_eps[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)];
        std::vector<int> nz;
        for (int i = 0; i < l; ++i)
            if (eps[static_cast<std::size_t>(i)]) nz.push_back(i);
        RootElementFamily fam;
        fam.label = root_label(rs.root(r));
        fam.root = r;
        Matrix c1m = zeros(n, n, field), c2m = zeros(n, n, field);
        bool quadratic_term = false;
        // add(C, from, to, coef): image of basis vector `from` gains coef * `to`
        auto add = [&](Matrix& c, int from, int to, long coef) { c(to, from) += FieldElement(coef); };
        if (nz.size() == 2) {
            int i = nz[0], j = nz[1];
            int si = eps[static_cast<std::size_t>(i)], sj = eps[static_cast<std::size_t>(j)];
            if (si == 1 && sj == -1) {
                add(c1m, e(j), e(i), 1);
                add(c1m, f(i), f(j), -1);
            } else if (si == -1 && sj == 1) {
                add(c1m, e(i), e(j), 1);
                add(c1m, f(j), f(i), -1);
            } else if (si == 1 && sj == 1) {
                add(c1m, f(j), e(i), 1);
                add(c1m, f(i), e(j), series == 'C' ? 1 : -1);
            } else {
                add(c1m, e(j), f(i), series == 'C' ? 1 : -1);
                add(c1m, e(i), f(j), 1);
            }
        } else if (nz.size() == 1) {
            int i = nz[0];
            int s = eps[static_cast<std::size_t>(i)];
            if (s == 2) {
                add(c1m, f(i), e(i), 1);
            } else if (s == -2) {
                add(c1m, e(i), f(i), 1);
            } else if (s == 1) {
                add(c1m, v0, e(i), 2);
                add(c1m, f(i), v0, -1);
                add(c2m, f(i), e(i), -1);
                quadratic_term = true;
            } else {
                add(c1m, v0, f(i), -2);
                add(c1m, e(i), v0, 1);
                add(c2m, e(i), f(i), -1);
                quadratic_term = true;
            }
        } else {
            throw std::logic_error("unexpected root shape");
        }
        fam.coeffs.push_back(c1m);
        if (quadratic_term) fam.coeffs.push_back(c2m);
        m.families.push_back(fam);
        m.lie_basis.push_back(c1m);
    }
    add_cartan_elements(m, rs);
    return m;
}

// ---------------------------------------------------------------------------

namespace {

using IMat = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;

Matrix to_field(const IMat& a, const FieldDescriptor& f) {
    Matrix m(a.rows(), a.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) m(i, j) = FieldElement::integer(f, static_cast<long>(a(i, j)));
    return m;
}

struct AdjointData {
    std::vector<IMat> ad;  // ad of each basis element
    IMat gram;
    std::vector<long long> quad;
};

AdjointData adjoint_data(const RootSystem& rs) {
    int nr = rs.num_roots(), l = rs.rank(), n = nr + l;
    AdjointData d;
    int maxlen = 0;
    for (int r = 0; r < nr; ++r) maxlen = std::max(maxlen, rs.inner(r, r));
    for (int a = 0; a < nr; ++a) {
        IMat m = IMat::Zero(n, n);
        int la = rs.inner(a, a);
        for (int c = 0; c < nr; ++c) {
            if (c == rs.negative(a)) {
                for (int i = 0; i < l; ++i) {
                    int li = rs.inner(i, i);
                    int coef = rs.root(a)[static_cast<std::size_t>(i)] * li / la;
                    m(nr + i, c) = coef;
                }
            } else {
                int s = rs.sum_index(a, c);
                if (s >= 0) m(s, c) = rs.structure_constant(a, c);
            }
        }
        for (int i = 0; i < l; ++i) m(a, nr + i) = -rs.pairing(a, i);
        d.ad.push_back(m);
    }
    for (int i = 0; i < l; ++i) {
        IMat m = IMat::Zero(n, n);
        for (int c = 0; c < nr; ++c) m(c, c) = rs.pairing(c, i);
        d.ad.push_back(m);
    }
    d.gram = IMat::Zero(n, n);
    d.quad.assign(static_cast<std::size_t>(n), 0);
    for (int a = 0; a < nr; ++a) d.gram(a, rs.negative(a)) = maxlen / rs.inner(a, a);
    for (int i = 0; i < l; ++i) {
        for (int j = 0; j < l; ++j)
            d.gram(nr + i, nr + j) = 2LL * maxlen * rs.inner(i, j) / (static_cast<long long>(rs.inner(i, i)) * rs.inner(j, j));
        d.quad[static_cast<std::size_t>(nr + i)] = maxlen / rs.inner(i, i);
    }
    return d;
}

}  // namespace

ExplicitModule adjoint_module(const RootSystem& rs, const FieldDescriptor& field) {
    AdjointData d = adjoint_data(rs);
    int nr = rs.num_roots(), l = rs.rank(), n = nr + l;
    ExplicitModule m;
    m.name = rs.name() + " adjoint";
    m.field = field;
    m.dim = n;
    m.form = FormKind::Orthogonal;
    m.gram = to_field(d.gram, field);
    for (auto q : d.quad) m.quad.push_back(FieldElement::integer(field, static_cast<long>(q)));
    for (int a = 0; a < nr; ++a) {
        RootElementFamily fam;
        fam.label = root_label(rs.root(a));
        fam.root = a;
        IMat power = d.ad[static_cast<std::size_t>(a)];
        long long fact = 1;
        for (int k = 1; power.cwiseAbs().sum() != 0; ++k) {
            fact *= k;
            IMat div = power / fact;
            if (div * fact != power) throw std::logic_error("divided power not integral");
            fam.coeffs.push_back(to_field(div, field));
            power = power * d.ad[static_cast<std::size_t>(a)];
        }
        m.families.push_back(fam);
        m.basis_labels.push_back("e" + root_label(rs.root(a)).substr(1));
    }
    for (int i = 0; i < l; ++i) m.basis_labels.push_back("h" + std::to_string(i + 1));
    for (const auto& x : d.ad) m.lie_basis.push_back(to_field(x, field));
    return m;
}

ExplicitModule a2_adjoint_quotient(const FieldDescriptor& field) {
    if (field.characteristic() != 3) throw std::invalid_argument("a2_adjoint_quotient needs characteristic 3");
    RootSystem rs('A', 2);
    ExplicitModule full = adjoint_module(rs, field);
    Matrix s = zeros(8, 7, field), p = zeros(7, 8, field);
    for (int i = 0; i < 7; ++i) {
        s(i, i) = FieldElement::one(field);
        p(i, i) = FieldElement::one(field);
    }
    p(6, 7) = FieldElement::one(field);  // h2 = h1 modulo <h1 - h2>
    ExplicitModule m;
    m.name = "A2 adjoint / <h1-h2>";
    m.field = field;
    m.dim = 7;
    m.form = FormKind::Orthogonal;
    m.gram = s.transpose() * full.gram * s;
    m.quad.assign(full.quad.begin(), full.quad.begin() + 7);
    m.basis_labels = {"e_a1", "e_a2", "e_a3", "e_a4", "e_a5", "e_a6", "h_a1"};
    for (const auto& f : full.families) {
        RootElementFamily g;
        g.label = f.label;
        g.root = f.root;
        for (const auto& c : f.coeffs) g.coeffs.push_back(p * c * s);
        m.families.push_back(g);
    }
    for (const auto& x : full.lie_basis) m.lie_basis.push_back(p * x * s);
    return m;
}

Matrix a2_quotient_torus(int simple, const FieldElement& kappa) {
    RootSystem rs('A', 2);
    FieldDescriptor f = kappa.field();
    Matrix m = identity(7, f);
    for (int c = 0; c < 6; ++c) m(c, c) = kappa.pow(rs.pairing(c, simple));
    return m;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::pair<int, int>> wedge_pairs(int n) {
    std::vector<std::pair<int, int>> p;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) p.emplace_back(a, b);
    return p;
}

/// Matrix of u_a ^ u_b -> (A u_a) ^ (B u_b) on the pair basis.
Matrix wedge_bilinear(const Matrix& a, const Matrix& b, const FieldDescriptor& f) {
    int n = static_cast<int>(a.rows());
    auto pairs = wedge_pairs(n);
    int N = static_cast<int>(pairs.size());
    Matrix out = zeros(N, N, f);
    for (int col = 0; col < N; ++col) {
        auto [x, y] = pairs[static_cast<std::size_t>(col)];
        for (int row = 0; row < N; ++row) {
            auto [c, d] = pairs[static_cast<std::size_t>(row)];
            // coefficient of u_c ^ u_d in (A u_x) ^ (B u_y)
            FieldElement v = a(c, x) * b(d, y) - a(d, x) * b(c, y);
            if (!v.is_zero()) out(row, col) = v;
        }
    }
    return out;
}

int pair_index(int a, int b, int n) {
    if (a > b) std::swap(a, b);
    auto p = wedge_pairs(n);
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] == std::make_pair(a, b)) return static_cast<int>(i);
    return -1;
}

}  // namespace

Matrix c3_lambda2_basis(const FieldDescriptor& field) {
    if (field.characteristic() == 3) throw std::invalid_argument("c3_lambda2 needs characteristic other than 3");
    FieldElement w = root_of_unity(3, field), w2 = w * w;
    Matrix b = zeros(15, 14, field);
    // e1=0 e2=1 e3=2 f1=3 f2=4 f3=5
    auto set = [&](int col, int a, int c, const FieldElement& v) { b(pair_index(a, c, 6), col) += v; };
    FieldElement one = FieldElement::one(field);
    set(0, 0, 1, one);
    set(1, 0, 2, one);
    set(2, 1, 2, one);
    set(3, 0, 5, one);
    set(4, 1, 5, one);
    set(5, 0, 4, one);
    set(6, 0, 3, one), set(6, 1, 4, w), set(6, 2, 5, w2);
    set(7, 0, 3, one), set(7, 1, 4, w2), set(7, 2, 5, w);
    set(8, 1, 3, one);
    set(9, 2, 4, one);
    set(10, 2, 3, one);
    set(11, 4, 5, one);
    set(12, 3, 5, one);
    set(13, 3, 4, one);
    return b;
}

Matrix c3_lambda2_action(const Matrix& g, const FieldDescriptor& field) {
    Matrix b = c3_lambda2_basis(field);
    Matrix w = wedge_bilinear(g, g, field);
    return solve_exact<FieldElement>(b, Matrix(w * b));
}

ExplicitModule c3_lambda2(const FieldDescriptor& field) {
    ExplicitModule nat = natural_module('C', 3, field, HyperbolicOrder::Split);
    Matrix b = c3_lambda2_basis(field);
    Matrix id = identity(6, field);
    ExplicitModule m;
    m.name = "C3 lambda2";
    m.field = field;
    m.dim = 14;
    m.form = FormKind::Orthogonal;
    m.gram = zeros(14, 14, field);
    for (int i = 0; i < 7; ++i) {
        m.gram(i, 13 - i) = FieldElement::one(field);
        m.gram(13 - i, i) = FieldElement::one(field);
    }
    // the invariant form gives f(v7, v8) = 3
    m.gram(6, 7) = m.gram(7, 6) = FieldElement::integer(field, 3);
    m.quad.assign(14, FieldElement::zero(field));
    for (int i = 0; i < 14; ++i) m.basis_labels.push_back("v" + std::to_string(i + 1));
    for (const auto& f : nat.families) {
        RootElementFamily g;
        g.label = f.label;
        g.root = f.root;
        std::vector<Matrix> c{id};
        for (const auto& x : f.coeffs) c.push_back(x);
        int d = static_cast<int>(c.size()) - 1;
        for (int k = 1; k <= 2 * d; ++k) {
            Matrix acc = zeros(15, 15, field);
            for (int a = 0; a <= d; ++a)
                if (k - a >= 0 && k - a <= d)
                    acc += wedge_bilinear(c[static_cast<std::size_t>(a)], c[static_cast<std::size_t>(k - a)], field);
            Matrix r = solve_exact<FieldElement>(b, Matrix(acc * b));
            bool zero = true;
            for (Eigen::Index i = 0; i < r.size() && zero; ++i) zero = r(i).is_zero();
            if (zero && k > 1) break;
            g.coeffs.push_back(r);
        }
        m.families.push_back(g);
    }
    for (const auto& x : nat.lie_basis) {
        Matrix der = wedge_bilinear(x, id, field) + wedge_bilinear(id, x, field);
        m.lie_basis.push_back(solve_exact<FieldElement>(b, Matrix(der * b)));
    }
    return m;
}

// ---------------------------------------------------------------------------

std::vector<Matrix> sp4_basis(const FieldDescriptor& field) {
    // rows/cols in order e1, e2, f1, f2
    const int spec[10][2][3] = {
        {{0, 0, 1}, {2, 2, -1}}, {{0, 1, 1}, {3, 2, -1}}, {{0, 2, 1}, {-1, -1, 0}}, {{0, 3, 1}, {1, 2, 1}},
        {{1, 0, 1}, {2, 3, -1}}, {{1, 1, 1}, {3, 3, -1}}, {{1, 3, 1}, {-1, -1, 0}}, {{2, 0, 1}, {-1, -1, 0}},
        {{2, 1, 1}, {3, 0, 1}},  {{3, 1, 1}, {-1, -1, 0}},
    };
    std::vector<Matrix> out;
    for (const auto& s : spec) {
        Matrix m = zeros(4, 4, field);
        for (const auto& e : s)
            if (e[0] >= 0) m(e[0], e[1]) = FieldElement::integer(field, e[2]);
        out.push_back(m);
    }
    return out;
}

Vector sp4_coordinates(const Matrix& v, const FieldDescriptor& field) {
    static const int pos[10][2] = {{0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 0}, {1, 1}, {1, 3}, {2, 0}, {2, 1}, {3, 1}};
    Vector c(10);
    for (int i = 0; i < 10; ++i) c(i) = v(pos[i][0], pos[i][1]).in(field);
    auto basis = sp4_basis(field);
    Matrix back = zeros(4, 4, field);
    for (int i = 0; i < 10; ++i) back += c(i) * basis[static_cast<std::size_t>(i)];
    for (Eigen::Index i = 0; i < 4; ++i)
        for (Eigen::Index j = 0; j < 4; ++j)
            if (back(i, j) != v(i, j)) throw std::invalid_argument("matrix is not in sp4");
    return c;
}

Matrix sp4_action(const Matrix& g, const FieldDescriptor& field) {
    Matrix ginv = solve_exact<FieldElement>(g, identity(4, field));
    auto basis = sp4_basis(field);
    Matrix out(10, 10);
    for (int k = 0; k < 10; ++k) out.col(k) = sp4_coordinates(Matrix(g * basis[static_cast<std::size_t>(k)] * ginv), field);
    return out;
}

ExplicitModule sp4_adjoint(const FieldDescriptor& field) {
    ExplicitModule nat = natural_module('C', 2, field, HyperbolicOrder::Split);
    auto basis = sp4_basis(field);
    ExplicitModule m;
    m.name = "Sp4 adjoint";
    m.field = field;
    m.dim = 10;
    m.form = FormKind::Orthogonal;
    m.gram = zeros(10, 10, field);
    for (int i = 0; i < 10; ++i) {
        Matrix sq = basis[static_cast<std::size_t>(i)] * basis[static_cast<std::size_t>(i)];
        m.quad.push_back(sq.trace());
        for (int j = 0; j < 10; ++j)
            m.gram(i, j) = FieldElement(2) * Matrix(basis[static_cast<std::size_t>(i)] * basis[static_cast<std::size_t>(j)]).trace();
    }
    m.gram = in_field(m.gram, field);
    for (auto& q : m.quad) q = q.in(field);
    for (int i = 0; i < 10; ++i) m.basis_labels.push_back("b" + std::to_string(i + 1));
    for (const auto& f : nat.families) {
        auto terms = conjugation_terms(f, field, 4);
        RootElementFamily g;
        g.label = f.label;
        g.root = f.root;
        for (std::size_t k = 1; k < terms.size(); ++k) {
            Matrix c(10, 10);
            for (int b = 0; b < 10; ++b) {
                Matrix img = zeros(4, 4, field);
                for (const auto& [l, r] : terms[k]) img += l * basis[static_cast<std::size_t>(b)] * r;
                c.col(b) = sp4_coordinates(img, field);
            }
            bool zero = true;
            for (Eigen::Index i = 0; i < c.size() && zero; ++i) zero = c(i).is_zero();
            if (zero && k > 1) break;
            g.coeffs.push_back(c);
        }
        m.families.push_back(g);
    }
    for (const auto& x : nat.lie_basis) {
        Matrix c(10, 10);
        for (int b = 0; b < 10; ++b)
            c.col(b) = sp4_coordinates(Matrix(x * basis[static_cast<std::size_t>(b)] - basis[static_cast<std::size_t>(b)] * x), field);
        m.lie_basis.push_back(c);
    }
    return m;
}

// ---------------------------------------------------------------------------

ExplicitModule tensor_module(const ExplicitModule& a, const ExplicitModule& b) {
    if (!(a.field == b.field)) throw std::invalid_argument("tensor_module: factors over different fields");
    const FieldDescriptor& f = a.field;
    ExplicitModule m;
    m.name = a.name + " (x) " + b.name;
    m.field = f;
    m.dim = a.dim * b.dim;
    m.gram = kron(a.gram, b.gram);
    bool same = a.form == b.form;
    m.form = same ? FormKind::Orthogonal : FormKind::Symplectic;
    if (same) {
        if (a.form == FormKind::Orthogonal) {
            if (f.characteristic() == 2) throw std::invalid_argument("orthogonal (x) orthogonal is not supported in characteristic 2");
            for (int i = 0; i < a.dim; ++i)
                for (int j = 0; j < b.dim; ++j)
                    m.quad.push_back(FieldElement(2) * a.quad[static_cast<std::size_t>(i)] * b.quad[static_cast<std::size_t>(j)]);
        } else {
            m.quad.assign(static_cast<std::size_t>(m.dim), FieldElement::zero(f));
        }
    }
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < b.dim; ++j) {
            std::string la = a.basis_labels.empty() ? std::to_string(i) : a.basis_labels[static_cast<std::size_t>(i)];
            std::string lb = b.basis_labels.empty() ? std::to_string(j) : b.basis_labels[static_cast<std::size_t>(j)];
            m.basis_labels.push_back(la + "(x)" + lb);
        }
    Matrix ia = identity(a.dim, f), ib = identity(b.dim, f);
    for (const auto& fam : a.families) {
        RootElementFamily g{"1:" + fam.label, -1, {}};
        for (const auto& c : fam.coeffs) g.coeffs.push_back(kron(c, ib));
        m.families.push_back(g);
    }
    for (const auto& fam : b.families) {
        RootElementFamily g{"2:" + fam.label, -1, {}};
        for (const auto& c : fam.coeffs) g.coeffs.push_back(kron(ia, c));
        m.families.push_back(g);
    }
    for (const auto& x : a.lie_basis) m.lie_basis.push_back(kron(x, ib));
    for (const auto& y : b.lie_basis) m.lie_basis.push_back(kron(ia, y));
    return m;
}

// ---------------------------------------------------------------------------

Matrix TwistedA1Module::act(const Matrix& g) const {
    const FieldDescriptor& f = module.field;
    Matrix gs(2, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) gs(i, j) = g(i, j).in(f).frobenius(frobenius_power);
    Matrix out(4, 4);
    for (int k = 0; k < 4; ++k) {
        Matrix e = zeros(2, 2, f);
        e(k / 2, k % 2) = FieldElement::one(f);
        Matrix img = g.transpose() * e * gs;
        for (int r = 0; r < 4; ++r) out(r, k) = img(r / 2, r % 2).in(f);
    }
    return out;
}

TwistedA1Module a1_twisted_module(const FieldDescriptor& field, int frobenius_power) {
    if (field.kind != FieldKind::Finite || field.k < 2)
        throw std::invalid_argument("a1_twisted_module needs GF(p^k) with k >= 2 so the Frobenius twist is non-trivial");
    TwistedA1Module t;
    t.frobenius_power = frobenius_power;
    ExplicitModule& m = t.module;
    m.name = "A1 twisted";
    m.field = field;
    m.dim = 4;
    m.form = FormKind::Orthogonal;
    m.gram = zeros(4, 4, field);
    m.gram(0, 3) = m.gram(3, 0) = FieldElement::one(field);
    m.gram(1, 2) = m.gram(2, 1) = -FieldElement::one(field);
    m.quad.assign(4, FieldElement::zero(field));
    m.basis_labels = {"E11", "E12", "E21", "E22"};
    // the Frobenius twist has zero differential, so Lie(G) acts by v -> X^T v
    std::vector<Matrix> sl2;
    for (auto [r, c] : std::vector<std::pair<int, int>>{{0, 1}, {1, 0}, {0, 0}}) {
        Matrix x = zeros(2, 2, field);
        x(r, c) = FieldElement::one(field);
        if (r == c) x(1, 1) = -FieldElement::one(field);
        sl2.push_back(x);
    }
    for (const auto& x : sl2) {
        Matrix out(4, 4);
        for (int k = 0; k < 4; ++k) {
            Matrix e = zeros(2, 2, field);
            e(k / 2, k % 2) = FieldElement::one(field);
            Matrix img = x.transpose() * e;
            for (int r = 0; r < 4; ++r) out(r, k) = img(r / 2, r % 2);
        }
        m.lie_basis.push_back(out);
    }
    return t;
}

// ---------------------------------------------------------------------------

FieldElement zero_weight_form(ZeroWeightFamily family, const std::vector<FieldElement>& a) {
    auto need = [&](std::size_t n) {
        if (a.size() != n) throw std::invalid_argument("zero_weight_form: wrong number of coordinates");
    };
    switch (family) {
    case ZeroWeightFamily::ClLambda2: {
        FieldElement s = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            s += a[i] * a[i];
            for (std::size_t j = i + 1; j < a.size(); ++j) s += a[i] * a[j];
        }
        return s;
    }
    case ZeroWeightFamily::A2:
    case ZeroWeightFamily::A3p2:
    case ZeroWeightFamily::G2:
        need(2);
        return a[0] * a[0] + a[1] * a[1] + a[0] * a[1];
    case ZeroWeightFamily::B2:
        need(2);
        return a[0] * a[0] + a[1] * a[1];
    }
    throw std::logic_error("unreachable");
}

ZeroWeightFamily parse_zero_weight_family(const std::string& s) {
    if (s == "Cl_lambda2" || s == "Cl") return ZeroWeightFamily::ClLambda2;
    if (s == "A2") return ZeroWeightFamily::A2;
    if (s == "A3_p2" || s == "A3") return ZeroWeightFamily::A3p2;
    if (s == "G2") return ZeroWeightFamily::G2;
    if (s == "B2") return ZeroWeightFamily::B2;
    throw std::invalid_argument("unknown zero-weight family " + s);
}

}  // namespace genstab
