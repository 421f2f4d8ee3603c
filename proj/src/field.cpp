#include "genstab/field.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <regex>
#include <sstream>
#include <tuple>

namespace genstab {

namespace {

std::int64_t ipow(std::int64_t b, int e) {
    std::int64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::int64_t mod(std::int64_t a, std::int64_t p) {
    a %= p;
    return a < 0 ? a + p : a;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
    std::int64_t t = 0, nt = 1, r = p, nr = mod(a, p);
    while (nr != 0) {
        std::int64_t qq = r / nr;
        std::tie(t, nt) = std::make_tuple(nt, t - qq * nt);
        std::tie(r, nr) = std::make_tuple(nr, r - qq * nr);
    }
    if (r != 1) throw FieldError("element not invertible modulo " + std::to_string(p));
    return mod(t, p);
}

using IntPoly = std::vector<mpz_class>;

IntPoly poly_divide_exact(IntPoly num, const IntPoly& den) {
    // den monic
    int dn = static_cast<int>(den.size()) - 1;
    int nn = static_cast<int>(num.size()) - 1;
    IntPoly q(std::max(nn - dn + 1, 1), 0);
    for (int i = nn; i >= dn; --i) {
        mpz_class c = num[i];
        if (c == 0) continue;
        q[i - dn] = c;
        for (int j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
    }
    return q;
}

IntPoly cyclotomic_poly(int m) {
    IntPoly p(m + 1, 0);
    p[0] = -1;
    p[m] = 1;
    for (int d = 1; d < m; ++d)
        if (m % d == 0) p = poly_divide_exact(p, cyclotomic_poly(d));
    return p;
}

}  // namespace

// ---------------------------------------------------------------------------
// Field contexts

class FieldContext {
public:
    explicit FieldContext(const FieldDescriptor& d);

    FieldDescriptor desc;
    // cyclotomic
    int deg = 1;
    IntPoly phi;
    // finite
    std::int64_t p = 0;
    int k = 1;
    std::uint32_t q = 0;
    std::vector<std::int64_t> modulus;  // monic, degree k
    std::vector<std::uint32_t> exp_table, log_table;
    std::vector<std::uint32_t> place;  // p^i

    // finite helpers
    std::vector<std::int64_t> digits(std::uint32_t c) const {
        std::vector<std::int64_t> d(k);
        for (int i = 0; i < k; ++i) {
            d[i] = c % p;
            c /= static_cast<std::uint32_t>(p);
        }
        return d;
    }
    std::uint32_t encode(const std::vector<std::int64_t>& d) const {
        std::uint32_t c = 0;
        for (int i = k - 1; i >= 0; --i) c = c * static_cast<std::uint32_t>(p) + static_cast<std::uint32_t>(mod(d[i], p));
        return c;
    }
    std::uint32_t fadd(std::uint32_t a, std::uint32_t b) const {
        if (k == 1) return static_cast<std::uint32_t>((a + static_cast<std::uint64_t>(b)) % p);
        if (p == 2) return a ^ b;
        std::uint32_t r = 0;
        for (int i = k - 1; i >= 0; --i) {
            std::uint32_t da = (a / place[i]) % p, db = (b / place[i]) % p;
            r = r * static_cast<std::uint32_t>(p) + static_cast<std::uint32_t>((da + db) % p);
        }
        return r;
    }
    std::uint32_t fneg(std::uint32_t a) const {
        if (p == 2) return a;
        if (k == 1) return a == 0 ? 0 : static_cast<std::uint32_t>(p - a);
        std::uint32_t r = 0;
        for (int i = k - 1; i >= 0; --i) {
            std::uint32_t da = (a / place[i]) % p;
            r = r * static_cast<std::uint32_t>(p) + static_cast<std::uint32_t>((p - da) % p);
        }
        return r;
    }
    std::uint32_t fmul(std::uint32_t a, std::uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        return exp_table[(static_cast<std::uint64_t>(log_table[a]) + log_table[b]) % (q - 1)];
    }
    std::uint32_t finv(std::uint32_t a) const {
        if (a == 0) throw FieldError("division by zero");
        return exp_table[(q - 1 - log_table[a]) % (q - 1)];
    }
    std::uint32_t poly_mulmod(std::uint32_t a, std::uint32_t b) const;

    // cyclotomic helpers
    void reduce(IntPoly& r) const {
        for (int i = static_cast<int>(r.size()) - 1; i >= deg; --i) {
            if (r[i] == 0) continue;
            mpz_class c = r[i];
            for (int j = 0; j <= deg; ++j) r[i - deg + j] -= c * phi[j];
        }
        r.resize(deg);
    }
    static void normalize(std::vector<mpz_class>& num, mpz_class& den) {
        mpz_class g = den;
        for (auto& c : num) {
            if (g == 1) break;
            if (c != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        }
        bool allzero = std::all_of(num.begin(), num.end(), [](const mpz_class& c) { return c == 0; });
        if (allzero) {
            den = 1;
            return;
        }
        if (g != 1) {
            for (auto& c : num) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
            mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), g.get_mpz_t());
        }
    }
};

std::uint32_t FieldContext::poly_mulmod(std::uint32_t a, std::uint32_t b) const {
    auto da = digits(a), db = digits(b);
    std::vector<std::int64_t> r(2 * k - 1, 0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) r[i + j] = mod(r[i + j] + da[i] * db[j], p);
    for (int i = 2 * k - 2; i >= k; --i) {
        std::int64_t c = r[i];
        if (c == 0) continue;
        for (int j = 0; j <= k; ++j) r[i - k + j] = mod(r[i - k + j] - c * modulus[j], p);
    }
    r.resize(k);
    return encode(r);
}

namespace {

bool poly_irreducible(const std::vector<std::int64_t>& f, std::int64_t p) {
    // trial division by all monic polynomials of degree 1..deg/2
    int n = static_cast<int>(f.size()) - 1;
    for (int d = 1; 2 * d <= n; ++d) {
        std::int64_t count = ipow(p, d);
        for (std::int64_t c = 0; c < count; ++c) {
            std::vector<std::int64_t> g(d + 1);
            std::int64_t t = c;
            for (int i = 0; i < d; ++i) {
                g[i] = t % p;
                t /= p;
            }
            g[d] = 1;
            std::vector<std::int64_t> r = f;
            for (int i = n; i >= d; --i) {
                std::int64_t cc = mod(r[i], p);
                if (cc == 0) continue;
                for (int j = 0; j <= d; ++j) r[i - d + j] = mod(r[i - d + j] - cc * g[j], p);
            }
            bool zero = true;
            for (int i = 0; i < d; ++i) zero = zero && mod(r[i], p) == 0;
            if (zero) return false;
        }
    }
    return true;
}

}  // namespace

FieldContext::FieldContext(const FieldDescriptor& d) : desc(d) {
    if (d.kind == FieldKind::Cyclotomic) {
        phi = cyclotomic_poly(d.conductor);
        deg = static_cast<int>(phi.size()) - 1;
        return;
    }
    if (d.kind != FieldKind::Finite) return;
    p = d.p;
    k = d.k;
    q = static_cast<std::uint32_t>(ipow(p, k));
    place.resize(k);
    for (int i = 0; i < k; ++i) place[i] = static_cast<std::uint32_t>(ipow(p, i));
    if (k == 1) {
        modulus = {0, 1};
    } else {
        // lexicographically least monic irreducible, comparing (c_{k-1}, ..., c_0)
        std::int64_t total = ipow(p, k);
        for (std::int64_t c = 0; c < total; ++c) {
            std::vector<std::int64_t> f(k + 1);
            std::int64_t t = c;
            for (int i = 0; i < k; ++i) {
                f[i] = t % p;
                t /= p;
            }
            f[k] = 1;
            if (f[0] != 0 && poly_irreducible(f, p)) {
                modulus = f;
                break;
            }
        }
    }
    exp_table.assign(q - 1, 0);
    log_table.assign(q, 0);
    for (std::uint32_t g = 1; g < q; ++g) {
        std::uint32_t x = 1;
        std::uint32_t i = 0;
        bool ok = true;
        for (; i < q - 1; ++i) {
            if (i > 0 && x == 1) {
                ok = false;
                break;
            }
            exp_table[i] = x;
            x = (k == 1) ? static_cast<std::uint32_t>((static_cast<std::uint64_t>(x) * g) % p) : poly_mulmod(x, g);
        }
        if (ok && x == 1) {
            for (std::uint32_t j = 0; j < q - 1; ++j) log_table[exp_table[j]] = j;
            return;
        }
    }
    throw FieldError("no primitive element found");
}

FieldDescriptor FieldDescriptor::cyclotomic(int m) {
    if (m < 1) throw FieldError("cyclotomic conductor must be positive");
    FieldDescriptor d;
    d.kind = FieldKind::Cyclotomic;
    d.conductor = m;
    return d;
}

FieldDescriptor FieldDescriptor::finite(std::int64_t p, int k) {
    if (!is_prime(p)) throw FieldError("GF(p^k) needs prime p, got " + std::to_string(p));
    if (k < 1) throw FieldError("GF(p^k) needs k >= 1");
    double lg = k * std::log2(static_cast<double>(p));
    if (lg > 20.0) throw FieldError("finite fields are limited to order 2^20");
    FieldDescriptor d;
    d.kind = FieldKind::Finite;
    d.p = p;
    d.k = k;
    return d;
}

std::int64_t FieldDescriptor::order() const { return kind == FieldKind::Finite ? ipow(p, k) : 0; }

std::string FieldDescriptor::name() const {
    switch (kind) {
    case FieldKind::Rational: return "Q";
    case FieldKind::Cyclotomic: return "Q(zeta_" + std::to_string(conductor) + ")";
    case FieldKind::Finite:
        return k == 1 ? "GF(" + std::to_string(p) + ")" : "GF(" + std::to_string(p) + "^" + std::to_string(k) + ")";
    }
    return "?";
}

bool FieldDescriptor::operator==(const FieldDescriptor& o) const {
    if (kind != o.kind) return false;
    if (kind == FieldKind::Cyclotomic) return conductor == o.conductor;
    if (kind == FieldKind::Finite) return p == o.p && k == o.k;
    return true;
}

FieldDescriptor parse_field(const std::string& text) {
    std::smatch m;
    if (text == "Q" || text == "QQ" || text == "rational") return FieldDescriptor::rational();
    if (std::regex_match(text, m, std::regex(R"((?:Q\(zeta_|cyclotomic\()(\d+)\)?\)?)")))
        return FieldDescriptor::cyclotomic(std::stoi(m[1]));
    if (std::regex_match(text, m, std::regex(R"(GF\((\d+)\^(\d+)\))")))
        return FieldDescriptor::finite(std::stoll(m[1]), std::stoi(m[2]));
    if (std::regex_match(text, m, std::regex(R"(GF\((\d+)\))"))) {
        std::int64_t q = std::stoll(m[1]);
        for (std::int64_t p = 2; p <= q; ++p) {
            if (q % p) continue;
            int k = 0;
            std::int64_t t = q;
            while (t % p == 0) {
                t /= p;
                ++k;
            }
            if (t != 1) break;
            return FieldDescriptor::finite(p, k);
        }
        throw FieldError("GF(q) needs a prime power, got " + m[1].str());
    }
    throw FieldError("cannot parse field '" + text + "'");
}

const FieldContext* field_context(const FieldDescriptor& d) {
    if (d.kind == FieldKind::Rational) return nullptr;
    static std::mutex mu;
    static std::map<std::tuple<int, int, std::int64_t, int>, std::unique_ptr<FieldContext>> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(static_cast<int>(d.kind), d.conductor, d.p, d.k);
    auto it = registry.find(key);
    if (it == registry.end()) it = registry.emplace(key, std::make_unique<FieldContext>(d)).first;
    return it->second.get();
}

// ---------------------------------------------------------------------------
// Elements

FieldElement FieldElement::zero(const FieldDescriptor& d) { return FieldElement(0).in(d); }
FieldElement FieldElement::one(const FieldDescriptor& d) { return FieldElement(1).in(d); }
FieldElement FieldElement::integer(const FieldDescriptor& d, long n) { return FieldElement(n).in(d); }

FieldElement FieldElement::generator(const FieldDescriptor& d) {
    const FieldContext* c = field_context(d);
    if (!c) throw FieldError("Q has no generator");
    FieldElement x;
    x.ctx_ = c;
    if (d.kind == FieldKind::Cyclotomic) {
        IntPoly r(std::max(2, c->deg), 0);
        r[1] = 1;
        c->reduce(r);
        x.num_ = r;
        x.den_ = 1;
    } else {
        if (c->k == 1) return primitive_element(d);
        x.code_ = static_cast<std::uint32_t>(c->p);
    }
    return x;
}

FieldElement FieldElement::from_code(const FieldDescriptor& d, std::uint32_t code) {
    const FieldContext* c = field_context(d);
    if (!c || d.kind != FieldKind::Finite) throw FieldError("from_code needs a finite field");
    if (code >= c->q) throw FieldError("code out of range");
    FieldElement x;
    x.ctx_ = c;
    x.code_ = code;
    return x;
}

FieldElement FieldElement::from_coefficients(const FieldDescriptor& d, const std::vector<mpq_class>& coeffs) {
    FieldElement acc = FieldElement::zero(d);
    FieldElement z = d.kind == FieldKind::Rational ? FieldElement(1) : generator(d);
    FieldElement zp = FieldElement::one(d);
    for (const auto& c : coeffs) {
        acc += FieldElement(c) * zp;
        zp *= z;
    }
    return acc;
}

FieldDescriptor FieldElement::field() const { return ctx_ ? ctx_->desc : FieldDescriptor::rational(); }

bool FieldElement::is_zero() const {
    if (!ctx_) return q_ == 0;
    if (ctx_->desc.kind == FieldKind::Finite) return code_ == 0;
    for (const auto& c : num_)
        if (c != 0) return false;
    return true;
}

bool FieldElement::is_one() const { return *this == FieldElement(1); }

FieldElement FieldElement::in(const FieldDescriptor& d) const {
    const FieldContext* target = field_context(d);
    if (ctx_ == target) return *this;
    if (ctx_) {
        if (is_rational()) return FieldElement(to_rational()).in(d);
        throw FieldError("cannot move an element of " + field().name() + " into " + d.name());
    }
    FieldElement x;
    x.ctx_ = target;
    if (d.kind == FieldKind::Cyclotomic) {
        x.num_.assign(target->deg, 0);
        x.num_[0] = q_.get_num();
        x.den_ = q_.get_den();
    } else {
        std::int64_t p = target->p;
        mpz_class n = q_.get_num() % p, dd = q_.get_den() % p;
        std::int64_t ni = mod(n.get_si(), p), di = mod(dd.get_si(), p);
        if (di == 0) throw FieldError("denominator divisible by the characteristic");
        x.code_ = static_cast<std::uint32_t>((ni * inv_mod(di, p)) % p);
    }
    return x;
}

bool FieldElement::is_rational() const {
    if (!ctx_) return true;
    if (ctx_->desc.kind == FieldKind::Finite) return false;
    for (std::size_t i = 1; i < num_.size(); ++i)
        if (num_[i] != 0) return false;
    return true;
}

mpq_class FieldElement::to_rational() const {
    if (!ctx_) return q_;
    if (!is_rational()) throw FieldError("element is not rational");
    mpq_class r(num_[0], den_);
    r.canonicalize();
    return r;
}

std::uint32_t FieldElement::code() const {
    if (!ctx_ || ctx_->desc.kind != FieldKind::Finite) throw FieldError("code() needs a finite field element");
    return code_;
}

std::vector<mpq_class> FieldElement::coefficients() const {
    if (!ctx_) return {q_};
    if (ctx_->desc.kind == FieldKind::Finite) {
        std::vector<mpq_class> r;
        for (auto dgt : ctx_->digits(code_)) r.emplace_back(static_cast<long>(dgt));
        return r;
    }
    std::vector<mpq_class> r;
    for (const auto& c : num_) {
        mpq_class v(c, den_);
        v.canonicalize();
        r.push_back(v);
    }
    return r;
}

void FieldElement::unify(FieldElement& o) {
    if (ctx_ == o.ctx_) return;
    if (!ctx_) {
        *this = in(o.field());
        return;
    }
    if (!o.ctx_) {
        o = o.in(field());
        return;
    }
    throw FieldError("mixed fields: " + field().name() + " and " + o.field().name());
}

FieldElement FieldElement::operator-() const {
    FieldElement r = *this;
    if (!ctx_) {
        r.q_ = -q_;
    } else if (ctx_->desc.kind == FieldKind::Finite) {
        r.code_ = ctx_->fneg(code_);
    } else {
        for (auto& c : r.num_) c = -c;
    }
    return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& o_in) {
    if (o_in.ctx_ != ctx_) {
        FieldElement o = o_in;
        unify(o);
        return *this += o;
    }
    if (!ctx_) {
        q_ += o_in.q_;
    } else if (ctx_->desc.kind == FieldKind::Finite) {
        code_ = ctx_->fadd(code_, o_in.code_);
    } else if (den_ == o_in.den_) {
        for (int i = 0; i < ctx_->deg; ++i) num_[i] += o_in.num_[i];
        if (den_ != 1) FieldContext::normalize(num_, den_);
    } else {
        for (int i = 0; i < ctx_->deg; ++i) num_[i] = num_[i] * o_in.den_ + o_in.num_[i] * den_;
        den_ *= o_in.den_;
        FieldContext::normalize(num_, den_);
    }
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) { return *this += -o; }

FieldElement& FieldElement::operator*=(const FieldElement& o_in) {
    if (o_in.ctx_ != ctx_) {
        FieldElement o = o_in;
        unify(o);
        return *this *= o;
    }
    if (!ctx_) {
        q_ *= o_in.q_;
    } else if (ctx_->desc.kind == FieldKind::Finite) {
        code_ = ctx_->fmul(code_, o_in.code_);
    } else {
        if (is_zero() || o_in.is_zero()) {
            for (auto& c : num_) c = 0;
            den_ = 1;
            return *this;
        }
        int d = ctx_->deg;
        IntPoly r(2 * d - 1, 0);
        for (int i = 0; i < d; ++i) {
            if (num_[i] == 0) continue;
            for (int j = 0; j < d; ++j)
                if (o_in.num_[j] != 0) mpz_addmul(r[i + j].get_mpz_t(), num_[i].get_mpz_t(), o_in.num_[j].get_mpz_t());
        }
        ctx_->reduce(r);
        num_ = std::move(r);
        den_ *= o_in.den_;
        FieldContext::normalize(num_, den_);
    }
    return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) { return *this *= o.inverse(); }

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw FieldError("division by zero");
    FieldElement r = *this;
    if (!ctx_) {
        r.q_ = 1 / q_;
        return r;
    }
    if (ctx_->desc.kind == FieldKind::Finite) {
        r.code_ = ctx_->finv(code_);
        return r;
    }
    // Solve (N * y = 1) where N is multiplication by the numerator, then scale by den.
    int d = ctx_->deg;
    std::vector<std::vector<mpq_class>> a(d, std::vector<mpq_class>(d + 1));
    IntPoly col(d, 0);
    col = num_;
    for (int j = 0; j < d; ++j) {
        for (int i = 0; i < d; ++i) a[i][j] = col[i];
        IntPoly shifted(d + 1, 0);
        for (int i = 0; i < d; ++i) shifted[i + 1] = col[i];
        ctx_->reduce(shifted);
        col = shifted;
    }
    a[0][d] = 1;
    for (int c = 0; c < d; ++c) {
        int piv = c;
        while (piv < d && a[piv][c] == 0) ++piv;
        if (piv == d) throw FieldError("singular multiplication map");
        std::swap(a[piv], a[c]);
        mpq_class inv = 1 / a[c][c];
        for (int j = c; j <= d; ++j) a[c][j] *= inv;
        for (int i = 0; i < d; ++i) {
            if (i == c || a[i][c] == 0) continue;
            mpq_class f = a[i][c];
            for (int j = c; j <= d; ++j) a[i][j] -= f * a[c][j];
        }
    }
    mpz_class lcm = 1;
    for (int i = 0; i < d; ++i) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), a[i][d].get_den_mpz_t());
    for (int i = 0; i < d; ++i) {
        mpq_class v = a[i][d] * den_ * lcm;
        r.num_[i] = v.get_num();
    }
    r.den_ = lcm;
    FieldContext::normalize(r.num_, r.den_);
    return r;
}

FieldElement FieldElement::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    FieldElement result = FieldElement(1);
    if (ctx_) result = result.in(field());
    FieldElement b = *this;
    while (e > 0) {
        if (e & 1) result *= b;
        b *= b;
        e >>= 1;
    }
    return result;
}

FieldElement FieldElement::frobenius(int s) const {
    if (!ctx_ || ctx_->desc.kind != FieldKind::Finite) throw FieldError("frobenius needs a finite field");
    long e = static_cast<long>(ipow(ctx_->p, s % ctx_->k));
    return pow(e);
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    if (a.ctx_ == b.ctx_) {
        if (!a.ctx_) return a.q_ == b.q_;
        if (a.ctx_->desc.kind == FieldKind::Finite) return a.code_ == b.code_;
        return a.den_ == b.den_ && a.num_ == b.num_;
    }
    FieldElement x = a, y = b;
    x.unify(y);
    return x == y;
}

std::size_t FieldElement::hash() const {
    auto mix = [](std::size_t h, std::size_t v) { return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2)); };
    auto zh = [](const mpz_class& z) {
        return static_cast<std::size_t>(mpz_get_ui(z.get_mpz_t())) ^ (static_cast<std::size_t>(mpz_sgn(z.get_mpz_t()) + 1) << 60);
    };
    if (!ctx_) return mix(zh(q_.get_num()), zh(q_.get_den()));
    if (ctx_->desc.kind == FieldKind::Finite) return mix(0x51ed27, code_);
    std::size_t h = zh(den_);
    for (const auto& c : num_) h = mix(h, zh(c));
    return h;
}

std::string FieldElement::to_string() const {
    if (!ctx_) return q_.get_str();
    std::ostringstream os;
    if (ctx_->desc.kind == FieldKind::Finite) {
        if (ctx_->k == 1) return std::to_string(code_);
        auto d = ctx_->digits(code_);
        bool first = true;
        for (int i = ctx_->k - 1; i >= 0; --i) {
            if (d[i] == 0) continue;
            if (!first) os << "+";
            first = false;
            if (i == 0 || d[i] != 1) os << d[i];
            if (i > 0 && d[i] != 1) os << "*";
            if (i >= 1) os << "x";
            if (i > 1) os << "^" << i;
        }
        if (first) os << "0";
        return os.str();
    }
    auto coeffs = coefficients();
    bool first = true;
    for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
        const mpq_class& c = coeffs[i];
        if (c == 0) continue;
        mpq_class a = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? "-" : "+");
        }
        first = false;
        if (i == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << "z";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const FieldElement& x) { return os << x.to_string(); }

// ---------------------------------------------------------------------------
// Roots

int euler_phi(int m) {
    int r = m;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        while (m % p == 0) m /= p;
        r -= r / p;
    }
    if (m > 1) r -= r / m;
    return r;
}

FieldElement primitive_element(const FieldDescriptor& d) {
    const FieldContext* c = field_context(d);
    if (!c || d.kind != FieldKind::Finite) throw FieldError("primitive_element needs a finite field");
    return FieldElement::from_code(d, c->q > 2 ? c->exp_table[1] : 1);
}

std::vector<FieldElement> all_elements(const FieldDescriptor& d) {
    if (d.kind != FieldKind::Finite) throw FieldError("all_elements needs a finite field");
    std::vector<FieldElement> r;
    for (std::uint32_t c = 0; c < static_cast<std::uint32_t>(d.order()); ++c) r.push_back(FieldElement::from_code(d, c));
    return r;
}

FieldElement root_of_unity(int m, const FieldDescriptor& d) {
    if (m < 1) throw FieldError("root_of_unity needs m >= 1");
    switch (d.kind) {
    case FieldKind::Rational:
        if (m == 1) return 1;
        if (m == 2) return -1;
        break;
    case FieldKind::Cyclotomic: {
        int M = d.conductor;
        FieldElement z = FieldElement::generator(d);
        if (M % m == 0) return z.pow(M / m);
        if (M % 2 == 1 && (2 * M) % m == 0) return (-z).pow(2 * M / m);
        break;
    }
    case FieldKind::Finite: {
        std::int64_t q = d.order();
        if ((q - 1) % m == 0) return primitive_element(d).pow(static_cast<long>((q - 1) / m));
        break;
    }
    }
    throw FieldError("no element of order " + std::to_string(m) + " in " + d.name());
}

namespace {

FieldElement sqrt_integer_cyclotomic(mpz_class n, const FieldDescriptor& d) {
    if (n == 0) return FieldElement::zero(d);
    FieldElement result = FieldElement::one(d);
    int sign = n < 0 ? -1 : 1;
    n = abs(n);
    long twos = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++twos;
    }
    if (twos % 2 == 1) sign *= 2;
    result *= FieldElement(mpz_class(1) << (twos / 2));
    int lead = sign;  // remaining factor in {1,-1,2,-2}
    for (long p = 3; mpz_class(p) * p <= n || n > 1; p += 2) {
        if (mpz_class(p) * p > n) p = n.get_si();
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e == 0) continue;
        result *= FieldElement(p).pow(e / 2);
        if (e % 2 == 1) {
            // Gauss sum: g^2 = (-1)^((p-1)/2) p
            if (d.conductor % p != 0) throw FieldError("no square root: " + std::to_string(p) + " does not divide the conductor");
            FieldElement zp = root_of_unity(static_cast<int>(p), d);
            FieldElement g = FieldElement::zero(d);
            for (long a = 1; a < p; ++a) {
                long leg = 1;
                mpz_class aa(a), pp(p);
                leg = mpz_legendre(aa.get_mpz_t(), pp.get_mpz_t());
                g += FieldElement(leg) * zp.pow(a);
            }
            result *= g;
            if (p % 4 == 3) lead = -lead;
        }
        if (n == 1) break;
    }
    switch (lead) {
    case 1: break;
    case -1: result *= root_of_unity(4, d); break;
    case 2: {
        FieldElement z8 = root_of_unity(8, d);
        result *= z8 + z8.pow(7);
        break;
    }
    case -2: {
        FieldElement z8 = root_of_unity(8, d);
        result *= z8 + z8.pow(3);
        break;
    }
    }
    return result;
}

FieldElement sqrt_rational_cyclotomic(const mpq_class& r, const FieldDescriptor& d) {
    mpz_class nd = r.get_num() * r.get_den();
    return sqrt_integer_cyclotomic(nd, d) / FieldElement(mpq_class(r.get_den()));
}

}  // namespace

FieldElement sqrt_of(const FieldElement& a_in, const FieldDescriptor& d) {
    FieldElement a = a_in.in(d);
    if (a.is_zero()) return a;
    switch (d.kind) {
    case FieldKind::Rational: {
        mpq_class r = a.to_rational();
        if (r < 0 || !mpz_perfect_square_p(r.get_num_mpz_t()) || !mpz_perfect_square_p(r.get_den_mpz_t()))
            throw FieldError("no square root of " + a.to_string() + " in Q");
        mpz_class n = sqrt(r.get_num()), dd = sqrt(r.get_den());
        return FieldElement(mpq_class(n, dd));
    }
    case FieldKind::Finite: {
        const FieldContext* c = field_context(d);
        std::uint32_t q = c->q;
        std::uint64_t e = c->log_table[a.code()];
        if (e % 2 == 1) {
            if (q % 2 == 1) throw FieldError("no square root of " + a.to_string() + " in " + d.name());
            e += q - 1;
        }
        return FieldElement::from_code(d, c->exp_table[(e / 2) % (q - 1)]);
    }
    case FieldKind::Cyclotomic: {
        int M = d.conductor;
        int L = M % 2 == 0 ? M : 2 * M;
        FieldElement z = root_of_unity(L, d);
        FieldElement zi = z.inverse();
        FieldElement cur = a;
        for (int j = 0; j < L; ++j, cur *= zi) {
            if (!cur.is_rational()) continue;
            mpq_class r = cur.to_rational();
            // a = r * z^j
            for (int shift : {0, L / 2}) {
                int jj = (j + shift) % L;
                if (jj % 2 != 0) continue;
                mpq_class rr = shift ? mpq_class(-r) : r;
                try {
                    FieldElement s = sqrt_rational_cyclotomic(rr, d) * z.pow(jj / 2);
                    if (s * s == a) return s;
                } catch (const FieldError&) {
                }
            }
        }
        throw FieldError("no square root of " + a.to_string() + " found in " + d.name());
    }
    }
    throw FieldError("unreachable");
}

}  // namespace genstab
