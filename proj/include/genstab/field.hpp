#pragma once

#include <cstdint>
#include <functional>
#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <vector>

namespace genstab {

/// Raised for impossible arithmetic: division by zero, mixed fields, missing roots.
class FieldError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class FieldKind { Rational, Cyclotomic, Finite };

/// Names one exact field: Q, Q(zeta_m) or GF(p^k).
struct FieldDescriptor {
    FieldKind kind = FieldKind::Rational;
    int conductor = 1;
    std::int64_t p = 0;
    int k = 1;

    static FieldDescriptor rational() { return {}; }
    static FieldDescriptor cyclotomic(int m);
    static FieldDescriptor finite(std::int64_t p, int k = 1);

    std::int64_t characteristic() const { return kind == FieldKind::Finite ? p : 0; }
    std::int64_t order() const;
    std::string name() const;
    bool operator==(const FieldDescriptor& o) const;
};

/// Parses "Q", "Q(zeta_12)", "cyclotomic(12)", "GF(9)" or "GF(3^2)".
FieldDescriptor parse_field(const std::string& text);

class FieldContext;

/// Interns the descriptor; contexts are immutable and live for the program.
const FieldContext* field_context(const FieldDescriptor& d);

class FieldElement {
public:
    FieldElement() = default;
    FieldElement(int v) : q_(v) {}
    FieldElement(long v) : q_(v) {}
    FieldElement(long long v) : q_(static_cast<long>(v)) {}
    FieldElement(const mpq_class& v) : q_(v) { q_.canonicalize(); }

    /// Zero or one of the given field.
    static FieldElement zero(const FieldDescriptor& d);
    static FieldElement one(const FieldDescriptor& d);
    /// The integer n mapped into the field.
    static FieldElement integer(const FieldDescriptor& d, long n);
    /// zeta_m for cyclotomic fields, the class of x for GF(p^k).
    static FieldElement generator(const FieldDescriptor& d);
    /// GF(p^k) element with base-p digit code c.
    static FieldElement from_code(const FieldDescriptor& d, std::uint32_t c);
    /// Cyclotomic element from rational coefficients of powers of zeta_m.
    static FieldElement from_coefficients(const FieldDescriptor& d, const std::vector<mpq_class>& c);

    /// Field of this element; untyped rational constants report Q.
    FieldDescriptor field() const;
    const FieldContext* context() const { return ctx_; }
    bool is_typed() const { return ctx_ != nullptr; }

    bool is_zero() const;
    bool is_one() const;
    /// Same value viewed in the field `d` (rationals promote).
    FieldElement in(const FieldDescriptor& d) const;
    /// Rational value when the element lies in Q.
    bool is_rational() const;
    mpq_class to_rational() const;
    /// Digit code for finite fields.
    std::uint32_t code() const;
    std::vector<mpq_class> coefficients() const;

    FieldElement operator-() const;
    FieldElement& operator+=(const FieldElement& o);
    FieldElement& operator-=(const FieldElement& o);
    FieldElement& operator*=(const FieldElement& o);
    FieldElement& operator/=(const FieldElement& o);

    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
    friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
    friend bool operator==(const FieldElement& a, const FieldElement& b);
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

    FieldElement inverse() const;
    FieldElement pow(long e) const;
    /// Frobenius x -> x^(p^s) on GF(p^k).
    FieldElement frobenius(int s = 1) const;

    std::size_t hash() const;
    std::string to_string() const;

private:
    friend class FieldContext;
    const FieldContext* ctx_ = nullptr;
    mpq_class q_;                 // untyped rational
    std::vector<mpz_class> num_;  // cyclotomic numerators
    mpz_class den_ = 1;           // cyclotomic common denominator
    std::uint32_t code_ = 0;      // finite field digit code

    void unify(FieldElement& o);
};

inline bool is_zero(const FieldElement& x) { return x.is_zero(); }
std::ostream& operator<<(std::ostream& os, const FieldElement& x);

/// Element of multiplicative order exactly m.
FieldElement root_of_unity(int m, const FieldDescriptor& d);
/// Some s with s*s == a, or FieldError.
FieldElement sqrt_of(const FieldElement& a, const FieldDescriptor& d);
/// Euler phi.
int euler_phi(int m);
/// Primitive element of GF(q).
FieldElement primitive_element(const FieldDescriptor& d);
/// All elements of a finite field in code order.
std::vector<FieldElement> all_elements(const FieldDescriptor& d);

}  // namespace genstab

template <>
struct std::hash<genstab::FieldElement> {
    std::size_t operator()(const genstab::FieldElement& x) const { return x.hash(); }
};
