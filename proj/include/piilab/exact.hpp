#pragma once

// Exact arithmetic: rationals, sparse multivariate polynomials over a fixed
// variable alphabet, and rational functions kept in canonical form.

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "piilab/error.hpp"

namespace piilab::exact {

using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
// Accepts "p", "-p", "p/q". Throws Error(Parse) otherwise.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

// The alphabet is closed. Order matters: it fixes the monomial order.
enum class Var : std::uint8_t {
    t, c, alpha, y, yp, q, p,
    y1, z1, y2, z2, y3, z3,
    y4, z4, y5, z5, y6, z6, y7, z7, y8, z8, v8,
    y9, z9, y10, z10, y11, z11, y12, z12,
    Y, z, x0, x1, x2, x3,
};
inline constexpr std::size_t kNumVars = static_cast<std::size_t>(Var::x3) + 1;

std::string_view var_name(Var v);
std::optional<Var> var_from_name(std::string_view name);
inline std::size_t idx(Var v) { return static_cast<std::size_t>(v); }

using Exponents = std::array<std::uint16_t, kNumVars>;

unsigned total_degree(const Exponents& e);
// Graded lexicographic: true when a is strictly greater than b.
bool grlex_greater(const Exponents& a, const Exponents& b);

struct GrlexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const { return grlex_greater(a, b); }
};

class Polynomial {
public:
    using Term = std::pair<Exponents, Rational>;

    Polynomial() = default;
    Polynomial(const Rational& constant);  // NOLINT: implicit constant lift
    Polynomial(long constant) : Polynomial(Rational(constant)) {}  // NOLINT
    static Polynomial variable(Var v, unsigned power = 1);
    static Polynomial monomial(const Exponents& e, const Rational& coeff);
    static Polynomial from_terms(std::vector<Term> terms);

    // Terms sorted by decreasing grlex order; no zero coefficients.
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const;  // requires is_constant()
    bool is_monomial() const { return terms_.size() == 1; }
    const Term& leading() const { return terms_.front(); }
    const Rational& leading_coeff() const { return terms_.front().second; }

    unsigned degree(Var v) const;
    unsigned min_degree(Var v) const;
    unsigned total_degree() const;
    bool depends_on(Var v) const;
    std::vector<Var> variables() const;

    // Coefficients with respect to v: result[k] multiplies v^k.
    std::vector<Polynomial> coefficients(Var v) const;
    static Polynomial from_coefficients(Var v, const std::vector<Polynomial>& coeffs);

    Polynomial derivative(Var v) const;
    // Substitute a rational value for v.
    Polynomial specialize(Var v, const Rational& value) const;
    Polynomial pow(unsigned n) const;
    Polynomial scaled(const Rational& s) const;
    // Multiply by v^k.
    Polynomial shifted(Var v, unsigned k) const;

    // Integer content normalisation: returns s with s*P having coprime integer
    // coefficients and positive leading coefficient.
    Rational primitive_scale() const;

    std::string to_string() const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
    Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
    Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

private:
    std::vector<Term> terms_;
};

// Exact quotient a/b if b divides a, nullopt otherwise. b must be nonzero.
std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b);
// Multivariate division by a single divisor (grlex): a = q*b + r.
std::pair<Polynomial, Polynomial> divide_remainder(const Polynomial& a, const Polynomial& b);
// Greatest common divisor with leading coefficient 1 (gcd(0,0) = 0).
Polynomial gcd(const Polynomial& a, const Polynomial& b);
// gcd of the coefficients of p regarded as a polynomial in v.
Polynomial content(const Polynomial& p, Var v);
// Sylvester resultant with respect to v.
Polynomial resultant(const Polynomial& a, const Polynomial& b, Var v);

class RationalFunction {
public:
    RationalFunction() : num_(0), den_(1) {}
    RationalFunction(const Polynomial& p) : num_(p), den_(1) { normalize(); }  // NOLINT
    RationalFunction(const Rational& r) : RationalFunction(Polynomial(r)) {}  // NOLINT
    RationalFunction(long r) : RationalFunction(Polynomial(r)) {}  // NOLINT
    RationalFunction(const Polynomial& num, const Polynomial& den);
    static RationalFunction variable(Var v) { return Polynomial::variable(v); }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    bool is_constant() const { return is_polynomial() && num_.is_constant(); }
    Rational constant_value() const;
    bool depends_on(Var v) const { return num_.depends_on(v) || den_.depends_on(v); }

    std::string to_string() const;

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction& operator+=(const RationalFunction& b) { return *this = *this + b; }
    RationalFunction& operator-=(const RationalFunction& b) { return *this = *this - b; }
    RationalFunction& operator*=(const RationalFunction& b) { return *this = *this * b; }
    RationalFunction& operator/=(const RationalFunction& b) { return *this = *this / b; }
    RationalFunction pow(int n) const;

private:
    struct Raw {};
    RationalFunction(Raw, Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {}
    void normalize();

    Polynomial num_;
    Polynomial den_;
};

enum class ArithKind { add, sub, mul, div };
RationalFunction arith(const RationalFunction& a, const RationalFunction& b, ArithKind kind);

using Bindings = std::map<Var, RationalFunction>;

// Simultaneous substitution.
RationalFunction substitute(const Polynomial& p, const Bindings& bindings);
RationalFunction substitute(const RationalFunction& f, const Bindings& bindings);
RationalFunction partial(const RationalFunction& f, Var v);
// Returns the numerator when the denominator is a unit; Error(NotPolynomial)
// otherwise, with the denominator in the message.
Polynomial as_polynomial(const RationalFunction& f);
// Idempotent re-canonicalisation.
RationalFunction normalize(const RationalFunction& f);

// Parses expressions such as "2*y1^2 + z1 + t" or "(c - y3*z3)/y3".
RationalFunction parse(std::string_view text);
inline Polynomial parse_poly(std::string_view text) { return as_polynomial(parse(text)); }

// Shorthand for building bindings in code.
inline RationalFunction V(Var v) { return RationalFunction::variable(v); }

}  // namespace piilab::exact
