#include <cctype>

#include "piilab/exact.hpp"

namespace piilab::exact {

namespace {

Polynomial must_divide(const Polynomial& a, const Polynomial& b) {
    auto q = divide_exact(a, b);
    if (!q) throw Error(ErrorCode::Internal, "rational function: inexact division");
    return *q;
}

}  // namespace

RationalFunction::RationalFunction(const Polynomial& num, const Polynomial& den) : num_(num), den_(den) {
    normalize();
}

// Canonical form: gcd(num, den) = 1 and den has coprime integer coefficients
// with positive grlex-leading coefficient. Zero is 0/1.
void RationalFunction::normalize() {
    if (den_.is_zero()) throw Error(ErrorCode::DivisionByZero, "zero denominator");
    if (num_.is_zero()) {
        den_ = Polynomial(1);
        return;
    }
    if (!den_.is_constant()) {
        Polynomial g = gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = must_divide(num_, g);
            den_ = must_divide(den_, g);
        }
    }
    Rational s = den_.primitive_scale();
    if (s != 1) {
        num_ = num_.scaled(s);
        den_ = den_.scaled(s);
    }
}

Rational RationalFunction::constant_value() const {
    if (!is_constant()) throw Error(ErrorCode::InvalidArgument, "not a constant: " + to_string());
    return num_.constant_value() / den_.constant_value();
}

std::string RationalFunction::to_string() const {
    if (den_ == Polynomial(1)) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) {
        if (a.is_polynomial()) return RationalFunction(RationalFunction::Raw{}, a.num_ + b.num_, a.den_);
        return RationalFunction(a.num_ + b.num_, a.den_);
    }
    // A polynomial summand keeps the other denominator coprime to the new numerator.
    if (b.is_polynomial()) return RationalFunction(RationalFunction::Raw{}, a.num_ + b.num_ * a.den_, a.den_);
    if (a.is_polynomial()) return RationalFunction(RationalFunction::Raw{}, b.num_ + a.num_ * b.den_, b.den_);
    Polynomial g = gcd(a.den_, b.den_);
    Polynomial ad = must_divide(a.den_, g), bd = must_divide(b.den_, g);
    return RationalFunction(a.num_ * bd + b.num_ * ad, ad * b.den_);
}

RationalFunction operator-(const RationalFunction& a) {
    return RationalFunction(RationalFunction::Raw{}, -a.num_, a.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return RationalFunction();
    if (a.is_polynomial() && b.is_polynomial()) {
        Rational s = 1 / (a.den_.constant_value() * b.den_.constant_value());
        return RationalFunction(RationalFunction::Raw{}, (a.num_ * b.num_).scaled(s), Polynomial(1));
    }
    Polynomial g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
    Polynomial n = must_divide(a.num_, g1) * must_divide(b.num_, g2);
    Polynomial d = must_divide(a.den_, g2) * must_divide(b.den_, g1);
    Rational s = d.primitive_scale();
    return RationalFunction(RationalFunction::Raw{}, n.scaled(s), d.scaled(s));
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by the zero rational function");
    return a * RationalFunction(RationalFunction::Raw{}, b.den_, b.num_).pow(1);
}

RationalFunction RationalFunction::pow(int n) const {
    if (n < 0) {
        if (is_zero()) throw Error(ErrorCode::DivisionByZero, "negative power of zero");
        RationalFunction inv(Raw{}, den_, num_);
        Rational s = inv.den_.primitive_scale();
        inv.num_ = inv.num_.scaled(s);
        inv.den_ = inv.den_.scaled(s);
        return inv.pow(-n);
    }
    Polynomial nn = num_.pow(static_cast<unsigned>(n)), dd = den_.pow(static_cast<unsigned>(n));
    Rational s = dd.primitive_scale();
    return RationalFunction(Raw{}, nn.scaled(s), dd.scaled(s));
}

RationalFunction arith(const RationalFunction& a, const RationalFunction& b, ArithKind kind) {
    switch (kind) {
        case ArithKind::add: return a + b;
        case ArithKind::sub: return a - b;
        case ArithKind::mul: return a * b;
        case ArithKind::div: return a / b;
    }
    throw Error(ErrorCode::InvalidArgument, "unknown arithmetic kind");
}

RationalFunction substitute(const Polynomial& p, const Bindings& bindings) {
    struct Slot {
        Var v;
        unsigned deg;
        std::vector<Polynomial> num_pows, den_pows;
    };
    std::vector<Slot> slots;
    for (auto& [v, f] : bindings) {
        unsigned d = p.degree(v);
        if (d == 0) continue;
        Slot s{v, d, {Polynomial(1)}, {Polynomial(1)}};
        for (unsigned k = 1; k <= d; ++k) {
            s.num_pows.push_back(s.num_pows.back() * f.num());
            s.den_pows.push_back(s.den_pows.back() * f.den());
        }
        slots.push_back(std::move(s));
    }
    if (slots.empty()) return RationalFunction(p);

    // Common denominator prod den_v^deg_v; each term picks up the complementary powers.
    Polynomial numerator;
    for (auto [e, c] : p.terms()) {
        Polynomial term(1);
        for (auto& s : slots) {
            unsigned k = e[idx(s.v)];
            e[idx(s.v)] = 0;
            term = term * s.num_pows[k] * s.den_pows[s.deg - k];
        }
        numerator += term * Polynomial::monomial(e, c);
    }
    Polynomial denominator(1);
    for (auto& s : slots) denominator *= s.den_pows[s.deg];
    if (denominator.is_zero())
        throw Error(ErrorCode::IdenticallyZeroDenominator, "substitution produced a zero denominator");
    return RationalFunction(numerator, denominator);
}

RationalFunction substitute(const RationalFunction& f, const Bindings& bindings) {
    RationalFunction n = substitute(f.num(), bindings);
    RationalFunction d = substitute(f.den(), bindings);
    if (d.is_zero())
        throw Error(ErrorCode::IdenticallyZeroDenominator,
                    "denominator " + f.den().to_string() + " vanishes identically after substitution");
    return n / d;
}

RationalFunction partial(const RationalFunction& f, Var v) {
    Polynomial dn = f.num().derivative(v);
    if (f.den().is_constant()) return RationalFunction(dn, f.den());
    Polynomial dd = f.den().derivative(v);
    if (dd.is_zero()) return RationalFunction(dn, f.den());
    return RationalFunction(dn * f.den() - f.num() * dd, f.den() * f.den());
}

Polynomial as_polynomial(const RationalFunction& f) {
    if (!f.is_polynomial())
        throw Error(ErrorCode::NotPolynomial, "not a polynomial; denominator " + f.den().to_string());
    return f.num().scaled(1 / f.den().constant_value());
}

RationalFunction normalize(const RationalFunction& f) { return RationalFunction(f.num(), f.den()); }

// ---- parser -------------------------------------------------------------

namespace {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    RationalFunction run() {
        RationalFunction r = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& msg) {
        throw Error(ErrorCode::Parse, msg + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char ch) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == ch) {
            ++pos_;
            return true;
        }
        return false;
    }
    RationalFunction expr() {
        RationalFunction r = term();
        while (true) {
            if (eat('+')) r = r + term();
            else if (eat('-')) r = r - term();
            else return r;
        }
    }
    RationalFunction term() {
        RationalFunction r = unary();
        while (true) {
            if (eat('*')) r = r * unary();
            else if (eat('/')) r = r / unary();
            else return r;
        }
    }
    RationalFunction unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }
    RationalFunction power() {
        RationalFunction base = primary();
        if (!eat('^')) return base;
        bool neg = eat('-');
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer exponent");
        int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
        return base.pow(neg ? -e : e);
    }
    RationalFunction primary() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end");
        char ch = s_[pos_];
        if (ch == '(') {
            ++pos_;
            RationalFunction r = expr();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return RationalFunction(Rational(Integer(std::string(s_.substr(start, pos_ - start)))));
        }
        if (std::isalpha(static_cast<unsigned char>(ch))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            auto name = s_.substr(start, pos_ - start);
            auto v = var_from_name(name);
            if (!v) throw Error(ErrorCode::UnknownVariable, "unknown variable '" + std::string(name) + "'");
            return RationalFunction::variable(*v);
        }
        fail("unexpected '" + std::string(1, ch) + "'");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

RationalFunction parse(std::string_view text) { return Parser(text).run(); }

}  // namespace piilab::exact
