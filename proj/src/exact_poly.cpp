#include <algorithm>
#include <numeric>
#include <sstream>

#include "piilab/exact.hpp"

namespace piilab::exact {

namespace {

constexpr std::array<std::string_view, kNumVars> kVarNames = {
    "t",  "c",  "alpha", "y",  "yp", "q",   "p",   "y1",  "z1",  "y2", "z2", "y3", "z3",
    "y4", "z4", "y5",    "z5", "y6", "z6",  "y7",  "z7",  "y8",  "z8", "v8", "y9", "z9",
    "y10", "z10", "y11", "z11", "y12", "z12", "Y", "z",  "x0",  "x1", "x2", "x3",
};

Exponents zero_exponents() {
    Exponents e{};
    e.fill(0);
    return e;
}

bool divides(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < kNumVars; ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exponents add_exp(const Exponents& a, const Exponents& b) {
    Exponents r;
    for (std::size_t i = 0; i < kNumVars; ++i) r[i] = static_cast<std::uint16_t>(a[i] + b[i]);
    return r;
}

Exponents sub_exp(const Exponents& a, const Exponents& b) {
    Exponents r;
    for (std::size_t i = 0; i < kNumVars; ++i) r[i] = static_cast<std::uint16_t>(a[i] - b[i]);
    return r;
}

}  // namespace

Rational make_rational(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational parse_rational(std::string_view text) {
    auto bad = [&]() { return Error(ErrorCode::Parse, "not a rational: '" + std::string(text) + "'"); };
    if (text.empty()) throw bad();
    std::string s(text);
    auto slash = s.find('/');
    auto check_int = [&](const std::string& part, bool allow_sign) {
        if (part.empty()) throw bad();
        std::size_t i = 0;
        if (allow_sign && (part[0] == '-' || part[0] == '+')) i = 1;
        if (i == part.size()) throw bad();
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9') throw bad();
    };
    std::string n = slash == std::string::npos ? s : s.substr(0, slash);
    std::string d = slash == std::string::npos ? "1" : s.substr(slash + 1);
    check_int(n, true);
    check_int(d, false);
    if (n[0] == '+') n = n.substr(1);
    Integer zn(n), zd(d);
    if (zd == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator in '" + s + "'");
    Rational r(zn, zd);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

std::string_view var_name(Var v) { return kVarNames[idx(v)]; }

std::optional<Var> var_from_name(std::string_view name) {
    for (std::size_t i = 0; i < kNumVars; ++i)
        if (kVarNames[i] == name) return static_cast<Var>(i);
    return std::nullopt;
}

unsigned total_degree(const Exponents& e) {
    unsigned d = 0;
    for (auto x : e) d += x;
    return d;
}

bool grlex_greater(const Exponents& a, const Exponents& b) {
    unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    for (std::size_t i = 0; i < kNumVars; ++i)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

Polynomial::Polynomial(const Rational& constant) {
    if (constant != 0) terms_.emplace_back(zero_exponents(), constant);
}

Polynomial Polynomial::variable(Var v, unsigned power) {
    Exponents e = zero_exponents();
    e[idx(v)] = static_cast<std::uint16_t>(power);
    return monomial(e, Rational(1));
}

Polynomial Polynomial::monomial(const Exponents& e, const Rational& coeff) {
    Polynomial p;
    if (coeff != 0) p.terms_.emplace_back(e, coeff);
    return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
    std::map<Exponents, Rational, GrlexGreater> acc;
    for (auto& [e, c] : terms) acc[e] += c;
    Polynomial p;
    p.terms_.reserve(acc.size());
    for (auto& [e, c] : acc)
        if (c != 0) p.terms_.emplace_back(e, c);
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && exact::total_degree(terms_[0].first) == 0);
}

Rational Polynomial::constant_value() const { return terms_.empty() ? Rational(0) : terms_[0].second; }

unsigned Polynomial::degree(Var v) const {
    unsigned d = 0;
    for (auto& t : terms_) d = std::max<unsigned>(d, t.first[idx(v)]);
    return d;
}

unsigned Polynomial::min_degree(Var v) const {
    if (terms_.empty()) return 0;
    unsigned d = ~0u;
    for (auto& t : terms_) d = std::min<unsigned>(d, t.first[idx(v)]);
    return d;
}

unsigned Polynomial::total_degree() const {
    return terms_.empty() ? 0 : exact::total_degree(terms_.front().first);
}

bool Polynomial::depends_on(Var v) const {
    for (auto& t : terms_)
        if (t.first[idx(v)] != 0) return true;
    return false;
}

std::vector<Var> Polynomial::variables() const {
    std::vector<Var> out;
    for (std::size_t i = 0; i < kNumVars; ++i)
        if (depends_on(static_cast<Var>(i))) out.push_back(static_cast<Var>(i));
    return out;
}

std::vector<Polynomial> Polynomial::coefficients(Var v) const {
    std::vector<std::vector<Term>> buckets(degree(v) + 1);
    for (auto& [e, c] : terms_) {
        Exponents r = e;
        r[idx(v)] = 0;
        buckets[e[idx(v)]].emplace_back(r, c);
    }
    std::vector<Polynomial> out;
    out.reserve(buckets.size());
    for (auto& b : buckets) {
        Polynomial p;
        p.terms_ = std::move(b);
        std::sort(p.terms_.begin(), p.terms_.end(),
                  [](const Term& a, const Term& b) { return grlex_greater(a.first, b.first); });
        out.push_back(std::move(p));
    }
    return out;
}

Polynomial Polynomial::from_coefficients(Var v, const std::vector<Polynomial>& coeffs) {
    std::vector<Term> terms;
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        for (auto& [e, c] : coeffs[k].terms_) {
            Exponents r = e;
            r[idx(v)] = static_cast<std::uint16_t>(r[idx(v)] + k);
            terms.emplace_back(r, c);
        }
    return from_terms(std::move(terms));
}

Polynomial Polynomial::derivative(Var v) const {
    std::vector<Term> terms;
    for (auto& [e, c] : terms_) {
        auto k = e[idx(v)];
        if (k == 0) continue;
        Exponents r = e;
        r[idx(v)] = static_cast<std::uint16_t>(k - 1);
        terms.emplace_back(r, c * k);
    }
    return from_terms(std::move(terms));
}

Polynomial Polynomial::specialize(Var v, const Rational& value) const {
    std::vector<Term> terms;
    for (auto& [e, c] : terms_) {
        auto k = e[idx(v)];
        Rational f = c;
        if (k > 0) {
            Rational pw = 1;
            for (unsigned i = 0; i < k; ++i) pw *= value;
            f *= pw;
        }
        Exponents r = e;
        r[idx(v)] = 0;
        terms.emplace_back(r, f);
    }
    return from_terms(std::move(terms));
}

Polynomial Polynomial::pow(unsigned n) const {
    Polynomial result(1), base = *this;
    while (n) {
        if (n & 1u) result = result * base;
        n >>= 1u;
        if (n) base = base * base;
    }
    return result;
}

Polynomial Polynomial::scaled(const Rational& s) const {
    if (s == 0) return {};
    Polynomial p = *this;
    for (auto& t : p.terms_) t.second *= s;
    return p;
}

Polynomial Polynomial::shifted(Var v, unsigned k) const {
    Polynomial p = *this;
    for (auto& t : p.terms_) t.first[idx(v)] = static_cast<std::uint16_t>(t.first[idx(v)] + k);
    return p;
}

Rational Polynomial::primitive_scale() const {
    if (terms_.empty()) return 1;
    Integer l = 1, g = 0;
    for (auto& t : terms_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.second.get_den_mpz_t());
    for (auto& t : terms_) {
        Integer n = t.second.get_num() * (l / t.second.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    }
    Rational s(l, g);
    s.canonicalize();
    if (terms_.front().second < 0) s = -s;
    return s;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto& [e, c] : terms_) {
        Rational mag = abs(c);
        bool neg = c < 0;
        if (first) {
            if (neg) out << "-";
        } else {
            out << (neg ? " - " : " + ");
        }
        first = false;
        bool has_vars = exact::total_degree(e) > 0;
        if (!has_vars || mag != 1) {
            out << mag.get_str();
            if (has_vars) out << "*";
        }
        bool first_var = true;
        for (std::size_t i = 0; i < kNumVars; ++i) {
            if (!e[i]) continue;
            if (!first_var) out << "*";
            first_var = false;
            out << kVarNames[i];
            if (e[i] > 1) out << "^" << e[i];
        }
    }
    return out.str();
}

bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto i = a.terms_.begin(), j = b.terms_.begin();
    while (i != a.terms_.end() && j != b.terms_.end()) {
        if (grlex_greater(i->first, j->first)) {
            r.terms_.push_back(*i++);
        } else if (grlex_greater(j->first, i->first)) {
            r.terms_.push_back(*j++);
        } else {
            Rational s = i->second + j->second;
            if (s != 0) r.terms_.emplace_back(i->first, s);
            ++i;
            ++j;
        }
    }
    r.terms_.insert(r.terms_.end(), i, a.terms_.end());
    r.terms_.insert(r.terms_.end(), j, b.terms_.end());
    return r;
}

Polynomial operator-(const Polynomial& a) {
    Polynomial r = a;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_constant()) return b.scaled(a.constant_value());
    if (b.is_constant()) return a.scaled(b.constant_value());
    std::map<Exponents, Rational, GrlexGreater> acc;
    for (auto& [ea, ca] : a.terms_)
        for (auto& [eb, cb] : b.terms_) acc[add_exp(ea, eb)] += ca * cb;
    Polynomial r;
    r.terms_.reserve(acc.size());
    for (auto& [e, c] : acc)
        if (c != 0) r.terms_.emplace_back(e, c);
    return r;
}

std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
    if (b.is_constant()) return a.scaled(1 / b.constant_value());
    std::vector<Polynomial::Term> quotient;
    Polynomial r = a;
    const auto& [lb, cb] = b.leading();
    while (!r.is_zero()) {
        const auto& [lr, cr] = r.leading();
        if (!divides(lb, lr)) return std::nullopt;
        Polynomial t = Polynomial::monomial(sub_exp(lr, lb), cr / cb);
        quotient.emplace_back(t.leading());
        r = r - t * b;
    }
    return Polynomial::from_terms(std::move(quotient));
}

std::pair<Polynomial, Polynomial> divide_remainder(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
    std::vector<Polynomial::Term> quotient, remainder;
    Polynomial r = a;
    const auto& [lb, cb] = b.leading();
    while (!r.is_zero()) {
        const auto [lr, cr] = r.leading();
        if (divides(lb, lr)) {
            Polynomial t = Polynomial::monomial(sub_exp(lr, lb), cr / cb);
            quotient.emplace_back(t.leading());
            r = r - t * b;
        } else {
            remainder.emplace_back(lr, cr);
            r = r - Polynomial::monomial(lr, cr);
        }
    }
    return {Polynomial::from_terms(std::move(quotient)), Polynomial::from_terms(std::move(remainder))};
}

}  // namespace piilab::exact
