#pragma once

// Independent helpers for the tests: direct term-by-term evaluation and
// seeded random generators.

#include <map>
#include <random>

#include "piilab/exact.hpp"

namespace oracle {

using piilab::exact::Polynomial;
using piilab::exact::Rational;
using piilab::exact::RationalFunction;
using piilab::exact::Var;

using Point = std::map<Var, Rational>;

inline Rational eval(const Polynomial& p, const Point& at) {
    Rational sum = 0;
    for (auto& [e, c] : p.terms()) {
        Rational term = c;
        for (std::size_t k = 0; k < piilab::exact::kNumVars; ++k)
            for (unsigned r = 0; r < e[k]; ++r) term *= at.at(static_cast<Var>(k));
        sum += term;
    }
    return sum;
}

inline Rational eval(const RationalFunction& f, const Point& at) { return eval(f.num(), at) / eval(f.den(), at); }

inline Rational random_rational(std::mt19937& rng, int span = 7) {
    std::uniform_int_distribution<int> num(-span, span), den(1, span);
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

inline Polynomial random_poly(std::mt19937& rng, const std::vector<Var>& vars, int terms, int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg), coeff(-4, 4), pick(0, static_cast<int>(vars.size()) - 1);
    Polynomial p;
    for (int k = 0; k < terms; ++k) {
        piilab::exact::Exponents e{};
        int d = deg(rng);
        for (int i = 0; i < d; ++i) ++e[piilab::exact::idx(vars[pick(rng)])];
        p += Polynomial::monomial(e, coeff(rng));
    }
    return p;
}

inline RationalFunction random_rf(std::mt19937& rng, const std::vector<Var>& vars, int max_deg = 2) {
    Polynomial n = random_poly(rng, vars, 3, max_deg);
    Polynomial d;
    while (d.is_zero()) d = random_poly(rng, vars, 2, max_deg);
    return RationalFunction(n, d);
}

// A point where none of the given polynomials vanish.
inline Point random_point(std::mt19937& rng, const std::vector<Polynomial>& nonzero = {}) {
    for (;;) {
        Point pt;
        for (std::size_t k = 0; k < piilab::exact::kNumVars; ++k) pt[static_cast<Var>(k)] = random_rational(rng);
        bool ok = true;
        for (auto& p : nonzero) ok = ok && eval(p, pt) != 0;
        if (ok) return pt;
    }
}

}  // namespace oracle
