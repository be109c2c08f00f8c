// Multivariate gcd by content / primitive-part recursion with a primitive
// pseudo-remainder sequence in one main variable.

#include <algorithm>

#include "piilab/exact.hpp"

namespace piilab::exact {

namespace {

Polynomial monic(const Polynomial& p) {
    if (p.is_zero()) return p;
    return p.scaled(1 / p.leading_coeff());
}

Polynomial must_divide(const Polynomial& a, const Polynomial& b) {
    auto q = divide_exact(a, b);
    if (!q) throw Error(ErrorCode::Internal, "gcd: inexact division");
    return *q;
}

// Minimal exponent of each variable over all terms.
Exponents monomial_content(const Polynomial& p) {
    Exponents m = p.terms().front().first;
    for (auto& [e, c] : p.terms())
        for (std::size_t i = 0; i < kNumVars; ++i) m[i] = std::min(m[i], e[i]);
    return m;
}

Polynomial strip_monomial(const Polynomial& p, const Exponents& m) {
    std::vector<Polynomial::Term> terms;
    terms.reserve(p.terms().size());
    for (auto [e, c] : p.terms()) {
        for (std::size_t i = 0; i < kNumVars; ++i) e[i] = static_cast<std::uint16_t>(e[i] - m[i]);
        terms.emplace_back(e, c);
    }
    return Polynomial::from_terms(std::move(terms));
}

Polynomial prem(const Polynomial& a, const Polynomial& b, Var x) {
    unsigned db = b.degree(x);
    Polynomial lcb = b.coefficients(x).back();
    Polynomial r = a;
    while (!r.is_zero() && r.degree(x) >= db) {
        unsigned dr = r.degree(x);
        Polynomial lcr = r.coefficients(x).back();
        r = lcb * r - (lcr * b).shifted(x, dr - db);
    }
    return r;
}

Polynomial gcd_rec(const Polynomial& a, const Polynomial& b);

Polynomial content_of(const Polynomial& p, Var v) {
    Polynomial g;
    for (auto& coeff : p.coefficients(v)) {
        if (coeff.is_zero()) continue;
        g = g.is_zero() ? monic(coeff) : gcd_rec(g, coeff);
        if (g.is_constant()) return Polynomial(1);
    }
    return g;
}

Polynomial primitive_part(const Polynomial& p, Var v) { return must_divide(p, content_of(p, v)); }

Polynomial prs_gcd(Polynomial a, Polynomial b, Var x) {
    if (a.degree(x) < b.degree(x)) std::swap(a, b);
    while (true) {
        if (b.is_zero()) return a;
        if (b.degree(x) == 0) return Polynomial(1);
        Polynomial r = prem(a, b, x);
        a = std::move(b);
        if (r.is_zero()) {
            b = Polynomial();
            continue;
        }
        // Numeric content too, or the coefficients grow exponentially.
        b = primitive_part(r, x);
        b = b.scaled(b.primitive_scale());
    }
}

// Image of p with the given variables set to fixed small integers.
Polynomial univariate_image(const Polynomial& p, const std::vector<Var>& others) {
    static constexpr int kPoints[] = {5, -7, 11, -3, 13, 2, -17, 19};
    Polynomial r = p;
    std::size_t k = 0;
    for (Var v : others) r = r.specialize(v, Rational(kPoints[k++ % std::size(kPoints)]));
    return r;
}

// True when gcd(a, b) certainly does not involve x: the gcd of images at a
// point where both leading coefficients survive bounds its degree in x.
bool coprime_in(const Polynomial& a, const Polynomial& b, Var x) {
    std::vector<Var> others;
    for (Var v : a.variables())
        if (v != x) others.push_back(v);
    for (Var v : b.variables())
        if (v != x && std::find(others.begin(), others.end(), v) == others.end()) others.push_back(v);
    Polynomial ia = univariate_image(a, others), ib = univariate_image(b, others);
    if (ia.degree(x) != a.degree(x) || ib.degree(x) != b.degree(x)) return false;
    return prs_gcd(ia, ib, x).degree(x) == 0;
}

Polynomial gcd_rec(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return monic(b);
    if (b.is_zero()) return monic(a);
    if (a.is_constant() || b.is_constant()) return Polynomial(1);
    if (a == b) return monic(a);

    Exponents ma = monomial_content(a), mb = monomial_content(b), mg;
    for (std::size_t i = 0; i < kNumVars; ++i) mg[i] = std::min(ma[i], mb[i]);
    Polynomial mono = Polynomial::monomial(mg, Rational(1));
    if (a.is_monomial() || b.is_monomial()) return mono;
    Polynomial pa = strip_monomial(a, ma), pb = strip_monomial(b, mb);

    // A variable present in only one argument cannot occur in the gcd.
    for (std::size_t i = 0; i < kNumVars; ++i) {
        Var v = static_cast<Var>(i);
        bool ia = pa.depends_on(v), ib = pb.depends_on(v);
        if (ia && !ib) return mono * gcd_rec(content_of(pa, v), pb);
        if (ib && !ia) return mono * gcd_rec(pa, content_of(pb, v));
    }
    if (pa.is_constant() || pb.is_constant()) return mono;

    for (Var v : pa.variables())
        if (coprime_in(pa, pb, v)) return mono * gcd_rec(content_of(pa, v), content_of(pb, v));

    Var x = pa.variables().front();
    unsigned best = ~0u;
    for (Var v : pa.variables()) {
        unsigned d = std::max(pa.degree(v), pb.degree(v));
        if (d < best) {
            best = d;
            x = v;
        }
    }
    Polynomial ca = content_of(pa, x), cb = content_of(pb, x);
    Polynomial cont = gcd_rec(ca, cb);
    Polynomial g = prs_gcd(must_divide(pa, ca), must_divide(pb, cb), x);
    return monic(mono * cont * g);
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) { return gcd_rec(a, b); }

Polynomial content(const Polynomial& p, Var v) {
    if (p.is_zero()) return p;
    return content_of(p, v);
}

Polynomial resultant(const Polynomial& a, const Polynomial& b, Var v) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    auto ca = a.coefficients(v), cb = b.coefficients(v);
    std::size_t m = ca.size() - 1, n = cb.size() - 1;
    if (m == 0) return ca[0].pow(static_cast<unsigned>(n));
    if (n == 0) return cb[0].pow(static_cast<unsigned>(m));
    std::size_t size = m + n;
    std::vector<std::vector<Polynomial>> mat(size, std::vector<Polynomial>(size));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k <= m; ++k) mat[r][r + k] = ca[m - k];
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t k = 0; k <= n; ++k) mat[n + r][r + k] = cb[n - k];

    // Fraction-free Bareiss elimination.
    Polynomial prev(1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < size; ++k) {
        if (mat[k][k].is_zero()) {
            std::size_t s = k + 1;
            while (s < size && mat[s][k].is_zero()) ++s;
            if (s == size) return Polynomial();
            std::swap(mat[k], mat[s]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < size; ++i) {
            for (std::size_t j = k + 1; j < size; ++j)
                mat[i][j] = must_divide(mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j], prev);
            mat[i][k] = Polynomial();
        }
        prev = mat[k][k];
    }
    Polynomial det = mat[size - 1][size - 1];
    return negate ? -det : det;
}

}  // namespace piilab::exact
