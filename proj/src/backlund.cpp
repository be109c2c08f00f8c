#include "piilab/backlund.hpp"

namespace piilab::backlund {

using exact::parse;
using exact::partial;
using exact::V;
using exact::Var;

namespace {

RationalFunction half(long k) { return RationalFunction(exact::make_rational(k, 2)); }

}  // namespace

RationalFunction derive_pii(const RationalFunction& f) {
    static const RationalFunction ypp = parse("2*y^3 + t*y + alpha");
    return partial(f, Var::t) + V(Var::yp) * partial(f, Var::y) + ypp * partial(f, Var::yp);
}

RationalFunction derive_phase(const RationalFunction& f) {
    static const RationalFunction dq = parse("q^2 + p + t/2");
    static const RationalFunction dp = parse("-2*q*p + c");
    return partial(f, Var::t) + dq * partial(f, Var::q) + dp * partial(f, Var::p);
}

PIIMap t_plus() { return {"T+", parse("-y - (alpha + 1/2)/(yp + y^2 + t/2)"), parse("alpha + 1")}; }
PIIMap t_minus() { return {"T-", parse("-y + (alpha - 1/2)/(yp - y^2 - t/2)"), parse("alpha - 1")}; }
PIIMap i_map() { return {"I", parse("-y"), parse("-alpha")}; }
PIIMap identity_map() { return {"id", parse("y"), parse("alpha")}; }
PIIMap negation_unshifted() { return {"-y", parse("-y"), parse("alpha")}; }

RationalFunction pii_residual(const PIIMap& m) {
    try {
        RationalFunction r2 = derive_pii(derive_pii(m.R));
        return r2 - 2 * m.R.pow(3) - V(Var::t) * m.R - m.g;
    } catch (const Error& e) {
        if (e.code() == ErrorCode::IdenticallyZeroDenominator || e.code() == ErrorCode::DivisionByZero)
            throw Error(ErrorCode::DenominatorVanishes, m.name + ": " + e.what());
        throw;
    }
}

PhaseMap j_map() { return {"J", parse("-q"), parse("-2*q^2 - p - t"), parse("-1 - c")}; }

PhaseMap i_phase_map(const std::optional<Rational>& c0) {
    if (c0 && *c0 == 0) return {"I", V(Var::q), V(Var::p), RationalFunction(0)};
    return {"I", parse("q - c/p"), V(Var::p), parse("-c")};
}

PhaseMap j_unshifted() { return {"J (c kept)", parse("-q"), parse("-2*q^2 - p - t"), V(Var::c)}; }
PhaseMap phase_identity() { return {"id", V(Var::q), V(Var::p), V(Var::c)}; }

PhaseMap compose(const PhaseMap& outer, const PhaseMap& inner) {
    exact::Bindings b = {{Var::q, inner.q}, {Var::p, inner.p}, {Var::c, inner.c}};
    return {outer.name + "*" + inner.name, exact::substitute(outer.q, b), exact::substitute(outer.p, b),
            exact::substitute(outer.c, b)};
}

std::pair<RationalFunction, RationalFunction> phase_residual(const PhaseMap& m, const std::optional<Rational>& c0) {
    try {
        PhaseMap s = m;
        if (c0) {
            exact::Bindings b = {{Var::c, RationalFunction(*c0)}};
            s = {m.name, exact::substitute(m.q, b), exact::substitute(m.p, b), exact::substitute(m.c, b)};
        }
        // Along a solution at parameter c (or c0), the images must solve the system at C.
        auto D = [&](const RationalFunction& f) {
            RationalFunction d = derive_phase(f);
            return c0 ? exact::substitute(d, {{Var::c, RationalFunction(*c0)}}) : d;
        };
        RationalFunction e1 = D(s.q) - (s.q.pow(2) + s.p + V(Var::t) * half(1));
        RationalFunction e2 = D(s.p) - (-2 * s.q * s.p + s.c);
        return {e1, e2};
    } catch (const Error& e) {
        if (e.code() == ErrorCode::IdenticallyZeroDenominator || e.code() == ErrorCode::DivisionByZero)
            throw Error(ErrorCode::DenominatorVanishes, m.name + ": " + e.what());
        throw;
    }
}

std::pair<RationalFunction, RationalFunction> phi_residuals(PhiVariant v) {
    RationalFunction q = V(Var::y);
    RationalFunction p = v == PhiVariant::PlainMomentum ? V(Var::yp) : parse("yp - y^2 - t/2");
    RationalFunction c = v == PhiVariant::UnshiftedParameter ? V(Var::alpha) : parse("alpha - 1/2");
    RationalFunction r1 = derive_pii(q) - (q.pow(2) + p + V(Var::t) * half(1));
    RationalFunction r2 = derive_pii(p) - (-2 * q * p + c);
    return {r1, r2};
}

bool phi_conjugation_check(PhiVariant v) {
    auto [a, b] = phi_residuals(v);
    return a.is_zero() && b.is_zero();
}

std::pair<RationalFunction, RationalFunction> composition_residual() {
    PhaseMap ij = compose(i_phase_map(), j_map());
    exact::Bindings phi = {{Var::q, V(Var::y)}, {Var::p, parse("yp - y^2 - t/2")}, {Var::c, parse("alpha - 1/2")}};
    RationalFunction y_img = exact::substitute(ij.q, phi);
    RationalFunction c_img = exact::substitute(ij.c, phi);
    PIIMap tp = t_plus();
    // The image parameter c + 1 corresponds to alpha + 1 - 1/2.
    return {y_img - tp.R, c_img - (tp.g - half(1))};
}

InvariantCurveResult invariant_curve_test(const Polynomial& f, const Rational& c0) {
    if (f.is_zero()) throw Error(ErrorCode::InvalidArgument, "invariant curve test needs a nonzero polynomial");
    RationalFunction d = exact::substitute(derive_phase(RationalFunction(f)), {{Var::c, RationalFunction(c0)}});
    Polynomial fs = f.specialize(Var::c, c0);
    Polynomial dp = exact::as_polynomial(d);
    auto q = exact::divide_exact(dp, fs);
    if (!q) return {false, Polynomial()};
    return {true, *q};
}

std::array<RationalFunction, 4> quadric_map(QuadricMap which) {
    if (which == QuadricMap::F1)
        return {RationalFunction(1), parse("y1*(c - y1*z1)"), parse("2*y1*z1 - c"), V(Var::z1)};
    return {RationalFunction(1), V(Var::z3), parse("c - 2*y3*z3"), parse("y3*(c - y3*z3)")};
}

RationalFunction quadric_residual(QuadricMap which, QuadricSign sign) {
    auto x = quadric_map(which);
    RationalFunction c2 = V(Var::c).pow(2);
    if (sign == QuadricSign::Corrected) return 4 * x[1] * x[3] + x[2].pow(2) - c2 * x[0].pow(2);
    return 4 * x[1] * x[3] - x[2].pow(2) + c2 * x[0].pow(2);
}

RationalFunction quadric_literal_witness() { return parse("8*y1*z1*(c - y1*z1)"); }

}  // namespace piilab::backlund
