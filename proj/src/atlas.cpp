#include "piilab/atlas.hpp"

#include "piilab/blowup.hpp"

namespace piilab::atlas {

using exact::parse;
using exact::partial;
using exact::substitute;
using exact::V;

namespace {

RationalFunction det2(const RationalFunction& a, const RationalFunction& b, const RationalFunction& c,
                      const RationalFunction& d) {
    return a * d - b * c;
}

// W12 -> W3 shear term added to z12.
RationalFunction shear(Perturbation pert) {
    switch (pert) {
        case Perturbation::None: return parse("(2*c + 1)/y12 + t/y12^2 + 2/y12^4");
        case Perturbation::QuarticTerm: return parse("(2*c + 1)/y12 + t/y12^2 + 1/y12^4");
        case Perturbation::ParameterFlip: return parse("(2*(-1 - c) + 1)/y12 + t/y12^2 + 2/y12^4");
    }
    return {};
}

Transition direct(ChartId from, ChartId to, Perturbation pert) {
    if (from == ChartId::W1 && to == ChartId::W3) return {from, to, parse("1/y1"), parse("c*y1 - y1^2*z1")};
    if (from == ChartId::W3 && to == ChartId::W1) return {from, to, parse("1/y3"), parse("y3*(c - y3*z3)")};
    if (from == ChartId::W12 && to == ChartId::W3) return {from, to, V(Var::y12), V(Var::z12) + shear(pert)};
    if (from == ChartId::W3 && to == ChartId::W12) {
        exact::Bindings b = {{Var::y12, V(Var::y3)}};
        return {from, to, V(Var::y3), V(Var::z3) - substitute(shear(pert), b)};
    }
    throw Error(ErrorCode::InvalidArgument, "no direct transition");
}

Transition chain(const Transition& first, const Transition& second) {
    auto [y, z] = chart_vars(first.to);
    exact::Bindings b = {{y, first.y}, {z, first.z}};
    return {first.from, second.to, substitute(second.y, b), substitute(second.z, b)};
}

}  // namespace

const char* chart_name(ChartId c) {
    switch (c) {
        case ChartId::W1: return "W1";
        case ChartId::W3: return "W3";
        case ChartId::W12: return "W12";
    }
    return "?";
}

ChartId parse_chart(const std::string& s) {
    for (ChartId c : kCharts)
        if (s == chart_name(c)) return c;
    throw Error(ErrorCode::InvalidArgument, "unknown chart '" + s + "'");
}

std::pair<Var, Var> chart_vars(ChartId c) {
    switch (c) {
        case ChartId::W1: return {Var::y1, Var::z1};
        case ChartId::W3: return {Var::y3, Var::z3};
        case ChartId::W12: return {Var::y12, Var::z12};
    }
    throw Error(ErrorCode::InvalidArgument, "bad chart");
}

Transition transition(ChartId from, ChartId to, Perturbation pert) {
    if (from == to) throw Error(ErrorCode::InvalidArgument, "transition needs distinct charts");
    if (from == ChartId::W1 && to == ChartId::W12)
        return chain(direct(ChartId::W1, ChartId::W3, pert), direct(ChartId::W3, ChartId::W12, pert));
    if (from == ChartId::W12 && to == ChartId::W1)
        return chain(direct(ChartId::W12, ChartId::W3, pert), direct(ChartId::W3, ChartId::W1, pert));
    return direct(from, to, pert);
}

std::pair<Rational, Rational> transition_at(const Transition& tr, const Rational& y, const Rational& z,
                                            const Rational& t, const Rational& c) {
    auto [vy, vz] = chart_vars(tr.from);
    exact::Bindings b = {{vy, RationalFunction(y)}, {vz, RationalFunction(z)},
                         {Var::t, RationalFunction(t)}, {Var::c, RationalFunction(c)}};
    return {substitute(tr.y, b).constant_value(), substitute(tr.z, b).constant_value()};
}

RationalFunction pull_back(const RationalFunction& f, ChartId in, ChartId of) {
    if (in == of) return f;
    Transition tr = transition(in, of);
    auto [y, z] = chart_vars(of);
    return substitute(f, {{y, tr.y}, {z, tr.z}});
}

Transition stated_rule_w12_w1() {
    return {ChartId::W12, ChartId::W1, parse("1/y12"), parse("-2/y12^2 - t - (c + 1)*y12 - y12^2*z12")};
}

bool consistency_check(Perturbation pert) {
    Transition composed = transition(ChartId::W12, ChartId::W1, pert);
    Transition rule = stated_rule_w12_w1();
    return composed.y == rule.y && composed.z == rule.z;
}

bool round_trip_is_identity(ChartId a, ChartId b) {
    Transition there = transition(a, b), back = transition(b, a);
    Transition both = chain(there, back);
    auto [y, z] = chart_vars(a);
    return both.y == V(y) && both.z == V(z);
}

RationalFunction jacobian_det(ChartId from, ChartId to) {
    Transition tr = transition(from, to);
    auto [y, z] = chart_vars(from);
    return det2(partial(tr.y, y), partial(tr.y, z), partial(tr.z, y), partial(tr.z, z));
}

Polynomial hamiltonian(ChartId c) {
    static const RationalFunction h1 = parse("y1^2*z1 + z1^2/2 + t*z1/2 - c*y1");
    switch (c) {
        case ChartId::W1: return exact::as_polynomial(h1);
        case ChartId::W3: return exact::as_polynomial(pull_back(h1, ChartId::W3, ChartId::W1));
        case ChartId::W12: {
            RationalFunction h3 = hamiltonian(ChartId::W3);
            return exact::as_polynomial(pull_back(h3, ChartId::W12, ChartId::W3) - parse("1/y12"));
        }
    }
    throw Error(ErrorCode::InvalidArgument, "bad chart");
}

HamiltonianSet standard_hamiltonians() {
    return {hamiltonian(ChartId::W1), hamiltonian(ChartId::W3), hamiltonian(ChartId::W12)};
}

std::string RelTwoForm::to_string() const {
    return "(" + dydz.to_string() + ") dy^dz + (" + dydt.to_string() + ") dy^dt + (" + dzdt.to_string() + ") dz^dt";
}

std::string OneForm::to_string() const { return "(" + dy.to_string() + ") dy + (" + dz.to_string() + ") dz"; }

RelTwoForm glue_residual(ChartId from, ChartId to, const HamiltonianSet& h) {
    Transition tr = transition(from, to);
    auto [y, z] = chart_vars(from);
    const Var t = Var::t;
    RationalFunction Yy = partial(tr.y, y), Yz = partial(tr.y, z), Yt = partial(tr.y, t);
    RationalFunction Zy = partial(tr.z, y), Zz = partial(tr.z, z), Zt = partial(tr.z, t);
    RationalFunction Hto = pull_back(h[static_cast<int>(to)], from, to);
    const RationalFunction& Hfrom = h[static_cast<int>(from)];
    RelTwoForm r;
    r.dydz = det2(Yy, Yz, Zy, Zz) - 1;
    r.dydt = det2(Yy, Yt, Zy, Zt) + partial(Hto, y) - partial(Hfrom, y);
    r.dzdt = det2(Yz, Yt, Zz, Zt) + partial(Hto, z) - partial(Hfrom, z);
    return r;
}

OneForm ks_cocycle(ChartId i, ChartId j) {
    RationalFunction diff = pull_back(hamiltonian(i), j, i) - hamiltonian(j);
    auto [y, z] = chart_vars(j);
    return {partial(diff, y), partial(diff, z)};
}

OneForm transport_form(const OneForm& w, ChartId from, ChartId to) {
    if (from == to) return w;
    Transition tr = transition(to, from);  // coordinates of `from` in those of `to`
    auto [fy, fz] = chart_vars(from);
    exact::Bindings b = {{fy, tr.y}, {fz, tr.z}};
    RationalFunction a = substitute(w.dy, b), c = substitute(w.dz, b);
    auto [y, z] = chart_vars(to);
    return {a * partial(tr.y, y) + c * partial(tr.z, y), a * partial(tr.y, z) + c * partial(tr.z, z)};
}

std::pair<Polynomial, Polynomial> vector_field(ChartId c) {
    Polynomial h = hamiltonian(c);
    auto [y, z] = chart_vars(c);
    return {h.derivative(z), -h.derivative(y)};
}

bool involution_check(InvolutionVariant v) {
    RationalFunction c_img = v == InvolutionVariant::Exact ? parse("-(c + 1)") : parse("-c");
    exact::Bindings sigma = {{Var::y1, parse("-y1")}, {Var::z1, parse("-(z1 + 2*y1^2 + t)")}, {Var::c, c_img}};
    Transition to3 = transition(ChartId::W1, ChartId::W3), to12 = transition(ChartId::W1, ChartId::W12);
    // W12 data at c against W3 data at the image parameter, and the reverse.
    bool a = to12.y == -substitute(to3.y, sigma) && to12.z == -substitute(to3.z, sigma);
    bool b = to3.y == -substitute(to12.y, sigma) && to3.z == -substitute(to12.z, sigma);
    return a && b;
}

bool involution_squares_to_identity() {
    exact::Bindings sigma = {{Var::y1, parse("-y1")}, {Var::z1, parse("-(z1 + 2*y1^2 + t)")}, {Var::c, parse("-(c + 1)")}};
    for (Var v : {Var::y1, Var::z1, Var::c}) {
        RationalFunction once = substitute(V(v), sigma);
        if (substitute(once, sigma) != V(v)) return false;
    }
    return true;
}

RationalFunction blown_up_form_coefficient() {
    // omega = dy3^dz3; W3 from W4 is y3 = y4, z3 = 1/z4, then y4 = Y z, z4 = z.
    exact::Bindings w4 = {{Var::y4, V(Var::Y) * V(Var::z)}, {Var::z4, V(Var::z)}};
    RationalFunction y3 = substitute(V(Var::y4), w4);
    RationalFunction z3 = substitute(RationalFunction(1) / V(Var::z4), w4);
    return det2(partial(y3, Var::Y), partial(y3, Var::z), partial(z3, Var::Y), partial(z3, Var::z));
}

namespace {

// Y-coordinate where a curve meets the exceptional curve z = 0 of the blown-up W4 chart.
Rational exceptional_point(const blowup::CurveSpec& curve, const Rational& c) {
    Polynomial f = blowup::transport(curve.poly.specialize(Var::c, c), curve.chart, blowup::Z0Chart::W4,
                                     RationalFunction(c));
    Polynomial g = exact::as_polynomial(substitute(f, {{Var::y4, V(Var::Y) * V(Var::z)}, {Var::z4, V(Var::z)}}));
    g = *exact::divide_exact(g, Polynomial::variable(Var::z, g.min_degree(Var::z)));
    Polynomial on_e = g.specialize(Var::z, 0);
    auto co = on_e.coefficients(Var::Y);
    if (co.size() != 2 || !co[0].is_constant() || !co[1].is_constant())
        throw Error(ErrorCode::Internal, curve.name + " does not meet the exceptional curve in one point");
    return -co[0].constant_value() / co[1].constant_value();
}

}  // namespace

Rational period_c2_minus_c1(const Rational& c) {
    RationalFunction coef = blown_up_form_coefficient();
    // Simple pole along z = 0; the residue is a polynomial in Y.
    Polynomial residue = exact::as_polynomial(coef * V(Var::z)).specialize(Var::z, 0);
    Rational from = exceptional_point(blowup::curve_C2(), c);
    Rational to = exceptional_point(blowup::curve_C1(), c);
    Rational total = 0;
    auto co = residue.coefficients(Var::Y);
    for (std::size_t k = 0; k < co.size(); ++k) {
        Rational a = co[k].constant_value() / Rational(static_cast<long>(k + 1));
        mpq_class pt = 1, pf = 1;
        for (std::size_t e = 0; e <= k; ++e) {
            pt *= to;
            pf *= from;
        }
        total += a * (pt - pf);
    }
    return total;
}

Rational period_c4_minus_c3(const Rational& c) { return period_c2_minus_c1(-1 - c); }

}  // namespace piilab::atlas
