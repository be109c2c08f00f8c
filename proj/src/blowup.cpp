#include "piilab/blowup.hpp"

#include <json.hpp>
#include <map>

namespace piilab::blowup {

using exact::Bindings;
using exact::parse_poly;
using exact::Polynomial;
using exact::Rational;
using exact::RationalFunction;
using exact::V;
using exact::Var;
using lattice::DivisorClass;

namespace {

struct ChartVars {
    Var y, z;
};

ChartVars chart_vars(Z0Chart c) {
    switch (c) {
        case Z0Chart::W1: return {Var::y1, Var::z1};
        case Z0Chart::W2: return {Var::y2, Var::z2};
        case Z0Chart::W3: return {Var::y3, Var::z3};
        case Z0Chart::W4: return {Var::y4, Var::z4};
    }
    throw Error(ErrorCode::InvalidArgument, "bad chart");
}

// Position on the gluing path W2 - W1 - W3 - W4.
int path_index(Z0Chart c) {
    switch (c) {
        case Z0Chart::W2: return 0;
        case Z0Chart::W1: return 1;
        case Z0Chart::W3: return 2;
        case Z0Chart::W4: return 3;
    }
    return -1;
}

Z0Chart path_chart(int i) {
    static const Z0Chart order[] = {Z0Chart::W2, Z0Chart::W1, Z0Chart::W3, Z0Chart::W4};
    return order[i];
}

Polynomial strip_power(const Polynomial& f, Var v) {
    unsigned k = f.min_degree(v);
    if (k == 0) return f;
    return *exact::divide_exact(f, Polynomial::variable(v, k));
}

// One gluing step between adjacent charts: the source coordinates in terms of
// the target ones, and the target coordinate that was inverted.
Polynomial glue_step(const Polynomial& f, Z0Chart from, Z0Chart to, const RationalFunction& c) {
    Bindings b;
    Var strip;
    const RationalFunction one(1);
    if (from == Z0Chart::W1 && to == Z0Chart::W2) {
        b = {{Var::y1, V(Var::y2)}, {Var::z1, one / V(Var::z2)}};
        strip = Var::z2;
    } else if (from == Z0Chart::W2 && to == Z0Chart::W1) {
        b = {{Var::y2, V(Var::y1)}, {Var::z2, one / V(Var::z1)}};
        strip = Var::z1;
    } else if (from == Z0Chart::W1 && to == Z0Chart::W3) {
        b = {{Var::y1, one / V(Var::y3)}, {Var::z1, V(Var::y3) * (c - V(Var::y3) * V(Var::z3))}};
        strip = Var::y3;
    } else if (from == Z0Chart::W3 && to == Z0Chart::W1) {
        b = {{Var::y3, one / V(Var::y1)}, {Var::z3, c * V(Var::y1) - V(Var::y1).pow(2) * V(Var::z1)}};
        strip = Var::y1;
    } else if (from == Z0Chart::W3 && to == Z0Chart::W4) {
        b = {{Var::y3, V(Var::y4)}, {Var::z3, one / V(Var::z4)}};
        strip = Var::z4;
    } else if (from == Z0Chart::W4 && to == Z0Chart::W3) {
        b = {{Var::y4, V(Var::y3)}, {Var::z4, one / V(Var::z3)}};
        strip = Var::z3;
    } else {
        throw Error(ErrorCode::InvalidArgument, "charts are not adjacent");
    }
    return strip_power(exact::substitute(f, b).num(), strip);
}

RationalFunction regime_c(Regime r) {
    switch (r) {
        case Regime::Generic: return V(Var::c);
        case Regime::CZero: return RationalFunction(0);
        case Regime::CMinusOne: return RationalFunction(-1);
    }
    return V(Var::c);
}

bool is_section_S(const CurveSpec& curve, const Polynomial& f) {
    auto [y, z] = chart_vars(curve.chart);
    if (curve.chart != Z0Chart::W2 && curve.chart != Z0Chart::W4) return false;
    (void)y;
    return f.is_monomial() && f.total_degree() == 1 && f.degree(z) == 1;
}

}  // namespace

const char* regime_name(Regime r) {
    switch (r) {
        case Regime::Generic: return "generic";
        case Regime::CZero: return "c0";
        case Regime::CMinusOne: return "cm1";
    }
    return "?";
}

Regime parse_regime(const std::string& s) {
    if (s == "generic") return Regime::Generic;
    if (s == "c0" || s == "c=0") return Regime::CZero;
    if (s == "cm1" || s == "c=-1") return Regime::CMinusOne;
    throw Error(ErrorCode::InvalidArgument, "unknown regime '" + s + "' (expected generic, c0 or cm1)");
}

const std::vector<BlowupStep>& chain() {
    static const std::vector<BlowupStep> steps = {
        {Var::y4, Var::z4, Var::y5, Var::z5, RationalFunction(0)},
        {Var::y5, Var::z5, Var::y6, Var::z6, RationalFunction(0)},
        {Var::y6, Var::z6, Var::y7, Var::z7, RationalFunction(0)},
        {Var::y7, Var::z7, Var::y8, Var::z8, RationalFunction(0)},
        {Var::y8, Var::v8, Var::y9, Var::z9, RationalFunction(2)},
        {Var::y9, Var::z9, Var::y10, Var::z10, RationalFunction(0)},
        {Var::y10, Var::z10, Var::y11, Var::z11, V(Var::t)},
        {Var::y11, Var::z11, Var::y12, Var::z12, 2 * V(Var::c) + 1},
    };
    return steps;
}

Polynomial specialize(const Polynomial& p, Regime regime) {
    switch (regime) {
        case Regime::Generic: return p;
        case Regime::CZero: return p.specialize(Var::c, 0);
        case Regime::CMinusOne: return p.specialize(Var::c, -1);
    }
    return p;
}

Polynomial transport(const Polynomial& f, Z0Chart from, Z0Chart to, const RationalFunction& c) {
    int i = path_index(from), j = path_index(to);
    Polynomial g = f;
    while (i != j) {
        int next = i < j ? i + 1 : i - 1;
        g = glue_step(g, path_chart(i), path_chart(next), c);
        i = next;
    }
    return g;
}

void check_usable(const CurveSpec& curve, Regime regime) {
    Polynomial f = specialize(curve.poly, regime);
    if (f.is_zero() || f.is_constant())
        throw Error(ErrorCode::InvalidArgument, curve.name + ": equation is constant in regime " + regime_name(regime));
    Polynomial g = f;
    for (Var v : f.variables()) {
        g = exact::gcd(g, f.derivative(v));
        if (g.is_constant()) break;
    }
    if (!g.is_constant())
        throw Error(ErrorCode::NotSquarefree, curve.name + ": repeated factor " + g.to_string());
    auto [y, z] = chart_vars(curve.chart);
    for (Var v : {y, z}) {
        if (!f.depends_on(v)) continue;
        Polynomial cont = exact::content(f, v);
        if (cont.depends_on(y) || cont.depends_on(z))
            throw Error(ErrorCode::RegimeSplit, curve.name + " splits in regime " + regime_name(regime) +
                                                    " (factor " + cont.to_string() + ")");
    }
}

int origin_order(const Polynomial& f, Var y, Var z) {
    if (f.is_zero()) throw Error(ErrorCode::InvalidArgument, "order of the zero polynomial");
    int best = -1;
    for (auto& [e, c] : f.terms()) {
        int d = e[exact::idx(y)] + e[exact::idx(z)];
        if (best < 0 || d < best) best = d;
    }
    return best;
}

Multiplicities multiplicities(const CurveSpec& curve, Regime regime) {
    check_usable(curve, regime);
    Multiplicities m{};
    RationalFunction c = regime_c(regime);
    Polynomial f = transport(specialize(curve.poly, regime), curve.chart, Z0Chart::W4, c);
    if (f.is_constant()) return m;  // never meets W4
    const auto& steps = chain();
    for (std::size_t k = 0; k < steps.size(); ++k) {
        if (k == 4) {
            unsigned d = f.degree(Var::z8);
            f = exact::as_polynomial(exact::substitute(f, {{Var::z8, RationalFunction(1) / V(Var::v8)}}) *
                                     RationalFunction(Polynomial::variable(Var::v8, d)));
            if (f.min_degree(Var::v8) != 0)
                throw Error(ErrorCode::Internal, curve.name + ": inversion absorbed a component");
        }
        const auto& st = steps[k];
        RationalFunction z0 = exact::substitute(st.centre_z, {{Var::c, c}});
        Polynomial shifted = exact::as_polynomial(exact::substitute(f, {{st.z_from, V(st.z_from) + z0}}));
        m[k] = origin_order(shifted, st.y_from, st.z_from);
        f = exact::as_polynomial(
            exact::substitute(f, {{st.y_from, V(st.y_to)}, {st.z_from, z0 + V(st.y_to) * V(st.z_to)}}));
        if (f.min_degree(st.y_to) != static_cast<unsigned>(m[k]))
            throw Error(ErrorCode::Internal, curve.name + ": exceptional factor does not match the multiplicity");
        f = strip_power(f, st.y_to);
    }
    return m;
}

std::pair<std::int64_t, std::int64_t> base_class(const CurveSpec& curve, Regime regime) {
    check_usable(curve, regime);
    Polynomial f = specialize(curve.poly, regime);
    if (is_section_S(curve, f)) return {1, 0};
    RationalFunction c = regime_c(regime);

    Polynomial f1 = transport(f, curve.chart, Z0Chart::W1, c);
    std::int64_t a = f1.is_constant() ? 0 : f1.degree(Var::z1);

    // Intersection with S: all points of S in W2, plus the point y4 = 0 of W4.
    Polynomial f2 = transport(f, curve.chart, Z0Chart::W2, c);
    Polynomial r2 = exact::resultant(f2, Polynomial::variable(Var::z2), Var::z2);
    Polynomial f4 = transport(f, curve.chart, Z0Chart::W4, c);
    Polynomial r4 = exact::resultant(f4, Polynomial::variable(Var::z4), Var::z4);
    if (r2.is_zero() || r4.is_zero())
        throw Error(ErrorCode::InvalidArgument, curve.name + " contains the section S");
    std::int64_t with_s = r2.degree(Var::y2) + r4.min_degree(Var::y4);
    return {a, with_s - 2 * a};
}

DivisorClass total_class(const CurveSpec& curve, Regime regime) {
    auto [a, b] = base_class(curve, regime);
    Multiplicities m = multiplicities(curve, regime);
    DivisorClass cls = a * DivisorClass::S() + b * DivisorClass::f();
    for (int i = 0; i < curve.tracked_centres; ++i) cls -= m[i] * DivisorClass::E(i + 1);
    return cls;
}

int local_intersection_at_origin(const Polynomial& f, const Polynomial& g, Var y, Var z) {
    Polynomial r = exact::resultant(f, g, z);
    if (r.is_zero()) throw Error(ErrorCode::InvalidArgument, "curves share a component");
    return static_cast<int>(r.min_degree(y));
}

CurveSpec curve_C1() { return {"C1", Z0Chart::W4, parse_poly("y4")}; }
CurveSpec curve_C2() { return {"C2", Z0Chart::W3, parse_poly("y3*z3 - c")}; }
CurveSpec curve_C2prime() { return {"C2prime", Z0Chart::W1, parse_poly("z1")}; }
CurveSpec curve_C4() { return {"C4", Z0Chart::W1, parse_poly("2*y1^2 + z1 + t"), 7}; }
CurveSpec curve_C4prime() { return {"C4prime", Z0Chart::W1, parse_poly("2*y1^2 + z1 + t")}; }
CurveSpec curve_C5() { return {"C5", Z0Chart::W1, parse_poly("y1*z1 - c")}; }
CurveSpec curve_C6() { return {"C6", Z0Chart::W1, parse_poly("2*y1^3 + t*y1 + y1*z1 + c + 1")}; }
CurveSpec curve_S() { return {"S", Z0Chart::W4, parse_poly("z4")}; }
CurveSpec curve_fibre_y1() { return {"fibre", Z0Chart::W1, parse_poly("y1")}; }

lattice::NamedClassRegistry build_registry(Regime regime) {
    lattice::NamedClassRegistry reg;
    for (int i = 0; i <= 7; ++i) reg.set("D" + std::to_string(i), lattice::D(i));
    reg.set("C1", total_class(curve_C1(), regime));
    if (regime == Regime::CZero) {
        DivisorClass c2p = total_class(curve_C2prime(), regime);
        reg.set("C2prime", c2p);
        reg.set("C2", c2p + reg.get("C1"));
        reg.set("C5", total_class(curve_fibre_y1(), regime) + c2p);
    } else {
        reg.set("C2", total_class(curve_C2(), regime));
        reg.set("C5", total_class(curve_C5(), regime));
    }
    reg.set("C3", DivisorClass::E(8));
    reg.set("C4", total_class(curve_C4(), regime));
    if (regime == Regime::CMinusOne) {
        DivisorClass c4p = total_class(curve_C4prime(), regime);
        reg.set("C4prime", c4p);
        reg.set("C6", total_class(curve_fibre_y1(), regime) + c4p);
    } else {
        reg.set("C6", total_class(curve_C6(), regime));
    }
    reg.set("F", lattice::anticanonical());
    reg.set("K", lattice::canonical());
    reg.set("S", DivisorClass::S());
    reg.set("f", DivisorClass::f());
    return reg;
}

const std::vector<Claim>& stated_claims() {
    static const std::vector<Claim> claims = [] {
        std::vector<Claim> v;
        auto add = [&](Regime r, std::string a, std::string b, std::int64_t val, std::string src, bool allow = false) {
            v.push_back({r, std::move(a), std::move(b), val, std::move(src), allow});
        };
        const auto G = Regime::Generic, Z = Regime::CZero, M = Regime::CMinusOne;
        const std::string base = "ruled surface intersection", sq = "self-intersection",
                          fig = "boundary configuration", lem = "curve intersection lemma";
        // Before blowing up.
        add(G, "C1^0", "C1^0", 0, base);
        add(G, "C2^0", "C2^0", 0, base);
        add(G, "C4^0", "C4^0", 6, base);
        add(G, "C6^0", "C6^0", 8, base);
        add(G, "C6^0", "S", 5, base);
        add(G, "C6^0", "C1^0", 1, base);
        add(G, "C2^0", "C4^0", 3, base);
        // c generic: first pair of sections.
        add(G, "C1", "C1", -1, sq);
        add(G, "C2", "C2", -1, sq);
        add(G, "C1", "C2", 0, lem);
        for (int i = 0; i <= 7; ++i) {
            add(G, "C1", "D" + std::to_string(i), i == 1 ? 1 : 0, fig);
            add(G, "C2", "D" + std::to_string(i), i == 1 ? 1 : 0, fig);
        }
        // c = 0.
        add(Z, "C1", "C1", -1, sq);
        add(Z, "C2prime", "C2prime", -2, sq);
        add(Z, "C1", "C2prime", 1, lem);
        for (int i = 0; i <= 7; ++i) {
            add(Z, "C1", "D" + std::to_string(i), i == 1 ? 1 : 0, fig);
            add(Z, "C2prime", "D" + std::to_string(i), 0, fig);
        }
        // C3, C4.
        add(G, "C3", "C3", -1, sq);
        add(G, "C4", "C4", -1, sq);
        add(G, "C3", "C4", 0, lem);
        for (int i = 0; i <= 7; ++i) {
            add(G, "C3", "D" + std::to_string(i), i == 7 ? 1 : 0, fig);
            add(G, "C4", "D" + std::to_string(i), i == 7 ? 1 : 0, fig);
        }
        // c = -1.
        add(M, "C3", "C3", -1, sq);
        add(M, "C4", "C4", -1, sq);
        add(M, "C4prime", "C4prime", -2, sq);
        add(M, "C3", "C4prime", 1, lem);
        for (int i = 0; i <= 7; ++i) {
            add(M, "C3", "D" + std::to_string(i), i == 7 ? 1 : 0, fig);
            add(M, "C4prime", "D" + std::to_string(i), 0, fig);
        }
        // Mixed pairs.
        add(G, "C1", "C3", 0, lem);
        add(G, "C1", "C4", 0, lem);
        add(G, "C2", "C3", 0, lem);
        add(G, "C2", "C4", 2, lem);
        // C5.
        add(G, "C5", "D0", 1, lem);
        add(G, "C5", "C1", 1, lem);
        add(G, "C5", "C2", 0, lem);
        add(G, "C5", "C3", 0, lem);
        add(G, "C5", "C4", 3, lem);
        for (int i = 2; i <= 7; ++i) add(G, "C5", "D" + std::to_string(i), 0, lem);
        add(G, "C5", "D1", 1, lem, true);
        // C6.
        add(G, "C6", "C6", 0, sq);
        add(G, "C6", "D0", 1, lem);
        add(G, "C6", "C1", 0, lem);
        add(G, "C6", "C2", 3, lem);
        add(G, "C6", "C3", 1, lem);
        add(G, "C6", "C4", 0, lem);
        for (int i = 1; i <= 6; ++i) add(G, "C6", "D" + std::to_string(i), 0, lem);
        add(G, "C6", "D7", 1, lem, true);
        return v;
    }();
    return claims;
}

std::vector<ClaimResult> verify_intersection_table() {
    std::map<Regime, lattice::NamedClassRegistry> regs;
    for (Regime r : {Regime::Generic, Regime::CZero, Regime::CMinusOne}) regs.emplace(r, build_registry(r));
    auto base = [](const CurveSpec& c) {
        auto [a, b] = base_class(c, Regime::Generic);
        return a * DivisorClass::S() + b * DivisorClass::f();
    };
    std::map<std::string, DivisorClass> base_classes = {
        {"C1^0", base(curve_C1())}, {"C2^0", base(curve_C2())}, {"C4^0", base(curve_C4())},
        {"C6^0", base(curve_C6())}, {"S", DivisorClass::S()},
    };
    auto lookup = [&](Regime r, const std::string& name) -> DivisorClass {
        if (name.find("^0") != std::string::npos || name == "S") return base_classes.at(name);
        return regs.at(r).get(name);
    };
    std::vector<ClaimResult> out;
    for (auto& cl : stated_claims()) {
        std::int64_t v = lattice::pair(lookup(cl.regime, cl.a), lookup(cl.regime, cl.b));
        ClaimResult::Status st = v == cl.stated ? ClaimResult::Status::Match
                                 : cl.allowlisted ? ClaimResult::Status::KnownDiscrepancy
                                                  : ClaimResult::Status::Mismatch;
        out.push_back({cl, v, st});
    }
    return out;
}

std::string discrepancy_json(const std::vector<ClaimResult>& results) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (auto& r : results) {
        if (r.status == ClaimResult::Status::Match) continue;
        arr.push_back({{"curve_pair", "(" + r.claim.a + "." + r.claim.b + ")"},
                       {"regime", regime_name(r.claim.regime)},
                       {"computed", r.computed},
                       {"paper_value", r.claim.stated},
                       {"paper_ref", r.claim.source},
                       {"allowlisted", r.claim.allowlisted}});
    }
    return arr.dump(2);
}

}  // namespace piilab::blowup
