#include "piilab/flow.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace piilab::flow {

using exact::Var;

CompiledPolynomial::CompiledPolynomial(const exact::Polynomial& p, Var y, Var z) {
    const std::array<Var, 4> vars = {y, z, Var::t, Var::c};
    for (auto& [e, coeff] : p.terms()) {
        Term term{coeff.get_d(), {}};
        for (std::size_t k = 0; k < exact::kNumVars; ++k) {
            if (e[k] == 0) continue;
            auto it = std::find(vars.begin(), vars.end(), static_cast<Var>(k));
            if (it == vars.end())
                throw Error(ErrorCode::InvalidArgument,
                            "cannot compile: unexpected variable " + std::string(exact::var_name(static_cast<Var>(k))));
            term.e[it - vars.begin()] = e[k];
        }
        terms_.push_back(term);
    }
}

double CompiledPolynomial::operator()(double y, double z, double t, double c) const {
    const double x[4] = {y, z, t, c};
    double sum = 0;
    for (auto& term : terms_) {
        double v = term.coeff;
        for (int k = 0; k < 4; ++k)
            for (unsigned r = 0; r < term.e[k]; ++r) v *= x[k];
        sum += v;
    }
    return sum;
}

std::optional<double> CompiledRational::operator()(double y, double z, double t, double c) const {
    double d = den(y, z, t, c);
    if (d == 0) return std::nullopt;
    double v = num(y, z, t, c) / d;
    if (!std::isfinite(v)) return std::nullopt;
    return v;
}

namespace {

struct CompiledField {
    CompiledPolynomial dy, dz;
};

const CompiledField& field(ChartId chart) {
    static const std::array<CompiledField, 3> fields = [] {
        std::array<CompiledField, 3> out;
        for (ChartId c : atlas::kCharts) {
            auto [fy, fz] = atlas::vector_field(c);
            auto [y, z] = atlas::chart_vars(c);
            out[static_cast<int>(c)] = {CompiledPolynomial(fy, y, z), CompiledPolynomial(fz, y, z)};
        }
        return out;
    }();
    return fields[static_cast<int>(chart)];
}

struct CompiledTransition {
    CompiledRational y, z;
};

const CompiledTransition& compiled_transition(ChartId from, ChartId to) {
    static const std::map<std::pair<ChartId, ChartId>, CompiledTransition> table = [] {
        std::map<std::pair<ChartId, ChartId>, CompiledTransition> out;
        for (ChartId a : atlas::kCharts)
            for (ChartId b : atlas::kCharts) {
                if (a == b) continue;
                auto tr = atlas::transition(a, b);
                auto [y, z] = atlas::chart_vars(a);
                out[{a, b}] = {{CompiledPolynomial(tr.y.num(), y, z), CompiledPolynomial(tr.y.den(), y, z)},
                               {CompiledPolynomial(tr.z.num(), y, z), CompiledPolynomial(tr.z.den(), y, z)}};
            }
        return out;
    }();
    return table.at({from, to});
}

double size_of(double y, double z) { return std::max(std::abs(y), std::abs(z)); }

// Dormand-Prince 5(4) tableau.
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;

struct StepResult {
    double y, z, err;
    bool finite;
};

StepResult dp_step(ChartId chart, double y, double z, double t, double h, double c, const IntegratorConfig& cfg) {
    auto f = [&](double yy, double zz, double tt) { return vector_field(chart, yy, zz, tt, c); };
    auto k1 = f(y, z, t);
    auto k2 = f(y + h * a21 * k1[0], z + h * a21 * k1[1], t + c2 * h);
    auto k3 = f(y + h * (a31 * k1[0] + a32 * k2[0]), z + h * (a31 * k1[1] + a32 * k2[1]), t + c3 * h);
    auto k4 = f(y + h * (a41 * k1[0] + a42 * k2[0] + a43 * k3[0]), z + h * (a41 * k1[1] + a42 * k2[1] + a43 * k3[1]),
                t + c4 * h);
    auto k5 = f(y + h * (a51 * k1[0] + a52 * k2[0] + a53 * k3[0] + a54 * k4[0]),
                z + h * (a51 * k1[1] + a52 * k2[1] + a53 * k3[1] + a54 * k4[1]), t + c5 * h);
    auto k6 = f(y + h * (a61 * k1[0] + a62 * k2[0] + a63 * k3[0] + a64 * k4[0] + a65 * k5[0]),
                z + h * (a61 * k1[1] + a62 * k2[1] + a63 * k3[1] + a64 * k4[1] + a65 * k5[1]), t + h);
    double yn = y + h * (b1 * k1[0] + b3 * k3[0] + b4 * k4[0] + b5 * k5[0] + b6 * k6[0]);
    double zn = z + h * (b1 * k1[1] + b3 * k3[1] + b4 * k4[1] + b5 * k5[1] + b6 * k6[1]);
    auto k7 = f(yn, zn, t + h);
    double ey = h * (e1 * k1[0] + e3 * k3[0] + e4 * k4[0] + e5 * k5[0] + e6 * k6[0] + e7 * k7[0]);
    double ez = h * (e1 * k1[1] + e3 * k3[1] + e4 * k4[1] + e5 * k5[1] + e6 * k6[1] + e7 * k7[1]);
    double sy = cfg.atol + cfg.rtol * std::max(std::abs(y), std::abs(yn));
    double sz = cfg.atol + cfg.rtol * std::max(std::abs(z), std::abs(zn));
    double err = std::sqrt(0.5 * ((ey / sy) * (ey / sy) + (ez / sz) * (ez / sz)));
    bool finite = std::isfinite(yn) && std::isfinite(zn) && std::isfinite(err);
    return {yn, zn, err, finite};
}

// Moves the state to a better chart once it leaves the R-box.
void maybe_switch(FlowState& s, double c, const IntegratorConfig& cfg, Trajectory& tr, bool& switched) {
    switched = false;
    if (size_of(s.y, s.z) <= cfg.R) return;
    ChartId best = best_chart(s, c);
    if (best == s.chart) return;
    auto to = map_point(s.chart, best, s.y, s.z, s.t, c);
    if (!to) throw Error(ErrorCode::Internal, "chart switch target lost");
    tr.switches.push_back({s.t, s.chart, best, s.y, s.z, to->first, to->second});
    s = {best, to->first, to->second, s.t};
    switched = true;
}

}  // namespace

std::array<double, 2> vector_field(ChartId chart, double y, double z, double t, double c) {
    const auto& f = field(chart);
    return {f.dy(y, z, t, c), f.dz(y, z, t, c)};
}

std::optional<std::pair<double, double>> map_point(ChartId from, ChartId to, double y, double z, double t,
                                                   double c) {
    if (from == to) return std::make_pair(y, z);
    const auto& tr = compiled_transition(from, to);
    auto ny = tr.y(y, z, t, c), nz = tr.z(y, z, t, c);
    if (!ny || !nz) return std::nullopt;
    return std::make_pair(*ny, *nz);
}

std::optional<std::pair<double, double>> to_w1(const FlowState& s, double c) {
    return map_point(s.chart, ChartId::W1, s.y, s.z, s.t, c);
}

ChartId best_chart(const FlowState& s, double c) {
    std::optional<ChartId> best;
    double best_size = 0;
    for (ChartId ch : atlas::kCharts) {
        auto p = map_point(s.chart, ch, s.y, s.z, s.t, c);
        if (!p) continue;
        double m = size_of(p->first, p->second);
        if (m > 1.0 / kDivisorTolerance) continue;
        if (!best || m < best_size) {
            best = ch;
            best_size = m;
        }
    }
    if (!best) throw Error(ErrorCode::NoChart, "point at t = " + std::to_string(s.t) + " lies on the boundary divisor");
    return *best;
}

Trajectory integrate(double c, const FlowState& initial, double t1, const IntegratorConfig& cfg) {
    if (!(cfg.rtol > 0) || !(cfg.atol > 0) || !(cfg.R > 1) || !(cfg.h_max > 0) || !(cfg.h0 > 0))
        throw Error(ErrorCode::InvalidArgument, "integrator config needs rtol, atol, h_max, h0 > 0 and R > 1");
    if (!std::isfinite(initial.y) || !std::isfinite(initial.z) || !std::isfinite(initial.t) || !std::isfinite(t1))
        throw Error(ErrorCode::InvalidArgument, "non-finite initial data");
    Trajectory tr;
    tr.c = c;
    FlowState s = initial;
    bool sw = false;
    maybe_switch(s, c, cfg, tr, sw);
    tr.samples.push_back(s);
    tr.switched.push_back(sw);
    if (t1 == s.t) return tr;

    const double dir = t1 > s.t ? 1.0 : -1.0;
    double h = dir * std::min({cfg.h0, cfg.h_max, std::abs(t1 - s.t)});
    double err_prev = 1e-4;
    std::int64_t steps = 0;
    while (dir * (t1 - s.t) > 0) {
        if (++steps > cfg.max_steps) throw Error(ErrorCode::StepFailure, "step budget exhausted");
        bool last = dir * (s.t + h - t1) >= 0;
        if (last) h = t1 - s.t;
        StepResult r = dp_step(s.chart, s.y, s.z, s.t, h, c, cfg);
        if (!r.finite) {
            ++tr.rejected;
            h *= 0.25;
        } else if (r.err <= 1.0) {
            ++tr.accepted;
            s.t = last ? t1 : s.t + h;
            s.y = r.y;
            s.z = r.z;
            double factor = r.err == 0 ? 5.0 : 0.9 * std::pow(r.err, -0.17) * std::pow(err_prev, 0.04);
            factor = std::clamp(factor, 0.2, 5.0);
            err_prev = std::max(r.err, 1e-4);
            maybe_switch(s, c, cfg, tr, sw);
            tr.samples.push_back(s);
            tr.switched.push_back(sw);
            h *= factor;
            if (std::abs(h) > cfg.h_max) h = dir * cfg.h_max;
        } else {
            ++tr.rejected;
            h *= std::max(0.2, 0.9 * std::pow(r.err, -0.2));
        }
        if (dir * (t1 - s.t) > 0 && std::abs(h) < 1e-14 * std::max(1.0, std::abs(s.t)))
            throw Error(ErrorCode::StepFailure, "step size underflow at t = " + std::to_string(s.t));
    }
    return tr;
}

std::optional<std::array<double, 3>> apply_backlund(BacklundMap m, double q, double p, double t, double c) {
    auto j = [&](double qq, double pp, double cc) -> std::array<double, 3> {
        return {-qq, -2 * qq * qq - pp - t, -1 - cc};
    };
    auto i = [&](double qq, double pp, double cc) -> std::optional<std::array<double, 3>> {
        if (cc == 0) return std::array<double, 3>{qq, pp, 0.0};
        if (pp == 0) return std::nullopt;
        return std::array<double, 3>{qq - cc / pp, pp, -cc};
    };
    switch (m) {
        case BacklundMap::J: return j(q, p, c);
        case BacklundMap::I: return i(q, p, c);
        case BacklundMap::TPlus: {
            auto a = j(q, p, c);
            return i(a[0], a[1], a[2]);
        }
    }
    return std::nullopt;
}

double backlund_numeric_check(BacklundMap m, double c, double q0, double p0, double t0, double t1,
                              const IntegratorConfig& cfg) {
    Trajectory base = integrate(c, {ChartId::W1, q0, p0, t0}, t1, cfg);
    auto end = to_w1(base.back(), c);
    auto img0 = apply_backlund(m, q0, p0, t0, c);
    if (!end || !img0) throw Error(ErrorCode::DenominatorVanishes, "endpoint outside the domain of the map");
    auto img1 = apply_backlund(m, end->first, end->second, t1, c);
    if (!img1) throw Error(ErrorCode::DenominatorVanishes, "endpoint outside the domain of the map");
    Trajectory mapped = integrate((*img0)[2], {ChartId::W1, (*img0)[0], (*img0)[1], t0}, t1, cfg);
    auto end2 = to_w1(mapped.back(), (*img0)[2]);
    if (!end2) throw Error(ErrorCode::DenominatorVanishes, "mapped endpoint is not in W1");
    return std::max(std::abs(end2->first - (*img1)[0]), std::abs(end2->second - (*img1)[1]));
}

double reversibility_error(double c, const FlowState& initial, double t1, const IntegratorConfig& cfg) {
    Trajectory fwd = integrate(c, initial, t1, cfg);
    Trajectory back = integrate(c, fwd.back(), initial.t, cfg);
    const FlowState& s = back.back();
    auto p = map_point(s.chart, initial.chart, s.y, s.z, s.t, c);
    if (!p) throw Error(ErrorCode::NoChart, "returned point is outside the initial chart");
    return std::max(std::abs(p->first - initial.y), std::abs(p->second - initial.z));
}

RiccatiComparison riccati_compare(double t0, double t1, double q0, const IntegratorConfig& cfg) {
    Trajectory tr = integrate(0.0, {ChartId::W1, q0, 0.0, t0}, t1, cfg);
    auto rhs = [](double q, double t) { return q * q + 0.5 * t; };
    RiccatiComparison out{0, 0};
    double q = q0, t = t0;
    for (const auto& s : tr.samples) {
        double span = s.t - t;
        int n = std::max(1, static_cast<int>(std::ceil(std::abs(span) / 1e-3)));
        double h = span / n;
        for (int k = 0; k < n; ++k) {
            double a = rhs(q, t), b = rhs(q + 0.5 * h * a, t + 0.5 * h), cc = rhs(q + 0.5 * h * b, t + 0.5 * h),
                   d = rhs(q + h * cc, t + h);
            q += h / 6 * (a + 2 * b + 2 * cc + d);
            t += h;
        }
        t = s.t;
        auto w1 = to_w1(s, 0.0);
        if (!w1) throw Error(ErrorCode::NoChart, "Riccati solution left W1");
        out.max_q_deviation = std::max(out.max_q_deviation, std::abs(w1->first - q));
        out.max_abs_p = std::max(out.max_abs_p, std::abs(w1->second));
    }
    return out;
}

double max_drift(const Trajectory& tr, const exact::Polynomial& f) {
    CompiledPolynomial g(f, Var::q, Var::p);
    double worst = 0;
    for (const auto& s : tr.samples) {
        auto w1 = to_w1(s, tr.c);
        if (!w1) continue;
        worst = std::max(worst, std::abs(g(w1->first, w1->second, s.t, tr.c)));
    }
    return worst;
}

}  // namespace piilab::flow
