#pragma once

// Numerical integration of the Hamiltonian flow across the three-chart atlas.

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "piilab/atlas.hpp"

namespace piilab::flow {

using atlas::ChartId;

struct FlowState {
    ChartId chart = ChartId::W1;
    double y = 0, z = 0, t = 0;
};

struct IntegratorConfig {
    double rtol = 1e-10;
    double atol = 1e-12;
    double R = 5.0;        // switch threshold
    double h_max = 0.1;
    double h0 = 1e-4;      // first trial step
    std::int64_t max_steps = 2'000'000;
};

// Points whose coordinates exceed 1/kDivisorTolerance in every chart are
// treated as lying on the boundary divisor.
inline constexpr double kDivisorTolerance = 1e-8;

struct SwitchEvent {
    double t;
    ChartId from, to;
    double y_before, z_before, y_after, z_after;
};

struct Trajectory {
    double c = 0;
    std::vector<FlowState> samples;  // one per accepted step, plus the initial state
    std::vector<bool> switched;      // parallel to samples
    std::vector<SwitchEvent> switches;
    std::int64_t accepted = 0, rejected = 0;
    const FlowState& back() const { return samples.back(); }
};

// Polynomial in (y, z, t, c) with double coefficients.
class CompiledPolynomial {
public:
    CompiledPolynomial() = default;
    CompiledPolynomial(const exact::Polynomial& p, exact::Var y, exact::Var z);
    double operator()(double y, double z, double t, double c) const;

private:
    struct Term {
        double coeff;
        std::array<std::uint16_t, 4> e;
    };
    std::vector<Term> terms_;
};

struct CompiledRational {
    CompiledPolynomial num, den;
    // nullopt when the denominator vanishes or the value is not finite.
    std::optional<double> operator()(double y, double z, double t, double c) const;
};

std::array<double, 2> vector_field(ChartId chart, double y, double z, double t, double c);
// Coordinates in `to` of a point given in `from`.
std::optional<std::pair<double, double>> map_point(ChartId from, ChartId to, double y, double z, double t,
                                                   double c);
// W1 coordinates (q, p) of a state, if finite.
std::optional<std::pair<double, double>> to_w1(const FlowState& s, double c);

ChartId best_chart(const FlowState& s, double c);

Trajectory integrate(double c, const FlowState& initial, double t1, const IntegratorConfig& cfg = {});

enum class BacklundMap { TPlus, I, J };
// (q, p, c) image in W1 coordinates at time t.
std::optional<std::array<double, 3>> apply_backlund(BacklundMap m, double q, double p, double t, double c);

double backlund_numeric_check(BacklundMap m, double c, double q0, double p0, double t0, double t1,
                              const IntegratorConfig& cfg = {});
double reversibility_error(double c, const FlowState& initial, double t1, const IntegratorConfig& cfg = {});

struct RiccatiComparison {
    double max_q_deviation;
    double max_abs_p;
};
// c = 0, p = 0: the q-component against a fixed-step integration of q' = q^2 + t/2.
RiccatiComparison riccati_compare(double t0, double t1, double q0, const IntegratorConfig& cfg = {});

// Largest |f(q, p, t)| over the W1 samples of a trajectory, for f given in (q, p, t, c).
double max_drift(const Trajectory& tr, const exact::Polynomial& f);

}  // namespace piilab::flow
