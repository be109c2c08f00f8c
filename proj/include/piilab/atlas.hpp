#pragma once

// The three-chart symplectic atlas of the space of initial conditions.

#include <array>
#include <string>
#include <utility>

#include "piilab/exact.hpp"

namespace piilab::atlas {

using exact::Polynomial;
using exact::Rational;
using exact::RationalFunction;
using exact::Var;

enum class ChartId { W1, W3, W12 };
inline constexpr std::array<ChartId, 3> kCharts = {ChartId::W1, ChartId::W3, ChartId::W12};
const char* chart_name(ChartId c);
ChartId parse_chart(const std::string& s);
std::pair<Var, Var> chart_vars(ChartId c);

// Negative controls for the shear between W3 and W12.
enum class Perturbation { None, QuarticTerm, ParameterFlip };

struct Transition {
    ChartId from, to;
    RationalFunction y, z;  // target coordinates in source coordinates and (t, c)
};
Transition transition(ChartId from, ChartId to, Perturbation pert = Perturbation::None);
// Evaluates a transition at a rational point.
std::pair<Rational, Rational> transition_at(const Transition& tr, const Rational& y, const Rational& z,
                                            const Rational& t, const Rational& c);
// A function of the coordinates of chart `of` rewritten in the coordinates of chart `in`.
RationalFunction pull_back(const RationalFunction& f, ChartId in, ChartId of);

// The explicitly stated W12 -> W1 rule.
Transition stated_rule_w12_w1();
bool consistency_check(Perturbation pert = Perturbation::None);
bool round_trip_is_identity(ChartId a, ChartId b);

RationalFunction jacobian_det(ChartId from, ChartId to);

using HamiltonianSet = std::array<RationalFunction, 3>;  // indexed by ChartId
Polynomial hamiltonian(ChartId c);
HamiltonianSet standard_hamiltonians();

// Relative 2-form over the c-line: a dy^dz + b dy^dt + e dz^dt.
struct RelTwoForm {
    RationalFunction dydz, dydt, dzdt;
    bool is_zero() const { return dydz.is_zero() && dydt.is_zero() && dzdt.is_zero(); }
    std::string to_string() const;
};
// Pull-back of dY^dZ + dH_to^dt minus dy^dz + dH_from^dt, in the coordinates of `from`.
RelTwoForm glue_residual(ChartId from, ChartId to, const HamiltonianSet& h = standard_hamiltonians());

// Relative 1-form a dy + b dz at fixed (t, c).
struct OneForm {
    RationalFunction dy, dz;
    bool is_zero() const { return dy.is_zero() && dz.is_zero(); }
    friend bool operator==(const OneForm&, const OneForm&) = default;
    std::string to_string() const;
};
// d(H_i o tau - H_j) in the coordinates of chart j.
OneForm ks_cocycle(ChartId i, ChartId j);
// Pull-back of a 1-form in the coordinates of `from` to those of `to`, at fixed t.
OneForm transport_form(const OneForm& w, ChartId from, ChartId to);

// Hamilton's equations (dH/dz, -dH/dy) in a chart.
std::pair<Polynomial, Polynomial> vector_field(ChartId c);

enum class InvolutionVariant { Exact, NegateParameter };
// sigma: y1 -> -y1, z1 -> -(z1 + 2 y1^2 + t), c -> -(c + 1) exchanges the
// W1 -> W3 and W1 -> W12 transitions up to sign of the target coordinates.
bool involution_check(InvolutionVariant v = InvolutionVariant::Exact);
bool involution_squares_to_identity();

// Coefficient of 2 pi i in the period of omega over C2 - C1, by the residue
// along the exceptional curve of the blown-up W4 chart.
Rational period_c2_minus_c1(const Rational& c);
Rational period_c4_minus_c3(const Rational& c);
// The 2-form coefficient of dY^dz after y4 = Y z, z4 = z.
RationalFunction blown_up_form_coefficient();

}  // namespace piilab::atlas
