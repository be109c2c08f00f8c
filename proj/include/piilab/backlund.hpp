#pragma once

// Differential-algebraic checks of the Backlund symmetries of the second
// Painleve equation and of its Hamiltonian system.

#include <array>
#include <optional>
#include <string>
#include <utility>

#include "piilab/exact.hpp"

namespace piilab::backlund {

using exact::Polynomial;
using exact::Rational;
using exact::RationalFunction;

// D(t) = 1, D(y) = yp, D(yp) = 2y^3 + t y + alpha, D(alpha) = 0.
RationalFunction derive_pii(const RationalFunction& f);
// D_c(t) = 1, D_c(q) = q^2 + p + t/2, D_c(p) = -2qp + c, D_c(c) = 0.
RationalFunction derive_phase(const RationalFunction& f);

// y -> R(t, alpha, y, yp) with alpha -> g(alpha).
struct PIIMap {
    std::string name;
    RationalFunction R;
    RationalFunction g;
};
PIIMap t_plus();
PIIMap t_minus();
PIIMap i_map();             // y -> -y, alpha -> -alpha
PIIMap identity_map();
PIIMap negation_unshifted(); // y -> -y keeping alpha

// D^2(R) - 2R^3 - tR - g; zero exactly when the map is a symmetry.
RationalFunction pii_residual(const PIIMap& m);

// (q, p, c) -> (Q, P, C), images in q, p, t, c.
struct PhaseMap {
    std::string name;
    RationalFunction q, p, c;
};
PhaseMap j_map();
// At c0 = 0 the map is the identity.
PhaseMap i_phase_map(const std::optional<Rational>& c0 = std::nullopt);
PhaseMap j_unshifted();  // J keeping c
PhaseMap phase_identity();
// outer after inner.
PhaseMap compose(const PhaseMap& outer, const PhaseMap& inner);

// Defects D_c(Q) - (Q^2 + P + t/2) and D_c(P) - (-2QP + C). With c0 the
// parameter is specialised first; a denominator that dies raises DenominatorVanishes.
std::pair<RationalFunction, RationalFunction> phase_residual(const PhaseMap& m,
                                                             const std::optional<Rational>& c0 = std::nullopt);

enum class PhiVariant { Exact, UnshiftedParameter, PlainMomentum };
// Residuals of the two transported equations under q = y, p = yp - y^2 - t/2, c = alpha - 1/2.
std::pair<RationalFunction, RationalFunction> phi_residuals(PhiVariant v = PhiVariant::Exact);
bool phi_conjugation_check(PhiVariant v = PhiVariant::Exact);

// I after J, pulled back through the coordinate change, minus T+.
// Returns (solution residual, parameter residual).
std::pair<RationalFunction, RationalFunction> composition_residual();

struct InvariantCurveResult {
    bool invariant;
    Polynomial cofactor;  // D_c(f) = cofactor * f when invariant
};
InvariantCurveResult invariant_curve_test(const Polynomial& f, const Rational& c0);

enum class QuadricMap { F1, F3 };
enum class QuadricSign { Corrected, Literal };
// The map into P^3 with coordinates (x0, x1, x2, x3).
std::array<RationalFunction, 4> quadric_map(QuadricMap which);
// Corrected: 4 x1 x3 + x2^2 - c^2 x0^2; literal: 4 x1 x3 - x2^2 + c^2 x0^2.
RationalFunction quadric_residual(QuadricMap which, QuadricSign sign);
RationalFunction quadric_literal_witness();  // 8 y1 z1 (c - y1 z1)

}  // namespace piilab::backlund
