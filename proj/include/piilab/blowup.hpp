#pragma once

// Strict transforms through the eight-centre blow-up chain over the W4 chart
// of the ruled surface, and the resulting curve classes.

#include <array>
#include <string>
#include <vector>

#include "piilab/exact.hpp"
#include "piilab/lattice.hpp"

namespace piilab::blowup {

enum class Regime { Generic, CZero, CMinusOne };
const char* regime_name(Regime r);
Regime parse_regime(const std::string& s);  // "generic", "c0", "cm1"

enum class Z0Chart { W1, W2, W3, W4 };

struct CurveSpec {
    std::string name;
    Z0Chart chart;
    exact::Polynomial poly;  // in the chart coordinates, coefficients in t and c
    // Number of centres whose exceptional classes are subtracted: 8 for a
    // proper transform, 7 for the total transform of the seventh one.
    int tracked_centres = 8;
};

struct BlowupStep {
    exact::Var y_from, z_from, y_to, z_to;
    exact::RationalFunction centre_z;  // centre is (0, centre_z) in (y_from, z_from)
};

// The eight steps in order. The inversion v8 = 1/z8 sits between steps 4 and 5;
// step 5 is expressed in (y8, v8).
const std::vector<BlowupStep>& chain();

using Multiplicities = std::array<int, 8>;

// Polynomial with c replaced by the regime value (unchanged for Generic).
exact::Polynomial specialize(const exact::Polynomial& p, Regime regime);

// Transports a curve equation between charts of the ruled surface. Factors of
// the coordinate inverted at each gluing step are removed.
exact::Polynomial transport(const exact::Polynomial& f, Z0Chart from, Z0Chart to, const exact::RationalFunction& c);

// Throws NotSquarefree / RegimeSplit when the specialised equation is unusable.
void check_usable(const CurveSpec& curve, Regime regime);

Multiplicities multiplicities(const CurveSpec& curve, Regime regime);
std::pair<std::int64_t, std::int64_t> base_class(const CurveSpec& curve, Regime regime);
lattice::DivisorClass total_class(const CurveSpec& curve, Regime regime);

// Local intersection number at the origin of (y, z) through the resultant in z.
int local_intersection_at_origin(const exact::Polynomial& f, const exact::Polynomial& g, exact::Var y, exact::Var z);
// Lowest total degree in (y, z) at the origin.
int origin_order(const exact::Polynomial& f, exact::Var y, exact::Var z);

// Named curves.
CurveSpec curve_C1();       // the fibre y4 = 0
CurveSpec curve_C2();       // y3 z3 - c = 0
CurveSpec curve_C2prime();  // the section z1 = 0 (component of C2 at c = 0)
CurveSpec curve_C4();       // 2 y1^2 + z1 + t = 0, total transform after seven centres
CurveSpec curve_C4prime();  // proper transform of the same equation (component at c = -1)
CurveSpec curve_C5();       // y1 z1 - c = 0
CurveSpec curve_C6();       // 2 y1^3 + t y1 + y1 z1 + c + 1 = 0
CurveSpec curve_S();        // z4 = 0
CurveSpec curve_fibre_y1(); // y1 = 0

lattice::NamedClassRegistry build_registry(Regime regime);

struct Claim {
    Regime regime;
    std::string a, b;
    std::int64_t stated;
    std::string source;  // wording of the stated value
    bool allowlisted;    // a documented disagreement with the derived value
};

struct ClaimResult {
    Claim claim;
    std::int64_t computed;
    enum class Status { Match, KnownDiscrepancy, Mismatch } status;
};

const std::vector<Claim>& stated_claims();
std::vector<ClaimResult> verify_intersection_table();
// JSON array of {curve_pair, computed, paper_value, paper_ref} for entries that disagree.
std::string discrepancy_json(const std::vector<ClaimResult>& results);

}  // namespace piilab::blowup
