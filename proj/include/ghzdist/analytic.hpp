#pragma once
#include "ghzdist/distill.hpp"

// Closed-form distillation for states given in the minimal five-term
// representation lambda0|000> + lambda1 e^{i phi}|100> + lambda2|101> +
// lambda3|110> + lambda4|111>; serves as an independent oracle for the
// numeric pipeline.

namespace ghzdist {

struct CanonicalState {
    std::array<double, 5> lambda{};  // all >= 0, sum of squares 1
    double phi = 0.0;                // in [0, pi]

    bool valid(double tol = 1e-10) const;
};

struct AnalyticIntermediates {
    cx delta;                              // lambda2*lambda3 - lambda1*lambda4*e^{i phi}
    std::array<double, 2> pi_a, pi_b, pi_c;  // ordered pairs (pi0 >= pi1)
    double theta2 = 0.0, theta3 = 0.0;     // qubit-A angles
    double theta_b = 0.0, theta_c = 0.0;
    double ratio_raw = 0.0;  // alpha/beta before orientation fix
    double ratio = 0.0;      // orientation-fixed, in (0, 1]
    bool swapped = false;    // true when the raw ratio exceeded 1
};

// throws ArgumentError when invariants are violated
PureState to_amplitudes(const CanonicalState& c);

// pi pairs, angles and coefficient ratio in closed form
// throws NonDistillableError when lambda0 = 0 (biseparable) or lambda4 = 0
// (W-class)
AnalyticIntermediates intermediates(const CanonicalState& c);

// closed-form plan: per-qubit diagonalizing unitaries from the angles,
// filters from the pi pairs, balancing from the ratio, reverting unitaries
// from the primed product bases
DistillationPlan analytic_plan(const CanonicalState& c, Qubit balance = Qubit::c);

// the three product-form conditions: |delta| = 0, lambda0*lambda2 = 0,
// lambda0*lambda3 = 0, each within tol
bool gghz_conditions(const CanonicalState& c, double tol);

}  // namespace ghzdist
