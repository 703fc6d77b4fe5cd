#pragma once
#include <nlohmann/json_fwd.hpp>

#include "ghzdist/analytic.hpp"

// JSON bridges shared by the CLI and tests. Objects serialize with sorted
// keys; floats use the shortest round-trip representation.

namespace ghzdist {

using json = nlohmann::json;

// {"amplitudes": [[re, im] x 8]}, index order 4a+2b+c
json state_to_json(const PureState& state);
// throws ArgumentError on shape problems, ContractError on norm violation
PureState state_from_json(const json& j, double norm_tol = 1e-8);

// {"lambda": [5 reals >= 0], "phi": real in [0, pi]}
json canonical_to_json(const CanonicalState& c);
CanonicalState canonical_from_json(const json& j, double norm_tol = 1e-10);

// true when the object carries a canonical-form state ("lambda" key)
bool is_canonical_json(const json& j);
// accepts either representation; canonical input is expanded to amplitudes
PureState any_state_from_json(const json& j, double norm_tol = 1e-8);

// 2x2 matrix as [[ [re,im], [re,im] ], [ [re,im], [re,im] ]] (row-major)
json matrix_to_json(const c2x2& m);
c2x2 matrix_from_json(const json& j);

// {"A": [pi0, pi1], "B": ..., "C": ...}
json pi_table_json(const PureState& state);

// full plan report: class, operators (A,B,C order), piTable,
// successProbability, fidelityAfter, toleranceUsed
json plan_report_json(const PureState& state, const DistillationPlan& plan,
                      double tol);

// read back the three operators of a plan report (key "operators")
std::array<LocalOp, 3> plan_ops_from_json(const json& j);

}  // namespace ghzdist
