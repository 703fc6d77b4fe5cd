#include "ghzdist/json_io.hpp"

#include <nlohmann/json.hpp>

namespace ghzdist {
namespace {

json cx_to_json(const cx& z) { return json::array({z.real(), z.imag()}); }

cx cx_from_json(const json& e) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
        throw ArgumentError("expected a [re, im] number pair");
    return cx(e[0].get<double>(), e[1].get<double>());
}

}  // namespace

json state_to_json(const PureState& state) {
    json arr = json::array();
    for (int i = 0; i < 8; ++i) arr.push_back(cx_to_json(state.amp(i)));
    return json{{"amplitudes", arr}};
}

PureState state_from_json(const json& j, double norm_tol) {
    if (!j.is_object() || !j.contains("amplitudes"))
        throw ArgumentError("state JSON must be an object with \"amplitudes\"");
    const json& arr = j["amplitudes"];
    if (!arr.is_array() || arr.size() != 8)
        throw ArgumentError("\"amplitudes\" must be an array of 8 entries");
    PureState s;
    for (int i = 0; i < 8; ++i) s.amp(i) = cx_from_json(arr[i]);
    if (!s.is_normalized(norm_tol))
        throw ContractError("state norm^2 deviates from 1 beyond tolerance");
    return s;
}

json canonical_to_json(const CanonicalState& c) {
    return json{{"lambda", c.lambda}, {"phi", c.phi}};
}

CanonicalState canonical_from_json(const json& j, double norm_tol) {
    if (!j.is_object() || !j.contains("lambda"))
        throw ArgumentError("canonical JSON must be an object with \"lambda\"");
    const json& arr = j["lambda"];
    if (!arr.is_array() || arr.size() != 5)
        throw ArgumentError("\"lambda\" must be an array of 5 reals");
    CanonicalState c;
    for (int i = 0; i < 5; ++i) {
        if (!arr[i].is_number())
            throw ArgumentError("\"lambda\" entries must be numbers");
        c.lambda[i] = arr[i].get<double>();
    }
    if (j.contains("phi")) {
        if (!j["phi"].is_number())
            throw ArgumentError("\"phi\" must be a number");
        c.phi = j["phi"].get<double>();
    }
    if (!c.valid(norm_tol))
        throw ContractError(
            "canonical state violates lambda >= 0, sum-of-squares = 1, or "
            "phi in [0, pi]");
    return c;
}

bool is_canonical_json(const json& j) {
    return j.is_object() && j.contains("lambda");
}

PureState any_state_from_json(const json& j, double norm_tol) {
    if (is_canonical_json(j)) return to_amplitudes(canonical_from_json(j));
    return state_from_json(j, norm_tol);
}

json matrix_to_json(const c2x2& m) {
    return json::array({json::array({cx_to_json(m(0, 0)), cx_to_json(m(0, 1))}),
                        json::array({cx_to_json(m(1, 0)), cx_to_json(m(1, 1))})});
}

c2x2 matrix_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2)
        throw ArgumentError("matrix JSON must be a 2x2 nested array");
    c2x2 m;
    for (int r = 0; r < 2; ++r) {
        if (!j[r].is_array() || j[r].size() != 2)
            throw ArgumentError("matrix JSON must be a 2x2 nested array");
        for (int c = 0; c < 2; ++c) m(r, c) = cx_from_json(j[r][c]);
    }
    return m;
}

json pi_table_json(const PureState& state) {
    json t = json::object();
    for (int q = 0; q < 3; ++q) {
        const WoottersRep rep = wootters_rep(state, static_cast<Qubit>(q));
        t[std::string(1, name_of(static_cast<Qubit>(q)))] =
            json::array({rep.pi0, rep.pi1});
    }
    return t;
}

json plan_report_json(const PureState& state, const DistillationPlan& plan,
                      double tol) {
    const UnnormState out = apply_plan(state, plan);
    return json{{"class", plan.cls.name()},
                {"fidelityAfter", fidelity_ghz(out.normalized())},
                {"operators",
                 json::array({matrix_to_json(plan.t_a.m),
                              matrix_to_json(plan.t_b.m),
                              matrix_to_json(plan.t_c.m)})},
                {"piTable", pi_table_json(state)},
                {"successProbability", plan.success_probability},
                {"toleranceUsed", tol}};
}

std::array<LocalOp, 3> plan_ops_from_json(const json& j) {
    if (!j.is_object() || !j.contains("operators"))
        throw ArgumentError("plan JSON must be an object with \"operators\"");
    const json& ops = j["operators"];
    if (!ops.is_array() || ops.size() != 3)
        throw ArgumentError("\"operators\" must be an array of 3 matrices");
    return {LocalOp{matrix_from_json(ops[0]), Qubit::a},
            LocalOp{matrix_from_json(ops[1]), Qubit::b},
            LocalOp{matrix_from_json(ops[2]), Qubit::c}};
}

}  // namespace ghzdist
