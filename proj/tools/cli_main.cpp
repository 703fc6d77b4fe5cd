// Command-line interface: classify, distill, verify, random, crosscheck.
// Exit codes: 0 ok, 2 malformed input, 3 invariant violation,
// 4 non-distillable state, 5 sampling timeout.
#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "ghzdist/batch.hpp"
#include "ghzdist/json_io.hpp"

namespace {

using ghzdist::json;

std::string read_input(const std::string& path) {
    std::ostringstream ss;
    if (path.empty() || path == "-") {
        ss << std::cin.rdbuf();
    } else {
        std::ifstream f(path);
        if (!f)
            throw ghzdist::ArgumentError("cannot open input file: " + path);
        ss << f.rdbuf();
    }
    return ss.str();
}

json parse_input(const std::string& path) {
    return json::parse(read_input(path));
}

ghzdist::Qubit qubit_from(const std::string& s) {
    if (s == "A") return ghzdist::Qubit::a;
    if (s == "B") return ghzdist::Qubit::b;
    return ghzdist::Qubit::c;
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

int cmd_classify(const std::string& input, double tol) {
    const ghzdist::PureState state =
        ghzdist::any_state_from_json(parse_input(input));
    const ghzdist::StateClass cls = ghzdist::classify(state, tol);
    json out{{"class", cls.name()}, {"pi", ghzdist::pi_table_json(state)}};
    if (cls.tag == ghzdist::ClassTag::generalized_ghz) {
        out["alpha"] = cls.alpha;
        out["beta"] = cls.beta;
    }
    emit(out);
    return 0;
}

int cmd_distill(const std::string& input, double tol, ghzdist::Qubit balance) {
    const ghzdist::PureState state =
        ghzdist::any_state_from_json(parse_input(input));
    try {
        const ghzdist::DistillationPlan plan =
            ghzdist::distill_plan(state, tol, balance);
        emit(ghzdist::plan_report_json(state, plan, tol));
    } catch (const ghzdist::NonDistillableError& e) {
        emit(json{{"class", e.cls.name()}});
        return 4;
    }
    return 0;
}

int cmd_verify(const std::string& state_path, const std::string& plan_path,
               double tol) {
    const ghzdist::PureState state =
        ghzdist::any_state_from_json(parse_input(state_path));
    const std::array<ghzdist::LocalOp, 3> ops =
        ghzdist::plan_ops_from_json(parse_input(plan_path));
    for (const auto& op : ops)
        if (!op.is_contraction(1e-8))
            throw ghzdist::ArgumentError(
                "operator is not a contraction (largest singular value " +
                std::to_string(op.max_singular_value()) + ")");
    ghzdist::UnnormState cur{state.amp, state.norm_sq()};
    for (const auto& op : ops) cur = ghzdist::apply_local(cur, op);
    const double n = cur.norm_sq;
    const double fid = ghzdist::fidelity_ghz(cur.normalized());
    emit(json{{"fidelity", fid},
              {"pass", fid >= 1.0 - tol},
              {"successProbability", n}});
    return 0;
}

int cmd_random(int count, std::uint64_t seed, const std::string& filter,
               double tol, int max_attempts) {
    if (count < 1) throw ghzdist::ArgumentError("--count must be >= 1");
    static const char* kNames[] = {"Product", "Biseparable", "WClass",
                                   "GhzClass", "GeneralizedGhz"};
    if (!filter.empty()) {
        bool known = false;
        for (const char* n : kNames) known |= (filter == n);
        if (!known)
            throw ghzdist::ArgumentError("unknown class filter: " + filter);
    }
    int emitted = 0;
    for (int attempt = 0; attempt < max_attempts && emitted < count; ++attempt) {
        const ghzdist::PureState s = ghzdist::haar_random(
            ghzdist::derive_seed(seed, static_cast<std::uint64_t>(attempt)));
        if (!filter.empty() &&
            ghzdist::class_tag_name(ghzdist::classify(s, tol).tag) != filter)
            continue;
        emit(ghzdist::state_to_json(s));
        ++emitted;
    }
    if (emitted < count) {
        std::cerr << "sampling timed out after " << max_attempts
                  << " attempts (" << emitted << "/" << count << " states)\n";
        return 5;
    }
    return 0;
}

int cmd_crosscheck(const std::string& input, double tol,
                   ghzdist::Qubit balance) {
    const json j = parse_input(input);
    if (!ghzdist::is_canonical_json(j))
        throw ghzdist::ArgumentError(
            "crosscheck requires canonical input with \"lambda\"");
    const ghzdist::CanonicalState c = ghzdist::canonical_from_json(j);
    const ghzdist::PureState state = ghzdist::to_amplitudes(c);

    const ghzdist::AnalyticIntermediates in = ghzdist::intermediates(c);
    const ghzdist::DistillationPlan ap = ghzdist::analytic_plan(c, balance);
    const ghzdist::DistillationPlan np = ghzdist::distill_plan(state, tol, balance);

    const double fid_a =
        ghzdist::fidelity_ghz(ghzdist::apply_plan(state, ap).normalized());
    const double fid_n =
        ghzdist::fidelity_ghz(ghzdist::apply_plan(state, np).normalized());

    const json pi_analytic{{"A", json::array({in.pi_a[0], in.pi_a[1]})},
                           {"B", json::array({in.pi_b[0], in.pi_b[1]})},
                           {"C", json::array({in.pi_c[0], in.pi_c[1]})}};
    const json pi_numeric = ghzdist::pi_table_json(state);
    double pi_diff = 0.0;
    for (const char* q : {"A", "B", "C"})
        for (int i = 0; i < 2; ++i)
            pi_diff = std::max(pi_diff,
                               std::abs(pi_analytic[q][i].get<double>() -
                                        pi_numeric[q][i].get<double>()));

    emit(json{{"analytic",
               {{"fidelity", fid_a},
                {"pi", pi_analytic},
                {"successProbability", ap.success_probability}}},
              {"discrepancy",
               {{"fidelity", std::abs(fid_a - fid_n)},
                {"pi", pi_diff},
                {"successProbability",
                 std::abs(ap.success_probability - np.success_probability)}}},
              {"numeric",
               {{"fidelity", fid_n},
                {"pi", pi_numeric},
                {"successProbability", np.success_probability}}}});
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"single-copy GHZ distillation toolkit"};
    app.require_subcommand(1);

    std::string input, plan_path, balance = "C", filter;
    double tol = 1e-9;
    std::uint64_t seed = 0;
    int count = 1, max_attempts = 10000;

    CLI::App* classify = app.add_subcommand(
        "classify", "entanglement class of a state (JSON file or stdin)");
    classify->add_option("input", input, "state JSON file, or - for stdin");
    classify->add_option("--tol", tol, "classification tolerance");

    CLI::App* distill = app.add_subcommand(
        "distill", "construct local operators distilling a GHZ state");
    distill->add_option("input", input, "state JSON file, or - for stdin");
    distill->add_option("--tol", tol, "pipeline tolerance");
    distill->add_option("--balance-qubit", balance, "qubit carrying the balancing filter")
        ->check(CLI::IsMember({"A", "B", "C"}));

    CLI::App* verify = app.add_subcommand(
        "verify", "apply a plan's operators to a state and check the result");
    verify->add_option("state", input, "state JSON file, or - for stdin")
        ->required();
    verify->add_option("plan", plan_path, "plan JSON file (output of distill)")
        ->required();
    verify->add_option("--tol", tol, "fidelity pass threshold 1 - tol");

    CLI::App* random = app.add_subcommand(
        "random", "sample Haar-random states as newline-delimited JSON");
    random->add_option("--count", count, "number of states to emit");
    random->add_option("--seed", seed, "RNG seed");
    random->add_option("--class-filter", filter,
                       "emit only states of this class");
    random->add_option("--tol", tol, "classification tolerance");
    random->add_option("--max-attempts", max_attempts,
                       "sampling budget before exit code 5");

    CLI::App* crosscheck = app.add_subcommand(
        "crosscheck", "compare closed-form and numeric plans on canonical input");
    crosscheck->add_option("input", input, "canonical JSON file, or - for stdin");
    crosscheck->add_option("--tol", tol, "pipeline tolerance");
    crosscheck->add_option("--balance-qubit", balance, "qubit carrying the balancing filter")
        ->check(CLI::IsMember({"A", "B", "C"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (classify->parsed()) return cmd_classify(input, tol);
        if (distill->parsed())
            return cmd_distill(input, tol, qubit_from(balance));
        if (verify->parsed()) return cmd_verify(input, plan_path, tol);
        if (random->parsed())
            return cmd_random(count, seed, filter, tol, max_attempts);
        if (crosscheck->parsed())
            return cmd_crosscheck(input, tol, qubit_from(balance));
    } catch (const ghzdist::NonDistillableError& e) {
        std::cout << json{{"class", e.cls.name()}}.dump() << "\n";
        return 4;
    } catch (const ghzdist::ContractError& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 3;
    } catch (const ghzdist::ArgumentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "JSON error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
