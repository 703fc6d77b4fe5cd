#include "ghzdist/batch.hpp"

namespace ghzdist {
namespace {

// splitmix64 finalizer: decorrelates consecutive indices into full-width seeds
std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

BatchPlanResult plan_one(const PureState& state, double tol, Qubit balance) {
    BatchPlanResult r;
    try {
        r.plan = distill_plan(state, tol, balance);
        r.cls = r.plan.cls;
        r.fidelity_after = fidelity_ghz(apply_plan(state, r.plan).normalized());
        r.ok = true;
    } catch (const NonDistillableError& e) {
        r.cls = e.cls;
        r.error = e.what();
    } catch (const Error& e) {
        r.error = e.what();
    }
    return r;
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    return mix64(seed ^ mix64(index));
}

std::vector<PureState> haar_batch(std::uint64_t seed, int count, Exec exec) {
    if (count < 0) throw ArgumentError("haar_batch: count must be >= 0");
    std::vector<PureState> out(static_cast<std::size_t>(count));
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < count; ++i)
            out[i] = haar_random(derive_seed(seed, static_cast<std::uint64_t>(i)));
    } else {
        for (int i = 0; i < count; ++i)
            out[i] = haar_random(derive_seed(seed, static_cast<std::uint64_t>(i)));
    }
    return out;
}

std::vector<StateClass> classify_batch(const std::vector<PureState>& states,
                                       double tol, Exec exec) {
    const int n = static_cast<int>(states.size());
    std::vector<StateClass> out(states.size());
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < n; ++i) out[i] = classify(states[i], tol);
    } else {
        for (int i = 0; i < n; ++i) out[i] = classify(states[i], tol);
    }
    return out;
}

std::vector<BatchPlanResult> plan_batch(const std::vector<PureState>& states,
                                        double tol, Qubit balance, Exec exec) {
    const int n = static_cast<int>(states.size());
    std::vector<BatchPlanResult> out(states.size());
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < n; ++i) out[i] = plan_one(states[i], tol, balance);
    } else {
        for (int i = 0; i < n; ++i) out[i] = plan_one(states[i], tol, balance);
    }
    return out;
}

}  // namespace ghzdist
