#pragma once
#include <cstdint>
#include <vector>

#include "ghzdist/distill.hpp"

// Batch drivers over arrays of states. The parallel policy distributes states
// across OpenMP threads; per-state work is identical to the serial reference,
// so both policies produce bitwise-identical results.

namespace ghzdist {

enum class Exec { serial, parallel };

// outcome of one batched plan attempt; `ok` false carries the error text and
// (for non-distillable states) the class
struct BatchPlanResult {
    bool ok = false;
    DistillationPlan plan;
    double fidelity_after = 0.0;
    StateClass cls;
    std::string error;
};

// deterministic per-index seed stream (splitmix64 mix of seed and index) so
// schedules cannot reorder the corpus
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

std::vector<PureState> haar_batch(std::uint64_t seed, int count,
                                  Exec exec = Exec::serial);

std::vector<StateClass> classify_batch(const std::vector<PureState>& states,
                                       double tol = 1e-9,
                                       Exec exec = Exec::serial);

std::vector<BatchPlanResult> plan_batch(const std::vector<PureState>& states,
                                        double tol = 1e-9,
                                        Qubit balance = Qubit::c,
                                        Exec exec = Exec::serial);

}  // namespace ghzdist
