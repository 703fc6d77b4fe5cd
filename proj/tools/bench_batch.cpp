// Times the serial reference against the OpenMP batch driver on a shared
// Haar-random corpus and checks the outputs are bitwise identical.
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ghzdist/batch.hpp"

namespace {

bool same_bits(double a, double b) {
    return std::memcmp(&a, &b, sizeof(double)) == 0;
}

bool same_plan(const ghzdist::BatchPlanResult& l,
               const ghzdist::BatchPlanResult& r) {
    if (l.ok != r.ok) return false;
    if (!same_bits(l.fidelity_after, r.fidelity_after)) return false;
    if (!same_bits(l.plan.success_probability, r.plan.success_probability))
        return false;
    const ghzdist::c2x2* lm[3] = {&l.plan.t_a.m, &l.plan.t_b.m, &l.plan.t_c.m};
    const ghzdist::c2x2* rm[3] = {&r.plan.t_a.m, &r.plan.t_b.m, &r.plan.t_c.m};
    for (int q = 0; q < 3; ++q)
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                if (!same_bits((*lm[q])(i, j).real(), (*rm[q])(i, j).real()))
                    return false;
                if (!same_bits((*lm[q])(i, j).imag(), (*rm[q])(i, j).imag()))
                    return false;
            }
    return true;
}

template <typename F>
double time_ms(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    const int count = argc > 1 ? std::atoi(argv[1]) : 4000;
    const std::uint64_t seed = 20250819ULL;

    std::cout << "corpus: " << count << " Haar-random states\n";
#ifdef _OPENMP
    std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "threads: 1 (built without OpenMP)\n";
#endif

    const std::vector<ghzdist::PureState> states =
        ghzdist::haar_batch(seed, count);

    std::vector<ghzdist::BatchPlanResult> serial, parallel;
    const double ms_serial = time_ms([&] {
        serial = ghzdist::plan_batch(states, 1e-9, ghzdist::Qubit::c,
                                     ghzdist::Exec::serial);
    });
    const double ms_parallel = time_ms([&] {
        parallel = ghzdist::plan_batch(states, 1e-9, ghzdist::Qubit::c,
                                       ghzdist::Exec::parallel);
    });

    int mismatches = 0, failures = 0;
    for (int i = 0; i < count; ++i) {
        if (!same_plan(serial[i], parallel[i])) ++mismatches;
        if (!serial[i].ok) ++failures;
    }

    std::cout.precision(3);
    std::cout << std::fixed;
    std::cout << "serial:   " << ms_serial << " ms  ("
              << count / ms_serial * 1000.0 << " states/s)\n";
    std::cout << "parallel: " << ms_parallel << " ms  ("
              << count / ms_parallel * 1000.0 << " states/s)\n";
    std::cout << "speedup:  " << ms_serial / ms_parallel << "x\n";
    std::cout << "plan failures: " << failures << "\n";
    std::cout << "bitwise identical: " << (mismatches == 0 ? "yes" : "NO")
              << "\n";
    return mismatches == 0 ? 0 : 1;
}
