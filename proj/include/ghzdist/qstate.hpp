#pragma once
#include <cstdint>
#include <initializer_list>

#include "ghzdist/smallmat.hpp"

// Three-qubit pure-state algebra: amplitudes, local operator application,
// partial traces, two-qubit concurrence, GHZ fidelity, Haar-random sampling.

namespace ghzdist {

using v8 = Eigen::Matrix<cx, 8, 1>;

enum class Qubit : int { a = 0, b = 1, c = 2 };

inline int index_of(Qubit q) { return static_cast<int>(q); }
inline char name_of(Qubit q) { return "ABC"[index_of(q)]; }

// amplitudes indexed by |abc> with qubit A the most significant bit:
// index = 4a + 2b + c
struct PureState {
    v8 amp;

    double norm_sq() const { return amp.squaredNorm(); }
    bool is_normalized(double tol = 1e-8) const {
        return std::abs(norm_sq() - 1.0) <= tol;
    }
};

// unnormalized state carrying its squared norm explicitly so branch
// probabilities compose by multiplication
struct UnnormState {
    v8 amp;
    double norm_sq = 0.0;

    PureState normalized() const;
};

// 2x2 operator acting on a single designated qubit
struct LocalOp {
    c2x2 m;
    Qubit q = Qubit::a;

    double max_singular_value() const;
    // implementable as a generalized-measurement element
    bool is_contraction(double tol = 1e-10) const {
        return max_singular_value() <= 1.0 + tol;
    }
};

PureState ghz_state();
PureState w_state();

// apply op to its qubit; result carries norm_sq = <psi|T^dag T|psi> for
// normalized input
UnnormState apply_local(const PureState& state, const LocalOp& op);
UnnormState apply_local(const UnnormState& state, const LocalOp& op);

// partial trace onto `keep` (size 1 -> 2x2, size 2 -> 4x4); qubit order of the
// result follows the order A,B,C regardless of the order given in `keep`
Eigen::MatrixXcd reduced_density(const PureState& state,
                                 std::initializer_list<Qubit> keep);
c2x2 reduced_density1(const PureState& state, Qubit keep);
c4x4 reduced_density2(const PureState& state, Qubit k1, Qubit k2);

// Wootters concurrence C = max(0, s1-s2-s3-s4), s_i descending square roots of
// the eigenvalues of rho * (sigma_y x sigma_y) * conj(rho) * (sigma_y x sigma_y)
double concurrence2(const c4x4& rho, double tol = 1e-9);

// |<ghz|psi>|^2 with |ghz> = (|000>+|111>)/sqrt(2)
double fidelity_ghz(const PureState& state);
// maximum of |<ghz|e^{i phase} psi>|^2 over the global phase; numerically
// identical to fidelity_ghz (the modulus already absorbs the phase), exposed
// for callers that want the insensitivity spelled out
double fidelity_ghz_phase_max(const PureState& state);

// Haar-random pure state, deterministic per seed. Algorithm: std::mt19937_64
// seeded with `seed`; each amplitude is one Box-Muller pair (u1, u2 drawn as
// 53-bit uniforms in [0,1), radius sqrt(-2 ln(1-u1)), angle 2 pi u2, real part
// the cosine branch, imaginary part the sine branch); the 8-vector is then
// normalized. This is the unitarily invariant measure on the unit sphere.
PureState haar_random(std::uint64_t seed);

}  // namespace ghzdist
