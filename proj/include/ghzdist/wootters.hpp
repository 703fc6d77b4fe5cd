#pragma once
#include "ghzdist/qstate.hpp"

// Per-qubit Wootters representation: marginal two-qubit vector pairs, the
// spin-flip (time-reversal) map, the symmetric tau matrix, and the
// diagonalizing unitary with ordered parameters (pi0, pi1).

namespace ghzdist {

// |psi> = sum_i |i_q> (x) |phi_i> with |phi_i> sub-normalized states of the
// complementary pair, ordered with the first remaining qubit most significant
struct MarginalPair {
    Qubit q = Qubit::a;
    v4 phi0, phi1;
};

MarginalPair marginals(const PureState& state, Qubit q);

// time reversal |phi~> = (sigma_y x sigma_y) conj(|phi>); involutive up to a
// global sign
v4 spin_flip2(const v4& v);

// tau_{ij} = <phi_i|phi~_j>, symmetric
c2x2 tau_matrix(const MarginalPair& pair);

struct WoottersRep {
    Qubit q = Qubit::a;
    c2x2 u;          // u * tau * u^T = diag(pi0, pi1)
    double pi0 = 0.0, pi1 = 0.0;
};

// diagonalize the qubit's tau via takagi2; pi0 - pi1 equals the concurrence of
// the complementary pair
WoottersRep wootters_rep(const PureState& state, Qubit q);

// rank decision for W-class detection: pi1 counts as zero below a relative
// snap threshold
inline bool pi1_snapped_zero(double pi0, double pi1) {
    return pi1 <= 1e-9 * std::max(pi0, 1e-30);
}

}  // namespace ghzdist
