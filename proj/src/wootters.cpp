#include "ghzdist/wootters.hpp"

#include <unsupported/Eigen/KroneckerProduct>

namespace ghzdist {

namespace {

// positions (msb-first) of the complementary pair for each qubit; the first
// listed qubit of the pair is the most significant index of the 4-vectors
constexpr int pair_bits[3][2] = {{1, 0},   // A -> (B, C)
                                 {2, 0},   // B -> (A, C)
                                 {2, 1}};  // C -> (A, B)

}  // namespace

MarginalPair marginals(const PureState& state, Qubit q) {
    const int bit = 2 - index_of(q);
    const int hi = pair_bits[index_of(q)][0], lo = pair_bits[index_of(q)][1];
    MarginalPair out;
    out.q = q;
    for (int r = 0; r < 4; ++r) {
        const int i0 = ((r >> 1) << hi) | ((r & 1) << lo);
        out.phi0(r) = state.amp(i0);
        out.phi1(r) = state.amp(i0 | (1 << bit));
    }
    return out;
}

v4 spin_flip2(const v4& v) {
    static const c4x4 syy = Eigen::kroneckerProduct(sigma_y(), sigma_y()).eval();
    return syy * v.conjugate();
}

c2x2 tau_matrix(const MarginalPair& pair) {
    const v4 t0 = spin_flip2(pair.phi0), t1 = spin_flip2(pair.phi1);
    c2x2 tau;
    tau(0, 0) = pair.phi0.dot(t0);
    tau(0, 1) = pair.phi0.dot(t1);
    tau(1, 0) = pair.phi1.dot(t0);
    tau(1, 1) = pair.phi1.dot(t1);
    return tau;
}

WoottersRep wootters_rep(const PureState& state, Qubit q) {
    const c2x2 tau = tau_matrix(marginals(state, q));
    const TakagiResult tf = takagi2(tau);
    return WoottersRep{q, tf.u, tf.pi0, tf.pi1};
}

}  // namespace ghzdist
