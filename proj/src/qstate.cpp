#include "ghzdist/qstate.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include <unsupported/Eigen/KroneckerProduct>

namespace ghzdist {

PureState UnnormState::normalized() const {
    if (norm_sq <= 0.0)
        throw ContractError("normalized: zero-norm state");
    return PureState{amp / std::sqrt(norm_sq)};
}

double LocalOp::max_singular_value() const {
    // largest singular value of a 2x2: sqrt of the larger eigenvalue of m^H m
    const c2x2 g = m.adjoint() * m;
    const double tr = g.trace().real();
    const double det = std::abs(g.determinant());
    const double h = 0.5 * tr;
    const double r = std::sqrt(std::max(h * h - det, 0.0));
    return std::sqrt(std::max(h + r, 0.0));
}

PureState ghz_state() {
    v8 a = v8::Zero();
    a(0) = a(7) = 1.0 / std::numbers::sqrt2;
    return PureState{a};
}

PureState w_state() {
    v8 a = v8::Zero();
    a(1) = a(2) = a(4) = 1.0 / std::sqrt(3.0);
    return PureState{a};
}

namespace {

v8 apply_local_amp(const v8& amp, const c2x2& m, Qubit q) {
    const int bit = 2 - index_of(q);  // A is the most significant bit
    const int mask = 1 << bit;
    v8 out;
    for (int i = 0; i < 8; ++i) {
        if (i & mask) continue;
        const int j = i | mask;
        out(i) = m(0, 0) * amp(i) + m(0, 1) * amp(j);
        out(j) = m(1, 0) * amp(i) + m(1, 1) * amp(j);
    }
    return out;
}

}  // namespace

UnnormState apply_local(const PureState& state, const LocalOp& op) {
    const v8 out = apply_local_amp(state.amp, op.m, op.q);
    return UnnormState{out, out.squaredNorm()};
}

UnnormState apply_local(const UnnormState& state, const LocalOp& op) {
    const v8 out = apply_local_amp(state.amp, op.m, op.q);
    return UnnormState{out, out.squaredNorm()};
}

namespace {

inline int index3(int a, int b, int c) { return 4 * a + 2 * b + c; }

}  // namespace

c2x2 reduced_density1(const PureState& state, Qubit keep) {
    const int kb = 2 - index_of(keep);
    c2x2 rho = c2x2::Zero();
    for (int s = 0; s < 2; ++s)
        for (int t = 0; t < 2; ++t)
            for (int r = 0; r < 4; ++r) {
                // splice the kept bit into the two traced-bit pattern r
                const int hi = r >> kb, lo = r & ((1 << kb) - 1);
                const int i = (hi << (kb + 1)) | (s << kb) | lo;
                const int j = (hi << (kb + 1)) | (t << kb) | lo;
                rho(s, t) += state.amp(i) * std::conj(state.amp(j));
            }
    return rho;
}

c4x4 reduced_density2(const PureState& state, Qubit k1, Qubit k2) {
    if (k1 == k2)
        throw ArgumentError("reduced_density: repeated qubit");
    int q1 = index_of(k1), q2 = index_of(k2);
    if (q1 > q2) std::swap(q1, q2);  // result ordered A,B,C
    const int b1 = 2 - q1, b2 = 2 - q2;  // b1 > b2
    int traced = 0;
    for (int q = 0; q < 3; ++q)
        if (q != q1 && q != q2) traced = 2 - q;
    c4x4 rho = c4x4::Zero();
    for (int s = 0; s < 4; ++s)
        for (int t = 0; t < 4; ++t)
            for (int r = 0; r < 2; ++r) {
                const int i = ((s >> 1) << b1) | ((s & 1) << b2) | (r << traced);
                const int j = ((t >> 1) << b1) | ((t & 1) << b2) | (r << traced);
                rho(s, t) += state.amp(i) * std::conj(state.amp(j));
            }
    return rho;
}

Eigen::MatrixXcd reduced_density(const PureState& state,
                                 std::initializer_list<Qubit> keep) {
    if (keep.size() == 1) return reduced_density1(state, *keep.begin());
    if (keep.size() == 2) {
        auto it = keep.begin();
        const Qubit k1 = *it++;
        return reduced_density2(state, k1, *it);
    }
    throw ArgumentError("reduced_density: keep 1 or 2 qubits");
}

double concurrence2(const c4x4& rho, double tol) {
    if ((rho - rho.adjoint()).norm() > tol * std::max(1.0, rho.norm()))
        throw ContractError("concurrence2: density matrix is not Hermitian");
    const Eig4Result er = hermitian_eig4(rho, tol);
    if (er.values[3] < -tol)
        throw ContractError("concurrence2: density matrix is not PSD");
    // factor rho = l * l^dag over its numerical rank; the flip spectrum then
    // consists of the singular values of the rank-sized l^T (sy x sy) l, which
    // sidesteps the sqrt-of-eigenvalue noise floor of the dense product
    // rho * rho_tilde on rank-deficient input
    const double cutoff = 1e-13 * std::max(er.values[0], 0.0);
    c4x4 l = c4x4::Zero();  // truncated columns stay zero
    for (int k = 0; k < 4 && er.values[k] > cutoff; ++k)
        l.col(k) = std::sqrt(er.values[k]) * er.vectors.col(k);
    const c4x4 syy = Eigen::kroneckerProduct(sigma_y(), sigma_y()).eval();
    const Eigen::JacobiSVD<c4x4> svd(l.transpose() * syy * l);
    double gap = 0.0;
    for (int k = 0; k < 4; ++k)
        gap += (k == 0 ? 1.0 : -1.0) * svd.singularValues()(k);
    return std::max(0.0, gap);
}

double fidelity_ghz(const PureState& state) {
    return 0.5 * std::norm(state.amp(0) + state.amp(7));
}

double fidelity_ghz_phase_max(const PureState& state) {
    // |<ghz|e^{i p} psi>|^2 = |<ghz|psi>|^2 for every p
    return fidelity_ghz(state);
}

PureState haar_random(std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    auto uniform53 = [&gen]() {
        return static_cast<double>(gen() >> 11) * 0x1.0p-53;
    };
    v8 a;
    for (int k = 0; k < 8; ++k) {
        const double u1 = uniform53(), u2 = uniform53();
        const double rad = std::sqrt(-2.0 * std::log1p(-u1));
        const double ang = 2.0 * std::numbers::pi * u2;
        a(k) = cx(rad * std::cos(ang), rad * std::sin(ang));
    }
    a.normalize();
    return PureState{a};
}

}  // namespace ghzdist
