#pragma once
#include <random>

#include "ghzdist/analytic.hpp"

// Shared corpus generators for the test binaries. Each test seeds its own
// generator so cases stay order-independent.

namespace testutil {

using ghzdist::c2x2;
using ghzdist::c4x4;
using ghzdist::cx;
using ghzdist::v8;

inline cx rand_cx(std::mt19937_64& g) {
    std::normal_distribution<double> n;
    const double re = n(g), im = n(g);
    return cx(re, im);
}

inline c2x2 rand_matrix(std::mt19937_64& g) {
    c2x2 m;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m(i, j) = rand_cx(g);
    return m;
}

inline c2x2 rand_hermitian(std::mt19937_64& g) {
    const c2x2 m = rand_matrix(g);
    return 0.5 * (m + m.adjoint()).eval();
}

inline c2x2 rand_symmetric(std::mt19937_64& g) {
    const c2x2 m = rand_matrix(g);
    return 0.5 * (m + m.transpose()).eval();
}

// Haar unitary: QR of a Gaussian matrix with the R-diagonal phases absorbed
inline c2x2 rand_unitary(std::mt19937_64& g) {
    const c2x2 m = rand_matrix(g);
    Eigen::HouseholderQR<c2x2> qr(m);
    c2x2 q = qr.householderQ();
    const c2x2 r = qr.matrixQR();
    for (int k = 0; k < 2; ++k) {
        const cx d = r(k, k);
        if (std::abs(d) > 0) q.col(k) *= d / std::abs(d);
    }
    return q;
}

// well-conditioned invertible operator, scaled to a contraction
inline c2x2 rand_invertible(std::mt19937_64& g) {
    for (;;) {
        c2x2 m = rand_matrix(g);
        const double big = ghzdist::LocalOp{m, ghzdist::Qubit::a}.max_singular_value();
        const double small = std::abs(m.determinant()) / big;
        if (small >= 0.1 * big) return (m / big).eval();
    }
}

inline ghzdist::CanonicalState rand_canonical(std::mt19937_64& g,
                                              double lmin = 0.05) {
    std::normal_distribution<double> n;
    std::uniform_real_distribution<double> u(0.0, std::acos(-1.0));
    for (;;) {
        ghzdist::CanonicalState c;
        double s = 0.0;
        for (double& l : c.lambda) {
            l = std::abs(n(g));
            s += l * l;
        }
        s = std::sqrt(s);
        for (double& l : c.lambda) l /= s;
        if (c.lambda[0] < lmin || c.lambda[4] < lmin) continue;
        c.phi = u(g);
        return c;
    }
}

inline v8 basis_ket(int i) {
    v8 v = v8::Zero();
    v(i) = 1.0;
    return v;
}

inline ghzdist::PureState apply_normalized(const ghzdist::PureState& s,
                                           const ghzdist::LocalOp& op) {
    return ghzdist::apply_local(s, op).normalized();
}

inline c4x4 kron2(const c2x2& a, const c2x2& b) {
    c4x4 k;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            k.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    return k;
}

// expand alpha |0'0'0'> + beta |1'1'1'> back to amplitudes
inline v8 form_reconstruction(const ghzdist::GghzForm& f) {
    v8 v = v8::Zero();
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int z = 0; z < 2; ++z)
                v(4 * x + 2 * y + z) =
                    f.alpha * f.basis_a(0, x) * f.basis_b(0, y) * f.basis_c(0, z) +
                    f.beta * f.basis_a(1, x) * f.basis_b(1, y) * f.basis_c(1, z);
    return v;
}

}  // namespace testutil
