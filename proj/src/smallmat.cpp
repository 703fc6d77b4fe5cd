#include "ghzdist/smallmat.hpp"

#include <algorithm>
#include <cmath>

namespace ghzdist {

namespace {

double scale_of(const c2x2& m) { return std::max(1.0, m.norm()); }

}  // namespace

bool is_hermitian(const c2x2& m, double tol) {
    return (m - m.adjoint()).norm() <= tol * scale_of(m);
}

bool is_symmetric(const c2x2& m, double tol) {
    return (m - m.transpose()).norm() <= tol * scale_of(m);
}

bool is_unitary(const c2x2& m, double tol) {
    return (m.adjoint() * m - c2x2::Identity()).norm() <= tol;
}

Eig2Result hermitian_eig2(const c2x2& h, double tol) {
    if (!is_hermitian(h, tol))
        throw ContractError("hermitian_eig2: input is not Hermitian");
    const c2x2 hh = 0.5 * (h + h.adjoint().eval());  // exact-Hermitian part
    const double a = hh(0, 0).real();
    const double c = hh(1, 1).real();
    const cx b = hh(0, 1);
    const double m = 0.5 * (a + c);
    const double half = 0.5 * (a - c);
    const double r = std::hypot(half, std::abs(b));

    Eig2Result out;
    out.values = {m + r, m - r};
    if (r <= 1e-300) {  // scalar matrix: any orthonormal basis works
        out.vectors = c2x2::Identity();
        return out;
    }
    // (r+half, conj(b)) and its orthogonal partner annihilate (h - e I); the
    // half<0 form avoids cancellation when a < c
    v2 v0;
    if (half >= 0)
        v0 << cx(r + half, 0.0), std::conj(b);
    else
        v0 << b, cx(r - half, 0.0);
    v0.normalize();
    v2 v1;
    v1 << -std::conj(v0(1)), std::conj(v0(0));
    out.vectors.col(0) = v0;
    out.vectors.col(1) = v1;
    return out;
}

Eig4Result hermitian_eig4(const c4x4& h, double tol) {
    if ((h - h.adjoint()).norm() > tol * std::max(1.0, h.norm()))
        throw ContractError("hermitian_eig4: input is not Hermitian");
    Eigen::SelfAdjointEigenSolver<c4x4> es(0.5 * (h + h.adjoint().eval()));
    Eig4Result out;
    for (int k = 0; k < 4; ++k) {  // solver is ascending; flip to descending
        out.values[k] = es.eigenvalues()(3 - k);
        out.vectors.col(k) = es.eigenvectors().col(3 - k);
    }
    return out;
}

namespace {

// Takagi via the real-symmetric embedding T = [[Re s, Im s],[Im s, -Re s]]:
// eigenpairs (sigma, (p;q)) give con-eigenvectors v = p + i q with
// v^H s conj(v) = sigma >= 0, so u with rows v_k^H factors s exactly. Stable
// at any singular gap, unlike eigenvectors of s*conj(s).
c2x2 takagi_embedding(const c2x2& s) {
    Eigen::Matrix4d t;
    const Eigen::Matrix2d re = s.real(), im = s.imag();
    t << re, im, im, -re;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(t);  // ascending
    c2x2 u;
    for (int k = 0; k < 2; ++k) {
        const auto col = es.eigenvectors().col(3 - k);  // largest two
        v2 v;
        v << cx(col(0), col(2)), cx(col(1), col(3));
        u.row(k) = v.adjoint();
    }
    return u;
}

// closest real orthogonal matrix to re(u), via 2x2 Procrustes
Eigen::Matrix2d closest_orthogonal(const Eigen::Matrix2d& a) {
    Eigen::JacobiSVD<Eigen::Matrix2d> svd(
        a, Eigen::ComputeFullU | Eigen::ComputeFullV);
    return svd.matrixU() * svd.matrixV().transpose();
}

}  // namespace

TakagiResult takagi2(const c2x2& s_in, double sym_tol) {
    if (!is_symmetric(s_in, sym_tol))
        throw ContractError("takagi2: input is not symmetric");
    const c2x2 s = 0.5 * (s_in + s_in.transpose().eval());

    TakagiResult out;
    if (s.norm() <= 1e-300) {
        out.u = c2x2::Identity();
        return out;
    }

    const c2x2 h = s * s.conjugate();  // Hermitian PSD, eigenvalues pi^2
    const Eig2Result eig = hermitian_eig2(h, 1e-6);
    const double sig0 = std::sqrt(std::max(eig.values[0], 0.0));
    // the small value via the quotient: sig0 * sig1 = |det s| holds to machine
    // precision, while sqrt(eigenvalue) bottoms out near sqrt(eps) on
    // rank-deficient input
    const double sig1 =
        std::min(sig0, std::abs(s.determinant()) / std::max(sig0, 1e-300));
    out.pi0 = sig0;
    out.pi1 = sig1;

    const double gap = sig0 - sig1;
    if (gap > 1e-4 * sig0) {
        // healthy gap: rows of u0 are the con-eigenvector adjoints; u0 s u0^T
        // is then automatically diagonal and a half-phase makes it >= 0
        const c2x2 u0 = eig.vectors.adjoint();
        const c2x2 z = u0 * s * u0.transpose();
        c2x2 u = c2x2::Zero();
        for (int k = 0; k < 2; ++k) {
            const double ang = std::arg(z(k, k));
            u.row(k) = std::exp(cx(0.0, -0.5 * ang)) * u0.row(k);
        }
        out.u = u;
        return out;
    }

    c2x2 u = takagi_embedding(s);
    if (gap <= 1e-10 * std::max(1.0, sig0)) {
        // degenerate: the valid factorizations are q*u with q in O(2); pick
        // the one closest to the identity for determinism
        const Eigen::Matrix2d q = closest_orthogonal(
            Eigen::Matrix2d(u.real().transpose()));
        u = (q * u).eval();
    }
    out.u = u;
    return out;
}

QuadRoots quad_roots_homogeneous(cx a, cx b, cx c) {
    const double scale = std::max({std::abs(a), std::abs(b), std::abs(c)});
    if (scale == 0.0)
        throw ArgumentError("quad_roots_homogeneous: all coefficients zero");
    a /= scale;
    b /= scale;
    c /= scale;

    QuadRoots out;
    const cx disc = b * b - 4.0 * a * c;
    out.double_root = std::abs(disc) <= 1e-12;

    std::array<std::array<cx, 2>, 2> roots;
    if (std::abs(a) <= 1e-14) {  // v (b u + c v) = 0
        if (std::abs(b) <= 1e-14) {
            roots = {{{cx(1), cx(0)}, {cx(1), cx(0)}}};
            out.double_root = true;
        } else {
            roots = {{{cx(1), cx(0)}, {-c, b}}};
        }
    } else {
        cx sq = std::sqrt(disc);
        if (std::abs(b + sq) < std::abs(b - sq)) sq = -sq;
        const cx q = -0.5 * (b + sq);
        if (std::abs(q) < 1e-300) {
            roots = {{{cx(0), cx(1)}, {cx(0), cx(1)}}};
        } else {
            roots = {{{q, a}, {c, q}}};  // u/v = q/a and c/q
        }
    }
    for (int k = 0; k < 2; ++k) {
        const double n = std::hypot(std::abs(roots[k][0]), std::abs(roots[k][1]));
        out.roots[k] = {roots[k][0] / n, roots[k][1] / n};
    }
    return out;
}

}  // namespace ghzdist
