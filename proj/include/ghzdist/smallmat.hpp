#pragma once
#include <array>
#include <complex>
#include <Eigen/Dense>

#include "ghzdist/errors.hpp"

// Small complex-matrix algebra with exact contracts: closed-form 2x2 Hermitian
// eigendecomposition, Takagi factorization of 2x2 complex symmetric matrices,
// homogeneous quadratic roots, and the Pauli constants. A 4x4 Hermitian
// eigensolver lives here too since the concurrence needs one.

namespace ghzdist {

using cx = std::complex<double>;
using c2x2 = Eigen::Matrix2cd;
using c4x4 = Eigen::Matrix4cd;
using v2 = Eigen::Vector2cd;
using v4 = Eigen::Vector4cd;

inline c2x2 sigma_x() { return (c2x2() << 0, 1, 1, 0).finished(); }
inline c2x2 sigma_y() { return (c2x2() << 0, cx(0, -1), cx(0, 1), 0).finished(); }
inline c2x2 sigma_z() { return (c2x2() << 1, 0, 0, -1).finished(); }

bool is_hermitian(const c2x2& m, double tol = 1e-9);
bool is_symmetric(const c2x2& m, double tol = 1e-9);
bool is_unitary(const c2x2& m, double tol = 1e-9);

struct Eig2Result {
    std::array<double, 2> values;  // descending
    c2x2 vectors;                  // orthonormal columns, vectors.col(k) <-> values[k]
};

// closed-form eigendecomposition of a 2x2 Hermitian matrix
// post: h * col(k) = values[k] * col(k) within 1e-12 * |h|
Eig2Result hermitian_eig2(const c2x2& h, double tol = 1e-9);

struct Eig4Result {
    std::array<double, 4> values;  // descending
    c4x4 vectors;
};

// 4x4 Hermitian eigendecomposition (dense solver), descending order
Eig4Result hermitian_eig4(const c4x4& h, double tol = 1e-9);

struct TakagiResult {
    c2x2 u;  // unitary
    double pi0 = 0.0, pi1 = 0.0;  // pi0 >= pi1 >= 0
};

// Takagi factorization: u * s * u^T = diag(pi0, pi1), pi0 >= pi1 >= 0.
// pi values equal the square roots of the eigenvalues of s * conj(s).
// Degenerate s (pi0 == pi1) picks the u closest to the identity for
// determinism.
TakagiResult takagi2(const c2x2& s, double sym_tol = 1e-9);

struct QuadRoots {
    // two projective roots (u : v) of a*u^2 + b*u*v + c*v^2 = 0, each
    // normalized to unit length
    std::array<std::array<cx, 2>, 2> roots;
    bool double_root = false;
};

// pre: not all of a, b, c zero (throws ArgumentError otherwise)
QuadRoots quad_roots_homogeneous(cx a, cx b, cx c);

}  // namespace ghzdist
