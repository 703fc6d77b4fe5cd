#include <doctest.h>

#include "helpers.hpp"

using namespace ghzdist;
using testutil::rand_cx;
using testutil::rand_hermitian;
using testutil::rand_symmetric;
using testutil::rand_unitary;

namespace {

double takagi_residual(const c2x2& s, const TakagiResult& t) {
    c2x2 d = c2x2::Zero();
    d(0, 0) = t.pi0;
    d(1, 1) = t.pi1;
    return (t.u * s * t.u.transpose() - d).norm();
}

}  // namespace

TEST_CASE("pauli constants") {
    CHECK(is_hermitian(sigma_x()));
    CHECK(is_hermitian(sigma_y()));
    CHECK(is_hermitian(sigma_z()));
    CHECK(is_unitary(sigma_y()));
    CHECK(sigma_y()(0, 1) == cx(0.0, -1.0));
    CHECK(sigma_y()(1, 0) == cx(0.0, 1.0));
    CHECK((sigma_y() * sigma_y() - c2x2::Identity()).norm() == 0.0);
}

TEST_CASE("matrix predicates") {
    c2x2 h;
    h << 2.0, 1.0, 1.0, 2.0;
    CHECK(is_hermitian(h));
    CHECK(is_symmetric(h));
    CHECK_FALSE(is_unitary(h));

    c2x2 skew;
    skew << 0.0, 1.0, -1.0, 0.0;
    CHECK_FALSE(is_symmetric(skew));
    CHECK(is_unitary(skew));

    c2x2 almost = c2x2::Identity();
    almost(0, 1) = 1e-7;
    CHECK_FALSE(is_hermitian(almost));
    CHECK(is_hermitian(almost, 1e-6));
}

TEST_CASE("hermitian_eig2 fixed cases") {
    const Eig2Result id = hermitian_eig2(c2x2::Identity());
    CHECK(id.values[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(id.values[1] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK((id.vectors.adjoint() * id.vectors - c2x2::Identity()).norm() <= 1e-12);

    c2x2 d;
    d << 3.0, 0.0, 0.0, 1.0;
    const Eig2Result ed = hermitian_eig2(d);
    CHECK(ed.values[0] == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(ed.values[1] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(ed.vectors(0, 0)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(ed.vectors(1, 1)) == doctest::Approx(1.0).epsilon(1e-12));

    c2x2 h;
    h << 2.0, 1.0, 1.0, 2.0;
    const Eig2Result eh = hermitian_eig2(h);
    CHECK(eh.values[0] == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(eh.values[1] == doctest::Approx(1.0).epsilon(1e-14));
    const v2 plus = (v2() << 1.0, 1.0).finished() / std::sqrt(2.0);
    const v2 minus = (v2() << 1.0, -1.0).finished() / std::sqrt(2.0);
    CHECK(std::abs(plus.dot(eh.vectors.col(0))) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(minus.dot(eh.vectors.col(1))) ==
          doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("hermitian_eig2 rejects non-hermitian input") {
    c2x2 m;
    m << 1.0, cx(0.0, 1.0), cx(0.0, 1.0), 1.0;  // symmetric, not Hermitian
    CHECK_THROWS_AS(hermitian_eig2(m), ContractError);
}

TEST_CASE("hermitian_eig2 random property sweep") {
    std::mt19937_64 g(101);
    double worst_res = 0.0, worst_orth = 0.0, worst_val = 0.0;
    for (int trial = 0; trial < 10000; ++trial) {
        c2x2 h = rand_hermitian(g);
        if (trial % 3 == 1) h *= 1e6;
        if (trial % 3 == 2) h *= 1e-6;
        const Eig2Result e = hermitian_eig2(h);
        REQUIRE(e.values[0] >= e.values[1]);
        const double scale = std::max(1.0, h.norm());
        for (int k = 0; k < 2; ++k)
            worst_res = std::max(
                worst_res,
                (h * e.vectors.col(k) - e.values[k] * e.vectors.col(k)).norm() /
                    scale);
        worst_orth = std::max(
            worst_orth,
            (e.vectors.adjoint() * e.vectors - c2x2::Identity()).norm());
        // independent oracle: dense solver eigenvalues
        Eigen::SelfAdjointEigenSolver<c2x2> es(h);
        worst_val = std::max(
            {worst_val, std::abs(e.values[0] - es.eigenvalues()(1)) / scale,
             std::abs(e.values[1] - es.eigenvalues()(0)) / scale});
    }
    CHECK(worst_res <= 1e-12);
    CHECK(worst_orth <= 1e-12);
    CHECK(worst_val <= 1e-12);
}

TEST_CASE("takagi2 fixed cases") {
    SUBCASE("zero matrix") {
        const TakagiResult t = takagi2(c2x2::Zero());
        CHECK(t.pi0 == 0.0);
        CHECK(t.pi1 == 0.0);
        CHECK((t.u - c2x2::Identity()).norm() == 0.0);
    }
    SUBCASE("balanced off-diagonal") {
        c2x2 s;
        s << 0.0, -0.5, -0.5, 0.0;
        const TakagiResult t = takagi2(s);
        CHECK(t.pi0 == doctest::Approx(0.5).epsilon(1e-13));
        CHECK(t.pi1 == doctest::Approx(0.5).epsilon(1e-13));
        CHECK(takagi_residual(s, t) <= 1e-12);
        CHECK(is_unitary(t.u, 1e-12));
    }
    SUBCASE("complex diagonal phases") {
        c2x2 s = c2x2::Zero();
        s(0, 0) = 2.0;
        s(1, 1) = cx(0.0, 1.0);
        const TakagiResult t = takagi2(s);
        CHECK(t.pi0 == doctest::Approx(2.0).epsilon(1e-13));
        CHECK(t.pi1 == doctest::Approx(1.0).epsilon(1e-13));
        CHECK(takagi_residual(s, t) <= 1e-12);
    }
}

TEST_CASE("takagi2 rejects asymmetric input") {
    c2x2 m;
    m << 1.0, 0.3, -0.3, 1.0;
    CHECK_THROWS_AS(takagi2(m), ContractError);
}

TEST_CASE("takagi2 random property sweep") {
    std::mt19937_64 g(202);
    double worst_rec = 0.0, worst_uni = 0.0, worst_match = 0.0;
    for (int trial = 0; trial < 10000; ++trial) {
        c2x2 s = rand_symmetric(g);
        if (trial % 4 == 1) s *= 1e5;
        if (trial % 4 == 2) s *= 1e-5;
        if (trial % 4 == 3) {
            // exactly degenerate singular values: scaled unitary-symmetric
            const c2x2 u = rand_unitary(g);
            s = rand_cx(g) * (u * u.transpose()).eval();
        }
        const TakagiResult t = takagi2(s);
        const double scale = std::max(1.0, s.norm());
        REQUIRE(t.pi0 >= t.pi1);
        REQUIRE(t.pi1 >= 0.0);
        worst_rec = std::max(worst_rec, takagi_residual(s, t) / scale);
        worst_uni = std::max(
            worst_uni, (t.u.adjoint() * t.u - c2x2::Identity()).norm());
        // oracle: singular values from the Hermitian eigenproblem of S S*
        const Eig2Result e = hermitian_eig2((s * s.conjugate()).eval(), 1e-6);
        worst_match = std::max(
            {worst_match,
             std::abs(t.pi0 - std::sqrt(std::max(0.0, e.values[0]))) / scale,
             std::abs(t.pi1 - std::sqrt(std::max(0.0, e.values[1]))) / scale});
    }
    CHECK(worst_rec <= 1e-10);
    CHECK(worst_uni <= 1e-12);
    CHECK(worst_match <= 1e-10);
}

TEST_CASE("takagi2 near-degenerate stability") {
    std::mt19937_64 g(303);
    for (int trial = 0; trial < 2000; ++trial) {
        const c2x2 u = rand_unitary(g);
        c2x2 d = c2x2::Zero();
        const double base = 0.5;
        d(0, 0) = base;
        d(1, 1) = base * (1.0 - std::pow(10.0, -3.0 - (trial % 10)));
        const c2x2 s = (u * d * u.transpose()).eval();
        const TakagiResult t = takagi2(s);
        CHECK(takagi_residual(s, t) <= 1e-10);
        CHECK(is_unitary(t.u, 1e-12));
    }
}

TEST_CASE("takagi2 resolves rank-deficient input to machine precision") {
    // pi1 must come out ~0 (not ~sqrt(eps)) on exactly singular matrices,
    // or downstream rank decisions keyed to 1e-9 thresholds misfire
    std::mt19937_64 g(404);
    double worst_pi1 = 0.0, worst_pi0 = 0.0, worst_rec = 0.0;
    for (int trial = 0; trial < 2000; ++trial) {
        Eigen::Vector2cd v(rand_cx(g), rand_cx(g));
        v.normalize();
        const cx z = rand_cx(g);
        const c2x2 s = z * (v * v.transpose()).eval();  // symmetric, rank one
        const TakagiResult t = takagi2(s);
        worst_pi1 = std::max(worst_pi1, t.pi1 / std::abs(z));
        worst_pi0 = std::max(worst_pi0, std::abs(t.pi0 - std::abs(z)));
        worst_rec = std::max(worst_rec, takagi_residual(s, t) / std::abs(z));
        CHECK(is_unitary(t.u, 1e-12));
    }
    CHECK(worst_pi1 <= 1e-13);
    CHECK(worst_pi0 <= 1e-12);
    CHECK(worst_rec <= 1e-12);
}

TEST_CASE("quad_roots_homogeneous fixed cases") {
    SUBCASE("difference of squares") {
        const QuadRoots r = quad_roots_homogeneous(1.0, 0.0, -1.0);
        CHECK_FALSE(r.double_root);
        for (int k = 0; k < 2; ++k) {
            const cx ratio = r.roots[k][0] / r.roots[k][1];
            CHECK(std::min(std::abs(ratio - 1.0), std::abs(ratio + 1.0)) <=
                  1e-14);
        }
        const cx r0 = r.roots[0][0] / r.roots[0][1];
        const cx r1 = r.roots[1][0] / r.roots[1][1];
        CHECK(std::abs(r0 - r1) > 1.0);  // the two signs are both present
    }
    SUBCASE("uv = 0") {
        const QuadRoots r = quad_roots_homogeneous(0.0, 1.0, 0.0);
        CHECK_FALSE(r.double_root);
        CHECK(std::abs(r.roots[0][0]) == doctest::Approx(1.0));
        CHECK(std::abs(r.roots[0][1]) == doctest::Approx(0.0));
        CHECK(std::abs(r.roots[1][0]) == doctest::Approx(0.0));
        CHECK(std::abs(r.roots[1][1]) == doctest::Approx(1.0));
    }
    SUBCASE("perfect square flags a double root") {
        const QuadRoots r = quad_roots_homogeneous(1.0, -2.0, 1.0);
        CHECK(r.double_root);
        CHECK(std::abs(r.roots[0][0] / r.roots[0][1] - cx(1.0)) <= 1e-12);
    }
    SUBCASE("all-zero coefficients are rejected") {
        CHECK_THROWS_AS(quad_roots_homogeneous(0.0, 0.0, 0.0), ArgumentError);
    }
}

TEST_CASE("quad_roots_homogeneous residual property") {
    std::mt19937_64 g(404);
    double worst = 0.0;
    for (int trial = 0; trial < 10000; ++trial) {
        cx a = rand_cx(g), b = rand_cx(g), c = rand_cx(g);
        if (trial % 5 == 0) a = 0.0;
        if (trial % 7 == 0) c = 0.0;
        const double scale = std::max({std::abs(a), std::abs(b), std::abs(c)});
        if (scale == 0.0) continue;
        const QuadRoots r = quad_roots_homogeneous(a, b, c);
        for (int k = 0; k < 2; ++k) {
            const cx u = r.roots[k][0], v = r.roots[k][1];
            worst = std::max(worst,
                             std::abs(a * u * u + b * u * v + c * v * v) / scale);
        }
    }
    CHECK(worst <= 1e-12);
}
