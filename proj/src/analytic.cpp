#include "ghzdist/analytic.hpp"

#include <cmath>
#include <numbers>

namespace ghzdist {
namespace {

c2x2 rot2(double t) {
    const double cs = std::cos(t), sn = std::sin(t);
    c2x2 r;
    r << cs, -sn, sn, cs;
    return r;
}

// rows (|0> - i|1>)/sqrt2, (|0> + i|1>)/sqrt2: anti-diagonalizes isotropic
// 2x2 symmetric forms, iso * (d*I) * iso^T = d * sigma_x
const c2x2& iso() {
    static const c2x2 m = [] {
        const double s = 1.0 / std::sqrt(2.0);
        c2x2 v;
        v << cx(s, 0), cx(0, -s), cx(s, 0), cx(0, s);
        return v;
    }();
    return m;
}

}  // namespace

bool CanonicalState::valid(double tol) const {
    double sum = 0.0;
    for (double l : lambda) {
        if (!(l >= 0.0)) return false;
        sum += l * l;
    }
    if (std::abs(sum - 1.0) > tol) return false;
    return phi >= 0.0 && phi <= std::numbers::pi;
}

PureState to_amplitudes(const CanonicalState& c) {
    if (!c.valid())
        throw ArgumentError(
            "to_amplitudes: lambda/phi outside the canonical domain");
    PureState s;
    s.amp.setZero();
    s.amp(0) = c.lambda[0];
    s.amp(4) = c.lambda[1] * std::exp(cx(0.0, c.phi));
    s.amp(5) = c.lambda[2];
    s.amp(6) = c.lambda[3];
    s.amp(7) = c.lambda[4];
    return s;
}

AnalyticIntermediates intermediates(const CanonicalState& c) {
    if (!c.valid())
        throw ArgumentError(
            "intermediates: lambda/phi outside the canonical domain");
    const double l0 = c.lambda[0], l1 = c.lambda[1], l2 = c.lambda[2],
                 l3 = c.lambda[3], l4 = c.lambda[4];
    if (l0 <= 0.0)
        throw NonDistillableError(StateClass{ClassTag::biseparable, Qubit::a},
                                  "intermediates: lambda0 = 0 (A factors out)");
    if (l4 <= 0.0)
        throw WClassError("intermediates: lambda4 = 0 (W-class)");

    AnalyticIntermediates in;
    in.delta = l2 * l3 - l1 * l4 * std::exp(cx(0.0, c.phi));
    const double ad = std::abs(in.delta);
    const double root_a = std::sqrt(ad * ad + l0 * l0 * l4 * l4);
    const double root_b = std::sqrt(l2 * l2 + l4 * l4);
    const double root_c = std::sqrt(l3 * l3 + l4 * l4);
    in.pi_a = {root_a + ad, root_a - ad};
    in.pi_b = {l0 * (root_b + l2), l0 * (root_b - l2)};
    in.pi_c = {l0 * (root_c + l3), l0 * (root_c - l3)};

    in.theta2 = std::atan((ad - root_a) / (l0 * l4));
    // theta3 divides by Im(delta); take the limit on the real axis
    const double num3 = ad + in.delta.real();
    const double wall = 1e-14 * std::max(ad, 1e-300);
    if (std::abs(in.delta.imag()) > wall)
        in.theta3 = -std::atan(num3 / in.delta.imag());
    else
        in.theta3 = num3 > wall ? -std::numbers::pi / 2.0 : 0.0;
    in.theta_b = std::atan((l2 - root_b) / l4);
    in.theta_c = std::atan((l3 - root_c) / l4);

    in.ratio_raw = std::sqrt(root_b * root_b * root_c * root_c /
                             (root_a * root_a));
    in.swapped = in.ratio_raw > 1.0;
    in.ratio = in.swapped ? 1.0 / in.ratio_raw : in.ratio_raw;
    return in;
}

DistillationPlan analytic_plan(const CanonicalState& c, Qubit balance) {
    const AnalyticIntermediates in = intermediates(c);
    const std::array<double, 2> pis[3] = {in.pi_a, in.pi_b, in.pi_c};
    for (const auto& p : pis)
        if (pi1_snapped_zero(p[0], p[1]))
            throw WClassError("analytic_plan: a pi pair is rank-deficient");

    c2x2 u1 = c2x2::Zero(), p3 = c2x2::Zero();
    u1(0, 0) = 1.0;
    u1(1, 1) = cx(0.0, 1.0);
    p3(0, 0) = std::exp(cx(0.0, -in.theta3));
    p3(1, 1) = std::exp(cx(0.0, in.theta3));
    const c2x2 us[3] = {u1 * rot2(std::numbers::pi / 2.0 - in.theta2) * p3,
                        u1 * rot2(in.theta_b), u1 * rot2(in.theta_c)};

    LocalOp fs[3];
    c2x2 prim[3];
    for (int q = 0; q < 3; ++q) {
        fs[q] = filter_op(
            WoottersRep{static_cast<Qubit>(q), us[q], pis[q][0], pis[q][1]});
        prim[q] = iso() * us[q];
    }

    UnnormState cur{to_amplitudes(c).amp, 1.0};
    for (int q = 0; q < 3; ++q) cur = apply_local(cur, fs[q]);
    const double n1 = cur.norm_sq;
    const PureState filtered = cur.normalized();

    auto coeff = [&](int i, int j, int k) {
        v8 v;
        for (int x = 0; x < 2; ++x)
            for (int y = 0; y < 2; ++y)
                for (int z = 0; z < 2; ++z)
                    v(4 * x + 2 * y + z) =
                        prim[0](i, x) * prim[1](j, y) * prim[2](k, z);
        return cx(v.dot(filtered.amp));
    };

    // relabel each primed basis so the dominant product slot is |1'1'1'>
    int dom[3] = {0, 0, 0};
    double best = -1.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) {
                const double m = std::abs(coeff(i, j, k));
                if (m > best) {
                    best = m;
                    dom[0] = i;
                    dom[1] = j;
                    dom[2] = k;
                }
            }
    for (int q = 0; q < 3; ++q)
        if (dom[q] == 0) prim[q].row(0).swap(prim[q].row(1));

    cx al = coeff(0, 0, 0), be = coeff(1, 1, 1);
    prim[0].row(0) *= std::exp(cx(0.0, std::arg(al)));
    prim[0].row(1) *= std::exp(cx(0.0, std::arg(be)));
    const double a = std::abs(al), b = std::abs(be);

    const int bq = index_of(balance);
    const v2 r0 = prim[bq].row(0).transpose(), r1 = prim[bq].row(1).transpose();
    const c2x2 fp = r0 * r0.adjoint() + in.ratio * (r1 * r1.adjoint());
    const double n2 = a * a + in.ratio * in.ratio * b * b;

    DistillationPlan plan;
    plan.success_probability = n1 * n2;
    if (gghz_conditions(c, 1e-9)) {
        const double lo = std::min(c.lambda[0], c.lambda[4]);
        const double hi = std::max(c.lambda[0], c.lambda[4]);
        plan.cls = StateClass{ClassTag::generalized_ghz, Qubit::a, lo, hi};
    } else {
        plan.cls = StateClass{ClassTag::ghz_class};
    }
    LocalOp* ops[3] = {&plan.t_a, &plan.t_b, &plan.t_c};
    for (int q = 0; q < 3; ++q) {
        c2x2 m = prim[q].conjugate() * fs[q].m;
        if (q == bq) m = prim[q].conjugate() * fp * fs[q].m;
        *ops[q] = LocalOp{m, static_cast<Qubit>(q)};
    }
    return plan;
}

bool gghz_conditions(const CanonicalState& c, double tol) {
    if (!c.valid())
        throw ArgumentError(
            "gghz_conditions: lambda/phi outside the canonical domain");
    const cx delta = c.lambda[2] * c.lambda[3] -
                     c.lambda[1] * c.lambda[4] * std::exp(cx(0.0, c.phi));
    return std::abs(delta) <= tol && c.lambda[0] * c.lambda[2] <= tol &&
           c.lambda[0] * c.lambda[3] <= tol;
}

}  // namespace ghzdist
