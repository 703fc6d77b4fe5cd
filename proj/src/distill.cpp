#include "ghzdist/distill.hpp"

#include <cmath>

namespace ghzdist {

std::string class_tag_name(ClassTag tag) {
    switch (tag) {
        case ClassTag::product: return "Product";
        case ClassTag::biseparable: return "Biseparable";
        case ClassTag::w_class: return "WClass";
        case ClassTag::ghz_class: return "GhzClass";
        case ClassTag::generalized_ghz: return "GeneralizedGhz";
    }
    return "?";
}

std::string StateClass::name() const {
    if (tag == ClassTag::biseparable) {
        const std::string rest = (cut == Qubit::a)   ? "A|BC"
                                 : (cut == Qubit::b) ? "B|AC"
                                                     : "C|AB";
        return "Biseparable(" + rest + ")";
    }
    return class_tag_name(tag);
}

const c2x2& GghzForm::basis(Qubit q) const {
    switch (index_of(q)) {
        case 0: return basis_a;
        case 1: return basis_b;
        default: return basis_c;
    }
}

const LocalOp& DistillationPlan::op(Qubit q) const {
    switch (index_of(q)) {
        case 0: return t_a;
        case 1: return t_b;
        default: return t_c;
    }
}

StateClass classify(const PureState& state, double tol) {
    if (!state.is_normalized())
        throw ArgumentError("classify: state is not normalized");

    // marginal purity first: largest eigenvalue of each 1-qubit marginal
    double purity[3];
    for (int q = 0; q < 3; ++q) {
        const c2x2 rho = reduced_density1(state, static_cast<Qubit>(q));
        purity[q] = hermitian_eig2(rho, 1e-6).values[0];
    }
    int n_pure = 0;
    int purest = 0;
    for (int q = 0; q < 3; ++q) {
        if (purity[q] >= 1.0 - tol) ++n_pure;
        if (purity[q] > purity[purest]) purest = q;
    }
    if (n_pure >= 2) return StateClass{ClassTag::product};
    if (n_pure == 1)
        return StateClass{ClassTag::biseparable, static_cast<Qubit>(purest)};

    // genuinely tripartite: the Wootters parameters decide
    WoottersRep reps[3];
    bool any_zero = false, all_balanced = true;
    for (int q = 0; q < 3; ++q) {
        reps[q] = wootters_rep(state, static_cast<Qubit>(q));
        any_zero |= pi1_snapped_zero(reps[q].pi0, reps[q].pi1);
        all_balanced &= (reps[q].pi0 - reps[q].pi1) <= tol * std::max(1.0, reps[q].pi0);
    }
    if (any_zero) return StateClass{ClassTag::w_class};

    if (all_balanced) {
        try {
            const GghzForm form = extract_gghz(state, std::max(100.0 * tol, 1e-7));
            return StateClass{ClassTag::generalized_ghz, Qubit::a, form.alpha,
                              form.beta};
        } catch (const NotGghzError&) {
            // balanced pi but not a two-term product-basis state
        }
    }
    return StateClass{ClassTag::ghz_class};
}

LocalOp filter_op(const WoottersRep& rep) {
    if (pi1_snapped_zero(rep.pi0, rep.pi1))
        throw WClassError("filter_op: pi1 = 0, state is W-class");
    c2x2 d = c2x2::Zero();
    d(0, 0) = std::sqrt(rep.pi1 / rep.pi0);
    d(1, 1) = 1.0;
    return LocalOp{rep.u.transpose() * d * rep.u.conjugate(), rep.q};
}

GghzForm extract_gghz(const PureState& state, double tol) {
    // conditional-amplitude matrices of qubit A: amp(4a+2b+c) = (M_a)_{bc}
    c2x2 m0, m1;
    for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c) {
            m0(b, c) = state.amp(2 * b + c);
            m1(b, c) = state.amp(4 + 2 * b + c);
        }
    const cx qa = m0.determinant();
    const cx qc = m1.determinant();
    const cx qb = (m0 + m1).determinant() - qa - qc;

    QuadRoots qr;
    try {
        qr = quad_roots_homogeneous(qa, qb, qc);
    } catch (const ArgumentError&) {
        // both conditionals singular in every combination: not a two-term form
        throw NotGghzError("extract_gghz: degenerate determinant quadratic");
    }
    if (qr.double_root)
        throw NotGghzError("extract_gghz: double root (vanishing three-tangle)");

    // the A-basis kets are orthogonal to the conjugated roots
    v2 k0, k1;
    k0 << std::conj(qr.roots[0][0]), std::conj(qr.roots[0][1]);
    k1 << std::conj(qr.roots[1][0]), std::conj(qr.roots[1][1]);
    k1 -= k0 * k0.dot(k1);
    const double k1n = k1.norm();
    if (k1n <= 1e-12)
        throw NotGghzError("extract_gghz: A-directions collapse");
    k1 /= k1n;

    // conditional of each A-direction is rank-1; factor it by SVD
    v2 bs[2], cs[2];
    const v2 ks[2] = {k0, k1};
    for (int i = 0; i < 2; ++i) {
        const c2x2 cond = std::conj(ks[i](0)) * m0 + std::conj(ks[i](1)) * m1;
        Eigen::JacobiSVD<c2x2> svd(cond,
                                   Eigen::ComputeFullU | Eigen::ComputeFullV);
        bs[i] = svd.matrixU().col(0);
        // amplitudes factor as (b)_j (c)_k with c the first row of V^H
        cs[i] = svd.matrixV().col(0).conjugate();
    }
    bs[1] -= bs[0] * bs[0].dot(bs[1]);
    cs[1] -= cs[0] * cs[0].dot(cs[1]);
    const double bn = bs[1].norm(), cn = cs[1].norm();
    if (bn <= 1e-12 || cn <= 1e-12)
        throw NotGghzError("extract_gghz: conditional factors collapse");
    bs[1] /= bn;
    cs[1] /= cn;

    auto product_ket = [&](int i, const v2 a[2], const v2 b[2], const v2 c[2]) {
        v8 v;
        for (int x = 0; x < 2; ++x)
            for (int y = 0; y < 2; ++y)
                for (int z = 0; z < 2; ++z)
                    v(4 * x + 2 * y + z) = a[i](x) * b[i](y) * c[i](z);
        return v;
    };

    v2 as[2] = {k0, k1};
    v8 ket0 = product_ket(0, as, bs, cs);
    v8 ket1 = product_ket(1, as, bs, cs);
    cx co0 = ket0.dot(state.amp);
    cx co1 = ket1.dot(state.amp);
    const double resid = (state.amp - co0 * ket0 - co1 * ket1).norm();
    if (resid > tol)
        throw NotGghzError("extract_gghz: off-form residual " +
                           std::to_string(resid));

    // phases into the A rows so both amplitudes are real non-negative
    as[0] *= std::exp(cx(0.0, std::arg(co0)));
    as[1] *= std::exp(cx(0.0, std::arg(co1)));
    double alpha = std::abs(co0), beta = std::abs(co1);
    int lo = 0;
    if (alpha > beta) {  // swap primed labels on all three qubits
        std::swap(alpha, beta);
        lo = 1;
    }
    GghzForm form;
    form.alpha = alpha;
    form.beta = beta;
    form.basis_a.row(0) = as[lo].transpose();
    form.basis_a.row(1) = as[1 - lo].transpose();
    form.basis_b.row(0) = bs[lo].transpose();
    form.basis_b.row(1) = bs[1 - lo].transpose();
    form.basis_c.row(0) = cs[lo].transpose();
    form.basis_c.row(1) = cs[1 - lo].transpose();
    return form;
}

LocalOp balance_op(const GghzForm& form, Qubit target) {
    if (form.beta <= 0.0)
        throw ArgumentError("balance_op: degenerate form (beta = 0)");
    const c2x2& basis = form.basis(target);
    if (form.beta - form.alpha <= 1e-9)  // balanced: no branch loss
        return LocalOp{c2x2::Identity(), target};
    const v2 r0 = basis.row(0).transpose(), r1 = basis.row(1).transpose();
    const c2x2 m = r0 * r0.adjoint() +
                   (form.alpha / form.beta) * (r1 * r1.adjoint());
    return LocalOp{m, target};
}

LocalOp revert_unitary(const c2x2& basis, Qubit q, double tol) {
    if (!is_unitary(basis, tol))
        throw ContractError("revert_unitary: basis is not unitary");
    return LocalOp{basis.conjugate(), q};  // rows become <0'|, <1'|
}

DistillationPlan distill_plan(const PureState& state, double tol, Qubit balance) {
    const StateClass cls = classify(state, tol);
    if (!cls.distillable())
        throw NonDistillableError(cls, "distill_plan: class " + cls.name());

    LocalOp fs[3];
    UnnormState cur{state.amp, 1.0};
    for (int q = 0; q < 3; ++q) {
        fs[q] = filter_op(wootters_rep(state, static_cast<Qubit>(q)));
        cur = apply_local(cur, fs[q]);
    }
    const double n1 = cur.norm_sq;
    const PureState filtered = cur.normalized();

    const GghzForm form = extract_gghz(filtered, std::max(100.0 * tol, 1e-7));
    const LocalOp fprime = balance_op(form, balance);
    const double n2 = apply_local(filtered, fprime).norm_sq;

    DistillationPlan plan;
    plan.cls = cls;
    plan.success_probability = n1 * n2;
    LocalOp* ops[3] = {&plan.t_a, &plan.t_b, &plan.t_c};
    for (int q = 0; q < 3; ++q) {
        const Qubit qu = static_cast<Qubit>(q);
        const LocalOp revert = revert_unitary(form.basis(qu), qu);
        c2x2 m = revert.m * fs[q].m;
        if (qu == balance) m = revert.m * fprime.m * fs[q].m;
        *ops[q] = LocalOp{m, qu};
    }
    return plan;
}

UnnormState apply_plan(const PureState& state, const DistillationPlan& plan) {
    UnnormState cur{state.amp, state.norm_sq()};
    cur = apply_local(cur, plan.t_a);
    cur = apply_local(cur, plan.t_b);
    cur = apply_local(cur, plan.t_c);
    return cur;
}

double success_probability(const PureState& state, const DistillationPlan& plan) {
    return apply_plan(state, plan).norm_sq;
}

}  // namespace ghzdist
