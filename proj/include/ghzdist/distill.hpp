#pragma once
#include <string>

#include "ghzdist/wootters.hpp"

// End-to-end numeric distillation pipeline: classification, filter synthesis,
// generalized-GHZ extraction, balancing, basis reversion, plan assembly with
// success probability.

namespace ghzdist {

enum class ClassTag { product, biseparable, w_class, ghz_class, generalized_ghz };

struct StateClass {
    ClassTag tag = ClassTag::product;
    Qubit cut = Qubit::a;      // biseparable only: the pure-marginal qubit
    double alpha = 0.0, beta = 0.0;  // generalized_ghz only, alpha <= beta

    std::string name() const;  // "Product", "Biseparable(A|BC)", "WClass", ...
    bool distillable() const {
        return tag == ClassTag::ghz_class || tag == ClassTag::generalized_ghz;
    }
};

std::string class_tag_name(ClassTag tag);

// thrown when a plan is requested for a state that admits none
struct NonDistillableError : Error {
    StateClass cls;
    NonDistillableError(StateClass c, const std::string& msg)
        : Error(msg), cls(c) {}
};

// pi1 = 0: the filter does not exist and the state is W-class
struct WClassError : NonDistillableError {
    explicit WClassError(const std::string& msg)
        : NonDistillableError(StateClass{ClassTag::w_class}, msg) {}
};

// the state is not (within tolerance) a two-term product-basis superposition
struct NotGghzError : Error {
    using Error::Error;
};

// alpha |0'0'0'> + beta |1'1'1'> with per-qubit orthonormal bases; each basis
// matrix holds |0'>, |1'> as its rows in the standard basis
struct GghzForm {
    double alpha = 0.0, beta = 0.0;  // 0 <= alpha <= beta, alpha^2+beta^2 = 1
    c2x2 basis_a, basis_b, basis_c;

    const c2x2& basis(Qubit q) const;
};

struct DistillationPlan {
    LocalOp t_a, t_b, t_c;
    double success_probability = 0.0;
    StateClass cls;

    const LocalOp& op(Qubit q) const;
};

// Product / Biseparable(cut) via marginal purity, then WClass / GhzClass /
// GeneralizedGhz via the Wootters parameters
StateClass classify(const PureState& state, double tol = 1e-9);

// f = u^T [ sqrt(pi1/pi0)|0><0| + |1><1| ] conj(u); largest singular value 1
// pre: rep.pi1 > 0 (snapped zero -> WClassError)
LocalOp filter_op(const WoottersRep& rep);

// find the product directions by solving det(u M0 + v M1) = 0 over the
// conditional-amplitude matrices of qubit A, factor each conditional, order
// alpha <= beta, fix phases so both surviving amplitudes are real non-negative
GghzForm extract_gghz(const PureState& state, double tol);

// f' = |0'><0'| + (alpha/beta)|1'><1'| on the target qubit; identity when the
// form is already balanced within 1e-9
LocalOp balance_op(const GghzForm& form, Qubit target);

// maps |0'> -> |0>, |1'> -> |1> for a basis given by rows |0'>, |1'>
LocalOp revert_unitary(const c2x2& basis, Qubit q, double tol = 1e-9);

// full pipeline; balancing applied on `balance` (default C)
// throws NonDistillableError for Product/Biseparable/WClass input
DistillationPlan distill_plan(const PureState& state, double tol = 1e-9,
                              Qubit balance = Qubit::c);

// recompute N = <psi| T^dag T (x) T^dag T (x) T^dag T |psi> by application
double success_probability(const PureState& state, const DistillationPlan& plan);

// convenience: apply all three plan operators and renormalize; norm_sq of the
// intermediate is the recomputed success probability
UnnormState apply_plan(const PureState& state, const DistillationPlan& plan);

}  // namespace ghzdist
