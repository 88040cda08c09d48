#include "rbtensor/solvers.hpp"

#include <algorithm>

#include "rbtensor/ht_decomp.hpp"

namespace rbt {

namespace {

PinvResult pinv_for(const RBTensor& a, const SolveOptions& opt) {
    return opt.rtol ? tensor_pinv(a, *opt.rtol) : tensor_pinv(a);
}

void require(bool ok, const std::string& msg) {
    if (!ok) throw DimensionError(msg);
}

void check_axb_shapes(const RBTensor& a, const RBTensor& b, const char* who) {
    require(a.n1() == b.n1() && a.n3() == b.n3(),
            std::string(who) + ": A is " + a.shape_string() + " but B is " + b.shape_string());
}

void check_free_shape(const std::optional<RBTensor>& t, std::size_t n1, std::size_t n2, std::size_t n3,
                      const char* who) {
    if (t && (t->n1() != n1 || t->n2() != n2 || t->n3() != n3)) {
        throw DimensionError(std::string(who) + ": free tensor is " + t->shape_string() + ", expected " +
                             RBTensor::shape_string(n1, n2, n3));
    }
}

void finish(SolveReport& r, const RBTensor& residual_tensor, const RBTensor& b, const SolveOptions& opt) {
    r.residual = tensor_frobenius_norm(residual_tensor);
    r.solution_norm = tensor_frobenius_norm(r.solution);
    r.tolerance = opt.consistency_tol * std::max(1.0, tensor_frobenius_norm(b));
}

}  // namespace

SolveReport solve_general(const RBTensor& a, const RBTensor& b, const std::optional<RBTensor>& y,
                          const SolveOptions& opt) {
    check_axb_shapes(a, b, "solve_general");
    check_free_shape(y, a.n2(), b.n2(), a.n3(), "solve_general");
    const PinvResult p = pinv_for(a, opt);
    SolveReport r;
    r.solution = ht_product(p.pinv, b);
    if (y) r.solution += ht_product(p.left_projector, *y);
    r.min_norm = !y.has_value();
    finish(r, ht_product(a, r.solution) - b, b, opt);
    r.condition_residual = tensor_frobenius_norm(ht_product(p.right_projector, b));
    r.consistent = r.condition_residual <= r.tolerance;
    if (!r.consistent) r.failed_condition = "R_A *Ht B = O";
    return r;
}

SolveReport solve_hermitian(const RBTensor& a, const RBTensor& b, const std::optional<RBTensor>& u_free,
                            const SolveOptions& opt) {
    if (a.n1() != b.n1() || a.n2() != b.n2() || a.n3() != b.n3()) {
        throw DimensionError("solve_hermitian: A and B must share a shape, got " + a.shape_string() + " and " +
                             b.shape_string());
    }
    check_free_shape(u_free, a.n2(), a.n2(), a.n3(), "solve_hermitian");
    if (u_free && !is_hermitian(*u_free, 1e-10 * std::max(1.0, tensor_frobenius_norm(*u_free)))) {
        throw RangeError("solve_hermitian: free tensor U is not Hermitian");
    }
    const PinvResult p = pinv_for(a, opt);
    const RBTensor ap_b = ht_product(p.pinv, b);
    const RBTensor bh = tensor_conj_transpose(b);
    const RBTensor a_bh = ht_product(a, bh);

    SolveReport r;
    r.solution = ap_b + tensor_conj_transpose(ap_b) -
                 ht_product(ht_product(p.pinv, a_bh), tensor_conj_transpose(p.pinv));
    if (u_free) r.solution += ht_product(ht_product(p.left_projector, *u_free), p.left_projector);
    finish(r, ht_product(a, r.solution) - b, b, opt);

    // A B^* - B A^* scales with ||A|| ||B||, so its threshold does too.
    const double cond1 = tensor_frobenius_norm(a_bh - ht_product(b, tensor_conj_transpose(a)));
    const double tol1 =
        opt.consistency_tol * std::max(1.0, tensor_frobenius_norm(a) * tensor_frobenius_norm(b));
    const double cond2 = tensor_frobenius_norm(ht_product(p.right_projector, b));
    if (cond1 > tol1) {
        r.failed_condition = "A *Ht B^* = B *Ht A^*";
        r.condition_residual = cond1;
    } else if (cond2 > r.tolerance) {
        r.failed_condition = "R_A *Ht B = O";
        r.condition_residual = cond2;
    } else {
        r.condition_residual = std::max(cond1, cond2);
    }
    r.consistent = r.failed_condition.empty();
    return r;
}

SolveReport lstsq_axb(const RBTensor& a, const RBTensor& b, const std::optional<RBTensor>& w,
                      const SolveOptions& opt) {
    check_axb_shapes(a, b, "lstsq_axb");
    check_free_shape(w, a.n2(), b.n2(), a.n3(), "lstsq_axb");
    const PinvResult p = pinv_for(a, opt);
    SolveReport r;
    r.solution = ht_product(p.pinv, b);
    if (w) r.solution += ht_product(p.left_projector, *w);
    r.min_norm = !w.has_value();
    finish(r, ht_product(a, r.solution) - b, b, opt);
    r.condition_residual = r.residual;
    r.consistent = r.residual <= r.tolerance;
    if (!r.consistent) r.failed_condition = "A *Ht X = B (least-squares only)";
    return r;
}

SolveReport lstsq_xab(const RBTensor& a, const RBTensor& b, const std::optional<RBTensor>& w,
                      const SolveOptions& opt) {
    if (a.n2() != b.n2() || a.n3() != b.n3()) {
        throw DimensionError("lstsq_xab: A is " + a.shape_string() + " but B is " + b.shape_string());
    }
    check_free_shape(w, b.n1(), a.n1(), a.n3(), "lstsq_xab");
    const PinvResult p = pinv_for(a, opt);
    SolveReport r;
    r.solution = ht_product(b, p.pinv);
    if (w) r.solution += ht_product(*w, p.right_projector);
    r.min_norm = !w.has_value();
    finish(r, ht_product(r.solution, a) - b, b, opt);
    r.condition_residual = r.residual;
    r.consistent = r.residual <= r.tolerance;
    if (!r.consistent) r.failed_condition = "X *Ht A = B (least-squares only)";
    return r;
}

}  // namespace rbt
