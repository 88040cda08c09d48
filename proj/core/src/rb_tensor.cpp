#include "rbtensor/rb_tensor.hpp"

#include <algorithm>
#include <cmath>

#include "rbtensor/complex_linalg.hpp"
#include "rbtensor/dft.hpp"
#include "rbtensor/parallel.hpp"

namespace rbt {

namespace {

template <class Domain>
void require_conformable(const BasicRBTensor<Domain>& a, const BasicRBTensor<Domain>& b, const char* op) {
    if (a.n2() != b.n1() || a.n3() != b.n3()) {
        throw DimensionError(std::string(op) + ": non-conformable shapes " + a.shape_string() + " and " +
                             b.shape_string());
    }
}

enum class Direction { Forward, Inverse };

void transform_tubes(std::span<const cplx> in, std::span<cplx> out, std::size_t tube_count, std::size_t n3,
                     const DftPlan& plan, Direction dir) {
    std::vector<cplx> tube(n3);
    for (std::size_t t = 0; t < tube_count; ++t) {
        for (std::size_t k = 0; k < n3; ++k) tube[k] = in[t + k * tube_count];
        if (dir == Direction::Forward)
            plan.forward(tube);
        else
            plan.inverse(tube);
        for (std::size_t k = 0; k < n3; ++k) out[t + k * tube_count] = tube[k];
    }
}

}  // namespace

RBMatrix vec(const RBTensor& t) {
    const std::size_t n1 = t.n1();
    RBMatrix m(n1 * t.n3(), t.n2());
    for (std::size_t k = 0; k < t.n3(); ++k) {
        for (std::size_t j = 0; j < t.n2(); ++j) {
            for (std::size_t i = 0; i < n1; ++i) {
                const std::size_t src = t.index(i, j, k);
                m.part1()(k * n1 + i, j) = t.part1()[src];
                m.part2()(k * n1 + i, j) = t.part2()[src];
            }
        }
    }
    return m;
}

RBTensor fold(const RBMatrix& m, std::size_t n1, std::size_t n3) {
    if (n1 * n3 != m.rows()) {
        throw DimensionError("fold: matrix has " + std::to_string(m.rows()) + " rows, expected n1*n3 = " +
                             std::to_string(n1 * n3));
    }
    RBTensor t(n1, m.cols(), n3);
    for (std::size_t k = 0; k < n3; ++k) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            for (std::size_t i = 0; i < n1; ++i) {
                const std::size_t dst = t.index(i, j, k);
                t.part1()[dst] = m.part1()(k * n1 + i, j);
                t.part2()[dst] = m.part2()(k * n1 + i, j);
            }
        }
    }
    return t;
}

RBMatrix circ(const RBTensor& t) {
    const std::size_t n1 = t.n1();
    const std::size_t n2 = t.n2();
    const std::size_t n3 = t.n3();
    RBMatrix m(n1 * n3, n2 * n3);
    for (std::size_t r = 0; r < n3; ++r) {
        for (std::size_t c = 0; c < n3; ++c) {
            const std::size_t k = (r + n3 - c) % n3;
            const RBMatrix s = t.slice(k);
            m.part1().set_block(r * n1, c * n2, s.part1());
            m.part2().set_block(r * n1, c * n2, s.part2());
        }
    }
    return m;
}

RBMatrix block_diag(const DftTensor& t) {
    const std::size_t n1 = t.n1();
    const std::size_t n2 = t.n2();
    RBMatrix m(n1 * t.n3(), n2 * t.n3());
    for (std::size_t k = 0; k < t.n3(); ++k) {
        const RBMatrix s = t.slice(k);
        m.part1().set_block(k * n1, k * n2, s.part1());
        m.part2().set_block(k * n1, k * n2, s.part2());
    }
    return m;
}

RBTensor lateral_slices(const RBTensor& t, std::size_t j0, std::size_t count) {
    if (j0 + count > t.n2()) throw DimensionError("lateral_slices: column range out of bounds");
    RBTensor out(t.n1(), count, t.n3());
    for (std::size_t k = 0; k < t.n3(); ++k)
        for (std::size_t j = 0; j < count; ++j)
            for (std::size_t i = 0; i < t.n1(); ++i) {
                out.part1()[out.index(i, j, k)] = t.part1()[t.index(i, j0 + j, k)];
                out.part2()[out.index(i, j, k)] = t.part2()[t.index(i, j0 + j, k)];
            }
    return out;
}

DftTensor mode3_dft(const RBTensor& t) {
    DftTensor d(t.n1(), t.n2(), t.n3());
    if (t.size() == 0) return d;
    const DftPlan plan(t.n3());
    transform_tubes(t.part1(), d.part1(), t.slice_size(), t.n3(), plan, Direction::Forward);
    transform_tubes(t.part2(), d.part2(), t.slice_size(), t.n3(), plan, Direction::Forward);
    return d;
}

RBTensor mode3_idft(const DftTensor& d) {
    RBTensor t(d.n1(), d.n2(), d.n3());
    if (d.size() == 0) return t;
    const DftPlan plan(d.n3());
    transform_tubes(d.part1(), t.part1(), d.slice_size(), d.n3(), plan, Direction::Inverse);
    transform_tubes(d.part2(), t.part2(), d.slice_size(), d.n3(), plan, Direction::Inverse);
    return t;
}

RBTensor ht_product_direct(const RBTensor& a, const RBTensor& b) {
    require_conformable(a, b, "ht_product_direct");
    return fold(circ(a) * vec(b), a.n1(), a.n3());
}

DftTensor slice_product(const DftTensor& a, const DftTensor& b) {
    require_conformable(a, b, "slice_product");
    DftTensor c(a.n1(), b.n2(), a.n3());
    parallel_for(a.n3(), [&](std::size_t k) { c.set_slice(k, a.slice(k) * b.slice(k)); });
    return c;
}

RBTensor ht_product(const RBTensor& a, const RBTensor& b) {
    require_conformable(a, b, "ht_product");
    return mode3_idft(slice_product(mode3_dft(a), mode3_dft(b)));
}

RBTensor tensor_conj_transpose(const RBTensor& a) {
    const std::size_t n3 = a.n3();
    RBTensor out(a.n2(), a.n1(), n3);
    for (std::size_t k = 0; k < n3; ++k) {
        const std::size_t src = (n3 - k) % n3;
        out.set_slice(k, conj_transpose(a.slice(src)));
    }
    return out;
}

DftTensor slice_conj_transpose(const DftTensor& a) {
    DftTensor out(a.n2(), a.n1(), a.n3());
    for (std::size_t k = 0; k < a.n3(); ++k) out.set_slice(k, conj_transpose(a.slice(k)));
    return out;
}

RBTensor identity_tensor(std::size_t n, std::size_t n3) {
    if (n == 0 || n3 == 0) throw RangeError("identity_tensor: n and n3 must be at least 1");
    RBTensor t(n, n, n3);
    t.set_slice(0, RBMatrix::identity(n));
    return t;
}

RBTensor zero_tensor(std::size_t n1, std::size_t n2, std::size_t n3) { return {n1, n2, n3}; }

RBTensor tensor_inverse(const RBTensor& a) {
    if (a.n1() != a.n2()) {
        throw DimensionError("tensor_inverse: frontal slices must be square, got " + a.shape_string());
    }
    const std::size_t n = a.n1();
    const DftTensor d = mode3_dft(a);
    DftTensor inv(n, n, a.n3());
    std::vector<std::size_t> deficiency(a.n3(), 0);
    parallel_for(a.n3(), [&](std::size_t k) {
        const RBMatrix s = d.slice(k);
        const CSvd s1 = complex_svd(s.part1());
        const CSvd s2 = complex_svd(s.part2());
        const double rtol = default_rtol(n, n);
        const std::size_t r = std::min(numeric_rank(s1.sigma, rtol), numeric_rank(s2.sigma, rtol));
        deficiency[k] = n - r;
        if (r == n) inv.set_slice(k, RBMatrix(pinv_from_svd(s1, rtol), pinv_from_svd(s2, rtol)));
    });
    for (std::size_t k = 0; k < a.n3(); ++k) {
        if (deficiency[k] != 0) {
            throw SingularError("tensor_inverse: DFT slice " + std::to_string(k) + " is rank-deficient by " +
                                    std::to_string(deficiency[k]),
                                k, deficiency[k]);
        }
    }
    return mode3_idft(inv);
}

double tensor_frobenius_norm(const RBTensor& a) {
    double s = 0.0;
    for (std::size_t n = 0; n < a.size(); ++n) s += std::norm(a.part1()[n]) + std::norm(a.part2()[n]);
    return std::sqrt(0.5 * s);
}

double tensor_frobenius_norm(const DftTensor& a) {
    double s = 0.0;
    for (std::size_t n = 0; n < a.size(); ++n) s += std::norm(a.part1()[n]) + std::norm(a.part2()[n]);
    return std::sqrt(0.5 * s);
}

double default_predicate_tol(const RBTensor& a) { return 1e-10 * std::max(1.0, tensor_frobenius_norm(a)); }

double f_diagonal_residual(const RBTensor& a) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.n3(); ++k)
        for (std::size_t j = 0; j < a.n2(); ++j)
            for (std::size_t i = 0; i < a.n1(); ++i) {
                if (i == j) continue;
                const std::size_t n = a.index(i, j, k);
                s += std::norm(a.part1()[n]) + std::norm(a.part2()[n]);
            }
    return std::sqrt(0.5 * s);
}

namespace {
void require_square(const RBTensor& a, const char* what) {
    if (a.n1() != a.n2()) throw DimensionError(std::string(what) + ": frontal slices must be square");
}
}  // namespace

double unitary_residual(const RBTensor& a) {
    require_square(a, "unitary_residual");
    const RBTensor id = identity_tensor(a.n1(), a.n3());
    const RBTensor ah = tensor_conj_transpose(a);
    return std::max(tensor_frobenius_norm(ht_product(ah, a) - id), tensor_frobenius_norm(ht_product(a, ah) - id));
}

double hermitian_residual(const RBTensor& a) {
    require_square(a, "hermitian_residual");
    return tensor_frobenius_norm(a - tensor_conj_transpose(a));
}

double idempotent_residual(const RBTensor& a) {
    require_square(a, "idempotent_residual");
    return tensor_frobenius_norm(ht_product(a, a) - a);
}

bool is_f_diagonal(const RBTensor& a, double tol) { return f_diagonal_residual(a) <= tol; }
bool is_f_diagonal(const RBTensor& a) { return is_f_diagonal(a, default_predicate_tol(a)); }
bool is_unitary(const RBTensor& a, double tol) { return unitary_residual(a) <= tol; }
bool is_unitary(const RBTensor& a) { return is_unitary(a, default_predicate_tol(a)); }
bool is_hermitian(const RBTensor& a, double tol) { return hermitian_residual(a) <= tol; }
bool is_hermitian(const RBTensor& a) { return is_hermitian(a, default_predicate_tol(a)); }
bool is_idempotent(const RBTensor& a, double tol) { return idempotent_residual(a) <= tol; }
bool is_idempotent(const RBTensor& a) { return is_idempotent(a, default_predicate_tol(a)); }

}  // namespace rbt
