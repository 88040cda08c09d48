#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "rbtensor/errors.hpp"
#include "rbtensor/rb_matrix.hpp"
#include "rbtensor/rb_scalar.hpp"

namespace rbt {

struct SpatialDomain {};
struct FourierDomain {};

/// Third-order tensor over the reduced biquaternions, n1 x n2 x n3, stored as
/// its e1/e2 complex parts. Element (i, j, k) of each part lives at
/// i + n1 * (j + n2 * k): frontal slices are contiguous column-major blocks.
///
/// The Domain tag separates spatial tensors (RBTensor) from their mode-3 DFT
/// counterparts (DftTensor) at compile time.
template <class Domain>
class BasicRBTensor {
public:
    BasicRBTensor() = default;
    BasicRBTensor(std::size_t n1, std::size_t n2, std::size_t n3)
        : n1_(n1), n2_(n2), n3_(n3), p1_(n1 * n2 * n3), p2_(n1 * n2 * n3) {}
    BasicRBTensor(std::size_t n1, std::size_t n2, std::size_t n3, std::vector<cplx> part1, std::vector<cplx> part2)
        : n1_(n1), n2_(n2), n3_(n3), p1_(std::move(part1)), p2_(std::move(part2)) {
        if (p1_.size() != n1 * n2 * n3 || p2_.size() != n1 * n2 * n3) {
            throw DimensionError("RB tensor: part length does not match " + shape_string(n1, n2, n3));
        }
    }

    std::size_t n1() const noexcept { return n1_; }
    std::size_t n2() const noexcept { return n2_; }
    std::size_t n3() const noexcept { return n3_; }
    std::size_t size() const noexcept { return p1_.size(); }
    std::size_t slice_size() const noexcept { return n1_ * n2_; }

    std::size_t index(std::size_t i, std::size_t j, std::size_t k) const noexcept {
        return i + n1_ * (j + n2_ * k);
    }

    std::span<cplx> part1() noexcept { return p1_; }
    std::span<cplx> part2() noexcept { return p2_; }
    std::span<const cplx> part1() const noexcept { return p1_; }
    std::span<const cplx> part2() const noexcept { return p2_; }

    RBScalar at(std::size_t i, std::size_t j, std::size_t k) const {
        const std::size_t n = index(i, j, k);
        const cplx qa = 0.5 * (p1_[n] + p2_[n]);
        const cplx qb = 0.5 * (p1_[n] - p2_[n]);
        return rb_unchecked(qa.real(), qa.imag(), qb.real(), qb.imag());
    }

    void set(std::size_t i, std::size_t j, std::size_t k, const RBScalar& q) {
        const std::size_t n = index(i, j, k);
        const CPair p = to_cpair(q);
        p1_[n] = p.c1;
        p2_[n] = p.c2;
    }

    /// Frontal slice k (0-based) as an RB matrix.
    RBMatrix slice(std::size_t k) const {
        const std::size_t s = slice_size();
        std::vector<cplx> a(p1_.begin() + k * s, p1_.begin() + (k + 1) * s);
        std::vector<cplx> b(p2_.begin() + k * s, p2_.begin() + (k + 1) * s);
        return {CMatrix(n1_, n2_, std::move(a)), CMatrix(n1_, n2_, std::move(b))};
    }

    void set_slice(std::size_t k, const RBMatrix& m) {
        if (m.rows() != n1_ || m.cols() != n2_) throw DimensionError("set_slice: slice shape mismatch");
        const std::size_t s = slice_size();
        std::copy(m.part1().data().begin(), m.part1().data().end(), p1_.begin() + k * s);
        std::copy(m.part2().data().begin(), m.part2().data().end(), p2_.begin() + k * s);
    }

    BasicRBTensor& operator+=(const BasicRBTensor& o) {
        require_same_shape(o, "tensor +");
        for (std::size_t n = 0; n < p1_.size(); ++n) {
            p1_[n] += o.p1_[n];
            p2_[n] += o.p2_[n];
        }
        return *this;
    }
    BasicRBTensor& operator-=(const BasicRBTensor& o) {
        require_same_shape(o, "tensor -");
        for (std::size_t n = 0; n < p1_.size(); ++n) {
            p1_[n] -= o.p1_[n];
            p2_[n] -= o.p2_[n];
        }
        return *this;
    }
    BasicRBTensor& operator*=(const RBScalar& s) {
        const CPair p = to_cpair(s);
        for (cplx& v : p1_) v *= p.c1;
        for (cplx& v : p2_) v *= p.c2;
        return *this;
    }
    BasicRBTensor& operator*=(double s) {
        for (cplx& v : p1_) v *= s;
        for (cplx& v : p2_) v *= s;
        return *this;
    }

    friend BasicRBTensor operator+(BasicRBTensor a, const BasicRBTensor& b) { return a += b; }
    friend BasicRBTensor operator-(BasicRBTensor a, const BasicRBTensor& b) { return a -= b; }
    friend BasicRBTensor operator*(BasicRBTensor a, const RBScalar& s) { return a *= s; }
    friend BasicRBTensor operator*(const RBScalar& s, BasicRBTensor a) { return a *= s; }
    friend BasicRBTensor operator*(BasicRBTensor a, double s) { return a *= s; }
    friend BasicRBTensor operator*(double s, BasicRBTensor a) { return a *= s; }

    friend bool operator==(const BasicRBTensor&, const BasicRBTensor&) = default;

    static std::string shape_string(std::size_t a, std::size_t b, std::size_t c) {
        return std::to_string(a) + "x" + std::to_string(b) + "x" + std::to_string(c);
    }
    std::string shape_string() const { return shape_string(n1_, n2_, n3_); }

private:
    void require_same_shape(const BasicRBTensor& o, const char* op) const {
        if (n1_ != o.n1_ || n2_ != o.n2_ || n3_ != o.n3_) {
            throw DimensionError(std::string(op) + ": shape mismatch " + shape_string() + " vs " + o.shape_string());
        }
    }

    std::size_t n1_ = 0;
    std::size_t n2_ = 0;
    std::size_t n3_ = 0;
    std::vector<cplx> p1_;
    std::vector<cplx> p2_;
};

using RBTensor = BasicRBTensor<SpatialDomain>;
using DftTensor = BasicRBTensor<FourierDomain>;

// --- structural operators ---------------------------------------------------

/// Frontal slices stacked vertically: (n1 * n3) x n2.
RBMatrix vec(const RBTensor& t);
/// Inverse of vec; requires m.rows() == n1 * n3.
RBTensor fold(const RBMatrix& m, std::size_t n1, std::size_t n3);
/// Block-circulant matrix, block (r, c) = slice (r - c) mod n3.
RBMatrix circ(const RBTensor& t);
/// Block-diagonal matrix of the frontal slices.
RBMatrix block_diag(const DftTensor& t);

/// Lateral slices j0 .. j0 + count - 1, i.e. T(:, j0:j0+count, :).
RBTensor lateral_slices(const RBTensor& t, std::size_t j0, std::size_t count);

// --- transform ----------------------------------------------------------------

/// Unnormalized DFT along every tube (s, t, :) of both complex parts.
DftTensor mode3_dft(const RBTensor& t);
RBTensor mode3_idft(const DftTensor& d);

// --- products and algebra ---------------------------------------------------------

/// Reference product: Fold(circ(A) * Vec(B)) in RB matrix arithmetic.
RBTensor ht_product_direct(const RBTensor& a, const RBTensor& b);
/// Production product: slice-wise RB matrix products in the DFT domain.
RBTensor ht_product(const RBTensor& a, const RBTensor& b);
/// Slice-wise product of two tensors that are already in the DFT domain.
DftTensor slice_product(const DftTensor& a, const DftTensor& b);

/// Conjugate-transposes every frontal slice, then reverses slices 2..n3.
RBTensor tensor_conj_transpose(const RBTensor& a);
/// Slice-wise conjugate transpose (the DFT-domain image of the above).
DftTensor slice_conj_transpose(const DftTensor& a);

RBTensor identity_tensor(std::size_t n, std::size_t n3);
RBTensor zero_tensor(std::size_t n1, std::size_t n2, std::size_t n3);

/// Throws SingularError naming the first DFT slice whose e1 or e2 part is
/// rank-deficient (zero-divisor slices are never invertible).
RBTensor tensor_inverse(const RBTensor& a);

double tensor_frobenius_norm(const RBTensor& a);
double tensor_frobenius_norm(const DftTensor& a);

// --- predicates ---------------------------------------------------------------------
// Default tolerance: 1e-10 * max(1, ||A||_F).

double default_predicate_tol(const RBTensor& a);

double f_diagonal_residual(const RBTensor& a);
double unitary_residual(const RBTensor& a);
double hermitian_residual(const RBTensor& a);
double idempotent_residual(const RBTensor& a);

bool is_f_diagonal(const RBTensor& a, double tol);
bool is_f_diagonal(const RBTensor& a);
bool is_unitary(const RBTensor& a, double tol);
bool is_unitary(const RBTensor& a);
bool is_hermitian(const RBTensor& a, double tol);
bool is_hermitian(const RBTensor& a);
bool is_idempotent(const RBTensor& a, double tol);
bool is_idempotent(const RBTensor& a);

}  // namespace rbt
