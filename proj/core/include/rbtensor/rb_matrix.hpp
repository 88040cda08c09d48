#pragma once

#include <cstddef>
#include <vector>

#include "rbtensor/complex_linalg.hpp"
#include "rbtensor/complex_matrix.hpp"
#include "rbtensor/rb_scalar.hpp"

namespace rbt {

/// Matrix over the reduced biquaternions, stored as A = part1 * e1 + part2 * e2
/// with both parts m x n complex matrices. Products, conjugate transposes and
/// inverses act on the two parts independently.
class RBMatrix {
public:
    RBMatrix() = default;
    RBMatrix(std::size_t m, std::size_t n) : part1_(m, n), part2_(m, n) {}
    /// Throws DimensionError if the parts differ in shape.
    RBMatrix(CMatrix part1, CMatrix part2);

    static RBMatrix zeros(std::size_t m, std::size_t n) { return {m, n}; }
    static RBMatrix identity(std::size_t n);
    /// Every entry of the matrix scaled by the RB scalar `s`.
    static RBMatrix scaled_identity(std::size_t n, const RBScalar& s);
    /// Build from the 1/i/j/k component matrices A0 + A1 i + A2 j + A3 k (real parts used).
    static RBMatrix from_components(const CMatrix& a0, const CMatrix& a1, const CMatrix& a2, const CMatrix& a3);

    std::size_t rows() const noexcept { return part1_.rows(); }
    std::size_t cols() const noexcept { return part1_.cols(); }

    const CMatrix& part1() const noexcept { return part1_; }
    const CMatrix& part2() const noexcept { return part2_; }
    CMatrix& part1() noexcept { return part1_; }
    CMatrix& part2() noexcept { return part2_; }

    RBScalar at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, const RBScalar& q);

    RBMatrix& operator+=(const RBMatrix& o);
    RBMatrix& operator-=(const RBMatrix& o);
    RBMatrix& operator*=(const RBScalar& s);

    friend RBMatrix operator+(RBMatrix a, const RBMatrix& b) { return a += b; }
    friend RBMatrix operator-(RBMatrix a, const RBMatrix& b) { return a -= b; }
    friend RBMatrix operator*(RBMatrix a, const RBScalar& s) { return a *= s; }
    friend RBMatrix operator*(const RBScalar& s, RBMatrix a) { return a *= s; }
    friend RBMatrix operator*(const RBMatrix& a, const RBMatrix& b);

    friend bool operator==(const RBMatrix&, const RBMatrix&) = default;

private:
    CMatrix part1_;
    CMatrix part2_;
};

RBMatrix mat_mul(const RBMatrix& a, const RBMatrix& b);
RBMatrix conj_transpose(const RBMatrix& a);
/// sqrt(sum |a_ij|^2) with the RB modulus.
double frobenius_norm(const RBMatrix& a);

/// A = U * S * V^* with U, V unitary and S diagonal (generally not real).
/// The singular values of the two complex parts are paired by position.
struct RBSvd {
    RBMatrix U;
    RBMatrix S;
    RBMatrix V;
    std::vector<double> sigma1;
    std::vector<double> sigma2;
};

RBSvd rb_svd(const RBMatrix& a);

/// Componentwise pseudo-inverse pinv(part1) e1 + pinv(part2) e2.
RBMatrix rb_pinv(const RBMatrix& a, double rtol);
RBMatrix rb_pinv(const RBMatrix& a);

/// Count of positions i where max(sigma1_i, sigma2_i) > rtol * max(sigma1_max, sigma2_max).
/// A zero-divisor singular value (one part zero) still counts.
std::size_t rb_rank(const RBMatrix& a, double rtol);
std::size_t rb_rank(const RBMatrix& a);

/// Rank rule applied to already-computed paired singular values.
std::size_t paired_rank(const std::vector<double>& sigma1, const std::vector<double>& sigma2, double rtol);

}  // namespace rbt
