#pragma once

#include <complex>
#include <iosfwd>

namespace rbt {

using cplx = std::complex<double>;

/// Coefficients of a reduced biquaternion over the idempotents
/// e1 = (1+j)/2 and e2 = (1-j)/2. Arithmetic is componentwise.
struct CPair {
    cplx c1{};
    cplx c2{};

    friend CPair operator*(const CPair& a, const CPair& b) { return {a.c1 * b.c1, a.c2 * b.c2}; }
    friend CPair operator+(const CPair& a, const CPair& b) { return {a.c1 + b.c1, a.c2 + b.c2}; }
    friend bool operator==(const CPair&, const CPair&) = default;
};

/// A reduced biquaternion q0 + q1 i + q2 j + q3 k with i^2 = -1, j^2 = 1,
/// ij = ji = k. The algebra is commutative and has zero divisors.
class RBScalar {
public:
    constexpr RBScalar() = default;
    /// Throws NonFiniteError if any component is NaN or infinite.
    RBScalar(double q0, double q1 = 0.0, double q2 = 0.0, double q3 = 0.0);

    static RBScalar i() { return {0.0, 1.0, 0.0, 0.0}; }
    static RBScalar j() { return {0.0, 0.0, 1.0, 0.0}; }
    static RBScalar k() { return {0.0, 0.0, 0.0, 1.0}; }
    static RBScalar e1() { return {0.5, 0.0, 0.5, 0.0}; }
    static RBScalar e2() { return {0.5, 0.0, -0.5, 0.0}; }

    double q0() const noexcept { return q_[0]; }
    double q1() const noexcept { return q_[1]; }
    double q2() const noexcept { return q_[2]; }
    double q3() const noexcept { return q_[3]; }
    double operator[](int idx) const { return q_[idx]; }

    /// q = qa + j qb with qa = q0 + q1 i and qb = q2 + q3 i.
    cplx qa() const noexcept { return {q_[0], q_[1]}; }
    cplx qb() const noexcept { return {q_[2], q_[3]}; }

    RBScalar& operator+=(const RBScalar& o);
    RBScalar& operator-=(const RBScalar& o);
    RBScalar& operator*=(const RBScalar& o);
    RBScalar& operator*=(double s);

    friend RBScalar operator+(RBScalar a, const RBScalar& b) { return a += b; }
    friend RBScalar operator-(RBScalar a, const RBScalar& b) { return a -= b; }
    friend RBScalar operator*(RBScalar a, const RBScalar& b) { return a *= b; }
    friend RBScalar operator*(RBScalar a, double s) { return a *= s; }
    friend RBScalar operator*(double s, RBScalar a) { return a *= s; }
    RBScalar operator-() const { return {-q_[0], -q_[1], -q_[2], -q_[3]}; }

    friend bool operator==(const RBScalar&, const RBScalar&) = default;

private:
    struct Unchecked {};
    constexpr RBScalar(Unchecked, double q0, double q1, double q2, double q3) noexcept
        : q_{q0, q1, q2, q3} {}
    friend RBScalar rb_unchecked(double, double, double, double) noexcept;

    double q_[4]{0.0, 0.0, 0.0, 0.0};
};

/// Product from the multiplication table i^2=-1, j^2=1, ij=ji=k.
RBScalar rb_mul(const RBScalar& a, const RBScalar& b);

/// q0 - q1 i + q2 j - q3 k.
RBScalar rb_conj(const RBScalar& a);

/// sqrt(q0^2 + q1^2 + q2^2 + q3^2). Not multiplicative: e1 * e2 = 0.
double rb_modulus(const RBScalar& a);

/// Squared modulus.
double rb_norm2(const RBScalar& a);

/// (qa + qb, qa - qb).
CPair to_cpair(const RBScalar& a);
RBScalar from_cpair(const CPair& p);

/// Component-wise builder that skips the finiteness check; internal use
/// for values that are finite by construction.
RBScalar rb_unchecked(double q0, double q1, double q2, double q3) noexcept;

std::ostream& operator<<(std::ostream& os, const RBScalar& q);

}  // namespace rbt
