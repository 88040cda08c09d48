#include "rbtensor/rb_scalar.hpp"

#include <cmath>
#include <ostream>

#include "rbtensor/errors.hpp"

namespace rbt {

RBScalar::RBScalar(double q0, double q1, double q2, double q3) : q_{q0, q1, q2, q3} {
    if (!std::isfinite(q0) || !std::isfinite(q1) || !std::isfinite(q2) || !std::isfinite(q3)) {
        throw NonFiniteError("RBScalar components must be finite");
    }
}

RBScalar rb_unchecked(double q0, double q1, double q2, double q3) noexcept {
    return RBScalar(RBScalar::Unchecked{}, q0, q1, q2, q3);
}

RBScalar& RBScalar::operator+=(const RBScalar& o) {
    for (int n = 0; n < 4; ++n) q_[n] += o.q_[n];
    return *this;
}

RBScalar& RBScalar::operator-=(const RBScalar& o) {
    for (int n = 0; n < 4; ++n) q_[n] -= o.q_[n];
    return *this;
}

RBScalar& RBScalar::operator*=(const RBScalar& o) { return *this = rb_mul(*this, o); }

RBScalar& RBScalar::operator*=(double s) {
    for (double& v : q_) v *= s;
    return *this;
}

RBScalar rb_mul(const RBScalar& a, const RBScalar& b) {
    // i*i = -1, j*j = 1, k*k = -1, ij = k, ik = -j, jk = i (all commuting).
    const double p0 = a.q0() * b.q0() - a.q1() * b.q1() + a.q2() * b.q2() - a.q3() * b.q3();
    const double p1 = a.q0() * b.q1() + a.q1() * b.q0() + a.q2() * b.q3() + a.q3() * b.q2();
    const double p2 = a.q0() * b.q2() + a.q2() * b.q0() - a.q1() * b.q3() - a.q3() * b.q1();
    const double p3 = a.q0() * b.q3() + a.q3() * b.q0() + a.q1() * b.q2() + a.q2() * b.q1();
    return rb_unchecked(p0, p1, p2, p3);
}

RBScalar rb_conj(const RBScalar& a) { return rb_unchecked(a.q0(), -a.q1(), a.q2(), -a.q3()); }

double rb_norm2(const RBScalar& a) {
    return a.q0() * a.q0() + a.q1() * a.q1() + a.q2() * a.q2() + a.q3() * a.q3();
}

double rb_modulus(const RBScalar& a) { return std::sqrt(rb_norm2(a)); }

CPair to_cpair(const RBScalar& a) { return {a.qa() + a.qb(), a.qa() - a.qb()}; }

RBScalar from_cpair(const CPair& p) {
    const cplx qa = 0.5 * (p.c1 + p.c2);
    const cplx qb = 0.5 * (p.c1 - p.c2);
    return RBScalar(qa.real(), qa.imag(), qb.real(), qb.imag());
}

std::ostream& operator<<(std::ostream& os, const RBScalar& q) {
    return os << q.q0() << (q.q1() < 0 ? "" : "+") << q.q1() << "i" << (q.q2() < 0 ? "" : "+")
              << q.q2() << "j" << (q.q3() < 0 ? "" : "+") << q.q3() << "k";
}

}  // namespace rbt
