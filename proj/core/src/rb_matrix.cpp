#include "rbtensor/rb_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rbtensor/errors.hpp"

namespace rbt {

RBMatrix::RBMatrix(CMatrix part1, CMatrix part2) : part1_(std::move(part1)), part2_(std::move(part2)) {
    if (part1_.rows() != part2_.rows() || part1_.cols() != part2_.cols()) {
        throw DimensionError("RBMatrix: e1 and e2 parts differ in shape");
    }
}

RBMatrix RBMatrix::identity(std::size_t n) { return {CMatrix::identity(n), CMatrix::identity(n)}; }

RBMatrix RBMatrix::scaled_identity(std::size_t n, const RBScalar& s) {
    const CPair p = to_cpair(s);
    return {CMatrix::identity(n) * p.c1, CMatrix::identity(n) * p.c2};
}

RBMatrix RBMatrix::from_components(const CMatrix& a0, const CMatrix& a1, const CMatrix& a2, const CMatrix& a3) {
    const std::size_t m = a0.rows();
    const std::size_t n = a0.cols();
    for (const CMatrix* c : {&a1, &a2, &a3}) {
        if (c->rows() != m || c->cols() != n) throw DimensionError("RBMatrix::from_components: shape mismatch");
    }
    RBMatrix out(m, n);
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t r = 0; r < m; ++r) {
            const cplx qa{a0(r, c).real(), a1(r, c).real()};
            const cplx qb{a2(r, c).real(), a3(r, c).real()};
            out.part1_(r, c) = qa + qb;
            out.part2_(r, c) = qa - qb;
        }
    }
    return out;
}

RBScalar RBMatrix::at(std::size_t r, std::size_t c) const {
    const cplx p1 = part1_(r, c);
    const cplx p2 = part2_(r, c);
    const cplx qa = 0.5 * (p1 + p2);
    const cplx qb = 0.5 * (p1 - p2);
    return rb_unchecked(qa.real(), qa.imag(), qb.real(), qb.imag());
}

void RBMatrix::set(std::size_t r, std::size_t c, const RBScalar& q) {
    const CPair p = to_cpair(q);
    part1_(r, c) = p.c1;
    part2_(r, c) = p.c2;
}

RBMatrix& RBMatrix::operator+=(const RBMatrix& o) {
    part1_ += o.part1_;
    part2_ += o.part2_;
    return *this;
}

RBMatrix& RBMatrix::operator-=(const RBMatrix& o) {
    part1_ -= o.part1_;
    part2_ -= o.part2_;
    return *this;
}

RBMatrix& RBMatrix::operator*=(const RBScalar& s) {
    const CPair p = to_cpair(s);
    part1_ *= p.c1;
    part2_ *= p.c2;
    return *this;
}

RBMatrix operator*(const RBMatrix& a, const RBMatrix& b) {
    if (a.cols() != b.rows()) {
        throw DimensionError("RBMatrix *: inner dimensions " + std::to_string(a.cols()) + " and " +
                             std::to_string(b.rows()) + " differ");
    }
    return {a.part1() * b.part1(), a.part2() * b.part2()};
}

RBMatrix mat_mul(const RBMatrix& a, const RBMatrix& b) { return a * b; }

RBMatrix conj_transpose(const RBMatrix& a) {
    return {conj_transpose(a.part1()), conj_transpose(a.part2())};
}

double frobenius_norm(const RBMatrix& a) {
    // |q|^2 = (|c1|^2 + |c2|^2) / 2
    const double f1 = frobenius_norm(a.part1());
    const double f2 = frobenius_norm(a.part2());
    return std::sqrt(0.5 * (f1 * f1 + f2 * f2));
}

RBSvd rb_svd(const RBMatrix& a) {
    CSvd s1 = complex_svd(a.part1());
    CSvd s2 = complex_svd(a.part2());
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    std::vector<cplx> d1(s1.sigma.begin(), s1.sigma.end());
    std::vector<cplx> d2(s2.sigma.begin(), s2.sigma.end());
    RBSvd out{RBMatrix(std::move(s1.U), std::move(s2.U)),
              RBMatrix(CMatrix::diagonal(m, n, d1), CMatrix::diagonal(m, n, d2)),
              RBMatrix(std::move(s1.V), std::move(s2.V)), std::move(s1.sigma), std::move(s2.sigma)};
    return out;
}

RBMatrix rb_pinv(const RBMatrix& a, double rtol) {
    return {complex_pinv(a.part1(), rtol), complex_pinv(a.part2(), rtol)};
}

RBMatrix rb_pinv(const RBMatrix& a) { return rb_pinv(a, default_rtol(a.rows(), a.cols())); }

std::size_t paired_rank(const std::vector<double>& sigma1, const std::vector<double>& sigma2, double rtol) {
    const std::size_t len = std::max(sigma1.size(), sigma2.size());
    double smax = 0.0;
    for (double s : sigma1) smax = std::max(smax, s);
    for (double s : sigma2) smax = std::max(smax, s);
    if (smax <= 0.0) return 0;
    const double thresh = rtol * smax;
    std::size_t r = 0;
    for (std::size_t i = 0; i < len; ++i) {
        const double s1 = i < sigma1.size() ? sigma1[i] : 0.0;
        const double s2 = i < sigma2.size() ? sigma2[i] : 0.0;
        if (std::max(s1, s2) > thresh) ++r;
    }
    return r;
}

std::size_t rb_rank(const RBMatrix& a, double rtol) {
    const CSvd s1 = complex_svd(a.part1());
    const CSvd s2 = complex_svd(a.part2());
    return paired_rank(s1.sigma, s2.sigma, rtol);
}

std::size_t rb_rank(const RBMatrix& a) { return rb_rank(a, default_rtol(a.rows(), a.cols())); }

}  // namespace rbt
