#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace oracle {

using rbt::CMatrix;
using rbt::RBMatrix;
using rbt::RBScalar;
using rbt::RBTensor;

double gauss(Rng& rng) { return std::normal_distribution<double>(0.0, 1.0)(rng); }

cplx random_cplx(Rng& rng) {
    const double re = gauss(rng);
    return {re, gauss(rng)};
}

RBScalar random_scalar(Rng& rng) {
    const double a = gauss(rng);
    const double b = gauss(rng);
    const double c = gauss(rng);
    return {a, b, c, gauss(rng)};
}

CMatrix random_cmatrix(std::size_t m, std::size_t n, Rng& rng) {
    CMatrix out(m, n);
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t r = 0; r < m; ++r) out(r, c) = random_cplx(rng);
    return out;
}

RBMatrix random_rbmatrix(std::size_t m, std::size_t n, Rng& rng) {
    RBMatrix out(m, n);
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t r = 0; r < m; ++r) out.set(r, c, random_scalar(rng));
    return out;
}

RBTensor random_tensor(std::size_t n1, std::size_t n2, std::size_t n3, Rng& rng) {
    RBTensor t(n1, n2, n3);
    for (std::size_t k = 0; k < n3; ++k)
        for (std::size_t j = 0; j < n2; ++j)
            for (std::size_t i = 0; i < n1; ++i) t.set(i, j, k, random_scalar(rng));
    return t;
}

RBTensor random_e1_tensor(std::size_t n1, std::size_t n2, std::size_t n3, Rng& rng) {
    RBTensor t(n1, n2, n3);
    const RBScalar e1 = RBScalar::e1();
    for (std::size_t k = 0; k < n3; ++k)
        for (std::size_t j = 0; j < n2; ++j)
            for (std::size_t i = 0; i < n1; ++i) t.set(i, j, k, rb_mul(random_scalar(rng), e1));
    return t;
}

RBTensor random_low_rank_tensor(std::size_t n1, std::size_t n2, std::size_t n3, std::size_t r, Rng& rng) {
    return scalar_ht_product(random_tensor(n1, r, n3, rng), random_tensor(r, n2, n3, rng));
}

std::vector<cplx> naive_dft(const std::vector<cplx>& v) {
    const std::size_t n = v.size();
    std::vector<cplx> out(n);
    for (std::size_t t = 0; t < n; ++t) {
        cplx s{};
        for (std::size_t k = 0; k < n; ++k) {
            const double ang = -2.0 * std::numbers::pi * double((k * t) % n) / double(n);
            s += v[k] * std::polar(1.0, ang);
        }
        out[t] = s;
    }
    return out;
}

CMatrix kron_dft_matrix(std::size_t n3, std::size_t n1) {
    CMatrix m(n3 * n1, n3 * n1);
    for (std::size_t s = 0; s < n3; ++s)
        for (std::size_t t = 0; t < n3; ++t) {
            const cplx w = std::polar(1.0, -2.0 * std::numbers::pi * double((s * t) % n3) / double(n3));
            for (std::size_t i = 0; i < n1; ++i) m(s * n1 + i, t * n1 + i) = w;
        }
    return m;
}

std::vector<double> hermitian_eigenvalues(CMatrix h) {
    const std::size_t n = h.rows();
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q)
                if (p != q) off += std::norm(h(p, q));
        if (off < 1e-30) break;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx hpq = h(p, q);
                const double g = std::abs(hpq);
                if (g < 1e-300) continue;
                // Remove the phase, then apply a real Jacobi rotation.
                const cplx ph = hpq / g;
                const double app = h(p, p).real();
                const double aqq = h(q, q).real();
                const double theta = 0.5 * std::atan2(2.0 * g, aqq - app);
                const double c = std::cos(theta);
                const double s = std::sin(theta);
                // J = diag(1, conj(ph)) * [[c, s], [-s, c]];  H <- J^H H J.
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx hkp = h(k, p);
                    const cplx hkq = h(k, q);
                    h(k, p) = c * hkp - s * std::conj(ph) * hkq;
                    h(k, q) = s * hkp + c * std::conj(ph) * hkq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx hpk = h(p, k);
                    const cplx hqk = h(q, k);
                    h(p, k) = c * hpk - s * ph * hqk;
                    h(q, k) = s * hpk + c * ph * hqk;
                }
            }
        }
    }
    std::vector<double> ev(n);
    for (std::size_t i = 0; i < n; ++i) ev[i] = h(i, i).real();
    std::sort(ev.begin(), ev.end());
    return ev;
}

RBMatrix scalar_matmul(const RBMatrix& a, const RBMatrix& b) {
    RBMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) {
            RBScalar s;
            for (std::size_t k = 0; k < a.cols(); ++k) s += rb_mul(a.at(r, k), b.at(k, c));
            out.set(r, c, s);
        }
    return out;
}

RBTensor scalar_ht_product(const RBTensor& a, const RBTensor& b) {
    const std::size_t n3 = a.n3();
    RBTensor out(a.n1(), b.n2(), n3);
    for (std::size_t k = 0; k < n3; ++k)
        for (std::size_t r = 0; r < a.n1(); ++r)
            for (std::size_t c = 0; c < b.n2(); ++c) {
                RBScalar s;
                for (std::size_t l = 0; l < n3; ++l) {
                    const std::size_t ka = (k + n3 - l) % n3;
                    for (std::size_t m = 0; m < a.n2(); ++m) s += rb_mul(a.at(r, m, ka), b.at(m, c, l));
                }
                out.set(r, c, k, s);
            }
    return out;
}

RBTensor scalar_conj_transpose(const RBTensor& a) {
    const std::size_t n3 = a.n3();
    RBTensor out(a.n2(), a.n1(), n3);
    for (std::size_t k = 0; k < n3; ++k)
        for (std::size_t i = 0; i < a.n1(); ++i)
            for (std::size_t j = 0; j < a.n2(); ++j) out.set(j, i, k, rb_conj(a.at(i, j, (n3 - k) % n3)));
    return out;
}

double scalar_norm(const RBTensor& a) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.n3(); ++k)
        for (std::size_t j = 0; j < a.n2(); ++j)
            for (std::size_t i = 0; i < a.n1(); ++i) {
                const RBScalar q = a.at(i, j, k);
                s += q.q0() * q.q0() + q.q1() * q.q1() + q.q2() * q.q2() + q.q3() * q.q3();
            }
    return std::sqrt(s);
}

double scalar_norm(const RBMatrix& a) {
    double s = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j)
        for (std::size_t i = 0; i < a.rows(); ++i) {
            const RBScalar q = a.at(i, j);
            s += q.q0() * q.q0() + q.q1() * q.q1() + q.q2() * q.q2() + q.q3() * q.q3();
        }
    return std::sqrt(s);
}

double cnorm(const CMatrix& a) {
    double s = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j)
        for (std::size_t i = 0; i < a.rows(); ++i) s += std::norm(a(i, j));
    return std::sqrt(s);
}

double rel_diff(const RBTensor& a, const RBTensor& b) {
    return scalar_norm(a - b) / std::max(1.0, scalar_norm(b));
}

double rel_diff(const RBMatrix& a, const RBMatrix& b) {
    return scalar_norm(a - b) / std::max(1.0, scalar_norm(b));
}

double rel_diff(const CMatrix& a, const CMatrix& b) { return cnorm(a - b) / std::max(1.0, cnorm(b)); }

CMatrix naive_matmul(const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            cplx s{};
            for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
            out(i, j) = s;
        }
    return out;
}

CMatrix naive_adjoint(const CMatrix& a) {
    CMatrix out(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = std::conj(a(i, j));
    return out;
}

}  // namespace oracle
