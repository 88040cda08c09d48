#include "rbtensor/complex_linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "rbtensor/errors.hpp"

namespace rbt {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

cplx dot(std::span<const cplx> a, std::span<const cplx> b) {
    cplx s{};
    for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

double norm2(std::span<const cplx> a) {
    double s = 0.0;
    for (const cplx& v : a) s += std::norm(v);
    return s;
}

// Subtract projections of `v` onto the first `count` columns of `basis`
// (assumed orthonormal). Two passes of modified Gram-Schmidt.
void orthogonalize(std::span<cplx> v, const CMatrix& basis, std::size_t count) {
    for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t c = 0; c < count; ++c) {
            const auto q = basis.col(c);
            const cplx proj = dot(q, v);
            for (std::size_t i = 0; i < v.size(); ++i) v[i] -= proj * q[i];
        }
    }
}

struct TallSvd {
    CMatrix U;
    std::vector<double> sigma;
    CMatrix V;
};

// Requires m.rows() >= m.cols().
TallSvd hestenes(const CMatrix& a) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    CMatrix w = a;
    CMatrix v = CMatrix::identity(n);

    const std::size_t max_sweeps = 100 * std::max(m, n);
    const double tol = kEps * static_cast<double>(m);
    std::size_t sweep = 0;
    bool rotated = n > 1;
    while (rotated) {
        if (sweep == max_sweeps) {
            throw ConvergenceError("complex_svd: Jacobi sweeps did not converge", sweep);
        }
        ++sweep;
        rotated = false;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                auto wp = w.col(p);
                auto wq = w.col(q);
                const double alpha = norm2(wp);
                const double beta = norm2(wq);
                const cplx gamma = dot(wp, wq);
                const double g = std::abs(gamma);
                if (g == 0.0 || g <= tol * std::sqrt(alpha * beta)) continue;
                rotated = true;

                const cplx phase = gamma / g;  // e^{i phi}
                const double zeta = (beta - alpha) / (2.0 * g);
                const double t = (zeta >= 0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                const cplx phase_c = std::conj(phase);

                for (std::size_t i = 0; i < m; ++i) {
                    const cplx xp = wp[i];
                    const cplx xq = wq[i] * phase_c;
                    wp[i] = c * xp - s * xq;
                    wq[i] = s * xp + c * xq;
                }
                auto vp = v.col(p);
                auto vq = v.col(q);
                for (std::size_t i = 0; i < n; ++i) {
                    const cplx xp = vp[i];
                    const cplx xq = vq[i] * phase_c;
                    vp[i] = c * xp - s * xq;
                    vq[i] = s * xp + c * xq;
                }
            }
        }
    }

    std::vector<double> norms(n);
    for (std::size_t j = 0; j < n; ++j) norms[j] = std::sqrt(norm2(w.col(j)));
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return norms[x] > norms[y]; });

    TallSvd out{CMatrix(m, m), std::vector<double>(n), CMatrix(n, n)};
    const double smax = n > 0 ? norms[order[0]] : 0.0;
    const double negligible = smax * kEps * static_cast<double>(std::max(m, n));

    std::size_t filled = 0;
    std::vector<bool> needs_completion(m, false);
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t src = order[j];
        out.sigma[j] = norms[src];
        std::copy(v.col(src).begin(), v.col(src).end(), out.V.col(j).begin());
        auto uj = out.U.col(j);
        bool ok = false;
        if (norms[src] > negligible && norms[src] > 0.0) {
            const auto wj = w.col(src);
            for (std::size_t i = 0; i < m; ++i) uj[i] = wj[i] / norms[src];
            orthogonalize(uj, out.U, filled);
            const double nrm = std::sqrt(norm2(uj));
            if (nrm > 0.5) {
                for (cplx& x : uj) x /= nrm;
                ok = true;
            }
        }
        if (!ok) {
            std::fill(uj.begin(), uj.end(), cplx{});
            needs_completion[j] = true;
        }
        filled = j + 1;
    }
    for (std::size_t j = n; j < m; ++j) needs_completion[j] = true;

    // Complete U with the standard basis vector that keeps the most mass after
    // orthogonalization against every accepted column. Some e_i always keeps
    // at least 1/m of its squared norm.
    std::vector<cplx> cand(m);
    for (std::size_t j = 0; j < m; ++j) {
        if (!needs_completion[j]) continue;
        auto uj = out.U.col(j);
        double best = -1.0;
        for (std::size_t e = 0; e < m; ++e) {
            std::fill(cand.begin(), cand.end(), cplx{});
            cand[e] = 1.0;
            for (int pass = 0; pass < 2; ++pass) {
                for (std::size_t c = 0; c < m; ++c) {
                    if (c == j || (needs_completion[c] && c > j)) continue;
                    const auto q = out.U.col(c);
                    const cplx proj = dot(q, cand);
                    for (std::size_t i = 0; i < m; ++i) cand[i] -= proj * q[i];
                }
            }
            const double nrm = std::sqrt(norm2(cand));
            if (nrm > best) {
                best = nrm;
                for (std::size_t i = 0; i < m; ++i) uj[i] = cand[i];
            }
        }
        if (!(best > 0.0)) throw ConvergenceError("complex_svd: failed to complete orthonormal basis", sweep);
        for (cplx& x : uj) x /= best;
    }
    return out;
}

void fix_phases(CSvd& svd) {
    const std::size_t k = std::min(svd.U.cols(), svd.V.cols());
    for (std::size_t j = 0; j < svd.U.cols(); ++j) {
        auto uj = svd.U.col(j);
        double colmax = 0.0;
        for (const cplx& x : uj) colmax = std::max(colmax, std::abs(x));
        if (colmax == 0.0) continue;
        const double thresh = colmax * 1e-8;
        cplx phase{1.0, 0.0};
        for (const cplx& x : uj) {
            if (std::abs(x) > thresh) {
                phase = std::conj(x) / std::abs(x);
                break;
            }
        }
        if (phase == cplx{1.0, 0.0}) continue;
        for (cplx& x : uj) x *= phase;
        if (j < k) {
            for (cplx& x : svd.V.col(j)) x *= phase;
        }
    }
}

}  // namespace

CSvd complex_svd(const CMatrix& m) {
    if (!all_finite(m)) throw NonFiniteError("complex_svd: input contains NaN or Inf");
    CSvd out;
    if (m.rows() >= m.cols()) {
        TallSvd t = hestenes(m);
        out = {std::move(t.U), std::move(t.sigma), std::move(t.V)};
    } else {
        // M^H = U' S V'^H  =>  M = V' S U'^H
        TallSvd t = hestenes(conj_transpose(m));
        out = {std::move(t.V), std::move(t.sigma), std::move(t.U)};
    }
    fix_phases(out);
    return out;
}

CMatrix pinv_from_svd(const CSvd& svd, double rtol, double atol) {
    if (rtol < 0.0 || atol < 0.0) throw RangeError("pinv: tolerances must be non-negative");
    const std::size_t m = svd.U.rows();
    const std::size_t n = svd.V.rows();
    CMatrix x(n, m);
    const std::size_t r = numeric_rank(svd.sigma, rtol, atol);
    for (std::size_t l = 0; l < r; ++l) {
        const double inv = 1.0 / svd.sigma[l];
        const auto vl = svd.V.col(l);
        const auto ul = svd.U.col(l);
        for (std::size_t c = 0; c < m; ++c) {
            const cplx uc = std::conj(ul[c]) * inv;
            auto xc = x.col(c);
            for (std::size_t r2 = 0; r2 < n; ++r2) xc[r2] += vl[r2] * uc;
        }
    }
    return x;
}

CMatrix complex_pinv(const CMatrix& m, double rtol, double atol) {
    if (rtol < 0.0 || atol < 0.0) throw RangeError("complex_pinv: tolerances must be non-negative");
    if (m.empty()) return CMatrix(m.cols(), m.rows());
    return pinv_from_svd(complex_svd(m), rtol, atol);
}

std::size_t numeric_rank(std::span<const double> sigma, double rtol, double atol) {
    if (sigma.empty()) return 0;
    const double smax = *std::max_element(sigma.begin(), sigma.end());
    if (smax <= 0.0) return 0;
    const double thresh = std::max(rtol * smax, atol);
    return static_cast<std::size_t>(
        std::count_if(sigma.begin(), sigma.end(), [&](double s) { return s > thresh; }));
}

}  // namespace rbt
