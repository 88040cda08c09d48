#include "rbtensor/ht_decomp.hpp"

#include <algorithm>
#include <exception>

#include "rbtensor/complex_linalg.hpp"
#include "rbtensor/parallel.hpp"

namespace rbt {

namespace {

// Runs fn(slice, part) for all 2 * n3 jobs; a ConvergenceError is re-thrown
// with the slice index attached.
template <class Fn>
void for_each_slice_part(std::size_t n3, Fn&& fn) {
    parallel_for(2 * n3, [&](std::size_t job) {
        const std::size_t k = job / 2;
        const int part = static_cast<int>(job % 2);
        try {
            fn(k, part);
        } catch (const ConvergenceError& e) {
            throw ConvergenceError(std::string(e.what()) + " in DFT slice " + std::to_string(k), e.iterations(),
                                   static_cast<std::ptrdiff_t>(k));
        }
    });
}

void store_part(DftTensor& t, std::size_t k, int part, const CMatrix& m) {
    auto dst = part == 0 ? t.part1() : t.part2();
    std::copy(m.data().begin(), m.data().end(), dst.begin() + static_cast<std::ptrdiff_t>(k * t.slice_size()));
}

CMatrix load_part(const DftTensor& t, std::size_t k, int part) {
    const auto src = part == 0 ? t.part1() : t.part2();
    const auto first = src.begin() + static_cast<std::ptrdiff_t>(k * t.slice_size());
    return {t.n1(), t.n2(), std::vector<cplx>(first, first + static_cast<std::ptrdiff_t>(t.slice_size()))};
}

}  // namespace

double default_tensor_rtol(const RBTensor& a) { return default_rtol(a.n1(), a.n2()); }

HtSvd ht_svd(const RBTensor& a) {
    const std::size_t n1 = a.n1();
    const std::size_t n2 = a.n2();
    const std::size_t n3 = a.n3();
    const DftTensor d = mode3_dft(a);
    DftTensor u(n1, n1, n3);
    DftTensor s(n1, n2, n3);
    DftTensor v(n2, n2, n3);
    for_each_slice_part(n3, [&](std::size_t k, int part) {
        const CSvd svd = complex_svd(load_part(d, k, part));
        std::vector<cplx> diag(svd.sigma.begin(), svd.sigma.end());
        store_part(u, k, part, svd.U);
        store_part(s, k, part, CMatrix::diagonal(n1, n2, diag));
        store_part(v, k, part, svd.V);
    });
    return {mode3_idft(u), mode3_idft(s), mode3_idft(v)};
}

SliceSpectrum slice_spectrum(const RBTensor& a) {
    const DftTensor d = mode3_dft(a);
    SliceSpectrum out;
    out.sigma1.resize(a.n3());
    out.sigma2.resize(a.n3());
    for_each_slice_part(a.n3(), [&](std::size_t k, int part) {
        auto& dst = part == 0 ? out.sigma1[k] : out.sigma2[k];
        dst = complex_svd(load_part(d, k, part)).sigma;
    });
    return out;
}

std::size_t tubal_rank(const RBTensor& a, double rtol) {
    const SliceSpectrum spec = slice_spectrum(a);
    std::size_t r = 0;
    for (std::size_t k = 0; k < a.n3(); ++k) {
        r = std::max({r, numeric_rank(spec.sigma1[k], rtol), numeric_rank(spec.sigma2[k], rtol)});
    }
    return r;
}

std::size_t tubal_rank(const RBTensor& a) { return tubal_rank(a, default_tensor_rtol(a)); }

RBTensor rank_k_approx(const RBTensor& a, std::size_t k) {
    const std::size_t kmax = std::min(a.n1(), a.n2());
    if (k < 1 || k > kmax) {
        throw RangeError("rank_k_approx: k = " + std::to_string(k) + " outside [1, " + std::to_string(kmax) + "]");
    }
    const DftTensor d = mode3_dft(a);
    DftTensor out(a.n1(), a.n2(), a.n3());
    for_each_slice_part(a.n3(), [&](std::size_t s, int part) {
        const CSvd svd = complex_svd(load_part(d, s, part));
        CMatrix approx(a.n1(), a.n2());
        for (std::size_t r = 0; r < k; ++r) {
            const auto u = svd.U.col(r);
            const auto v = svd.V.col(r);
            for (std::size_t c = 0; c < a.n2(); ++c) {
                const cplx w = svd.sigma[r] * std::conj(v[c]);
                for (std::size_t i = 0; i < a.n1(); ++i) approx(i, c) += u[i] * w;
            }
        }
        store_part(out, s, part, approx);
    });
    return mode3_idft(out);
}

PinvResult tensor_pinv(const RBTensor& a, double rtol, double atol) {
    const DftTensor d = mode3_dft(a);
    DftTensor p(a.n2(), a.n1(), a.n3());
    for_each_slice_part(a.n3(), [&](std::size_t k, int part) {
        store_part(p, k, part, complex_pinv(load_part(d, k, part), rtol, atol));
    });
    PinvResult out;
    out.pinv = mode3_idft(p);
    out.left_projector = identity_tensor(a.n2(), a.n3()) - mode3_idft(slice_product(p, d));
    out.right_projector = identity_tensor(a.n1(), a.n3()) - mode3_idft(slice_product(d, p));
    return out;
}

PinvResult tensor_pinv(const RBTensor& a) { return tensor_pinv(a, default_tensor_rtol(a)); }

RBTensor pinv_from_ht_svd(const HtSvd& svd, double rtol) {
    const DftTensor s = mode3_dft(svd.S);
    DftTensor sp(s.n2(), s.n1(), s.n3());
    const std::size_t r = std::min(s.n1(), s.n2());
    for_each_slice_part(s.n3(), [&](std::size_t k, int part) {
        const CMatrix m = load_part(s, k, part);
        double smax = 0.0;
        for (std::size_t i = 0; i < r; ++i) smax = std::max(smax, std::abs(m(i, i)));
        CMatrix inv(s.n2(), s.n1());
        for (std::size_t i = 0; i < r; ++i) {
            const double sv = std::abs(m(i, i));
            if (sv > rtol * smax && sv > 0.0) inv(i, i) = 1.0 / m(i, i);
        }
        store_part(sp, k, part, inv);
    });
    return ht_product(ht_product(svd.V, mode3_idft(sp)), tensor_conj_transpose(svd.U));
}

}  // namespace rbt
