#include "rbtensor/dft.hpp"

#include <atomic>
#include <cmath>
#include <numbers>

#include "rbtensor/errors.hpp"

namespace rbt {

namespace {

std::atomic<bool> g_sign_fault{false};

constexpr std::size_t kDirectLimit = 32;

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

cplx unit_root(std::size_t k, std::size_t n) {
    // exp(-2 pi i k / n) with the angle reduced before evaluation
    const double angle = -2.0 * std::numbers::pi * static_cast<double>(k % n) / static_cast<double>(n);
    return {std::cos(angle), std::sin(angle)};
}

}  // namespace

namespace testing {
void set_dft_sign_fault(bool enabled) noexcept { g_sign_fault.store(enabled); }
bool dft_sign_fault() noexcept { return g_sign_fault.load(); }
}  // namespace testing

DftPlan::DftPlan(std::size_t n) : n_(n) {
    if (n == 0) throw EmptyInputError("DFT length must be at least 1");
    roots_.resize(n);
    for (std::size_t k = 0; k < n; ++k) roots_[k] = unit_root(k, n);

    if (is_pow2(n)) {
        kind_ = Kind::Radix2;
        bitrev_.resize(n);
        std::size_t bits = 0;
        while ((std::size_t{1} << bits) < n) ++bits;
        for (std::size_t k = 0; k < n; ++k) {
            std::size_t r = 0;
            for (std::size_t b = 0; b < bits; ++b)
                if (k & (std::size_t{1} << b)) r |= std::size_t{1} << (bits - 1 - b);
            bitrev_[k] = r;
        }
    } else if (n <= kDirectLimit) {
        kind_ = Kind::Direct;
    } else {
        kind_ = Kind::Bluestein;
        conv_len_ = next_pow2(2 * n - 1);
        inner_ = std::make_shared<const DftPlan>(conv_len_);

        chirp_.resize(n);
        const std::size_t two_n = 2 * n;
        for (std::size_t k = 0; k < n; ++k) {
            // k^2 mod 2n keeps the angle small for large k
            const std::size_t k2 = (k * k) % two_n;
            const double angle = -std::numbers::pi * static_cast<double>(k2) / static_cast<double>(n);
            chirp_[k] = {std::cos(angle), std::sin(angle)};
        }
        kernel_hat_.assign(conv_len_, cplx{});
        kernel_hat_conj_.assign(conv_len_, cplx{});
        for (std::size_t k = 0; k < n; ++k) {
            kernel_hat_[k] = std::conj(chirp_[k]);
            kernel_hat_conj_[k] = chirp_[k];
            if (k != 0) {
                kernel_hat_[conv_len_ - k] = std::conj(chirp_[k]);
                kernel_hat_conj_[conv_len_ - k] = chirp_[k];
            }
        }
        inner_->transform(kernel_hat_, -1);
        inner_->transform(kernel_hat_conj_, -1);
    }
}

void DftPlan::forward(std::span<cplx> x) const {
    transform(x, testing::dft_sign_fault() ? +1 : -1);
}

void DftPlan::inverse(std::span<cplx> x) const {
    transform(x, +1);
    const double scale = 1.0 / static_cast<double>(n_);
    for (cplx& v : x) v *= scale;
}

void DftPlan::transform(std::span<cplx> x, int sign) const {
    if (x.size() != n_) throw DimensionError("DftPlan: input length does not match plan length");
    switch (kind_) {
        case Kind::Radix2: radix2(x, sign); break;
        case Kind::Direct: direct(x, sign); break;
        case Kind::Bluestein: bluestein(x, sign); break;
    }
}

void DftPlan::radix2(std::span<cplx> x, int sign) const {
    for (std::size_t k = 0; k < n_; ++k)
        if (k < bitrev_[k]) std::swap(x[k], x[bitrev_[k]]);
    for (std::size_t len = 2; len <= n_; len <<= 1) {
        const std::size_t half = len / 2;
        const std::size_t stride = n_ / len;
        for (std::size_t start = 0; start < n_; start += len) {
            for (std::size_t k = 0; k < half; ++k) {
                cplx w = roots_[k * stride];
                if (sign > 0) w = std::conj(w);
                const cplx u = x[start + k];
                const cplx v = x[start + k + half] * w;
                x[start + k] = u + v;
                x[start + k + half] = u - v;
            }
        }
    }
}

void DftPlan::direct(std::span<cplx> x, int sign) const {
    std::vector<cplx> out(n_);
    for (std::size_t t = 0; t < n_; ++t) {
        cplx acc{};
        for (std::size_t k = 0; k < n_; ++k) {
            cplx w = roots_[(k * t) % n_];
            if (sign > 0) w = std::conj(w);
            acc += x[k] * w;
        }
        out[t] = acc;
    }
    std::copy(out.begin(), out.end(), x.begin());
}

void DftPlan::bluestein(std::span<cplx> x, int sign) const {
    std::vector<cplx> a(conv_len_, cplx{});
    for (std::size_t k = 0; k < n_; ++k) {
        const cplx c = sign < 0 ? chirp_[k] : std::conj(chirp_[k]);
        a[k] = x[k] * c;
    }
    inner_->transform(a, -1);
    const auto& kh = sign < 0 ? kernel_hat_ : kernel_hat_conj_;
    const double scale = 1.0 / static_cast<double>(conv_len_);
    for (std::size_t k = 0; k < conv_len_; ++k) a[k] *= kh[k] * scale;
    inner_->transform(a, +1);
    for (std::size_t t = 0; t < n_; ++t) {
        const cplx c = sign < 0 ? chirp_[t] : std::conj(chirp_[t]);
        x[t] = a[t] * c;
    }
}

std::vector<cplx> dft_forward(std::span<const cplx> v) {
    if (v.empty()) throw EmptyInputError("dft_forward: empty input");
    std::vector<cplx> out(v.begin(), v.end());
    DftPlan(v.size()).forward(out);
    return out;
}

std::vector<cplx> dft_inverse(std::span<const cplx> v) {
    if (v.empty()) throw EmptyInputError("dft_inverse: empty input");
    std::vector<cplx> out(v.begin(), v.end());
    DftPlan(v.size()).inverse(out);
    return out;
}

}  // namespace rbt
