#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace rbt {

using cplx = std::complex<double>;

/// Precomputed discrete Fourier transform of a fixed length n >= 1.
///
/// Forward: X[t] = sum_k x[k] * exp(-2*pi*i*k*t/n)  (unnormalized).
/// Inverse: x[k] = (1/n) sum_t X[t] * exp(+2*pi*i*k*t/n).
///
/// Power-of-two lengths use an iterative radix-2 kernel, short lengths a
/// direct sum, and the remaining lengths Bluestein's chirp-z reduction to a
/// power-of-two convolution. A plan is immutable after construction and can
/// be shared between threads.
class DftPlan {
public:
    explicit DftPlan(std::size_t n);

    std::size_t size() const noexcept { return n_; }

    void forward(std::span<cplx> x) const;
    void inverse(std::span<cplx> x) const;

private:
    enum class Kind { Radix2, Direct, Bluestein };

    void transform(std::span<cplx> x, int sign) const;
    void radix2(std::span<cplx> x, int sign) const;
    void direct(std::span<cplx> x, int sign) const;
    void bluestein(std::span<cplx> x, int sign) const;

    std::size_t n_;
    Kind kind_;
    std::vector<cplx> roots_;           // exp(-2 pi i k / n), k < n
    std::vector<std::size_t> bitrev_;   // radix-2 only
    // Bluestein state
    std::size_t conv_len_ = 0;
    std::vector<cplx> chirp_;           // exp(-pi i k^2 / n)
    std::vector<cplx> kernel_hat_;      // forward FFT of the conj-chirp kernel
    std::vector<cplx> kernel_hat_conj_; // same for the opposite sign
    std::shared_ptr<const DftPlan> inner_;
};

/// Unnormalized forward DFT. Throws EmptyInputError for an empty sequence.
std::vector<cplx> dft_forward(std::span<const cplx> v);
/// Inverse of dft_forward (divides by n).
std::vector<cplx> dft_inverse(std::span<const cplx> v);

namespace testing {
/// Mutation hook for verifying the property suite: when enabled, the forward
/// transform uses the wrong exponent sign while the inverse stays correct.
void set_dft_sign_fault(bool enabled) noexcept;
bool dft_sign_fault() noexcept;
}  // namespace testing

}  // namespace rbt
