#pragma once

#include <cstddef>
#include <vector>

#include "rbtensor/rb_tensor.hpp"

namespace rbt {

/// A = U *Ht S *Ht V^*, U and V unitary, S f-diagonal.
struct HtSvd {
    RBTensor U;  ///< n1 x n1 x n3
    RBTensor S;  ///< n1 x n2 x n3
    RBTensor V;  ///< n2 x n2 x n3
};

/// Singular values of every DFT slice, per part: sigma1[k], sigma2[k] for slice k.
struct SliceSpectrum {
    std::vector<std::vector<double>> sigma1;
    std::vector<std::vector<double>> sigma2;
};

/// Pseudo-inverse together with the projectors L_A = I - A^+ A and R_A = I - A A^+.
struct PinvResult {
    RBTensor pinv;             ///< n2 x n1 x n3
    RBTensor left_projector;   ///< n2 x n2 x n3
    RBTensor right_projector;  ///< n1 x n1 x n3
};

/// Default relative threshold for tensor-level rank and pseudo-inverse decisions:
/// the complex default for one frontal slice.
double default_tensor_rtol(const RBTensor& a);

/// Per-DFT-slice complex SVDs of both parts. ConvergenceError carries the slice.
HtSvd ht_svd(const RBTensor& a);

/// Singular values of each DFT slice (both parts), without forming U and V.
SliceSpectrum slice_spectrum(const RBTensor& a);

/// Maximum numeric rank over all DFT slices and both parts.
std::size_t tubal_rank(const RBTensor& a, double rtol);
std::size_t tubal_rank(const RBTensor& a);

/// Keeps the k leading singular triplets of every DFT slice.
/// Throws RangeError unless 1 <= k <= min(n1, n2).
RBTensor rank_k_approx(const RBTensor& a, std::size_t k);

/// Slice-wise complex pseudo-inverse in the DFT domain, plus projectors.
/// A positive `atol` also drops singular values at or below it, which lets a
/// slice that is zero up to round-off invert to zero.
PinvResult tensor_pinv(const RBTensor& a, double rtol, double atol = 0.0);
PinvResult tensor_pinv(const RBTensor& a);

/// The factored form V *Ht S^+ *Ht U^*, where S^+ keeps, per DFT slice and part,
/// the singular values above rtol times that slice's largest.
RBTensor pinv_from_ht_svd(const HtSvd& svd, double rtol);

}  // namespace rbt
