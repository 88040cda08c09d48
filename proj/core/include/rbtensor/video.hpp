#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "rbtensor/ppm.hpp"
#include "rbtensor/rb_tensor.hpp"

namespace rbt {

/// Ordered RGB frames of equal size.
struct FrameSequence {
    std::size_t width = 0;
    std::size_t height = 0;
    std::vector<Image> frames;

    /// Throws EmptyInputError / DimensionError.
    void validate() const;
    friend bool operator==(const FrameSequence&, const FrameSequence&) = default;
};

/// Reads every frame_NNNNNN.ppm in `dir`, in index order. Indices must be
/// contiguous from 0.
FrameSequence read_frames(const std::filesystem::path& dir);
/// Creates `dir` if needed and writes frame_000000.ppm, ...
void write_frames(const std::filesystem::path& dir, const FrameSequence& seq);

/// height x width x frames tensor, R -> i, G -> j, B -> k, real part 0, values on 0..255.
RBTensor encode(const FrameSequence& seq);

struct DecodeStats {
    std::size_t clamped = 0;  ///< channel values that round to outside [0, 255]
};
/// Rounds half-to-even and clamps to [0, 255]; the real part is ignored.
FrameSequence decode(const RBTensor& t, DecodeStats* stats = nullptr);

/// |q0| <= tol and every q1..q3 within [-tol, 255 + tol].
bool is_video_tensor(const RBTensor& t, double tol = 0.0);

/// 10 log10(3 n1 n2 ||C||_inf^2 / ||C - C'||_F^2) for one frame treated as a
/// real n1 x n2 x 3 array. +infinity when the frames are identical.
double psnr(const FrameSequence& reference, const FrameSequence& test, std::size_t frame_index);
/// Same formula on the i/j/k channels of two video tensors, without rounding.
double psnr(const RBTensor& reference, const RBTensor& test, std::size_t frame_index);

/// ||A - B||_F / ||A||_F; throws RangeError when ||A||_F = 0.
double relative_error(const RBTensor& reference, const RBTensor& approx);

enum class BlurKind { Gaussian, Motion };

struct BlurParams {
    BlurKind kind = BlurKind::Gaussian;
    double sigma = 1.0;                 ///< Gaussian width in pixels; 0 gives no blur
    std::optional<std::size_t> support; ///< Gaussian radius; default ceil(3 sigma)
    std::size_t length = 3;             ///< motion kernel length
    double coupling = 0.1;              ///< slice 2 = coupling * slice 1 (needs n3 >= 2)
    double min_rcond = 1e-10;           ///< smallest accepted sigma_min / sigma_max per DFT slice
};

/// n x n x n3 real blur tensor whose first slice is a row-normalized circulant
/// kernel matrix. Throws RangeError if any DFT slice is numerically singular.
RBTensor synth_blur(std::size_t n, std::size_t n3, const BlurParams& params = {});

struct CompressResult {
    RBTensor tensor;
    std::vector<double> psnr_db;  ///< per frame, on decoded 8-bit frames
};

/// Rank-k approximation plus per-frame PSNR against the input.
CompressResult compress(const RBTensor& video, std::size_t k);

/// F = A *Ht B^+ through per-slice SVDs of the DFT of B.
RBTensor learn_deblur_filter(const RBTensor& clean, const RBTensor& blurred, double rtol);
RBTensor learn_deblur_filter(const RBTensor& clean, const RBTensor& blurred);
RBTensor apply_filter(const RBTensor& filter, const RBTensor& blurred);

struct SyntheticVideoParams {
    std::size_t rank = 3;
    /// Fraction of each pixel drawn from independent uniform noise; 0 keeps the
    /// tubal rank exactly `rank`.
    double texture = 0.0;
};

/// Sum of `rank` non-negative separable patterns per channel with smoothly
/// varying weights over time, scaled so the peak value is 255.
RBTensor synthetic_video(std::size_t height, std::size_t width, std::size_t frames, std::uint64_t seed,
                         const SyntheticVideoParams& params = {});

}  // namespace rbt
