#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "rbtensor/ht_decomp.hpp"
#include "rbtensor/solvers.hpp"
#include "rbtensor/video.hpp"
#include "support/oracles.hpp"

using rbt::FrameSequence;
using rbt::Image;
using rbt::RBScalar;
using rbt::RBTensor;

namespace {

FrameSequence solid(std::size_t w, std::size_t h, std::size_t frames, std::uint8_t r, std::uint8_t g,
                    std::uint8_t b) {
    FrameSequence s;
    s.width = w;
    s.height = h;
    for (std::size_t t = 0; t < frames; ++t) {
        Image img{w, h, std::vector<std::uint8_t>(w * h * 3)};
        for (std::size_t p = 0; p < w * h; ++p) {
            img.rgb[3 * p] = r;
            img.rgb[3 * p + 1] = g;
            img.rgb[3 * p + 2] = b;
        }
        s.frames.push_back(img);
    }
    return s;
}

FrameSequence random_frames(std::size_t w, std::size_t h, std::size_t frames, oracle::Rng& rng) {
    FrameSequence s = solid(w, h, frames, 0, 0, 0);
    std::uniform_int_distribution<int> byte(0, 255);
    for (auto& f : s.frames)
        for (auto& v : f.rgb) v = static_cast<std::uint8_t>(byte(rng));
    return s;
}

}  // namespace

TEST(Encode, PureRed) {
    const RBTensor t = rbt::encode(solid(3, 2, 2, 255, 0, 0));
    EXPECT_EQ(t.n1(), 2u);
    EXPECT_EQ(t.n2(), 3u);
    EXPECT_EQ(t.n3(), 2u);
    for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(t.at(i, j, k), RBScalar(0, 255, 0, 0));
}

TEST(Encode, RoundTripBitExact) {
    oracle::Rng rng(91);
    const FrameSequence f = random_frames(5, 4, 3, rng);
    rbt::DecodeStats stats;
    EXPECT_EQ(rbt::decode(rbt::encode(f), &stats), f);
    EXPECT_EQ(stats.clamped, 0u);
}

TEST(Encode, CheckerboardIsVideoTensor) {
    FrameSequence s = solid(4, 4, 2, 0, 0, 0);
    for (std::size_t t = 0; t < 2; ++t)
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t c = 0; c < 4; ++c)
                if ((r + c + t) % 2 == 0)
                    for (std::size_t ch = 0; ch < 3; ++ch) s.frames[t].at(r, c, ch) = 255;
    const RBTensor t = rbt::encode(s);
    EXPECT_TRUE(rbt::is_video_tensor(t));
    for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(t.at(i, j, k).q0(), 0.0);
}

TEST(Encode, EmptyAndMismatched) {
    EXPECT_THROW(rbt::encode(FrameSequence{}), rbt::EmptyInputError);
    FrameSequence s = solid(2, 2, 2, 1, 2, 3);
    s.frames[1].width = 3;
    EXPECT_THROW(rbt::encode(s), rbt::DimensionError);
}

TEST(Decode, ClampsAndRoundsHalfToEven) {
    RBTensor t(1, 3, 1);
    t.set(0, 0, 0, RBScalar(0, 300.0, -4.0, 2.5));
    t.set(0, 1, 0, RBScalar(0, 3.5, 0.4, 254.6));
    rbt::DecodeStats stats;
    const FrameSequence f = rbt::decode(t, &stats);
    EXPECT_EQ(f.frames[0].at(0, 0, 0), 255);
    EXPECT_EQ(f.frames[0].at(0, 0, 1), 0);
    EXPECT_EQ(f.frames[0].at(0, 0, 2), 2);
    EXPECT_EQ(f.frames[0].at(0, 1, 0), 4);
    EXPECT_EQ(f.frames[0].at(0, 1, 1), 0);
    EXPECT_EQ(f.frames[0].at(0, 1, 2), 255);
    EXPECT_EQ(stats.clamped, 2u);

    // Round-off just past the range does not count as clamping.
    t.set(0, 2, 0, RBScalar(0, 255.0 + 1e-9, -1e-9, 255.4));
    rbt::decode(t, &stats);
    EXPECT_EQ(stats.clamped, 2u);
}

TEST(Psnr, HandComputedCase) {
    const FrameSequence ref = solid(2, 2, 1, 255, 255, 255);
    const FrameSequence test = solid(2, 2, 1, 254, 254, 254);
    // 10 log10(3 * 4 * 255^2 / 12) = 10 log10(65025)
    EXPECT_NEAR(rbt::psnr(ref, test, 0), 10.0 * std::log10(65025.0), 1e-10);
    EXPECT_NEAR(rbt::psnr(ref, test, 0), 48.1308, 1e-4);
    EXPECT_EQ(rbt::psnr(ref, ref, 0), std::numeric_limits<double>::infinity());
    EXPECT_THROW(rbt::psnr(ref, test, 1), rbt::RangeError);
    EXPECT_THROW(rbt::psnr(ref, solid(2, 3, 1, 0, 0, 0), 0), rbt::DimensionError);
}

TEST(Psnr, DoublingErrorCostsSixDecibels) {
    const FrameSequence ref = solid(3, 3, 1, 200, 100, 50);
    const FrameSequence e1 = solid(3, 3, 1, 198, 98, 48);
    const FrameSequence e2 = solid(3, 3, 1, 196, 96, 46);
    EXPECT_NEAR(rbt::psnr(ref, e1, 0) - rbt::psnr(ref, e2, 0), 20.0 * std::log10(2.0), 1e-10);
}

TEST(Psnr, FrameAndTensorRoutesAgree) {
    oracle::Rng rng(92);
    const FrameSequence a = random_frames(4, 3, 2, rng);
    const FrameSequence b = random_frames(4, 3, 2, rng);
    for (std::size_t t = 0; t < 2; ++t) {
        EXPECT_NEAR(rbt::psnr(a, b, t), rbt::psnr(rbt::encode(a), rbt::encode(b), t), 1e-10);
        EXPECT_NEAR(rbt::psnr(a, b, t), rbt::psnr(a, rbt::decode(rbt::encode(b)), t), 1e-10);
    }
}

TEST(RelativeError, Basics) {
    oracle::Rng rng(93);
    const RBTensor a = oracle::random_tensor(3, 4, 2, rng);
    EXPECT_EQ(rbt::relative_error(a, a), 0.0);
    EXPECT_NEAR(rbt::relative_error(a, 2.0 * a), 1.0, 1e-13);
    for (int rep = 0; rep < 20; ++rep) {
        const RBTensor b = oracle::random_tensor(3, 4, 2, rng);
        EXPECT_NEAR(rbt::relative_error(a, b), oracle::scalar_norm(a - b) / oracle::scalar_norm(a), 1e-13);
    }
    EXPECT_THROW(rbt::relative_error(RBTensor(2, 2, 2), a), rbt::RangeError);
}

TEST(SynthBlur, Properties) {
    rbt::BlurParams none;
    none.sigma = 0.0;
    none.coupling = 0.0;
    EXPECT_EQ(rbt::synth_blur(5, 3, none), rbt::identity_tensor(5, 3));

    const RBTensor g = rbt::synth_blur(16, 4);
    const rbt::RBMatrix s1 = g.slice(0);
    for (std::size_t r = 0; r < 16; ++r) {
        double sum = 0.0;
        for (std::size_t c = 0; c < 16; ++c) sum += s1.at(r, c).q0();
        EXPECT_NEAR(sum, 1.0, 1e-14);
    }
    EXPECT_EQ(rbt::tubal_rank(g), 16u);

    rbt::BlurParams wide;
    wide.sigma = 3.0;
    wide.support = 16;  // sigma_min / sigma_max is about 4.6e-8
    EXPECT_NO_THROW(rbt::synth_blur(32, 2, wide));
    wide.min_rcond = 1e-6;
    EXPECT_THROW(rbt::synth_blur(32, 2, wide), rbt::RangeError);
    rbt::BlurParams motion;
    motion.kind = rbt::BlurKind::Motion;
    motion.length = 2;  // zero response at the Nyquist frequency
    EXPECT_THROW(rbt::synth_blur(16, 1, motion), rbt::RangeError);
    motion.length = 3;
    EXPECT_NO_THROW(rbt::synth_blur(16, 2, motion));
}

TEST(Compress, FullRankIsExact) {
    const RBTensor v = rbt::synthetic_video(8, 8, 3, 7, {.rank = 3, .texture = 0.3});
    const auto c = rbt::compress(v, 8);
    for (double p : c.psnr_db) EXPECT_EQ(p, std::numeric_limits<double>::infinity());
    EXPECT_THROW(rbt::compress(v, 9), rbt::RangeError);
}

TEST(Compress, MonotoneInRankAndRankBounded) {
    const RBTensor v = rbt::synthetic_video(12, 12, 4, 8, {.rank = 4, .texture = 0.05});
    std::vector<double> prev(4, -std::numeric_limits<double>::infinity());
    for (std::size_t k : {1, 2, 4, 8}) {
        const auto c = rbt::compress(v, k);
        EXPECT_LE(rbt::tubal_rank(c.tensor, 1e-10), k);
        for (std::size_t t = 0; t < 4; ++t) {
            EXPECT_GE(c.psnr_db[t], prev[t]) << "k = " << k << " frame " << t;
            prev[t] = c.psnr_db[t];
        }
    }
}

TEST(Compress, ResidualEqualsDiscardedSpectrum) {
    const RBTensor v = rbt::synthetic_video(10, 8, 4, 9, {.rank = 3, .texture = 0.2});
    const std::size_t k = 2;
    const auto spec = rbt::slice_spectrum(v);
    double discarded = 0.0;
    for (std::size_t s = 0; s < 4; ++s)
        for (std::size_t i = k; i < spec.sigma1[s].size(); ++i)
            discarded += spec.sigma1[s][i] * spec.sigma1[s][i] + spec.sigma2[s][i] * spec.sigma2[s][i];
    // ||.||^2 = (|part1|^2 + |part2|^2) / 2, and the DFT scales energy by n3.
    const double want = discarded / (2.0 * 4.0);
    const double got = std::pow(rbt::tensor_frobenius_norm(v - rbt::compress(v, k).tensor), 2);
    EXPECT_NEAR(got, want, 1e-9 * want);
}

TEST(Deblur, IdentityBlur) {
    oracle::Rng rng(94);
    const RBTensor a = oracle::random_tensor(6, 6, 3, rng);
    const RBTensor f = rbt::learn_deblur_filter(a, a);
    EXPECT_LE(rbt::relative_error(a, rbt::apply_filter(f, a)), 1e-9);
}

TEST(Deblur, InvertibleBlurRecovery) {
    const RBTensor a = rbt::synthetic_video(16, 16, 4, 10, {.rank = 3, .texture = 0.5});
    const RBTensor g = rbt::synth_blur(16, 4);
    const RBTensor b = rbt::ht_product(g, a);
    const RBTensor f = rbt::learn_deblur_filter(a, b);
    const RBTensor rec = rbt::apply_filter(f, b);
    EXPECT_LE(rbt::relative_error(a, rec), 1e-8);
    rbt::DecodeStats stats;
    EXPECT_EQ(rbt::decode(rec, &stats), rbt::decode(a));
}

TEST(Deblur, MatchesLeastSquaresSolver) {
    oracle::Rng rng(95);
    for (int rep = 0; rep < 5; ++rep) {
        const RBTensor a = oracle::random_tensor(5, 4, 3, rng);
        const RBTensor b = oracle::random_tensor(5, 4, 3, rng);
        const RBTensor f = rbt::learn_deblur_filter(a, b);
        EXPECT_LE(oracle::rel_diff(f, rbt::lstsq_xab(b, a).solution), 1e-9);
    }
}

TEST(Deblur, LeastSquaresOptimality) {
    oracle::Rng rng(96);
    const RBTensor a = oracle::random_tensor(5, 3, 3, rng);
    const RBTensor b = oracle::random_tensor(5, 3, 3, rng);
    const RBTensor f = rbt::learn_deblur_filter(a, b);
    const double best = rbt::tensor_frobenius_norm(rbt::ht_product(f, b) - a);
    for (int rep = 0; rep < 100; ++rep) {
        const RBTensor delta = 0.1 * oracle::random_tensor(5, 5, 3, rng);
        EXPECT_LE(best, rbt::tensor_frobenius_norm(rbt::ht_product(f + delta, b) - a) + 1e-9);
    }
}

TEST(SyntheticVideo, ExactTubalRank) {
    const RBTensor v = rbt::synthetic_video(16, 16, 4, 3);
    EXPECT_TRUE(rbt::is_video_tensor(v, 1e-9));
    EXPECT_EQ(rbt::tubal_rank(v, 1e-10), 3u);
}
