#include "rbtensor/video.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <regex>

#include "rbtensor/complex_linalg.hpp"
#include "rbtensor/ht_decomp.hpp"
#include "rbtensor/parallel.hpp"

namespace rbt {

void FrameSequence::validate() const {
    if (frames.empty()) throw EmptyInputError("frame sequence is empty");
    for (std::size_t t = 0; t < frames.size(); ++t) {
        const Image& f = frames[t];
        if (f.width != width || f.height != height || f.rgb.size() != width * height * 3) {
            throw DimensionError("frame " + std::to_string(t) + " is " + std::to_string(f.width) + "x" +
                                 std::to_string(f.height) + ", expected " + std::to_string(width) + "x" +
                                 std::to_string(height));
        }
    }
}

FrameSequence read_frames(const std::filesystem::path& dir) {
    if (!std::filesystem::is_directory(dir)) throw Error(dir.string() + " is not a directory");
    static const std::regex pattern(R"(frame_(\d{6})\.ppm)");
    std::vector<std::pair<std::size_t, std::filesystem::path>> found;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        std::smatch m;
        const std::string name = entry.path().filename().string();
        if (entry.is_regular_file() && std::regex_match(name, m, pattern)) {
            found.emplace_back(std::stoul(m[1].str()), entry.path());
        }
    }
    if (found.empty()) throw EmptyInputError("no frame_NNNNNN.ppm files in " + dir.string());
    std::sort(found.begin(), found.end());
    FrameSequence seq;
    for (std::size_t t = 0; t < found.size(); ++t) {
        if (found[t].first != t) throw Error("missing " + frame_file_name(t) + " in " + dir.string());
        seq.frames.push_back(read_ppm(found[t].second));
    }
    seq.width = seq.frames.front().width;
    seq.height = seq.frames.front().height;
    seq.validate();
    return seq;
}

void write_frames(const std::filesystem::path& dir, const FrameSequence& seq) {
    seq.validate();
    std::filesystem::create_directories(dir);
    for (std::size_t t = 0; t < seq.frames.size(); ++t) write_ppm(dir / frame_file_name(t), seq.frames[t]);
}

RBTensor encode(const FrameSequence& seq) {
    seq.validate();
    RBTensor t(seq.height, seq.width, seq.frames.size());
    parallel_for(seq.frames.size(), [&](std::size_t k) {
        const Image& f = seq.frames[k];
        for (std::size_t c = 0; c < seq.width; ++c) {
            for (std::size_t r = 0; r < seq.height; ++r) {
                const double red = f.at(r, c, 0);
                const double green = f.at(r, c, 1);
                const double blue = f.at(r, c, 2);
                // qa = R i, qb = G + B i
                const std::size_t n = t.index(r, c, k);
                t.part1()[n] = {green, red + blue};
                t.part2()[n] = {-green, red - blue};
            }
        }
    });
    return t;
}

namespace {

std::uint8_t to_byte(double v, std::size_t& clamped) {
    const double r = std::nearbyint(v);
    if (r < 0.0 || r > 255.0) ++clamped;
    return static_cast<std::uint8_t>(std::clamp(r, 0.0, 255.0));
}

// q1, q2, q3 of entry n.
std::array<double, 3> channels(const RBTensor& t, std::size_t n) {
    const cplx qa = 0.5 * (t.part1()[n] + t.part2()[n]);
    const cplx qb = 0.5 * (t.part1()[n] - t.part2()[n]);
    return {qa.imag(), qb.real(), qb.imag()};
}

}  // namespace

FrameSequence decode(const RBTensor& t, DecodeStats* stats) {
    if (t.size() == 0) throw EmptyInputError("decode: empty tensor");
    FrameSequence seq;
    seq.height = t.n1();
    seq.width = t.n2();
    seq.frames.resize(t.n3());
    std::vector<std::size_t> clamped(t.n3(), 0);
    parallel_for(t.n3(), [&](std::size_t k) {
        Image& f = seq.frames[k];
        f.width = seq.width;
        f.height = seq.height;
        f.rgb.resize(f.width * f.height * 3);
        for (std::size_t c = 0; c < seq.width; ++c) {
            for (std::size_t r = 0; r < seq.height; ++r) {
                const auto q = channels(t, t.index(r, c, k));
                for (std::size_t ch = 0; ch < 3; ++ch) f.at(r, c, ch) = to_byte(q[ch], clamped[k]);
            }
        }
    });
    if (stats) {
        stats->clamped = 0;
        for (std::size_t c : clamped) stats->clamped += c;
    }
    return seq;
}

bool is_video_tensor(const RBTensor& t, double tol) {
    for (std::size_t n = 0; n < t.size(); ++n) {
        const double q0 = 0.5 * (t.part1()[n] + t.part2()[n]).real();
        if (std::abs(q0) > tol) return false;
        for (double v : channels(t, n)) {
            if (v < -tol || v > 255.0 + tol) return false;
        }
    }
    return true;
}

namespace {

double psnr_from(double peak, double sse, std::size_t n1, std::size_t n2) {
    if (sse == 0.0) return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(3.0 * static_cast<double>(n1 * n2) * peak * peak / sse);
}

}  // namespace

double psnr(const FrameSequence& reference, const FrameSequence& test, std::size_t frame_index) {
    if (reference.width != test.width || reference.height != test.height ||
        reference.frames.size() != test.frames.size()) {
        throw DimensionError("psnr: frame sequences differ in shape");
    }
    if (frame_index >= reference.frames.size()) throw RangeError("psnr: frame index out of range");
    const Image& a = reference.frames[frame_index];
    const Image& b = test.frames[frame_index];
    double peak = 0.0;
    double sse = 0.0;
    for (std::size_t n = 0; n < a.rgb.size(); ++n) {
        const double x = a.rgb[n];
        const double d = x - static_cast<double>(b.rgb[n]);
        peak = std::max(peak, x);
        sse += d * d;
    }
    return psnr_from(peak, sse, reference.height, reference.width);
}

double psnr(const RBTensor& reference, const RBTensor& test, std::size_t frame_index) {
    if (reference.n1() != test.n1() || reference.n2() != test.n2() || reference.n3() != test.n3()) {
        throw DimensionError("psnr: tensors differ in shape");
    }
    if (frame_index >= reference.n3()) throw RangeError("psnr: frame index out of range");
    double peak = 0.0;
    double sse = 0.0;
    const std::size_t base = frame_index * reference.slice_size();
    for (std::size_t n = base; n < base + reference.slice_size(); ++n) {
        const auto a = channels(reference, n);
        const auto b = channels(test, n);
        for (std::size_t ch = 0; ch < 3; ++ch) {
            peak = std::max(peak, std::abs(a[ch]));
            sse += (a[ch] - b[ch]) * (a[ch] - b[ch]);
        }
    }
    return psnr_from(peak, sse, reference.n1(), reference.n2());
}

double relative_error(const RBTensor& reference, const RBTensor& approx) {
    const double denom = tensor_frobenius_norm(reference);
    if (denom == 0.0) throw RangeError("relative_error: reference tensor is zero");
    return tensor_frobenius_norm(reference - approx) / denom;
}

RBTensor synth_blur(std::size_t n, std::size_t n3, const BlurParams& p) {
    if (n == 0 || n3 == 0) throw RangeError("synth_blur: sizes must be positive");
    std::vector<double> w(n, 0.0);  // w[d]: weight at circular offset d
    if (p.kind == BlurKind::Gaussian) {
        if (p.sigma < 0.0) throw RangeError("synth_blur: sigma must be non-negative");
        if (p.sigma == 0.0) {
            w[0] = 1.0;
        } else {
            const std::size_t radius = p.support.value_or(static_cast<std::size_t>(std::ceil(3.0 * p.sigma)));
            for (std::size_t d = 0; d < n; ++d) {
                const std::size_t dist = std::min(d, n - d);
                if (dist <= radius) w[d] = std::exp(-double(dist * dist) / (2.0 * p.sigma * p.sigma));
            }
        }
    } else {
        if (p.length == 0 || p.length > n) throw RangeError("synth_blur: motion length must be in [1, n]");
        for (std::size_t d = 0; d < p.length; ++d) w[d] = 1.0;
    }
    double total = 0.0;
    for (double v : w) total += v;
    for (double& v : w) v /= total;

    RBTensor g(n, n, n3);
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t r = 0; r < n; ++r) {
            const double v = w[(c + n - r) % n];
            const std::size_t idx = g.index(r, c, 0);
            g.part1()[idx] = v;
            g.part2()[idx] = v;
            if (n3 >= 2) {
                const std::size_t idx2 = g.index(r, c, 1);
                g.part1()[idx2] = p.coupling * v;
                g.part2()[idx2] = p.coupling * v;
            }
        }
    }

    // Real tensor: both parts coincide, so part 1 decides.
    const DftTensor d = mode3_dft(g);
    for (std::size_t k = 0; k < n3; ++k) {
        const CSvd svd = complex_svd(d.slice(k).part1());
        const double smax = svd.sigma.front();
        if (smax == 0.0 || svd.sigma.back() <= p.min_rcond * smax) {
            throw RangeError("synth_blur: DFT slice " + std::to_string(k) +
                             " is numerically singular (sigma_min/sigma_max = " +
                             std::to_string(smax == 0.0 ? 0.0 : svd.sigma.back() / smax) +
                             "); reduce sigma or truncate the kernel support");
        }
    }
    return g;
}

CompressResult compress(const RBTensor& video, std::size_t k) {
    CompressResult out;
    out.tensor = rank_k_approx(video, k);
    const FrameSequence ref = decode(video);
    const FrameSequence approx = decode(out.tensor);
    out.psnr_db.reserve(video.n3());
    for (std::size_t t = 0; t < video.n3(); ++t) out.psnr_db.push_back(psnr(ref, approx, t));
    return out;
}

RBTensor learn_deblur_filter(const RBTensor& clean, const RBTensor& blurred, double rtol) {
    if (clean.n1() != blurred.n1() || clean.n2() != blurred.n2() || clean.n3() != blurred.n3()) {
        throw DimensionError("learn_deblur_filter: clean is " + clean.shape_string() + " but blurred is " +
                             blurred.shape_string());
    }
    const DftTensor a = mode3_dft(clean);
    const DftTensor b = mode3_dft(blurred);
    DftTensor f(clean.n1(), blurred.n1(), clean.n3());
    parallel_for(2 * clean.n3(), [&](std::size_t job) {
        const std::size_t k = job / 2;
        const RBMatrix as = a.slice(k);
        const RBMatrix bs = b.slice(k);
        const bool first = job % 2 == 0;
        const CMatrix& bp = first ? bs.part1() : bs.part2();
        const CMatrix& ap = first ? as.part1() : as.part2();
        const CMatrix fp = ap * pinv_from_svd(complex_svd(bp), rtol);
        auto dst = first ? f.part1() : f.part2();
        std::copy(fp.data().begin(), fp.data().end(), dst.begin() + static_cast<std::ptrdiff_t>(k * f.slice_size()));
    });
    return mode3_idft(f);
}

RBTensor learn_deblur_filter(const RBTensor& clean, const RBTensor& blurred) {
    return learn_deblur_filter(clean, blurred, default_tensor_rtol(blurred));
}

RBTensor apply_filter(const RBTensor& filter, const RBTensor& blurred) { return ht_product(filter, blurred); }

RBTensor synthetic_video(std::size_t height, std::size_t width, std::size_t frames, std::uint64_t seed,
                         const SyntheticVideoParams& params) {
    if (height == 0 || width == 0 || frames == 0) throw RangeError("synthetic_video: sizes must be positive");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    constexpr double two_pi = 2.0 * std::numbers::pi;

    auto pattern = [&](std::size_t len) {
        const double freq = 0.5 + 2.5 * unit(rng);
        const double phase = two_pi * unit(rng);
        std::vector<double> v(len);
        for (std::size_t i = 0; i < len; ++i) {
            v[i] = 0.5 + 0.5 * std::sin(two_pi * freq * double(i) / double(len) + phase);
        }
        return v;
    };
    std::vector<std::vector<double>> u, v;
    for (std::size_t r = 0; r < params.rank; ++r) {
        u.push_back(pattern(height));
        v.push_back(pattern(width));
    }
    // weight[c][r][t]
    std::vector<std::vector<std::vector<double>>> weight(3, std::vector<std::vector<double>>(params.rank));
    for (auto& ch : weight) {
        for (auto& wr : ch) wr = pattern(frames);
    }

    std::vector<double> val(height * width * frames * 3, 0.0);
    auto at = [&](std::size_t i, std::size_t j, std::size_t t, std::size_t c) -> double& {
        return val[((t * width + j) * height + i) * 3 + c];
    };
    for (std::size_t t = 0; t < frames; ++t)
        for (std::size_t j = 0; j < width; ++j)
            for (std::size_t i = 0; i < height; ++i)
                for (std::size_t c = 0; c < 3; ++c) {
                    double s = 0.0;
                    for (std::size_t r = 0; r < params.rank; ++r) s += weight[c][r][t] * u[r][i] * v[r][j];
                    at(i, j, t, c) = s;
                }
    double peak = *std::max_element(val.begin(), val.end());
    if (params.texture > 0.0) {
        for (double& x : val) x = (1.0 - params.texture) * (peak > 0 ? x / peak : 0.0) + params.texture * unit(rng);
        peak = *std::max_element(val.begin(), val.end());
    }
    const double scale = peak > 0.0 ? 255.0 / peak : 0.0;

    RBTensor out(height, width, frames);
    for (std::size_t t = 0; t < frames; ++t)
        for (std::size_t j = 0; j < width; ++j)
            for (std::size_t i = 0; i < height; ++i) {
                const double red = scale * at(i, j, t, 0);
                const double green = scale * at(i, j, t, 1);
                const double blue = scale * at(i, j, t, 2);
                const std::size_t n = out.index(i, j, t);
                out.part1()[n] = {green, red + blue};
                out.part2()[n] = {-green, red - blue};
            }
    return out;
}

}  // namespace rbt
