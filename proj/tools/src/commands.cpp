#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <map>
#include <numbers>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rbt_cli/cli.hpp"
#include "rbt_cli/properties.hpp"
#include "rbt_cli/shapes.hpp"
#include "rbtensor/complex_linalg.hpp"
#include "rbtensor/dft.hpp"
#include "rbtensor/errors.hpp"
#include "rbtensor/ht_decomp.hpp"
#include "rbtensor/rb_tensor.hpp"
#include "rbtensor/tensor_io.hpp"
#include "rbtensor/video.hpp"

namespace fs = std::filesystem;

namespace rbt::cli {

namespace {

/// Input or usage problem detected by a command; maps to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

void require_output_path(const fs::path& p, const char* flag) {
    if (p.empty()) throw UsageError(std::string(flag) + " must not be empty");
    const fs::path parent = p.parent_path();
    if (!parent.empty() && !fs::is_directory(parent)) {
        throw UsageError(std::string(flag) + ": directory " + parent.string() + " does not exist");
    }
    if (fs::is_directory(p)) throw UsageError(std::string(flag) + ": " + p.string() + " is a directory");
}

std::string shape_of(const RBTensor& t) { return t.shape_string(); }

// One frontal slice as an n1 x n2 x 1 tensor.
RBTensor frame_of(const RBTensor& t, std::size_t k) {
    RBTensor f(t.n1(), t.n2(), 1);
    f.set_slice(0, t.slice(k));
    return f;
}

// ---------------------------------------------------------------------------
// convert

struct ConvertArgs {
    std::string input;
    std::string output;
};

int cmd_convert(const ConvertArgs& a, std::ostream& out, std::ostream& err) {
    if (fs::is_directory(a.input)) {
        require_output_path(a.output, "--output");
        const FrameSequence seq = read_frames(a.input);
        const RBTensor t = encode(seq);
        write_rbt1(a.output, t);
        out << "wrote " << a.output << " (" << shape_of(t) << ", " << seq.frames.size() << " frames)\n";
        return kOk;
    }
    const fs::path dir(a.output);
    if (fs::exists(dir) && !fs::is_directory(dir)) throw UsageError("--output: " + a.output + " is not a directory");
    if (!dir.parent_path().empty() && !fs::is_directory(dir.parent_path())) {
        throw UsageError("--output: directory " + dir.parent_path().string() + " does not exist");
    }
    const RBTensor t = read_rbt1(a.input);
    if (t.n3() == 0 || t.size() == 0) throw UsageError(a.input + ": tensor has no frames");
    DecodeStats stats;
    const FrameSequence seq = decode(t, &stats);
    if (!is_video_tensor(t)) {
        err << "warning: " << a.input << " is not an exact 8-bit video tensor; values were rounded";
        if (stats.clamped > 0) err << " and " << stats.clamped << " were clamped";
        err << "\n";
    }
    write_frames(dir, seq);
    out << "wrote " << seq.frames.size() << " frames of " << seq.width << "x" << seq.height << " to " << a.output
        << "\n";
    return kOk;
}

// ---------------------------------------------------------------------------
// compress

struct CompressArgs {
    std::string input;
    std::string output;
    std::string report;
    std::size_t k = 0;
};

std::string csv_frames_psnr(const std::vector<double>& psnr_db) {
    std::string csv = "frame_index,psnr_db\n";
    for (std::size_t f = 0; f < psnr_db.size(); ++f) csv += std::to_string(f) + "," + format_double(psnr_db[f]) + "\n";
    return csv;
}

int cmd_compress(const CompressArgs& a, std::ostream& out, std::ostream&) {
    require_output_path(a.output, "--output");
    if (!a.report.empty()) require_output_path(a.report, "--report");
    const RBTensor t = read_rbt1(a.input);
    const std::size_t kmax = std::min(t.n1(), t.n2());
    if (a.k < 1 || a.k > kmax) {
        throw UsageError("--k " + std::to_string(a.k) + " out of range [1, " + std::to_string(kmax) + "] for " +
                         shape_of(t));
    }
    const CompressResult res = compress(t, a.k);
    write_rbt1(a.output, res.tensor);
    const std::string csv = csv_frames_psnr(res.psnr_db);
    if (a.report.empty()) {
        out << csv;
    } else {
        write_file_atomic(a.report, csv);
        out << "wrote " << a.output << " and " << a.report << " (k = " << a.k << ")\n";
    }
    return kOk;
}

// ---------------------------------------------------------------------------
// deblur

struct DeblurArgs {
    std::string clean;
    std::string blurred;
    std::string target;
    std::string reference;
    std::string output;
    std::string report;
    std::optional<double> rtol;
};

int cmd_deblur(const DeblurArgs& a, std::ostream& out, std::ostream& err) {
    require_output_path(a.output, "--output");
    if (!a.report.empty()) require_output_path(a.report, "--report");
    const RBTensor clean = read_rbt1(a.clean);
    const RBTensor blurred = read_rbt1(a.blurred);
    const RBTensor target = read_rbt1(a.target);
    if (clean.n1() != blurred.n1() || clean.n2() != blurred.n2() || clean.n3() != blurred.n3()) {
        throw UsageError("shape mismatch: clean " + shape_of(clean) + " vs blurred " + shape_of(blurred));
    }
    if (target.n1() != blurred.n1() || target.n3() != blurred.n3()) {
        throw UsageError("shape mismatch: target " + shape_of(target) + " is not conformable with blurred " +
                         shape_of(blurred));
    }
    const RBTensor reference = a.reference.empty() ? clean : read_rbt1(a.reference);
    if (reference.n1() != clean.n1() || reference.n2() != target.n2() || reference.n3() != target.n3()) {
        throw UsageError("shape mismatch: reference " + shape_of(reference) + " vs recovered " +
                         RBTensor::shape_string(clean.n1(), target.n2(), target.n3()) +
                         (a.reference.empty() ? " (pass --reference)" : ""));
    }
    if (a.rtol && !(*a.rtol > 0.0 && *a.rtol < 1.0)) throw UsageError("--rtol must lie in (0, 1)");

    const auto t0 = Clock::now();
    const RBTensor filter = a.rtol ? learn_deblur_filter(clean, blurred, *a.rtol) : learn_deblur_filter(clean, blurred);
    const RBTensor recovered = apply_filter(filter, target);
    const double wall = seconds_since(t0);

    write_rbt1(a.output, recovered);
    DecodeStats stats;
    decode(recovered, &stats);

    std::string csv = "frame_index,psnr_db,relative_error,wall_seconds\n";
    for (std::size_t k = 0; k < recovered.n3(); ++k) {
        const RBTensor ref = frame_of(reference, k);
        const RBTensor got = frame_of(recovered, k);
        double rel = std::numeric_limits<double>::quiet_NaN();
        if (tensor_frobenius_norm(ref) > 0.0) rel = relative_error(ref, got);
        csv += std::to_string(k) + "," + format_double(psnr(reference, recovered, k)) + "," + format_double(rel) +
               "," + format_double(wall) + "\n";
    }
    if (a.report.empty()) {
        out << csv;
    } else {
        write_file_atomic(a.report, csv);
    }
    if (stats.clamped > 0) err << "warning: " << stats.clamped << " channel values fall outside [0, 255]\n";
    const double total = tensor_frobenius_norm(reference) > 0.0 ? relative_error(reference, recovered)
                                                                : std::numeric_limits<double>::quiet_NaN();
    if (!a.report.empty()) {
        out << "wrote " << a.output << " (" << shape_of(recovered) << "), relative error " << format_double(total)
            << ", " << format_double(wall) << " s\n";
    }
    return kOk;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
    std::uint64_t seed = SuiteOptions{}.seed;
    std::string sizes;
    bool inject_dft_sign_bug = false;
};

// Restores the transform on every exit path.
struct SignFaultGuard {
    explicit SignFaultGuard(bool on) { testing::set_dft_sign_fault(on); }
    ~SignFaultGuard() { testing::set_dft_sign_fault(false); }
    SignFaultGuard(const SignFaultGuard&) = delete;
    SignFaultGuard& operator=(const SignFaultGuard&) = delete;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
    SuiteOptions opt;
    opt.seed = a.seed;
    if (!a.sizes.empty()) {
        try {
            opt.shapes = parse_shapes(a.sizes);
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("--sizes: ") + e.what());
        }
    }
    std::string sizes_text;
    for (const Shape& s : opt.shapes) sizes_text += (sizes_text.empty() ? "" : ",") + format_shape(s);
    out << "seed " << opt.seed << ", sizes " << sizes_text << "\n";

    const SignFaultGuard guard(a.inject_dft_sign_bug);
    std::size_t width = 0;
    for (const std::string& n : property_names()) width = std::max(width, n.size());
    const auto results = run_property_suite(opt, [&](const PropertyResult& r) {
        out << (r.passed() ? "PASS  " : "FAIL  ") << r.name << std::string(width + 2 - r.name.size(), ' ')
            << "max_residual=" << format_double(r.max_residual) << "  threshold=" << format_double(r.threshold)
            << "\n";
        out.flush();
    });

    std::size_t failed = 0;
    for (const PropertyResult& r : results) {
        if (r.passed()) continue;
        ++failed;
        err << "property " << r.name << " failed (seed " << opt.seed << ", residual " << format_double(r.max_residual)
            << ")";
        if (!r.error.empty()) err << ": " << r.error;
        err << "\n";
    }
    out << results.size() - failed << " of " << results.size() << " properties passed\n";
    return failed == 0 ? kOk : kCheckFailed;
}

// ---------------------------------------------------------------------------
// bench

struct BenchArgs {
    std::string sizes = "32x32x4,32x32x8,32x32x16,32x32x32";
    std::size_t repeats = 3;
    std::string report;
    std::uint64_t seed = 1;
};

// Tube transform by explicit O(n3^2) sums.
template <class To, class From>
To naive_tube_transform(const From& t, int sign) {
    const std::size_t n3 = t.n3();
    const std::size_t s = t.slice_size();
    To r(t.n1(), t.n2(), n3);
    const double scale = sign < 0 ? 1.0 : 1.0 / static_cast<double>(n3);
    for (std::size_t k = 0; k < n3; ++k) {
        for (std::size_t m = 0; m < n3; ++m) {
            const double ang = sign * 2.0 * std::numbers::pi * static_cast<double>((k * m) % n3) / static_cast<double>(n3);
            const cplx w = std::polar(scale, ang);
            for (std::size_t e = 0; e < s; ++e) {
                r.part1()[k * s + e] += w * t.part1()[m * s + e];
                r.part2()[k * s + e] += w * t.part2()[m * s + e];
            }
        }
    }
    return r;
}

// Decomposition through explicit transforms, checked by rebuilding A with the
// block-circulant product.
double naive_ht_svd(const RBTensor& a) {
    const auto d = naive_tube_transform<DftTensor>(a, -1);
    DftTensor u(a.n1(), a.n1(), a.n3());
    DftTensor s(a.n1(), a.n2(), a.n3());
    DftTensor v(a.n2(), a.n2(), a.n3());
    for (std::size_t k = 0; k < a.n3(); ++k) {
        const RBMatrix slice = d.slice(k);
        const CSvd s1 = complex_svd(slice.part1());
        const CSvd s2 = complex_svd(slice.part2());
        std::vector<cplx> d1(s1.sigma.begin(), s1.sigma.end());
        std::vector<cplx> d2(s2.sigma.begin(), s2.sigma.end());
        u.set_slice(k, RBMatrix(s1.U, s2.U));
        s.set_slice(k, RBMatrix(CMatrix::diagonal(a.n1(), a.n2(), d1), CMatrix::diagonal(a.n1(), a.n2(), d2)));
        v.set_slice(k, RBMatrix(s1.V, s2.V));
    }
    const auto us = ht_product_direct(naive_tube_transform<RBTensor>(u, 1), naive_tube_transform<RBTensor>(s, 1));
    const auto back = ht_product_direct(us, tensor_conj_transpose(naive_tube_transform<RBTensor>(v, 1)));
    return tensor_frobenius_norm(back - a);
}

RBTensor bench_tensor(const Shape& s, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    RBTensor t(s.n1, s.n2, s.n3);
    for (cplx& v : t.part1()) v = {g(rng), g(rng)};
    for (cplx& v : t.part2()) v = {g(rng), g(rng)};
    return t;
}

int cmd_bench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
    std::vector<Shape> shapes;
    try {
        shapes = parse_shapes(a.sizes);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--sizes: ") + e.what());
    }
    if (a.repeats == 0) throw UsageError("--repeats must be positive");
    if (!a.report.empty()) require_output_path(a.report, "--report");

    std::string csv = "n1,n2,n3,method,seconds\n";
    // median ht_svd seconds per (n1, n2), keyed by n3
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::pair<double, double>>> fits;
    for (std::size_t si = 0; si < shapes.size(); ++si) {
        const Shape& s = shapes[si];
        const RBTensor t = bench_tensor(s, a.seed + si);
        std::vector<double> fast;
        for (std::size_t r = 0; r < a.repeats; ++r) {
            const auto row = std::to_string(s.n1) + "," + std::to_string(s.n2) + "," + std::to_string(s.n3) + ",";
            auto t0 = Clock::now();
            const HtSvd f = ht_svd(t);
            const double fast_s = seconds_since(t0);
            if (f.S.n3() != s.n3) throw Error("ht_svd returned a malformed result");
            fast.push_back(fast_s);
            csv += row + "ht_svd," + format_double(fast_s) + "\n";

            t0 = Clock::now();
            const double resid = naive_ht_svd(t);
            const double naive_s = seconds_since(t0);
            if (!(resid <= 1e-8 * std::max(1.0, tensor_frobenius_norm(t)))) {
                err << "warning: naive decomposition residual " << format_double(resid) << " at " << format_shape(s)
                    << "\n";
            }
            csv += row + "naive_direct," + format_double(naive_s) + "\n";
        }
        std::sort(fast.begin(), fast.end());
        fits[{s.n1, s.n2}].emplace_back(static_cast<double>(s.n3), fast[fast.size() / 2]);
    }

    if (a.report.empty()) {
        out << csv;
    } else {
        write_file_atomic(a.report, csv);
        out << "wrote " << a.report << "\n";
    }
    for (const auto& [dims, pts] : fits) {
        if (pts.size() < 2) continue;
        double mx = 0, my = 0;
        for (const auto& [x, y] : pts) {
            mx += std::log(x);
            my += std::log(y);
        }
        mx /= static_cast<double>(pts.size());
        my /= static_cast<double>(pts.size());
        double sxy = 0, sxx = 0;
        for (const auto& [x, y] : pts) {
            sxy += (std::log(x) - mx) * (std::log(y) - my);
            sxx += (std::log(x) - mx) * (std::log(x) - mx);
        }
        if (sxx > 0) {
            (a.report.empty() ? err : out) << "ht_svd log-log slope in n3 at " << dims.first << "x" << dims.second
                                           << ": " << format_double(sxy / sxx) << "\n";
        }
    }
    return kOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"rbt: reduced biquaternion tensor toolkit"};
    app.name("rbt");
    app.require_subcommand(1);

    ConvertArgs conv;
    auto* convert = app.add_subcommand("convert", "Convert a directory of PPM frames to an RBT1 tensor or back");
    convert->add_option("--input", conv.input, "frame directory or .rbt file")->required()->check(CLI::ExistingPath);
    convert->add_option("--output", conv.output, ".rbt file or frame directory")->required();

    CompressArgs comp;
    auto* compress_cmd = app.add_subcommand("compress", "Rank-k approximation of a video tensor");
    compress_cmd->add_option("--input", comp.input, "input .rbt tensor")->required()->check(CLI::ExistingFile);
    compress_cmd->add_option("--k", comp.k, "rank kept per DFT slice")->required();
    compress_cmd->add_option("--output", comp.output, "compressed .rbt tensor")->required();
    compress_cmd->add_option("--report", comp.report, "CSV report (frame_index,psnr_db); stdout if omitted");

    DeblurArgs deb;
    auto* deblur = app.add_subcommand("deblur", "Learn a least-squares deblurring filter and apply it");
    deblur->add_option("--clean", deb.clean, "clean training tensor")->required()->check(CLI::ExistingFile);
    deblur->add_option("--blurred", deb.blurred, "blurred training tensor")->required()->check(CLI::ExistingFile);
    deblur->add_option("--target", deb.target, "blurred tensor to restore")->required()->check(CLI::ExistingFile);
    deblur->add_option("--reference", deb.reference, "ground truth for the report (default: --clean)")
        ->check(CLI::ExistingFile);
    deblur->add_option("--output", deb.output, "restored .rbt tensor")->required();
    deblur->add_option("--report", deb.report,
                       "CSV report (frame_index,psnr_db,relative_error,wall_seconds); stdout if omitted");
    deblur->add_option("--rtol", deb.rtol, "relative singular value cut-off");

    VerifyArgs ver;
    auto* verify = app.add_subcommand("verify", "Run the algebraic property suite");
    verify->add_option("--seed", ver.seed, "random seed")->capture_default_str();
    verify->add_option("--sizes", ver.sizes, "comma-separated N1xN2xN3 list");
    verify->add_flag("--inject-dft-sign-bug", ver.inject_dft_sign_bug)->group("");

    BenchArgs ben;
    auto* bench = app.add_subcommand("bench", "Time ht_svd against the naive block-circulant path");
    bench->add_option("--sizes", ben.sizes, "comma-separated N1xN2xN3 list")->capture_default_str();
    bench->add_option("--repeats", ben.repeats, "runs per size and method")->capture_default_str();
    bench->add_option("--report", ben.report, "CSV report (n1,n2,n3,method,seconds); stdout if omitted");
    bench->add_option("--seed", ben.seed, "random seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    const std::string name = app.get_subcommands().front()->get_name();
    try {
        if (name == "convert") return cmd_convert(conv, out, err);
        if (name == "compress") return cmd_compress(comp, out, err);
        if (name == "deblur") return cmd_deblur(deb, out, err);
        if (name == "verify") return cmd_verify(ver, out, err);
        if (name == "bench") return cmd_bench(ben, out, err);
    } catch (const UsageError& e) {
        err << "rbt " << name << ": " << e.what() << "\n";
        return kUsage;
    } catch (const ConvergenceError& e) {
        err << "rbt " << name << ": " << e.what() << "\n";
        return kCheckFailed;
    } catch (const Error& e) {
        err << "rbt " << name << ": " << e.what() << "\n";
        return kUsage;
    } catch (const fs::filesystem_error& e) {
        err << "rbt " << name << ": " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace rbt::cli
