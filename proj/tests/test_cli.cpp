#include <gtest/gtest.h>

#include <cstring>
#include <filesystem>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "rbt_cli/cli.hpp"
#include "rbt_cli/properties.hpp"
#include "rbtensor/ht_decomp.hpp"
#include "rbtensor/tensor_io.hpp"
#include "rbtensor/video.hpp"

namespace fs = std::filesystem;
using rbt::RBTensor;

namespace {

const fs::path kFixtures = RBT_FIXTURE_DIR;

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun rbt_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "rbt");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = rbt::cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("rbt_cli_test_" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

std::vector<std::vector<std::string>> read_csv(const fs::path& p) {
    const std::string text = rbt::read_file(p);
    EXPECT_EQ(text.find('\r'), std::string::npos);
    EXPECT_FALSE(text.empty());
    EXPECT_EQ(text.back(), '\n');
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        rows.push_back(cells);
    }
    return rows;
}

double cell(const std::string& s) { return s == "inf" ? std::numeric_limits<double>::infinity() : std::stod(s); }

template <class T>
T read_le(const std::string& s, std::size_t off) {
    T v;
    std::memcpy(&v, s.data() + off, sizeof(T));
    return v;
}

}  // namespace

TEST(CliConvert, FramesToTensorMatchesGoldenFile) {
    const fs::path dir = scratch("to_tensor");
    const CliRun r = rbt_cli({"convert", "--input", (kFixtures / "frames8").string(), "--output",
                           (dir / "v.rbt").string()});
    ASSERT_EQ(r.code, 0) << r.err;
    const std::string got = rbt::read_file(dir / "v.rbt");
    EXPECT_EQ(got, rbt::read_file(kFixtures / "frames8.rbt"));
    EXPECT_EQ(got.substr(0, 4), "RBT1");
    EXPECT_EQ(read_le<std::uint32_t>(got, 4), 1u);
    EXPECT_EQ(read_le<std::uint64_t>(got, 8), 8u);   // height
    EXPECT_EQ(read_le<std::uint64_t>(got, 16), 8u);  // width
    EXPECT_EQ(read_le<std::uint64_t>(got, 24), 3u);  // frames
}

TEST(CliConvert, RoundTripIsByteIdentical) {
    const fs::path dir = scratch("round_trip");
    ASSERT_EQ(rbt_cli({"convert", "--input", (kFixtures / "frames8").string(), "--output", (dir / "v.rbt").string()})
                  .code,
              0);
    const CliRun r = rbt_cli({"convert", "--input", (dir / "v.rbt").string(), "--output", (dir / "frames").string()});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(r.err.empty()) << r.err;
    std::size_t n = 0;
    for (const auto& e : fs::directory_iterator(kFixtures / "frames8")) {
        const fs::path name = e.path().filename();
        EXPECT_EQ(rbt::read_file(dir / "frames" / name), rbt::read_file(e.path())) << name;
        ++n;
    }
    EXPECT_EQ(n, 3u);
    EXPECT_EQ(std::distance(fs::directory_iterator(dir / "frames"), fs::directory_iterator{}), 3);
}

TEST(CliConvert, CorruptedMagicExitsTwoAndNamesOffset) {
    const fs::path dir = scratch("bad_magic");
    const CliRun r = rbt_cli({"convert", "--input", (kFixtures / "bad_magic.rbt").string(), "--output",
                           (dir / "frames").string()});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("byte offset 2"), std::string::npos) << r.err;
    EXPECT_FALSE(fs::exists(dir / "frames"));
}

TEST(CliConvert, TruncatedPayloadExitsTwo) {
    const fs::path dir = scratch("truncated");
    const CliRun r = rbt_cli({"convert", "--input", (kFixtures / "truncated.rbt").string(), "--output",
                           (dir / "frames").string()});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("offset"), std::string::npos) << r.err;
}

TEST(CliConvert, MalformedFrameExitsTwo) {
    const fs::path dir = scratch("bad_frame");
    fs::create_directories(dir / "frames");
    fs::copy(kFixtures / "frames8", dir / "frames", fs::copy_options::recursive);
    rbt::write_file_atomic(dir / "frames" / "frame_000001.ppm", "P5\n8 8\n255\n");
    const CliRun r =
        rbt_cli({"convert", "--input", (dir / "frames").string(), "--output", (dir / "v.rbt").string()});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("frame_000001.ppm"), std::string::npos) << r.err;
    EXPECT_FALSE(fs::exists(dir / "v.rbt"));
}

TEST(CliUsage, ExitCodes) {
    EXPECT_EQ(rbt_cli({}).code, 2);
    EXPECT_EQ(rbt_cli({"frobnicate"}).code, 2);
    EXPECT_EQ(rbt_cli({"verify", "--no-such-flag"}).code, 2);
    EXPECT_EQ(rbt_cli({"--help"}).code, 0);
    EXPECT_EQ(rbt_cli({"convert", "--input", "/nonexistent/x.rbt", "--output", "/tmp/x"}).code, 2);
    EXPECT_EQ(rbt_cli({"compress", "--input", (kFixtures / "frames8.rbt").string(), "--k", "2", "--output",
                       "/nonexistent/dir/out.rbt"})
                  .code,
              2);
}

TEST(CliCompress, FullRankReportMatchesGoldenFile) {
    const fs::path dir = scratch("compress_full");
    const CliRun r = rbt_cli({"compress", "--input", (kFixtures / "frames8.rbt").string(), "--k", "8", "--output",
                           (dir / "c.rbt").string(), "--report", (dir / "c.csv").string()});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(rbt::read_file(dir / "c.csv"), rbt::read_file(kFixtures / "compress_full_rank.csv"));
    const RBTensor in = rbt::read_rbt1(kFixtures / "frames8.rbt");
    const RBTensor out = rbt::read_rbt1(dir / "c.rbt");
    EXPECT_LE(rbt::relative_error(in, out), 1e-12);
}

TEST(CliCompress, RankOutOfRangeIsUsageError) {
    const fs::path dir = scratch("compress_range");
    for (const char* k : {"0", "9"}) {
        const CliRun r = rbt_cli({"compress", "--input", (kFixtures / "frames8.rbt").string(), "--k", k, "--output",
                               (dir / "c.rbt").string()});
        EXPECT_EQ(r.code, 2) << k;
        EXPECT_NE(r.err.find("out of range"), std::string::npos) << r.err;
        EXPECT_FALSE(fs::exists(dir / "c.rbt"));
    }
}

TEST(CliCompress, RankSweepIsMonotone) {
    const fs::path dir = scratch("compress_sweep");
    rbt::SyntheticVideoParams p;
    p.texture = 0.2;
    rbt::write_rbt1(dir / "v.rbt", rbt::synthetic_video(16, 16, 4, 7, p));
    std::vector<std::vector<double>> cols;
    for (const char* k : {"2", "4", "8"}) {
        const fs::path csv = dir / (std::string("k") + k + ".csv");
        const CliRun r = rbt_cli({"compress", "--input", (dir / "v.rbt").string(), "--k", k, "--output",
                               (dir / "c.rbt").string(), "--report", csv.string()});
        ASSERT_EQ(r.code, 0) << r.err;
        const auto rows = read_csv(csv);
        ASSERT_EQ(rows.size(), 5u);
        EXPECT_EQ(rows[0], (std::vector<std::string>{"frame_index", "psnr_db"}));
        std::vector<double> col;
        for (std::size_t f = 1; f < rows.size(); ++f) {
            ASSERT_EQ(rows[f].size(), 2u);
            EXPECT_EQ(rows[f][0], std::to_string(f - 1));
            col.push_back(cell(rows[f][1]));
        }
        cols.push_back(col);
    }
    for (std::size_t f = 0; f < 4; ++f) {
        EXPECT_LE(cols[0][f], cols[1][f]);
        EXPECT_LE(cols[1][f], cols[2][f]);
    }
}

TEST(CliDeblur, SyntheticPipelineRecoversVideo) {
    const fs::path dir = scratch("deblur");
    rbt::SyntheticVideoParams p;
    p.texture = 0.2;
    const RBTensor clean = rbt::synthetic_video(16, 16, 4, 11, p);
    const RBTensor blurred = rbt::ht_product(rbt::synth_blur(16, 4), clean);
    rbt::write_rbt1(dir / "clean.rbt", clean);
    rbt::write_rbt1(dir / "blurred.rbt", blurred);
    const CliRun r = rbt_cli({"deblur", "--clean", (dir / "clean.rbt").string(), "--blurred",
                           (dir / "blurred.rbt").string(), "--target", (dir / "blurred.rbt").string(), "--output",
                           (dir / "out.rbt").string(), "--report", (dir / "d.csv").string()});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(r.err.empty()) << r.err;  // no clamp warning
    EXPECT_LE(rbt::relative_error(clean, rbt::read_rbt1(dir / "out.rbt")), 1e-8);
    const auto rows = read_csv(dir / "d.csv");
    ASSERT_EQ(rows.size(), 5u);
    EXPECT_EQ(rows[0], (std::vector<std::string>{"frame_index", "psnr_db", "relative_error", "wall_seconds"}));
    for (std::size_t f = 1; f < rows.size(); ++f) {
        ASSERT_EQ(rows[f].size(), 4u);
        EXPECT_GE(cell(rows[f][1]), 100.0);
        EXPECT_LE(cell(rows[f][2]), 1e-8);
        EXPECT_GT(cell(rows[f][3]), 0.0);
    }
}

TEST(CliDeblur, ShapeMismatchIsUsageError) {
    const fs::path dir = scratch("deblur_shape");
    rbt::write_rbt1(dir / "a.rbt", rbt::synthetic_video(8, 8, 3, 1));
    rbt::write_rbt1(dir / "b.rbt", rbt::synthetic_video(8, 6, 3, 2));
    const CliRun r = rbt_cli({"deblur", "--clean", (dir / "a.rbt").string(), "--blurred", (dir / "b.rbt").string(),
                           "--target", (dir / "b.rbt").string(), "--output", (dir / "o.rbt").string()});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("shape mismatch"), std::string::npos) << r.err;
    EXPECT_FALSE(fs::exists(dir / "o.rbt"));
}

TEST(CliVerify, DefaultRunPassesAndListsEnoughProperties) {
    const CliRun r = rbt_cli({"verify"});
    EXPECT_EQ(r.code, 0) << r.err;
    std::set<std::string> names;
    std::istringstream in(r.out);
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind("PASS  ", 0) == 0) {
            names.insert(line.substr(6, line.find(' ', 6) - 6));
            EXPECT_NE(line.find("max_residual="), std::string::npos);
        }
    }
    EXPECT_GE(names.size(), 25u);
    EXPECT_EQ(names.size(), rbt::cli::property_names().size());
}

TEST(CliVerify, InjectedSignBugFailsProductEquivalence) {
    const CliRun r = rbt_cli({"verify", "--seed", "5", "--inject-dft-sign-bug"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("property ht_product_matches_block_circulant failed (seed 5, residual"), std::string::npos)
        << r.err;
    // The fault is scoped to that run.
    EXPECT_EQ(rbt_cli({"verify", "--seed", "5", "--sizes", "2x2x3"}).code, 0);
}

TEST(CliVerify, BadSizesAreUsageErrors) {
    EXPECT_EQ(rbt_cli({"verify", "--sizes", "3x3"}).code, 2);
    EXPECT_EQ(rbt_cli({"verify", "--sizes", "3x0x2"}).code, 2);
    EXPECT_EQ(rbt_cli({"verify", "--sizes", "3x3x2,"}).code, 2);
}

TEST(CliBench, RowCountAndDeterministicColumns) {
    const fs::path dir = scratch("bench");
    std::vector<std::vector<std::vector<std::string>>> runs;
    for (int rep = 0; rep < 2; ++rep) {
        const fs::path csv = dir / ("b" + std::to_string(rep) + ".csv");
        const CliRun r = rbt_cli({"bench", "--sizes", "4x3x2,4x3x4", "--repeats", "2", "--report", csv.string()});
        ASSERT_EQ(r.code, 0) << r.err;
        runs.push_back(read_csv(csv));
    }
    ASSERT_EQ(runs[0].size(), 1u + 2 * 2 * 2);
    EXPECT_EQ(runs[0][0], (std::vector<std::string>{"n1", "n2", "n3", "method", "seconds"}));
    std::set<std::string> methods;
    for (std::size_t i = 1; i < runs[0].size(); ++i) {
        ASSERT_EQ(runs[0][i].size(), 5u);
        for (int c = 0; c < 4; ++c) EXPECT_EQ(runs[0][i][c], runs[1][i][c]);
        EXPECT_GE(cell(runs[0][i][4]), 0.0);
        methods.insert(runs[0][i][3]);
    }
    EXPECT_EQ(methods, (std::set<std::string>{"ht_svd", "naive_direct"}));
}
