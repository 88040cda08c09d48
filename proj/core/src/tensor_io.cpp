#include "rbtensor/tensor_io.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iterator>
#include <limits>

namespace rbt {

namespace {

static_assert(std::endian::native == std::endian::little, "RBT1 I/O assumes a little-endian host");

constexpr char kMagic[4] = {'R', 'B', 'T', '1'};
constexpr std::uint32_t kVersion = 1;

template <class T>
void put(std::string& out, T v) {
    char buf[sizeof(T)];
    std::memcpy(buf, &v, sizeof(T));
    out.append(buf, sizeof(T));
}

template <class T>
T get(std::string_view bytes, std::size_t offset) {
    T v;
    std::memcpy(&v, bytes.data() + offset, sizeof(T));
    return v;
}

}  // namespace

std::string serialize_rbt1(const RBTensor& t) {
    std::string out;
    out.reserve(kRbt1HeaderSize + t.size() * 32);
    out.append(kMagic, 4);
    put<std::uint32_t>(out, kVersion);
    put<std::uint64_t>(out, t.n1());
    put<std::uint64_t>(out, t.n2());
    put<std::uint64_t>(out, t.n3());
    // Storage order already matches the file order.
    for (std::size_t n = 0; n < t.size(); ++n) {
        const cplx qa = 0.5 * (t.part1()[n] + t.part2()[n]);
        const cplx qb = 0.5 * (t.part1()[n] - t.part2()[n]);
        put(out, qa.real());
        put(out, qa.imag());
        put(out, qb.real());
        put(out, qb.imag());
    }
    return out;
}

RBTensor parse_rbt1(std::string_view bytes) {
    if (bytes.size() < 4) throw FormatError("RBT1: file too short for magic", bytes.size());
    for (std::size_t i = 0; i < 4; ++i) {
        if (bytes[i] != kMagic[i]) throw FormatError("RBT1: bad magic, expected \"RBT1\"", i);
    }
    if (bytes.size() < kRbt1HeaderSize) throw FormatError("RBT1: truncated header", bytes.size());
    const auto version = get<std::uint32_t>(bytes, 4);
    if (version != kVersion) {
        throw FormatError("RBT1: unsupported version " + std::to_string(version), 4);
    }
    const auto n1 = get<std::uint64_t>(bytes, 8);
    const auto n2 = get<std::uint64_t>(bytes, 16);
    const auto n3 = get<std::uint64_t>(bytes, 24);
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / 32;
    std::uint64_t count = 1;
    for (std::uint64_t d : {n1, n2, n3}) {
        if (d != 0 && count > limit / d) throw FormatError("RBT1: dimensions overflow", 8);
        count *= d;
    }
    const std::uint64_t expected = kRbt1HeaderSize + count * 32;
    if (bytes.size() < expected) {
        throw FormatError("RBT1: truncated payload, expected " + std::to_string(expected) + " bytes, got " +
                              std::to_string(bytes.size()),
                          bytes.size());
    }
    if (bytes.size() > expected) throw FormatError("RBT1: trailing bytes after payload", expected);

    RBTensor t(n1, n2, n3);
    std::size_t off = kRbt1HeaderSize;
    for (std::size_t n = 0; n < count; ++n) {
        double q[4];
        for (double& c : q) {
            c = get<double>(bytes, off);
            if (!std::isfinite(c)) throw FormatError("RBT1: non-finite entry", off);
            off += 8;
        }
        t.part1()[n] = {q[0] + q[2], q[1] + q[3]};
        t.part2()[n] = {q[0] - q[2], q[1] - q[3]};
    }
    return t;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path.string() + " for reading");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file_atomic(const std::filesystem::path& path, std::string_view bytes) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot open " + tmp.string() + " for writing");
        out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        out.flush();
        if (!out) throw Error("write failed for " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw Error("cannot rename " + tmp.string() + " to " + path.string() + ": " + ec.message());
    }
}

void write_rbt1(const std::filesystem::path& path, const RBTensor& t) { write_file_atomic(path, serialize_rbt1(t)); }

RBTensor read_rbt1(const std::filesystem::path& path) { return parse_rbt1(read_file(path)); }

}  // namespace rbt
