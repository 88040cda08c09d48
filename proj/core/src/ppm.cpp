#include "rbtensor/ppm.hpp"

#include <cctype>
#include <cstdio>

#include "rbtensor/errors.hpp"
#include "rbtensor/tensor_io.hpp"

namespace rbt {

namespace {

class HeaderReader {
public:
    explicit HeaderReader(std::string_view b) : b_(b) {}

    void skip_space_and_comments() {
        while (pos_ < b_.size()) {
            const char c = b_[pos_];
            if (c == '#') {
                while (pos_ < b_.size() && b_[pos_] != '\n') ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else {
                break;
            }
        }
    }

    std::size_t number(const char* what) {
        skip_space_and_comments();
        const std::size_t start = pos_;
        std::size_t v = 0;
        while (pos_ < b_.size() && std::isdigit(static_cast<unsigned char>(b_[pos_]))) {
            v = v * 10 + static_cast<std::size_t>(b_[pos_] - '0');
            if (v > (1u << 24)) throw FormatError(std::string("PPM: ") + what + " too large", start);
            ++pos_;
        }
        if (pos_ == start) throw FormatError(std::string("PPM: expected ") + what, start);
        return v;
    }

    std::size_t pos() const { return pos_; }
    void advance() { ++pos_; }

private:
    std::string_view b_;
    std::size_t pos_ = 0;
};

}  // namespace

Image parse_ppm(std::string_view bytes) {
    if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '6') throw FormatError("PPM: bad magic, expected P6", 0);
    HeaderReader r(bytes.substr(2));
    Image img;
    img.width = r.number("width");
    img.height = r.number("height");
    const std::size_t maxval = r.number("maxval");
    if (maxval != 255) throw FormatError("PPM: only maxval 255 is supported", 2 + r.pos());
    const std::size_t ws = 2 + r.pos();
    if (ws >= bytes.size() || !std::isspace(static_cast<unsigned char>(bytes[ws]))) {
        throw FormatError("PPM: missing whitespace after maxval", ws);
    }
    const std::size_t data = ws + 1;
    const std::size_t need = img.width * img.height * 3;
    if (bytes.size() - data < need) {
        throw FormatError("PPM: truncated pixel data, expected " + std::to_string(need) + " bytes", bytes.size());
    }
    if (bytes.size() - data > need) throw FormatError("PPM: trailing bytes after pixel data", data + need);
    img.rgb.assign(bytes.begin() + static_cast<std::ptrdiff_t>(data),
                   bytes.begin() + static_cast<std::ptrdiff_t>(data + need));
    return img;
}

std::string serialize_ppm(const Image& img) {
    std::string out = "P6\n" + std::to_string(img.width) + " " + std::to_string(img.height) + "\n255\n";
    out.append(reinterpret_cast<const char*>(img.rgb.data()), img.rgb.size());
    return out;
}

Image read_ppm(const std::filesystem::path& path) {
    try {
        return parse_ppm(read_file(path));
    } catch (const FormatError& e) {
        throw FormatError(path.filename().string() + ": " + e.detail(), e.offset());
    }
}

void write_ppm(const std::filesystem::path& path, const Image& img) { write_file_atomic(path, serialize_ppm(img)); }

std::string frame_file_name(std::size_t index) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "frame_%06zu.ppm", index);
    return buf;
}

}  // namespace rbt
