#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace rbt {

/// 8-bit RGB image, pixels row-major, channels interleaved (R, G, B).
struct Image {
    std::size_t width = 0;
    std::size_t height = 0;
    std::vector<std::uint8_t> rgb;

    std::uint8_t& at(std::size_t row, std::size_t col, std::size_t ch) { return rgb[(row * width + col) * 3 + ch]; }
    std::uint8_t at(std::size_t row, std::size_t col, std::size_t ch) const {
        return rgb[(row * width + col) * 3 + ch];
    }
    friend bool operator==(const Image&, const Image&) = default;
};

/// Binary PPM (P6) with maxval 255. Comments in the header are accepted.
/// Throws FormatError with the offending byte offset.
Image parse_ppm(std::string_view bytes);
std::string serialize_ppm(const Image& img);

Image read_ppm(const std::filesystem::path& path);
void write_ppm(const std::filesystem::path& path, const Image& img);

/// "frame_000042.ppm"
std::string frame_file_name(std::size_t index);

}  // namespace rbt
