#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace rbt::cli {

struct Shape {
    std::size_t n1 = 0;
    std::size_t n2 = 0;
    std::size_t n3 = 0;
    friend bool operator==(const Shape&, const Shape&) = default;
};

/// Parses "4x3x2,6x6x4". Every extent must be a positive integer.
/// Throws std::invalid_argument with a readable message.
std::vector<Shape> parse_shapes(std::string_view text);
std::string format_shape(const Shape& s);

/// Shortest round-tripping decimal; "inf" / "-inf" / "nan" for non-finite values.
std::string format_double(double v);

}  // namespace rbt::cli
