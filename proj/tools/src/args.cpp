#include <charconv>
#include <cmath>
#include <stdexcept>

#include "rbt_cli/shapes.hpp"

namespace rbt::cli {

namespace {

std::size_t parse_extent(std::string_view tok, std::string_view whole) {
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size() || v == 0) {
        throw std::invalid_argument("bad size '" + std::string(whole) + "': extents must be positive integers");
    }
    return v;
}

}  // namespace

std::vector<Shape> parse_shapes(std::string_view text) {
    std::vector<Shape> shapes;
    while (!text.empty()) {
        const std::size_t comma = text.find(',');
        const std::string_view item = text.substr(0, comma);
        std::size_t parts[3];
        std::string_view rest = item;
        for (int d = 0; d < 3; ++d) {
            const std::size_t x = rest.find('x');
            if ((d < 2) == (x == std::string_view::npos)) {
                throw std::invalid_argument("bad size '" + std::string(item) + "': expected N1xN2xN3");
            }
            parts[d] = parse_extent(rest.substr(0, x), item);
            rest = d < 2 ? rest.substr(x + 1) : std::string_view{};
        }
        shapes.push_back({parts[0], parts[1], parts[2]});
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
        if (text.empty()) throw std::invalid_argument("trailing comma in size list");
    }
    if (shapes.empty()) throw std::invalid_argument("empty size list");
    return shapes;
}

std::string format_shape(const Shape& s) {
    return std::to_string(s.n1) + "x" + std::to_string(s.n2) + "x" + std::to_string(s.n3);
}

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return {buf, res.ptr};
}

}  // namespace rbt::cli
