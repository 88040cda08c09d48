#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "rbtensor/rb_tensor.hpp"

namespace rbt {

// RBT1 layout (all little-endian):
//   "RBT1" | u32 version = 1 | u64 n1 | u64 n2 | u64 n3 |
//   n1*n2*n3 entries of (q0, q1, q2, q3) as f64,
//   ordered slice k outermost, then column j, then row i.

inline constexpr std::size_t kRbt1HeaderSize = 4 + 4 + 3 * 8;

std::string serialize_rbt1(const RBTensor& t);
/// Throws FormatError (with byte offset) on bad magic, version, truncation,
/// trailing data or non-finite entries.
RBTensor parse_rbt1(std::string_view bytes);

void write_rbt1(const std::filesystem::path& path, const RBTensor& t);
RBTensor read_rbt1(const std::filesystem::path& path);

/// Whole-file read; throws Error if the file cannot be opened.
std::string read_file(const std::filesystem::path& path);
/// Writes to a temporary sibling and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view bytes);

}  // namespace rbt
