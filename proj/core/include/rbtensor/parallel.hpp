#pragma once

#include <cstddef>
#include <functional>

namespace rbt {

/// Number of worker threads used by slice-parallel loops (>= 1).
std::size_t num_threads() noexcept;
/// 0 restores the hardware default.
void set_num_threads(std::size_t n) noexcept;

/// Runs fn(0) ... fn(count - 1), possibly concurrently. Every index writes to
/// its own pre-assigned output, so results do not depend on the schedule.
/// If any invocation throws, the exception from the lowest failing index is
/// rethrown after all workers finish.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace rbt
