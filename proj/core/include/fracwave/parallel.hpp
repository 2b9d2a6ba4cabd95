#pragma once

#include <cstddef>
#include <functional>

namespace fracwave {

/// Worker count: FRACWAVE_THREADS if set (clamped to >= 1), otherwise
/// std::thread::hardware_concurrency().
std::size_t thread_budget();

/// Runs fn(i) for i in [0, n). Work is split into contiguous index blocks;
/// fn must only write to per-index state so results cannot depend on the
/// schedule. Runs inline when n is small or the budget is 1.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

} // namespace fracwave
