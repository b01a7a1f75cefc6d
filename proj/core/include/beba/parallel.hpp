#pragma once

#include <cstddef>
#include <functional>

namespace beba {

/// Worker count requested through the BEBA_THREADS environment variable.
/// Unset, empty, or 0 means one worker per hardware thread.
std::size_t worker_count_from_env();

/// Runs `body(i)` for every i in [0, count) on up to `workers` threads
/// (0 = worker_count_from_env()). Indices are claimed dynamically; callers
/// write results into per-index slots so the outcome is independent of the
/// schedule. The first exception thrown by any body is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body,
                  std::size_t workers = 0);

}  // namespace beba
