#pragma once

#include <cstddef>
#include <functional>

namespace eberlein {

/// Number of worker threads honoring EBERLEIN_THREADS (0 or unset = auto).
std::size_t worker_count();

/// Runs fn(i) for i in [0, n). Work items must be independent; each item is
/// evaluated sequentially inside, so results are deterministic regardless of
/// the thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace eberlein
