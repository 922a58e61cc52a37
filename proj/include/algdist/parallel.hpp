#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace algdist {

/// Worker count to use when a caller passes 0.
inline int default_workers() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Runs body(begin, end) over a static block partition of [0, count).
///
/// Blocks are contiguous and disjoint, so a body that writes only to indices
/// in its own block produces the same result for any worker count. The first
/// exception thrown by any block is rethrown after all blocks finish.
template <typename Body>
void parallel_for_blocks(std::int64_t count, int workers, Body&& body) {
  if (workers <= 0) workers = default_workers();
  const std::int64_t blocks = std::min<std::int64_t>(workers, count);
  if (blocks <= 1) {
    if (count > 0) body(std::int64_t{0}, count);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto guarded = [&](std::int64_t begin, std::int64_t end) {
    try {
      body(begin, end);
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };
  {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(blocks - 1));
    const std::int64_t chunk = count / blocks;
    const std::int64_t extra = count % blocks;
    std::int64_t begin = 0;
    std::int64_t first_end = 0;
    for (std::int64_t b = 0; b < blocks; ++b) {
      const std::int64_t end = begin + chunk + (b < extra ? 1 : 0);
      if (b == 0) {
        first_end = end;
      } else {
        pool.emplace_back([&guarded, begin, end] { guarded(begin, end); });
      }
      begin = end;
    }
    guarded(std::int64_t{0}, first_end);
  }
  if (failure) std::rethrow_exception(failure);
}

/// Runs body(i) for every i in [0, count), distributing indices over workers.
template <typename Body>
void parallel_for(std::int64_t count, int workers, Body&& body) {
  parallel_for_blocks(count, workers, [&body](std::int64_t begin, std::int64_t end) {
    for (std::int64_t i = begin; i < end; ++i) body(i);
  });
}

}  // namespace algdist
