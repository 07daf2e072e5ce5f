#pragma once

#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace vcnet::detail {

inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

// Run task(i) for i in [0, n) across `threads` workers on contiguous
// index blocks. The first exception thrown by any worker is rethrown
// on the caller after all workers have joined.
inline void parallel_for_index(long n, int threads, const std::function<void(long)>& task) {
  const int workers = std::min<long>(resolve_threads(threads), std::max<long>(n, 1));
  if (workers <= 1) {
    for (long i = 0; i < n; ++i) task(i);
    return;
  }

  std::mutex error_mutex;
  std::exception_ptr first_error;
  auto run_block = [&](long begin, long end) {
    try {
      for (long i = begin; i < end; ++i) {
        {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (first_error) return;
        }
        task(i);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!first_error) first_error = std::current_exception();
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  const long block = (n + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const long begin = static_cast<long>(w) * block;
    const long end = std::min(n, begin + block);
    if (begin >= end) break;
    pool.emplace_back(run_block, begin, end);
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace vcnet::detail
