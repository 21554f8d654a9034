#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace apollo {

/// Explicit count if positive, else STAIRCASE_THREADS, else hardware concurrency.
unsigned resolve_thread_count(int requested = 0);

/// Splits [begin, end) into `chunks` contiguous ranges and runs
/// fn(chunk_index, lo, hi) for each on up to `threads` workers. The first
/// exception thrown by any chunk is rethrown on the caller's thread.
template <class Fn>
void parallel_chunks(std::int64_t begin, std::int64_t end, std::size_t chunks, unsigned threads, Fn&& fn) {
  if (end <= begin) return;
  chunks = std::max<std::size_t>(1, std::min<std::size_t>(chunks, std::size_t(end - begin)));
  threads = std::max(1u, std::min<unsigned>(threads, unsigned(chunks)));
  const std::int64_t span = end - begin;
  auto bound = [&](std::size_t k) { return begin + std::int64_t((__int128(span) * k) / chunks); };

  if (threads == 1) {
    for (std::size_t k = 0; k < chunks; ++k) fn(k, bound(k), bound(k + 1));
    return;
  }
  std::mutex mu;
  std::size_t next = 0;
  std::exception_ptr error;
  auto worker = [&] {
    for (;;) {
      std::size_t k;
      {
        std::lock_guard lock(mu);
        if (next >= chunks || error) return;
        k = next++;
      }
      try {
        fn(k, bound(k), bound(k + 1));
      } catch (...) {
        std::lock_guard lock(mu);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace apollo
