#pragma once

// Deterministic first-hit search: candidates are processed in fixed blocks
// and the least index that hits inside a block wins, so the answer (and any
// per-index side effects the winner left behind) is independent of thread
// count and scheduling.

#include <atomic>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace acp {

inline long first_hit(long count, int threads, const std::function<bool(long)>& task) {
  if (count <= 0) return -1;
  if (threads <= 1) {
    for (long i = 0; i < count; ++i)
      if (task(i)) return i;
    return -1;
  }
  const long block = static_cast<long>(threads) * 4;
  for (long base = 0; base < count; base += block) {
    const long hi = std::min(count, base + block);
    std::vector<char> hit(static_cast<size_t>(hi - base), 0);
    std::atomic<long> next{base};
    std::vector<std::exception_ptr> errors(static_cast<size_t>(threads));
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        try {
          for (;;) {
            long i = next.fetch_add(1);
            if (i >= hi) return;
            if (task(i)) hit[static_cast<size_t>(i - base)] = 1;
          }
        } catch (...) {
          errors[static_cast<size_t>(t)] = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
    for (long i = base; i < hi; ++i)
      if (hit[static_cast<size_t>(i - base)]) return i;
  }
  return -1;
}

}  // namespace acp
