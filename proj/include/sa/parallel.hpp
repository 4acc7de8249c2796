#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace sa {

// Applies fn(begin, end) to contiguous batches of [0, count). Batch boundaries
// depend only on batch_size, never on the worker count, so per-batch results
// cannot depend on scheduling. Exceptions from workers are rethrown here.
template <typename Fn>
void for_each_batch(std::int64_t count, std::int64_t batch_size, int threads, Fn&& fn) {
  if (count <= 0) return;
  batch_size = std::clamp<std::int64_t>(batch_size, 1, count);
  const std::int64_t num_batches = (count + batch_size - 1) / batch_size;
  const int workers =
      static_cast<int>(std::min<std::int64_t>(std::max(threads, 1), num_batches));

  if (workers <= 1) {
    for (std::int64_t b = 0; b < num_batches; ++b)
      fn(b * batch_size, std::min(count, (b + 1) * batch_size));
    return;
  }

  std::atomic<std::int64_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto work = [&] {
    for (;;) {
      if (failed.load(std::memory_order_relaxed)) return;
      const std::int64_t b = next.fetch_add(1, std::memory_order_relaxed);
      if (b >= num_batches) return;
      try {
        fn(b * batch_size, std::min(count, (b + 1) * batch_size));
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        failed.store(true, std::memory_order_relaxed);
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers - 1));
  for (int i = 1; i < workers; ++i) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace sa
