#pragma once

// Fixed-size chunking over an index range. Each chunk is evaluated
// sequentially; callers combine per-chunk results in chunk order, so the
// outcome never depends on the thread count.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace cubic::detail {

template <typename Result, typename Fn>
std::vector<Result> map_chunks(std::int64_t lo, std::int64_t hi, std::int64_t chunk, unsigned threads, Fn fn) {
  if (hi < lo) return {};
  const std::int64_t count = (hi - lo) / chunk + 1;
  std::vector<Result> out(static_cast<std::size_t>(count));
  std::atomic<std::int64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto worker = [&] {
    for (std::int64_t c = next++; c < count; c = next++) {
      const std::int64_t a = lo + c * chunk;
      const std::int64_t b = std::min(hi, a + chunk - 1);
      try {
        out[static_cast<std::size_t>(c)] = fn(a, b);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = count;
      }
    }
  };

  const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(n);
    for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace cubic::detail
