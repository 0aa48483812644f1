#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <thread>
#include <vector>

namespace allab {

/// Worker count for exhaustive scans: ALLAB_THREADS caps it, 0 or unset
/// means hardware concurrency. Always >= 1.
int worker_count();

namespace detail {
constexpr std::uint64_t kParallelThreshold = 1u << 15;
}

/// Least index i in [0,n) with pred(i), or nullopt. pred must be pure; the
/// scan is chunked across workers but the returned index is always the global
/// minimum, so results match the sequential order exactly.
template <typename Pred>
std::optional<std::uint64_t> find_first(std::uint64_t n, Pred&& pred) {
  const int workers = worker_count();
  if (n < detail::kParallelThreshold || workers <= 1) {
    for (std::uint64_t i = 0; i < n; ++i) {
      if (pred(i)) return i;
    }
    return std::nullopt;
  }

  const std::uint64_t chunk = 4096;
  const std::uint64_t chunks = (n + chunk - 1) / chunk;
  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> best{UINT64_MAX};

  auto work = [&] {
    for (;;) {
      const std::uint64_t c = next.fetch_add(1, std::memory_order_relaxed);
      if (c >= chunks) return;
      const std::uint64_t start = c * chunk;
      // Chunks at or past the current best cannot improve it.
      if (start >= best.load(std::memory_order_relaxed)) return;
      const std::uint64_t end = std::min(n, start + chunk);
      for (std::uint64_t i = start; i < end; ++i) {
        if (pred(i)) {
          std::uint64_t cur = best.load(std::memory_order_relaxed);
          while (i < cur && !best.compare_exchange_weak(cur, i, std::memory_order_relaxed)) {
          }
          break;
        }
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers) - 1);
  for (int w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  const std::uint64_t found = best.load(std::memory_order_relaxed);
  if (found == UINT64_MAX) return std::nullopt;
  return found;
}

}  // namespace allab
