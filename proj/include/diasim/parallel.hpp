#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace diasim {

inline int default_threads() {
  unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : static_cast<int>(n);
}

// Runs fn(begin, end) over a contiguous block partition of [0, n).
// The partition depends only on (n, threads), never on scheduling, so any
// caller that keeps writes disjoint per index is reproducible by construction.
inline void parallel_for_blocks(std::size_t n, int threads,
                                const std::function<void(std::size_t, std::size_t)>& fn) {
  if (n == 0) return;
  const std::size_t nt = std::max(1, threads);
  if (nt == 1 || n == 1) {
    fn(0, n);
    return;
  }
  const std::size_t workers = std::min<std::size_t>(nt, n);
  const std::size_t chunk = (n + workers - 1) / workers;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t b = w * chunk;
    const std::size_t e = std::min(n, b + chunk);
    if (b >= e) break;
    pool.emplace_back(fn, b, e);
  }
  for (auto& t : pool) t.join();
}

}  // namespace diasim
