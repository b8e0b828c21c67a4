#pragma once

#include <algorithm>
#include <functional>
#include <thread>
#include <vector>

namespace juliadir {

// Chunked parallel loop over [0, n). Each worker owns a contiguous index
// range and writes only its own output slots, so results are identical
// for any thread count.
inline void parallel_for(long n, int threads,
                         const std::function<void(long)>& fn) {
  if (n <= 0) return;
  threads = static_cast<int>(std::max<long>(1, std::min<long>(threads, n)));
  if (threads == 1) {
    for (long i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  long chunk = (n + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    long lo = t * chunk, hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (long i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

inline int default_threads() {
  unsigned n = std::thread::hardware_concurrency();
  return n ? static_cast<int>(n) : 1;
}

}  // namespace juliadir
