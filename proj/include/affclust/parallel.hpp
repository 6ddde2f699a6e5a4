#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace affclust {

// Runs fn(begin, end) over [0, n) split into contiguous blocks, one per
// worker. Workers write to disjoint output ranges, so results do not
// depend on the thread count. threads <= 1 runs inline.
template <typename Fn>
void parallel_for(size_t n, int threads, Fn&& fn) {
  if (n == 0) return;
  if (threads <= 1 || n < 2) {
    fn(size_t{0}, n);
    return;
  }
  size_t workers = std::min<size_t>(size_t(threads), n);
  size_t chunk = (n + workers - 1) / workers;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (size_t w = 0; w < workers; ++w) {
    size_t begin = w * chunk;
    size_t end = std::min(n, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&fn, begin, end] { fn(begin, end); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace affclust
