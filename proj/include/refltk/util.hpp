#pragma once

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace refltk {

/// Runs f(begin, end) over disjoint chunks of [0, n) on up to
/// hardware_concurrency threads. Callers must write only to index-disjoint
/// slots so the result is schedule-independent.
inline void parallel_for(int n, const std::function<void(int, int)>& f) {
  unsigned hw = std::thread::hardware_concurrency();
  int workers = static_cast<int>(hw == 0 ? 1 : hw);
  if (workers <= 1 || n < 2 * workers) {
    f(0, n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  int chunk = (n + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    int begin = w * chunk;
    int end = std::min(n, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&, begin, end] { f(begin, end); });
  }
  for (auto& t : pool) t.join();
}

/// Deterministic 64-bit generator (splitmix64); fixed across platforms so
/// sampled test vectors are reproducible byte-for-byte.
class DeterministicRng {
 public:
  explicit DeterministicRng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform value in [lo, hi] inclusive.
  long range(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::uint64_t state_;
};

}  // namespace refltk
