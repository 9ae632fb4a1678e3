#pragma once

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace qrev {

/// Worker count: QREV_THREADS env var when set (>=1), else hardware concurrency.
inline int thread_count() {
  if (const char* env = std::getenv("QREV_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

/// Run f(i) for i in [0, n).  Iterations must write to disjoint slots; results
/// are then independent of scheduling, which keeps outputs deterministic.
template <typename F>
void parallel_for(long n, F&& f) {
  const int workers = std::min<long>(thread_count(), n);
  if (workers <= 1) {
    for (long i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<long> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (long i = next.fetch_add(1); i < n; i = next.fetch_add(1)) f(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace qrev
