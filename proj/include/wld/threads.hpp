#ifndef WLD_THREADS_HPP
#define WLD_THREADS_HPP

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace wld {

// flag value > WLD_THREADS env var > hardware concurrency
inline int resolve_thread_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("WLD_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// static split of [0, count) across workers; results must be written to
// per-index slots so the outcome is independent of scheduling
inline void parallel_for(long count, int threads, const std::function<void(long)>& body) {
  if (count <= 0) return;
  threads = std::max(1, std::min(threads, static_cast<int>(std::min<long>(count, 1 << 10))));
  if (threads <= 1) {
    for (long i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  const long chunk = (count + threads - 1) / threads;
  for (int w = 0; w < threads; ++w) {
    const long lo = static_cast<long>(w) * chunk;
    const long hi = std::min(count, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &body] {
      for (long i = lo; i < hi; ++i) body(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace wld

#endif
