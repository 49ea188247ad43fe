#include "refrec/core/parallel.hpp"

#include <algorithm>
#include <thread>
#include <vector>

namespace refrec {

static int g_max_threads = 0;

void set_max_threads(int n) { g_max_threads = n < 0 ? 0 : n; }

int max_threads() {
  if (g_max_threads > 0) return g_max_threads;
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : int(hc);
}

void parallel_ranges(int64_t n, const std::function<void(int64_t, int64_t, int)>& f) {
  if (n <= 0) return;
  int workers = std::min<int64_t>(max_threads(), n);
  if (workers <= 1) {
    f(0, n, 0);
    return;
  }
  int64_t chunk = (n + workers - 1) / workers;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    int64_t b = w * chunk;
    int64_t e = std::min<int64_t>(n, b + chunk);
    if (b >= e) break;
    pool.emplace_back([&f, b, e, w] { f(b, e, w); });
  }
  for (auto& t : pool) t.join();
}

void parallel_for(int64_t n, const std::function<void(int64_t)>& f) {
  parallel_ranges(n, [&f](int64_t b, int64_t e, int) {
    for (int64_t i = b; i < e; ++i) f(i);
  });
}

}  // namespace refrec
