#pragma once

#include <mpfr.h>

#include <functional>
#include <thread>
#include <vector>

namespace cburgers {

// Static-partition parallel loop over [0, n). Each index writes its own
// output slot, so results do not depend on the thread count. Worker threads
// release MPFR's per-thread constant caches before joining.
inline void parallel_for(int n, int threads, const std::function<void(int)>& body) {
  if (threads <= 1 || n <= 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  int workers = std::min(threads, n);
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(workers));
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (int i = w; i < n; i += workers) body(i);
      mpfr_free_cache();
    });
  for (auto& th : pool) th.join();
}

}  // namespace cburgers
