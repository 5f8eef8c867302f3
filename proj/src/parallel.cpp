#include "rotabrace/parallel.hpp"

#include <atomic>

namespace rotabrace::par {

namespace {
std::atomic<int> g_workers{0};
}

int workers() { return g_workers.load(std::memory_order_relaxed); }

void set_workers(int n) { g_workers.store(n < 0 ? 0 : n, std::memory_order_relaxed); }

int effective_workers() {
  const int w = workers();
  if (w > 0) return w;
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace rotabrace::par
