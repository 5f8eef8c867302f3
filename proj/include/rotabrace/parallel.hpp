#pragma once

// Parallel scan kernels.  Every kernel has a serial reference implementation
// and an OpenMP one; the dispatching front-ends pick between them based on the
// configured worker count and problem size.  Results never depend on the
// worker count: first-violation scans always report the smallest failing
// index.

#include <algorithm>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rotabrace::par {

/// Configured worker count; 0 means "use the hardware default".
int workers();
void set_workers(int n);

/// Worker count actually used by the kernels (always >= 1).
int effective_workers();

/// Problems smaller than this run serially even when workers are available;
/// thread startup dominates below it.
inline constexpr long long kParallelCutoff = 1 << 15;

/// Serial reference: smallest i in [0, n) with pred(i), or n if none.
template <class Pred>
long long find_first_serial(long long n, Pred&& pred) {
  for (long long i = 0; i < n; ++i) {
    if (pred(i)) return i;
  }
  return n;
}

/// OpenMP variant of find_first_serial.  Scans block-by-block so a hit near
/// the front returns early; within a block each thread keeps the minimum hit
/// of its own ascending chunk and the blocks reduce with min, so the result
/// equals the serial one for every worker count.
template <class Pred>
long long find_first_parallel(long long n, Pred&& pred) {
#ifdef _OPENMP
  const long long block = std::max<long long>(kParallelCutoff, 1);
  const int nthreads = effective_workers();
  for (long long lo = 0; lo < n; lo += block) {
    const long long hi = std::min(n, lo + block);
    long long best = hi;
#pragma omp parallel for schedule(static) reduction(min : best) num_threads(nthreads)
    for (long long i = lo; i < hi; ++i) {
      if (i < best && pred(i)) best = i;
    }
    if (best < hi) return best;
  }
  return n;
#else
  return find_first_serial(n, std::forward<Pred>(pred));
#endif
}

/// Dispatching front-end used by the axiom/braid scans.
template <class Pred>
long long find_first(long long n, Pred&& pred) {
  if (n < kParallelCutoff || effective_workers() <= 1)
    return find_first_serial(n, std::forward<Pred>(pred));
  return find_first_parallel(n, std::forward<Pred>(pred));
}

}  // namespace rotabrace::par
