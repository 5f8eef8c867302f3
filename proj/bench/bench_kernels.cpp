// Serial-vs-OpenMP comparison for the scan kernels.  Synthetic predicates pin
// the hit at the end of the range (worst case for early exit), then a real
// braid scan over a large flip solution.  Run: rotabrace_bench [workers...]

#include <chrono>
#include <cstdio>
#include <functional>
#include <vector>

#include "rotabrace/clifford.hpp"
#include "rotabrace/parallel.hpp"
#include "rotabrace/weak_brace.hpp"
#include "rotabrace/ybe.hpp"

using namespace rotabrace;

namespace {

double seconds(const std::function<void()>& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// order-n elementary abelian 2-group (n a power of two)
DualWeakBrace xor_brace(int n) {
  std::vector<std::vector<Element>> rows(n, std::vector<Element>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) rows[a][b] = a ^ b;
  auto t = CayleyTable::from_rows(rows);
  return verify_dual_weak_brace(t, t);
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> worker_counts = {1, 2, 4, 8};
  if (argc > 1) {
    worker_counts.clear();
    for (int i = 1; i < argc; ++i) worker_counts.push_back(std::atoi(argv[i]));
  }

  const long long n = 1LL << 26;
  auto pred = [n](long long i) {  // cheap predicate, hit at the very end
    return i == n - 1;
  };
  auto heavy = [n](long long i) {  // ~20 ops per index, hit at the end
    unsigned long long x = static_cast<unsigned long long>(i) + 1;
    for (int k = 0; k < 3; ++k) {  // xorshift64: nonlinear, never reaches 0
      x ^= x << 13;
      x ^= x >> 7;
      x ^= x << 17;
    }
    return x == 0 || i == n - 1;
  };

  std::printf("find_first over %lld indices (hit at the end)\n", n);
  long long expect = n - 1;
  double base_cheap = 0, base_heavy = 0;
  for (int w : worker_counts) {
    par::set_workers(w);
    long long got1 = -1, got2 = -1;
    double t1 = seconds([&] { got1 = par::find_first_parallel(n, pred); });
    double t2 = seconds([&] { got2 = par::find_first_parallel(n, heavy); });
    if (w == worker_counts.front()) base_cheap = t1, base_heavy = t2;
    std::printf("  workers=%d  cheap %.3fs (x%.2f)  heavy %.3fs (x%.2f)  %s\n", w, t1,
                base_cheap / t1, t2, base_heavy / t2,
                got1 == expect && got2 == expect ? "ok" : "MISMATCH");
  }
  par::set_workers(1);
  long long serial_got = -1;
  double serial = seconds([&] { serial_got = par::find_first_serial(n, heavy); });
  std::printf("  serial reference: heavy %.3fs  %s\n", serial,
              serial_got == expect ? "ok" : "MISMATCH");

  const int order = 128;  // 128^3 = 2M triples per braid scan
  auto B = xor_brace(order);
  auto r = solution_from_brace(B);
  std::printf("braid scan on the order-%d flip (%d triples)\n", order,
              order * order * order);
  double base_braid = 0;
  for (int w : worker_counts) {
    par::set_workers(w);
    SolutionMap fresh = r;
    fresh.braid_ok.reset();
    bool ok = false;
    double t = seconds([&] { ok = check_braid(fresh).ok; });
    if (w == worker_counts.front()) base_braid = t;
    std::printf("  workers=%d  %.3fs (x%.2f)  %s\n", w, t, base_braid / t,
                ok ? "ok" : "MISMATCH");
  }
  par::set_workers(0);
  return 0;
}
