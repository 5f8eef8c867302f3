#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "rotabrace/catalog.hpp"
#include "rotabrace/parallel.hpp"
#include "rotabrace/ybe.hpp"

using namespace rotabrace;

namespace {

struct WorkerGuard {
  ~WorkerGuard() { par::set_workers(0); }
};

// order-32 elementary abelian group (bitwise xor): a big valid trivial brace
DualWeakBrace xor32() {
  const int n = 32;
  std::vector<std::vector<Element>> rows(n, std::vector<Element>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) rows[a][b] = a ^ b;
  auto t = CayleyTable::from_rows(rows);
  return verify_dual_weak_brace(t, t);
}

}  // namespace

TEST_CASE("find_first agrees across variants, sizes and worker counts") {
  WorkerGuard guard;
  const long long sizes[] = {0,
                             1,
                             100,
                             par::kParallelCutoff - 1,
                             par::kParallelCutoff,
                             par::kParallelCutoff + 1,
                             3 * par::kParallelCutoff + 17};
  for (long long n : sizes) {
    const long long hits[] = {0, n / 2, n - 1, n, -1};  // -1: every third index
    for (long long h : hits) {
      auto pred = [&](long long i) { return h == -1 ? i % 3 == 2 : i == h; };
      long long expect = par::find_first_serial(n, pred);
      for (int w : {1, 2, 3, 8}) {
        par::set_workers(w);
        CHECK(par::find_first_parallel(n, pred) == expect);
        CHECK(par::find_first(n, pred) == expect);
      }
    }
  }
}

TEST_CASE("worker configuration") {
  WorkerGuard guard;
  par::set_workers(3);
  CHECK(par::workers() == 3);
  CHECK(par::effective_workers() == 3);
  par::set_workers(0);
  CHECK(par::workers() == 0);
  CHECK(par::effective_workers() >= 1);
  par::set_workers(-2);
  CHECK(par::effective_workers() >= 1);
}

TEST_CASE("axiom scans are worker-independent") {
  WorkerGuard guard;
  auto B = xor32();
  auto r = solution_from_brace(B);
  CHECK(r.braid_ok == true);

  // poison r(1,1) in both components; the braid scan crosses the parallel
  // cutoff (32^3 = 32768).  (Deviating in only one component of one cell of a
  // flip keeps the braid relation, so both are bumped.)
  auto bad = r;
  bad.braid_ok.reset();
  bad.left[33] = (bad.left[33] + 1) % 32;
  bad.right[33] = (bad.right[33] + 1) % 32;
  for (int w : {1, 2, 3, 8}) {
    par::set_workers(w);
    auto v = check_braid(bad);
    CHECK_FALSE(v.ok);
    CHECK(v.witness == std::array<Element, 3>{1, 1, 1});
  }

  // same for a poisoned operator check on the 32-element carrier
  ElementMap id(32);
  for (Element a = 0; a < 32; ++a) id[a] = a;
  ElementMap broken = id;
  broken[7] = 9;
  for (int w : {1, 2, 3, 8}) {
    par::set_workers(w);
    CHECK(is_rota_baxter(B.additive(), id));
    auto v = check_rota_baxter(B.additive(), broken);
    CHECK_FALSE(v.ok);
    CHECK(v.identity == 1);
    CHECK(v.witness == std::array<Element, 2>{1, 6});
  }
}
