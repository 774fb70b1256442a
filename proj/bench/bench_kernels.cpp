// Compares the OpenMP kernels against their serial reference paths:
//   - zeta transform, serial butterfly vs parallel butterfly (n = 20)
//   - powerful-set enumeration, single-tree vs partitioned search (n = 5)
//   - pruned enumeration vs the naive definition-level enumerator (n = 4)

#include <chrono>
#include <cstdio>
#include <random>

#include "powerful/enumerate.hpp"
#include "powerful/reference.hpp"
#include "powerful/subset.hpp"

using namespace powerful;

namespace {

template <typename F>
double time_best_of(int reps, F&& fn) {
  double best = 1e100;
  for (int i = 0; i < reps; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const double s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    if (s < best) best = s;
  }
  return best;
}

}  // namespace

int main() {
  std::mt19937_64 rng(1);
  Indicator f(20);
  for (Mask x = 0; x < f.table_size(); ++x) f.set(x, rng() % 4);

  Indicator gs(0), gp(0);
  const double zs = time_best_of(3, [&] { gs = zeta_transform_serial(f); });
  const double zp = time_best_of(3, [&] { gp = zeta_transform_parallel(f); });
  std::printf("zeta n=20            serial %8.1f ms   parallel %8.1f ms   x%.2f  %s\n",
              zs * 1e3, zp * 1e3, zs / zp, gs == gp ? "match" : "MISMATCH");

  std::vector<SetSystem> es, ep;
  const double ns = time_best_of(3, [&] { es = enumerate_powerful(5, {}, false); });
  const double np = time_best_of(3, [&] { ep = enumerate_powerful(5, {}, true); });
  std::printf("enumerate n=5        serial %8.1f ms   parallel %8.1f ms   x%.2f  %s (%zu systems)\n",
              ns * 1e3, np * 1e3, ns / np, es == ep ? "match" : "MISMATCH",
              ep.size());

  std::vector<SetSystem> naive, pruned;
  const double tn = time_best_of(3, [&] { naive = reference::enumerate_naive(4); });
  const double tp = time_best_of(3, [&] { pruned = enumerate_powerful(4); });
  std::printf("enumerate n=4        naive  %8.1f ms   pruned   %8.1f ms   x%.2f  %s (%zu systems)\n",
              tn * 1e3, tp * 1e3, tn / tp, naive == pruned ? "match" : "MISMATCH",
              pruned.size());
  return 0;
}
