// Times each parallel kernel against its serial reference twin on inputs
// large enough to matter, and verifies the two return identical results.
// Numbers are wall clock; on one core the speedup column hovers around 1.
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <vector>

#include "lieforge/finring.hpp"
#include "lieforge/parallel.hpp"
#include "lieforge/radicals.hpp"
#include "lieforge/sampling.hpp"

using namespace lieforge;

namespace {

template <typename Fn>
double time_best_of(int reps, Fn&& fn) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    double dt = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
    if (dt < best) best = dt;
  }
  return best;
}

void row(const char* label, double serial, double parallel, bool agree) {
  std::printf("%-34s %10.4f %10.4f %9.2fx   %s\n", label, serial, parallel,
              serial / parallel, agree ? "yes" : "NO");
}

}  // namespace

int main() {
  std::printf("kernel benchmark, %d worker(s)\n", par::worker_count());
  std::printf("%-34s %10s %10s %10s   %s\n", "kernel", "serial s",
              "parallel s", "speedup", "agree");

  {
    Rng rng(7);
    LieAlgebra l = random_solvable_algebra(rng, Field::rationals(), 14);
    Subspace serial_out = l.zero_space();
    Subspace parallel_out = l.zero_space();
    double ts = time_best_of(3, [&] { serial_out = envelope_ref(l); });
    double tp = time_best_of(3, [&] { parallel_out = envelope(l); });
    char label[64];
    std::snprintf(label, sizeof label, "envelope (dim %zu)", l.dim());
    row(label, ts, tp, serial_out == parallel_out);
  }

  {
    Rng rng(11);
    FiniteLieRing r =
        random_ring(rng, std::vector<std::uint32_t>(12, 2));
    std::vector<std::uint32_t> xs = {r.generator(0), r.generator(5),
                                     r.generator(11)};
    Subgroup serial_out, parallel_out;
    double ts =
        time_best_of(3, [&] { serial_out = centralizer_exhaustive_ref(r, xs); });
    double tp =
        time_best_of(3, [&] { parallel_out = centralizer_exhaustive(r, xs); });
    char label[64];
    std::snprintf(label, sizeof label, "ring centralizer (order %llu)",
                  static_cast<unsigned long long>(r.order()));
    row(label, ts, tp, serial_out == parallel_out);
  }

  return 0;
}
