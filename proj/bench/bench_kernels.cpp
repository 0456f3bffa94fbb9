// Compares the serial reference paths against the OpenMP ones and checks
// they produce identical results while doing it.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "nsc/capacity.hpp"
#include "nsc/codec.hpp"
#include "nsc/oracle.hpp"
#include "nsc/simulate.hpp"

using namespace nsc;

namespace {

template <typename F>
double time_of(F&& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

void row(const char* name, double serial, double parallel, bool identical) {
  std::printf("%-24s %9.3f s %9.3f s  x%.2f  %s\n", name, serial, parallel,
              serial / parallel, identical ? "identical" : "MISMATCH");
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (built without OpenMP)\n");
#endif
  std::printf("%-24s %11s %11s\n", "kernel", "serial", "parallel");

  {
    Rng rng(1);
    auto inst = random_tiny_instance(4, 4, 8, 0.05, rng);
    BoundReport a, b;
    const double ts = time_of([&] { a = oracle_entropies(inst, 0.4, 0.2, false); });
    const double tp = time_of([&] { b = oracle_entropies(inst, 0.4, 0.2, true); });
    row("oracle m=4 l=4 k=8", ts, tp,
        a.h_y == b.h_y && a.h_s_given_xy == b.h_s_given_xy && a.e_t == b.e_t);
  }

  {
    auto params = ChannelParams::make(1024, 8.0, 0.01);
    CodeSpec spec{InnerCode::extended_hamming84(), 64};
    SimReport a, b;
    const double ts = time_of([&] { a = simulate(params, spec, 200, 42, false); });
    const double tp = time_of([&] { b = simulate(params, spec, 200, 42, true); });
    row("simulate m=1024 x200", ts, tp, a.frame_errors == b.frame_errors);
  }

  {
    std::vector<RegionGridRow> a, b;
    const double ts =
        time_of([&] { a = region_grid(1e-4, 0.25, 600, 0.3, 12.0, 600, false); });
    const double tp =
        time_of([&] { b = region_grid(1e-4, 0.25, 600, 0.3, 12.0, 600, true); });
    bool same = a.size() == b.size();
    for (std::size_t i = 0; same && i < a.size(); ++i) {
      same = a[i].margin == b[i].margin && a[i].label == b[i].label;
    }
    row("region grid 600x600", ts, tp, same);
  }

  return 0;
}
