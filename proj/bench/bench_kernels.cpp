// Serial vs OpenMP timings of the exhaustive kernels.
// Usage: bench_kernels [repeats]

#include "genocchi/dumont_bijection.hpp"
#include "genocchi/kernels.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>

using namespace genocchi;

namespace {

template <class F>
double best_ms(int repeats, F&& f) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

void row(const char* name, int n, int repeats, const std::function<bool()>& serial, const std::function<bool()>& parallel) {
  bool same = true;
  const double s = best_ms(repeats, [&] { same = serial() && same; });
  const double p = best_ms(repeats, [&] { same = parallel() && same; });
  std::printf("%-28s n=%d  serial %9.2f ms  parallel %9.2f ms  speedup %5.2fx%s\n", name, n, s, p, s / p,
              same ? "" : "  (MISMATCH)");
}

} // namespace

int main(int argc, char** argv) {
  const int repeats = argc > 1 ? std::max(1, std::atoi(argv[1])) : 3;
  std::printf("threads: %d, best of %d\n", kernel_threads(), repeats);

  for (int n : {7, 8}) {
    const auto ref = inv_histogram_serial(n);
    row("inv histogram", n, repeats, [&] { return inv_histogram_serial(n) == ref; },
        [&] { return inv_histogram_parallel(n) == ref; });
  }
  for (int n : {6, 7}) {
    const auto ref = st_histogram_serial(n, DumontClass::All);
    row("st histogram (all Dumont)", n, repeats, [&] { return st_histogram_serial(n, DumontClass::All) == ref; },
        [&] { return st_histogram_parallel(n, DumontClass::All) == ref; });
  }
  const DellacPredicate statistic = [](const DellacConfig& c) -> std::optional<std::string> {
    if (st(phi(c)) != binom2(c.n()) - inv(c)) return c.to_string();
    return std::nullopt;
  };
  for (int n : {7, 8})
    row("phi statistic sweep", n, repeats, [&] { return sweep_dellac_serial(n, statistic).passed(); },
        [&] { return sweep_dellac_parallel(n, statistic).passed(); });
  return 0;
}
