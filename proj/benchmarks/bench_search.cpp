// Compares the serial reference engine against the OpenMP work-split engine
// on the four-variable instances and checks they return identical results.
//
//   bench_search [k ...]     (default: 32 36 40 44)

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "rado/closed_forms.hpp"
#include "rado/search.hpp"

using namespace rado;

namespace {

template <typename F>
double time_s(F&& f) {
  auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

} // namespace

int main(int argc, char** argv) {
  std::vector<Int> ks;
  for (int i = 1; i < argc; ++i) ks.push_back(std::atoll(argv[i]));
  if (ks.empty()) ks = {32, 36, 40, 44};

  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  std::printf("engine comparison on x+y+kz=4w (parallel threads: %d)\n", threads);
  std::printf("%6s %8s %12s %12s %9s %8s\n", "k", "rado", "serial_s", "parallel_s", "speedup", "match");

  for (Int k : ks) {
    ColorSystem sys = ColorSystem::uniform(make_weighted_sum(4, k, 4));
    Int n_max = four_var_value(k).value + 8;
    RadoResult serial, parallel;
    SearchOptions sopt;
    sopt.threads = 1;
    double ts = time_s([&] { serial = rado_number_serial(sys, n_max, sopt); });
#ifdef _OPENMP
    SearchOptions popt;
    popt.threads = 0;
    double tp = time_s([&] { parallel = rado_number_parallel(sys, n_max, popt); });
#else
    double tp = ts;
    parallel = serial;
#endif
    bool match = serial.found == parallel.found && serial.value == parallel.value &&
                 serial.certificate == parallel.certificate;
    std::printf("%6lld %8lld %12.3f %12.3f %9.2f %8s\n", static_cast<long long>(k),
                static_cast<long long>(serial.value), ts, tp, ts / (tp > 0 ? tp : 1e-9),
                match ? "yes" : "NO");
    if (!match) return 1;
  }
  return 0;
}
