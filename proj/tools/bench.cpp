// Times the OpenMP kernels against their serial references.
// Usage: corelattice_bench [repeats]

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "corelattice/core_simplex.hpp"
#include "corelattice/perm_stats.hpp"
#include "corelattice/qt_catalan.hpp"

namespace cl = corelattice;

namespace {

double best_of(int repeats, const std::function<void()>& fn) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    best = std::min(best, dt.count());
  }
  return best;
}

void row(const std::string& name, double parallel, double serial, bool agree) {
  std::cout << std::left << std::setw(28) << name << std::right << std::fixed << std::setprecision(4)
            << std::setw(12) << parallel << std::setw(12) << serial << std::setw(10) << std::setprecision(2)
            << (parallel > 0 ? serial / parallel : 0.0) << std::setw(8) << (agree ? "yes" : "NO") << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  const int repeats = argc > 1 ? std::max(1, std::atoi(argv[1])) : 3;
  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  std::cout << "threads " << threads << ", best of " << repeats << '\n';
  std::cout << std::left << std::setw(28) << "kernel" << std::right << std::setw(12) << "parallel_s" << std::setw(12)
            << "serial_s" << std::setw(10) << "speedup" << std::setw(8) << "agree" << '\n';

  bool all_agree = true;
  {
    const cl::SimplexSpec spec(6, 23);
    std::vector<cl::ChargeVector> p, s;
    const double tp = best_of(repeats, [&] { p = cl::enumerate_cores(spec); });
    const double ts = best_of(repeats, [&] { s = cl::enumerate_cores_serial(spec); });
    row("enumerate_cores(6,23)", tp, ts, p == s);
    all_agree = all_agree && p == s;
  }
  {
    const cl::SimplexSpec spec(5, 21);
    cl::LaurentPoly2 p, s;
    const double tp = best_of(repeats, [&] { p = cl::cat_qt(spec); });
    const double ts = best_of(repeats, [&] { s = cl::cat_qt_serial(spec); });
    row("cat_qt(5,21)", tp, ts, p == s);
    all_agree = all_agree && p == s;
  }
  {
    cl::LaurentPoly2 p, s;
    const double tp = best_of(repeats, [&] { p = cl::distribution(8); });
    const double ts = best_of(repeats, [&] { s = cl::distribution_serial(8); });
    row("distribution(8)", tp, ts, p == s);
    all_agree = all_agree && p == s;
  }
  return all_agree ? 0 : 1;
}
