// Micro-benchmark comparing the serial reference kernels against their
// OpenMP counterparts: polynomial products, Bareiss determinants, and
// principal-minor batches. Exact arithmetic, so both sides must also agree.

#include <chrono>
#include <cstdio>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "folres/matrix.hpp"
#include "folres/polynomial.hpp"

using namespace folres;
using Clock = std::chrono::steady_clock;

namespace {

Polynomial random_poly(std::mt19937_64& rng, int nvars, int max_deg, int terms) {
  Polynomial p(nvars);
  for (int t = 0; t < terms; ++t) {
    Monomial m = Monomial::one(nvars);
    int budget = static_cast<int>(rng() % (max_deg + 1));
    for (int b = 0; b < budget; ++b) ++m.exp[rng() % nvars];
    p.add_term(m, Rational(static_cast<long>(rng() % 20001) - 10000));
  }
  return p;
}

template <class F>
double time_ms(F&& f) {
  auto t0 = Clock::now();
  f();
  auto t1 = Clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (no OpenMP)\n");
#endif
  std::printf("%-34s %12s %12s %8s\n", "kernel", "serial(ms)", "parallel(ms)", "match");

  std::mt19937_64 rng(2024);
  for (int terms : {100, 400, 800}) {
    Polynomial a = random_poly(rng, 3, 10, terms);
    Polynomial b = random_poly(rng, 3, 10, terms);
    Polynomial rs(3), rp(3);
    double ts = time_ms([&] { rs = poly_mul_serial(a, b); });
    double tp = time_ms([&] { rp = poly_mul_parallel(a, b); });
    std::printf("poly_mul %4d x %4d terms          %12.2f %12.2f %8s\n", terms, terms, ts, tp,
                rs == rp ? "yes" : "NO");
  }

  for (int n : {6, 7, 8}) {
    PolyMatrix m(n, n, 2);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.at(i, j) = random_poly(rng, 2, 2, 3);
    Polynomial ds(2), dp(2);
    double ts = time_ms([&] { ds = det_bareiss_serial(m); });
    double tp = time_ms([&] { dp = det_bareiss_parallel(m); });
    std::printf("bareiss_det %2dx%-2d                  %12.2f %12.2f %8s\n", n, n, ts, tp,
                ds == dp ? "yes" : "NO");
  }

  {
    int n = 8;
    PolyMatrix m(n, n, 2);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.at(i, j) = random_poly(rng, 2, 1, 2);
    Polynomial ms(2), mp(2);
    double ts = time_ms([&] { ms = principal_minor_sum_serial(m, 4); });
    double tp = time_ms([&] { mp = principal_minor_sum(m, 4); });
    std::printf("minor_sum 8x8 size-4 batch         %12.2f %12.2f %8s\n", ts, tp,
                ms == mp ? "yes" : "NO");
  }
  return 0;
}
