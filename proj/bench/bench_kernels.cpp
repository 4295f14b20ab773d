// Compares the production kernels against their serial reference
// implementations: stable-flag counting per interpolation node, and the
// oracle's sum over class representatives.  Values must agree; times show
// what the type-grouped scan and the OpenMP parallelism buy.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "kpg/flags.hpp"
#include "kpg/oracle.hpp"

using namespace kpg;

namespace {

double seconds(const std::function<void()>& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void bench_flag_counts() {
  struct Case {
    const char* lambda;
    std::vector<int> ft;
    long q;
  };
  const Case cases[] = {
      {"(2,1)", {1, 2, 3}, 9},
      {"(2,1^2)", {1, 2, 3, 4}, 8},
      {"(2^2)", {2, 4}, 9},
      {"(1^4)", {1, 2, 3, 4}, 7},
      {"(2,1^3)", {1, 2, 3, 4, 5}, 8},
      {"(2^2,1)", {2, 4, 5}, 7},
  };
  std::printf("stable flag counts at one node: type-grouped scan vs flag-by-flag reference\n");
  std::printf("%-10s %-14s %4s %14s %10s %10s %8s\n", "lambda", "flag dims", "q", "count",
              "kernel[s]", "ref[s]", "ratio");
  for (const Case& c : cases) {
    Partition lam = Partition::parse(c.lambda);
    Fq F = Fq::from_q(c.q);
    unsigned long long v1 = 0, v2 = 0;
    double t1 = seconds([&] { v1 = count_stable_flags(F, lam, c.ft); });
    double t2 = seconds([&] { v2 = count_stable_flags_ref(F, lam, c.ft); });
    std::string ft_str;
    for (size_t i = 0; i < c.ft.size(); ++i)
      ft_str += (i ? "," : "") + std::to_string(c.ft[i]);
    std::printf("%-10s %-14s %4ld %14llu %10.4f %10.4f %8.1fx%s\n", c.lambda, ft_str.c_str(),
                c.q, v1, t1, t2, t2 / (t1 > 0 ? t1 : 1e-9), v1 == v2 ? "" : "  VALUES DIFFER");
  }
}

void bench_oracle() {
  struct Case {
    long q;
    int n;
    std::vector<int> d;
  };
  const Case cases[] = {
      {4, 3, {1, 2, 3}},
      {3, 4, {1, 2, 3, 4}},
      {4, 4, {1, 2, 3, 4}},
      {2, 5, {1, 2, 3, 4, 5}},
  };
  std::printf("\nk_oracle: parallel sum over class representatives vs serial\n");
  std::printf("%4s %3s %-12s %12s %10s %10s %8s\n", "q", "n", "d", "count", "par[s]", "ser[s]",
              "speedup");
  for (const Case& c : cases) {
    Fq F = Fq::from_q(c.q);
    DimensionVector d(c.d);
    unsigned long long v1 = 0, v2 = 0;
    double t1 = seconds([&] { v1 = k_oracle(F, c.n, d, 1e9, true); });
    double t2 = seconds([&] { v2 = k_oracle(F, c.n, d, 1e9, false); });
    std::printf("%4ld %3d %-12s %12llu %10.4f %10.4f %8.2fx%s\n", c.q, c.n, d.str().c_str(), v1,
                t1, t2, t2 / (t1 > 0 ? t1 : 1e-9), v1 == v2 ? "" : "  VALUES DIFFER");
  }
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads = %d\n\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; kernels run serially\n\n");
#endif
  bench_flag_counts();
  bench_oracle();
  return 0;
}
