// Compares the OpenMP kernels against the serial reference implementations
// on larger matrices than the 10-factor analyses ever need.
//
// Usage: fdm-bench [n] [repeats]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>

#include "fdm/linalg.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

fdm::Matrix random_matrix(std::size_t n, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  fdm::Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = dist(rng);
  return m;
}

// Diagonally dominant so the inverse is well conditioned.
fdm::Matrix random_dominant(std::size_t n, std::uint32_t seed) {
  fdm::Matrix m = random_matrix(n, seed);
  for (std::size_t i = 0; i < n; ++i) m(i, i) += static_cast<double>(n);
  return m;
}

template <typename F>
double time_best(F&& f, int repeats) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto t0 = Clock::now();
    f();
    const double t = seconds_since(t0);
    if (t < best) best = t;
  }
  return best;
}

double max_abs_diff(const fdm::Matrix& a, const fdm::Matrix& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const double d = a(i, j) - b(i, j);
      if (d > worst) worst = d;
      if (-d > worst) worst = -d;
    }
  return worst;
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t n = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 512;
  const int repeats = argc > 2 ? std::atoi(argv[2]) : 3;

#ifdef _OPENMP
  std::printf("OpenMP: %d threads\n", omp_get_max_threads());
#else
  std::printf("OpenMP: disabled at build time\n");
#endif
  std::printf("n = %zu, best of %d runs\n\n", n, repeats);

  const fdm::Matrix a = random_matrix(n, 1);
  const fdm::Matrix b = random_matrix(n, 2);
  const fdm::Matrix d = random_dominant(n, 3);

  fdm::Matrix c_serial, c_omp;
  const double t_mm_s =
      time_best([&] { c_serial = fdm::linalg::serial::matmul(a, b); }, repeats);
  const double t_mm_p =
      time_best([&] { c_omp = fdm::linalg::matmul(a, b); }, repeats);
  std::printf("matmul   serial %8.4fs  omp %8.4fs  speedup %5.2fx  "
              "max diff %g\n",
              t_mm_s, t_mm_p, t_mm_s / t_mm_p, max_abs_diff(c_serial, c_omp));

  fdm::Matrix inv_serial, inv_omp;
  const double t_inv_s = time_best(
      [&] { inv_serial = fdm::linalg::serial::inverse(d); }, repeats);
  const double t_inv_p =
      time_best([&] { inv_omp = fdm::linalg::inverse(d); }, repeats);
  std::printf("inverse  serial %8.4fs  omp %8.4fs  speedup %5.2fx  "
              "max diff %g\n",
              t_inv_s, t_inv_p, t_inv_s / t_inv_p,
              max_abs_diff(inv_serial, inv_omp));
  return 0;
}
