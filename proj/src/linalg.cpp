#include "fdm/linalg.hpp"

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "fdm/errors.hpp"

namespace fdm::linalg {
namespace {

// PA = LU, L unit lower triangular packed with U in lu. Returns the row
// permutation. Throws on an exactly zero pivot.
std::vector<std::size_t> lu_factor(Matrix& lu, bool parallel) {
  const std::size_t n = lu.rows();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    double best = std::fabs(lu(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      const double v = std::fabs(lu(i, k));
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (best == 0.0) throw ValidationError("matrix is singular");
    if (piv != k) {
      std::swap(perm[k], perm[piv]);
      for (std::size_t j = 0; j < n; ++j) std::swap(lu(k, j), lu(piv, j));
    }
    const double pivot = lu(k, k);
    if (parallel) {
#pragma omp parallel for schedule(static)
      for (long long ii = (long long)k + 1; ii < (long long)n; ++ii) {
        const std::size_t i = (std::size_t)ii;
        const double f = lu(i, k) / pivot;
        lu(i, k) = f;
        for (std::size_t j = k + 1; j < n; ++j) lu(i, j) -= f * lu(k, j);
      }
    } else {
      for (std::size_t i = k + 1; i < n; ++i) {
        const double f = lu(i, k) / pivot;
        lu(i, k) = f;
        for (std::size_t j = k + 1; j < n; ++j) lu(i, j) -= f * lu(k, j);
      }
    }
  }
  return perm;
}

// Solve A x = e_col given the factorization, writing column col of out.
void solve_unit_column(const Matrix& lu, const std::vector<std::size_t>& perm,
                       std::size_t col, Matrix& out) {
  const std::size_t n = lu.rows();
  std::vector<double> x(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double v = (perm[i] == col) ? 1.0 : 0.0;
    for (std::size_t j = 0; j < i; ++j) v -= lu(i, j) * x[j];
    x[i] = v;
  }
  for (std::size_t ii = n; ii-- > 0;) {
    double v = x[ii];
    for (std::size_t j = ii + 1; j < n; ++j) v -= lu(ii, j) * x[j];
    x[ii] = v / lu(ii, ii);
  }
  for (std::size_t i = 0; i < n; ++i) out(i, col) = x[i];
}

Matrix inverse_impl(const Matrix& a, double rcond_min, bool parallel) {
  if (a.rows() != a.cols()) throw ValidationError("inverse: matrix not square");
  const std::size_t n = a.rows();
  Matrix lu = a;
  const std::vector<std::size_t> perm = lu_factor(lu, parallel);
  Matrix inv(n, n);
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (long long col = 0; col < (long long)n; ++col)
      solve_unit_column(lu, perm, (std::size_t)col, inv);
  } else {
    for (std::size_t col = 0; col < n; ++col)
      solve_unit_column(lu, perm, col, inv);
  }
  const double rcond = 1.0 / (norm_one(a) * norm_one(inv));
  if (rcond < rcond_min)
    throw ValidationError("matrix is numerically singular (rcond " +
                          std::to_string(rcond) + " below bound)");
  return inv;
}

Matrix matmul_impl(const Matrix& a, const Matrix& b, bool parallel) {
  if (a.cols() != b.rows()) throw ValidationError("matmul: shape mismatch");
  Matrix c(a.rows(), b.cols());
  const std::size_t n = a.rows(), k = a.cols(), m = b.cols();
#pragma omp parallel for schedule(static) if (parallel)
  for (long long ii = 0; ii < (long long)n; ++ii) {
    const std::size_t i = (std::size_t)ii;
    for (std::size_t p = 0; p < k; ++p) {
      const double aip = a(i, p);
      if (aip == 0.0) continue;
      for (std::size_t j = 0; j < m; ++j) c(i, j) += aip * b(p, j);
    }
  }
  return c;
}

}  // namespace

Matrix matmul(const Matrix& a, const Matrix& b) {
  return matmul_impl(a, b, true);
}

Matrix inverse(const Matrix& a, double rcond_min) {
  return inverse_impl(a, rcond_min, true);
}

double norm_one(const Matrix& a) {
  double best = 0.0;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) s += std::fabs(a(i, j));
    if (s > best) best = s;
  }
  return best;
}

double rcond_estimate(const Matrix& a) {
  Matrix lu = a;
  std::vector<std::size_t> perm;
  try {
    perm = lu_factor(lu, false);
  } catch (const ValidationError&) {
    return 0.0;
  }
  Matrix inv(a.rows(), a.cols());
  for (std::size_t col = 0; col < a.cols(); ++col)
    solve_unit_column(lu, perm, col, inv);
  return 1.0 / (norm_one(a) * norm_one(inv));
}

namespace serial {

Matrix matmul(const Matrix& a, const Matrix& b) {
  return matmul_impl(a, b, false);
}

Matrix inverse(const Matrix& a, double rcond_min) {
  return inverse_impl(a, rcond_min, false);
}

}  // namespace serial

}  // namespace fdm::linalg
