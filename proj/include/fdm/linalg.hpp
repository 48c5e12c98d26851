#ifndef FDM_LINALG_HPP
#define FDM_LINALG_HPP

#include "fdm/matrix.hpp"

namespace fdm::linalg {

// OpenMP-parallel kernels. Row partitioning only; every output element is
// computed by the same serial expression regardless of thread count, so
// results are bit-identical to the serial reference below.

/// C = A * B.
Matrix matmul(const Matrix& a, const Matrix& b);

/// Inverse via LU with partial pivoting. Throws ValidationError when the
/// reciprocal condition estimate falls below rcond_min.
Matrix inverse(const Matrix& a, double rcond_min = 1e-12);

/// Max absolute column sum.
double norm_one(const Matrix& a);

/// 1 / (||A||_1 * ||A^-1||_1), computed from an explicit inverse.
/// Small dense matrices only.
double rcond_estimate(const Matrix& a);

namespace serial {

// Reference implementations kept for kernel tests and the benchmark.

Matrix matmul(const Matrix& a, const Matrix& b);
Matrix inverse(const Matrix& a, double rcond_min = 1e-12);

}  // namespace serial

}  // namespace fdm::linalg

#endif  // FDM_LINALG_HPP
