#ifndef FDM_DEMATEL_HPP
#define FDM_DEMATEL_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "fdm/matrix.hpp"

namespace fdm {

struct Factor {
  std::string id;
  std::string name;  // display label, may equal id
};

/// Ordered factor descriptors; the order fixes row/column meaning for every
/// matrix in one analysis.
class FactorSet {
 public:
  explicit FactorSet(std::vector<Factor> factors);

  /// F1..Fn with ids as names.
  static FactorSet numbered(std::size_t n);

  std::size_t size() const { return factors_.size(); }
  const Factor& at(std::size_t i) const { return factors_[i]; }
  const std::vector<Factor>& factors() const { return factors_; }

  /// Index of a factor id, or throws.
  std::size_t index_of(const std::string& id) const;

  bool operator==(const FactorSet& other) const;

 private:
  std::vector<Factor> factors_;
};

enum class MatrixKind { kAverage, kNormalized, kTotal };

/// Crisp nonnegative influence matrix tied to a factor set.
class InfluenceMatrix {
 public:
  InfluenceMatrix(FactorSet factors, Matrix entries, MatrixKind kind);

  const FactorSet& factor_set() const { return factors_; }
  const Matrix& entries() const { return entries_; }
  MatrixKind kind() const { return kind_; }
  std::size_t size() const { return factors_.size(); }
  double at(std::size_t i, std::size_t j) const { return entries_(i, j); }

 private:
  FactorSet factors_;
  Matrix entries_;
  MatrixKind kind_;
};

enum class FactorClass { kCause, kEffect, kNeutral };

struct FactorScore {
  std::string factor;
  double dispatched = 0.0;  // r: row sum of T
  double received = 0.0;    // c: column sum of T
  double prominence = 0.0;  // r + c
  double relation = 0.0;    // r - c
  FactorClass cls = FactorClass::kNeutral;
};

/// Entry-wise mean of crisp expert response matrices.
InfluenceMatrix average_matrix(std::span<const InfluenceMatrix> responses);

struct NormalizeResult {
  InfluenceMatrix normalized;
  double scale;  // s = max(max row sum, max column sum)
};

/// D = A / s. Throws on an all-zero matrix.
NormalizeResult normalize(const InfluenceMatrix& average);

/// T = D (I - D)^-1 by direct solve. Throws when (I - D) is numerically
/// singular (spectral radius of D not below 1).
InfluenceMatrix total_relation(const InfluenceMatrix& normalized,
                               double rcond_min = 1e-12);

/// Row/column sums of T with the epsilon-banded cause/effect classification.
std::vector<FactorScore> factor_scores(const InfluenceMatrix& total,
                                       double epsilon = 1e-9);

const char* to_string(FactorClass cls);

}  // namespace fdm

#endif  // FDM_DEMATEL_HPP
