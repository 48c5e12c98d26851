#include "fdm/dematel.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "fdm/errors.hpp"
#include "fdm/linalg.hpp"

namespace fdm {

FactorSet::FactorSet(std::vector<Factor> factors)
    : factors_(std::move(factors)) {
  if (factors_.size() < 2)
    throw ValidationError("factor set needs at least 2 factors");
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i].id.empty()) throw ValidationError("empty factor id");
    for (std::size_t j = i + 1; j < factors_.size(); ++j)
      if (factors_[i].id == factors_[j].id)
        throw ValidationError("duplicate factor id '" + factors_[i].id + "'");
  }
}

FactorSet FactorSet::numbered(std::size_t n) {
  std::vector<Factor> fs;
  fs.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    std::string id = "F" + std::to_string(i);
    fs.push_back({id, id});
  }
  return FactorSet(std::move(fs));
}

std::size_t FactorSet::index_of(const std::string& id) const {
  for (std::size_t i = 0; i < factors_.size(); ++i)
    if (factors_[i].id == id) return i;
  throw ValidationError("unknown factor id '" + id + "'");
}

bool FactorSet::operator==(const FactorSet& other) const {
  if (factors_.size() != other.factors_.size()) return false;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    if (factors_[i].id != other.factors_[i].id) return false;
  return true;
}

InfluenceMatrix::InfluenceMatrix(FactorSet factors, Matrix entries,
                                 MatrixKind kind)
    : factors_(std::move(factors)), entries_(std::move(entries)), kind_(kind) {
  const std::size_t n = factors_.size();
  if (entries_.rows() != n || entries_.cols() != n)
    throw ValidationError("influence matrix shape does not match factor set");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double v = entries_(i, j);
      if (!(v >= 0.0))
        throw ValidationError("negative or non-finite entry at (" +
                              factors_.at(i).id + "," + factors_.at(j).id +
                              ")");
      if (kind != MatrixKind::kTotal && i == j && v != 0.0)
        throw ValidationError("nonzero diagonal at (" + factors_.at(i).id +
                              "," + factors_.at(i).id + ")");
      if (kind == MatrixKind::kNormalized && v > 1.0)
        throw ValidationError("normalized entry above 1 at (" +
                              factors_.at(i).id + "," + factors_.at(j).id +
                              ")");
    }
}

InfluenceMatrix average_matrix(std::span<const InfluenceMatrix> responses) {
  if (responses.empty())
    throw ValidationError("average of an empty response list");
  const FactorSet& fs = responses.front().factor_set();
  for (const auto& r : responses)
    if (!(r.factor_set() == fs))
      throw ValidationError("expert responses use mismatched factor sets");
  const std::size_t n = fs.size();
  Matrix acc(n, n);
  for (const auto& r : responses)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) acc(i, j) += r.at(i, j);
  const double inv = 1.0 / static_cast<double>(responses.size());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) acc(i, j) *= inv;
  return InfluenceMatrix(fs, std::move(acc), MatrixKind::kAverage);
}

NormalizeResult normalize(const InfluenceMatrix& average) {
  const std::size_t n = average.size();
  double max_row = 0.0, max_col = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0, col = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      row += average.at(i, j);
      col += average.at(j, i);
    }
    max_row = std::max(max_row, row);
    max_col = std::max(max_col, col);
  }
  const double s = std::max(max_row, max_col);
  if (s == 0.0)
    throw ValidationError("normalization: degenerate input (all-zero matrix)");
  Matrix d(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d(i, j) = average.at(i, j) / s;
  return {InfluenceMatrix(average.factor_set(), std::move(d),
                          MatrixKind::kNormalized),
          s};
}

InfluenceMatrix total_relation(const InfluenceMatrix& normalized,
                               double rcond_min) {
  const std::size_t n = normalized.size();
  Matrix i_minus_d = Matrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) i_minus_d(i, j) -= normalized.at(i, j);
  Matrix inv;
  try {
    inv = linalg::inverse(i_minus_d, rcond_min);
  } catch (const ValidationError& e) {
    throw ValidationError(
        std::string("total relation: (I - D) is not invertible; the spectral "
                    "radius of D must be below 1 (") +
        e.what() + ")");
  }
  Matrix t = linalg::matmul(normalized.entries(), inv);
  // clamp solver noise; T is nonnegative for nonnegative D
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (t(i, j) < 0.0 && t(i, j) > -1e-12) t(i, j) = 0.0;
  return InfluenceMatrix(normalized.factor_set(), std::move(t),
                         MatrixKind::kTotal);
}

std::vector<FactorScore> factor_scores(const InfluenceMatrix& total,
                                       double epsilon) {
  const std::size_t n = total.size();
  std::vector<FactorScore> scores(n);
  for (std::size_t i = 0; i < n; ++i) {
    FactorScore& sc = scores[i];
    sc.factor = total.factor_set().at(i).id;
    for (std::size_t j = 0; j < n; ++j) {
      sc.dispatched += total.at(i, j);
      sc.received += total.at(j, i);
    }
    sc.prominence = sc.dispatched + sc.received;
    sc.relation = sc.dispatched - sc.received;
    sc.cls = sc.relation > epsilon    ? FactorClass::kCause
             : sc.relation < -epsilon ? FactorClass::kEffect
                                      : FactorClass::kNeutral;
  }
  return scores;
}

const char* to_string(FactorClass cls) {
  switch (cls) {
    case FactorClass::kCause:
      return "cause";
    case FactorClass::kEffect:
      return "effect";
    default:
      return "neutral";
  }
}

}  // namespace fdm
