#include "fdm/fuzzy.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "fdm/errors.hpp"

namespace fdm {

FuzzyMatrix::FuzzyMatrix(std::size_t n) : n_(n), entries_(n * n) {
  if (n < 2) throw ValidationError("fuzzy matrix needs at least 2 factors");
}

void FuzzyMatrix::set(std::size_t i, std::size_t j, const Tfn& v) {
  if (!v.valid())
    throw ValidationError("fuzzy entry (" + std::to_string(i) + "," +
                          std::to_string(j) + ") violates L <= M <= U");
  if (i == j && v != Tfn::crisp(0.0))
    throw ValidationError("diagonal entry (" + std::to_string(i) + "," +
                          std::to_string(j) + ") must be crisp zero");
  entries_[i * n_ + j] = v;
}

FuzzyMatrix fuzzy_mean(std::span<const FuzzyMatrix> matrices) {
  if (matrices.empty())
    throw ValidationError("fuzzy mean of an empty matrix list");
  const std::size_t n = matrices.front().size();
  for (const auto& m : matrices)
    if (m.size() != n)
      throw ValidationError("fuzzy mean: dimension mismatch (" +
                            std::to_string(m.size()) + " vs " +
                            std::to_string(n) + ")");
  FuzzyMatrix mean(n);
  const double inv = 1.0 / static_cast<double>(matrices.size());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      Tfn sum;
      for (const auto& m : matrices) sum = sum + m.at(i, j);
      mean.set(i, j, inv * sum);
    }
  return mean;
}

namespace {

CfcsTrace defuzzify_entry(const Tfn& e, double min_l, double max_r) {
  CfcsTrace t;
  t.min_l = min_l;
  t.max_r = max_r;
  const double span = max_r - min_l;
  if (span == 0.0) {
    // All candidate entries are one identical crisp value.
    t.z = e.m;
    return t;
  }
  t.xl = (e.l - min_l) / span;
  t.xm = (e.m - min_l) / span;
  t.xr = (e.u - min_l) / span;
  t.xls = t.xm / (1.0 + t.xm - t.xl);
  t.xrs = t.xr / (1.0 + t.xr - t.xm);
  t.x = (t.xls * (1.0 - t.xls) + t.xrs * t.xrs) / (1.0 - t.xls + t.xrs);
  t.z = min_l + t.x * span;
  return t;
}

}  // namespace

CfcsResult cfcs_defuzzify(const FuzzyMatrix& fm, CfcsBounds bounds) {
  const std::size_t n = fm.size();
  CfcsResult res;
  res.crisp = Matrix(n, n);
  res.traces.assign(n * n, CfcsTrace{});

  // Bounds over off-diagonal entries only; the diagonal is pinned to zero.
  std::vector<double> min_l(n, std::numeric_limits<double>::infinity());
  std::vector<double> max_r(n, -std::numeric_limits<double>::infinity());
  if (bounds == CfcsBounds::kGlobal) {
    double lo = min_l[0], hi = max_r[0];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        lo = std::min(lo, fm.at(i, j).l);
        hi = std::max(hi, fm.at(i, j).u);
      }
    std::fill(min_l.begin(), min_l.end(), lo);
    std::fill(max_r.begin(), max_r.end(), hi);
  } else {
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) {
        if (i == j) continue;
        min_l[j] = std::min(min_l[j], fm.at(i, j).l);
        max_r[j] = std::max(max_r[j], fm.at(i, j).u);
      }
  }
  res.min_l = *std::min_element(min_l.begin(), min_l.end());
  res.max_r = *std::max_element(max_r.begin(), max_r.end());

#pragma omp parallel for schedule(static)
  for (long long ii = 0; ii < (long long)n; ++ii) {
    const std::size_t i = (std::size_t)ii;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      CfcsTrace t = defuzzify_entry(fm.at(i, j), min_l[j], max_r[j]);
      res.crisp(i, j) = t.z;
      res.traces[i * n + j] = t;
    }
  }
  return res;
}

}  // namespace fdm
