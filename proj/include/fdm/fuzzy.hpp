#ifndef FDM_FUZZY_HPP
#define FDM_FUZZY_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "fdm/matrix.hpp"
#include "fdm/tfn.hpp"

namespace fdm {

/// Square grid of fuzzy ratings with a crisp-zero diagonal.
class FuzzyMatrix {
 public:
  /// Entries default to crisp zero. n must be >= 2.
  explicit FuzzyMatrix(std::size_t n);

  std::size_t size() const { return n_; }

  const Tfn& at(std::size_t i, std::size_t j) const {
    return entries_[i * n_ + j];
  }
  /// Throws on an invalid entry or a non-zero diagonal assignment.
  void set(std::size_t i, std::size_t j, const Tfn& v);

 private:
  std::size_t n_;
  std::vector<Tfn> entries_;
};

/// Component-wise arithmetic mean of expert fuzzy matrices.
FuzzyMatrix fuzzy_mean(std::span<const FuzzyMatrix> matrices);

/// Scope of the min/max bounds used by the CFCS normalization.
enum class CfcsBounds { kGlobal, kPerColumn };

/// Intermediate values for one entry, kept for testability.
struct CfcsTrace {
  double xl = 0.0, xm = 0.0, xr = 0.0;
  double xls = 0.0, xrs = 0.0;
  double x = 0.0;
  double z = 0.0;
  double min_l = 0.0, max_r = 0.0;  // bounds that applied to this entry
};

struct CfcsResult {
  Matrix crisp;                   // defuzzified values, zero diagonal
  std::vector<CfcsTrace> traces;  // row-major n*n, diagonal traces zeroed
  double min_l = 0.0;             // global bounds over off-diagonal entries
  double max_r = 0.0;

  const CfcsTrace& trace(std::size_t i, std::size_t j) const {
    return traces[i * crisp.cols() + j];
  }
};

/// Left/right-score defuzzification. Bounds are taken over off-diagonal
/// entries, matrix-wide or per column. A degenerate span (all candidates
/// identical and crisp) yields the mode directly.
CfcsResult cfcs_defuzzify(const FuzzyMatrix& fm,
                          CfcsBounds bounds = CfcsBounds::kGlobal);

}  // namespace fdm

#endif  // FDM_FUZZY_HPP
