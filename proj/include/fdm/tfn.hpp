#ifndef FDM_TFN_HPP
#define FDM_TFN_HPP

#include <string>
#include <utility>
#include <vector>

namespace fdm {

/// Triangular fuzzy number (L, M, U) with L <= M <= U.
/// The degenerate case L == M == U represents a crisp value.
struct Tfn {
  double l = 0.0;
  double m = 0.0;
  double u = 0.0;

  constexpr Tfn() = default;
  constexpr Tfn(double l_, double m_, double u_) : l(l_), m(m_), u(u_) {}

  static constexpr Tfn crisp(double v) { return Tfn(v, v, v); }

  bool valid() const { return l <= m && m <= u; }
  bool is_crisp() const { return l == m && m == u; }

  /// Piecewise-linear membership degree, 1 at the mode, 0 outside [L, U].
  double membership(double x) const;

  bool operator==(const Tfn&) const = default;
};

Tfn operator+(const Tfn& a, const Tfn& b);
Tfn operator*(double k, const Tfn& a);

/// Ordered mapping from linguistic influence terms to fuzzy ratings.
class LinguisticScale {
 public:
  LinguisticScale(std::vector<std::pair<std::string, Tfn>> terms);

  /// The paper's five-term influence scale.
  static const LinguisticScale& default_scale();

  /// Throws ValidationError naming the bad label and the known labels.
  const Tfn& term_to_tfn(const std::string& term) const;

  bool has_term(const std::string& term) const;
  const std::vector<std::pair<std::string, Tfn>>& terms() const {
    return terms_;
  }

 private:
  std::vector<std::pair<std::string, Tfn>> terms_;
};

}  // namespace fdm

#endif  // FDM_TFN_HPP
