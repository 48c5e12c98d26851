#include "fdm/tfn.hpp"

#include <sstream>

#include "fdm/errors.hpp"

namespace fdm {

double Tfn::membership(double x) const {
  if (x < l || x > u) return 0.0;
  if (x == m) return 1.0;
  if (x < m) {
    // l < m here, otherwise x == m above
    return (x - l) / (m - l);
  }
  return (u - x) / (u - m);
}

Tfn operator+(const Tfn& a, const Tfn& b) {
  return {a.l + b.l, a.m + b.m, a.u + b.u};
}

Tfn operator*(double k, const Tfn& a) { return {k * a.l, k * a.m, k * a.u}; }

LinguisticScale::LinguisticScale(
    std::vector<std::pair<std::string, Tfn>> terms)
    : terms_(std::move(terms)) {
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!terms_[i].second.valid())
      throw ValidationError("scale term '" + terms_[i].first +
                            "' has an invalid fuzzy number");
    for (std::size_t j = i + 1; j < terms_.size(); ++j)
      if (terms_[i].first == terms_[j].first)
        throw ValidationError("duplicate scale term '" + terms_[i].first +
                              "'");
  }
}

const LinguisticScale& LinguisticScale::default_scale() {
  static const LinguisticScale scale({
      {"no-influence", {0.0, 0.0, 0.25}},
      {"very-low", {0.0, 0.25, 0.5}},
      {"low", {0.25, 0.5, 0.75}},
      {"high", {0.5, 0.75, 1.0}},
      {"very-high", {0.75, 1.0, 1.0}},
  });
  return scale;
}

const Tfn& LinguisticScale::term_to_tfn(const std::string& term) const {
  for (const auto& [label, tfn] : terms_)
    if (label == term) return tfn;
  std::ostringstream msg;
  msg << "unknown linguistic term '" << term << "'; known terms:";
  for (const auto& [label, tfn] : terms_) msg << " '" << label << "'";
  throw ValidationError(msg.str());
}

bool LinguisticScale::has_term(const std::string& term) const {
  for (const auto& [label, tfn] : terms_)
    if (label == term) return true;
  return false;
}

}  // namespace fdm
