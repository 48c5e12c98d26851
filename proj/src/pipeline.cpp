#include "fdm/pipeline.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "fdm/errors.hpp"

namespace fdm {

void AnalysisConfig::validate() const {
  if (threshold && *threshold < 0.0)
    throw ValidationError("threshold must be nonnegative");
  if (crisp_scale_max < 1)
    throw ValidationError("crisp scale max must be at least 1");
  if (rounding_digits < 0 || rounding_digits > 12)
    throw ValidationError("rounding digits must be in [0, 12]");
}

double round_display(double v, int digits) {
  const double scale = std::pow(10.0, digits);
  return std::copysign(std::floor(std::fabs(v) * scale + 0.5) / scale, v);
}

namespace {

// Parses a crisp rating cell; integers only, range [0, max].
int parse_crisp_cell(const std::string& cell, int scale_max, std::size_t k,
                     const std::string& row_id, const std::string& col_id) {
  std::size_t pos = 0;
  int value = 0;
  try {
    value = std::stoi(cell, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != cell.size() || cell.empty())
    throw ValidationError("expert " + std::to_string(k + 1) + " cell (" +
                          row_id + "," + col_id + "): '" + cell +
                          "' is not an integer rating");
  if (value < 0 || value > scale_max)
    throw ValidationError("expert " + std::to_string(k + 1) + " cell (" +
                          row_id + "," + col_id + "): rating " + cell +
                          " outside the 0-" + std::to_string(scale_max) +
                          " scale");
  return value;
}

}  // namespace

void validate_survey(const ExpertSurvey& survey, const AnalysisConfig& config,
                     const LinguisticScale& scale) {
  config.validate();
  const std::size_t n = survey.factors.size();
  if (survey.experts.empty())
    throw ValidationError("survey has no expert responses");
  for (std::size_t k = 0; k < survey.experts.size(); ++k) {
    if (survey.experts[k].size() != n * n)
      throw ValidationError("expert " + std::to_string(k + 1) +
                            " response grid does not match the factor set");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const std::string& cell = survey.cell(k, i, j);
        const std::string& ri = survey.factors.at(i).id;
        const std::string& cj = survey.factors.at(j).id;
        if (survey.kind == Elicitation::kCrisp) {
          const int v = parse_crisp_cell(cell, config.crisp_scale_max, k, ri, cj);
          if (i == j && v != 0)
            throw ValidationError("expert " + std::to_string(k + 1) +
                                  ": diagonal cell (" + ri + "," + ri +
                                  ") must be 0");
        } else {
          if (i == j) {
            if (cell != "no-influence" && cell != "0")
              throw ValidationError("expert " + std::to_string(k + 1) +
                                    ": diagonal cell (" + ri + "," + ri +
                                    ") must be 'no-influence'");
          } else {
            scale.term_to_tfn(cell);  // throws on unknown terms
          }
        }
      }
  }
}

AnalysisBundle run_pipeline(const ExpertSurvey& survey,
                            const AnalysisConfig& config,
                            const LinguisticScale& scale) {
  validate_survey(survey, config, scale);
  const std::size_t n = survey.factors.size();
  const std::size_t h = survey.expert_count();

  Matrix avg(n, n);
  if (survey.kind == Elicitation::kLinguistic) {
    std::vector<FuzzyMatrix> fuzzed;
    fuzzed.reserve(h);
    for (std::size_t k = 0; k < h; ++k) {
      FuzzyMatrix fm(n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (i != j) fm.set(i, j, scale.term_to_tfn(survey.cell(k, i, j)));
      fuzzed.push_back(std::move(fm));
    }
    const FuzzyMatrix mean = fuzzy_mean(fuzzed);
    avg = cfcs_defuzzify(mean, config.cfcs_bounds).crisp;
  } else {
    for (std::size_t k = 0; k < h; ++k)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          avg(i, j) += std::stod(survey.cell(k, i, j));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        avg(i, j) /= static_cast<double>(h);
  }
  InfluenceMatrix average(survey.factors, std::move(avg), MatrixKind::kAverage);
  return run_pipeline(average, config);
}

AnalysisBundle run_pipeline(const InfluenceMatrix& average,
                            const AnalysisConfig& config) {
  config.validate();
  // normalize and total_relation already name their stage in the message
  NormalizeResult norm = normalize(average);
  InfluenceMatrix total = total_relation(norm.normalized);
  std::vector<FactorScore> scores = factor_scores(total, config.epsilon);
  const double p =
      config.threshold ? *config.threshold : default_threshold(total);
  ImpactRelationMap map = threshold_map(total, p, config.allow_self_loops);
  FeedbackLoopSet loops = enumerate_cycles(map, config.cycle_limits);
  std::vector<FactorStructure> stats = factor_stats(map, loops);
  return AnalysisBundle{average,
                        std::move(norm.normalized),
                        norm.scale,
                        std::move(total),
                        std::move(scores),
                        p,
                        std::move(map),
                        std::move(loops),
                        std::move(stats),
                        config};
}

}  // namespace fdm
