#ifndef FDM_PIPELINE_HPP
#define FDM_PIPELINE_HPP

#include <optional>
#include <string>
#include <vector>

#include "fdm/dematel.hpp"
#include "fdm/fuzzy.hpp"
#include "fdm/graph.hpp"
#include "fdm/tfn.hpp"

namespace fdm {

enum class Elicitation { kLinguistic, kCrisp };

/// H per-expert response matrices over one factor set. Cells hold either
/// linguistic term labels or crisp integer ratings, never both.
struct ExpertSurvey {
  FactorSet factors;
  Elicitation kind = Elicitation::kCrisp;
  // experts[k] is a row-major n*n grid of cells
  std::vector<std::vector<std::string>> experts;

  std::size_t expert_count() const { return experts.size(); }
  const std::string& cell(std::size_t expert, std::size_t i,
                          std::size_t j) const {
    return experts[expert][i * factors.size() + j];
  }
};

/// All free parameters of a run. Defaults reproduce the reference analysis.
struct AnalysisConfig {
  std::optional<double> threshold;  // empty = auto (off-diagonal mean of T)
  double epsilon = 1e-9;            // neutral band for r - c
  CfcsBounds cfcs_bounds = CfcsBounds::kGlobal;
  int crisp_scale_max = 4;
  bool allow_self_loops = false;
  CycleLimits cycle_limits = {};
  int rounding_digits = 2;

  void validate() const;
};

/// Everything one analysis produces.
struct AnalysisBundle {
  InfluenceMatrix average;
  InfluenceMatrix normalized;
  double scale = 0.0;  // s
  InfluenceMatrix total;
  std::vector<FactorScore> scores;
  double threshold = 0.0;  // the value actually applied
  ImpactRelationMap map;
  FeedbackLoopSet loops;
  std::vector<FactorStructure> stats;
  AnalysisConfig config;
};

/// Validate a survey against the scale/config; throws ValidationError.
void validate_survey(const ExpertSurvey& survey, const AnalysisConfig& config,
                     const LinguisticScale& scale =
                         LinguisticScale::default_scale());

/// Survey -> (fuzzy aggregation + CFCS | crisp averaging) -> DEMATEL ->
/// thresholded map -> cycles -> stats. Deterministic for fixed inputs.
AnalysisBundle run_pipeline(const ExpertSurvey& survey,
                            const AnalysisConfig& config = {},
                            const LinguisticScale& scale =
                                LinguisticScale::default_scale());

/// Same pipeline starting from an already-averaged matrix.
AnalysisBundle run_pipeline(const InfluenceMatrix& average,
                            const AnalysisConfig& config = {});

/// Half-away-from-zero rounding used for display columns.
double round_display(double v, int digits);

}  // namespace fdm

#endif  // FDM_PIPELINE_HPP
