#ifndef FDM_IO_HPP
#define FDM_IO_HPP

#include <string>
#include <vector>

#include "fdm/pipeline.hpp"

namespace fdm::io {

enum class SurveyFormat { kCsv, kJson };

/// Survey text -> validated structure. CSV uses one `#expert <k>` block per
/// respondent; JSON uses the schema documented in the README.
ExpertSurvey parse_survey(const std::string& text,
                          SurveyFormat format = SurveyFormat::kCsv);

/// Square numeric CSV with a header row and column of factor ids. The kind
/// controls validation (average/normalized require a zero diagonal).
InfluenceMatrix parse_matrix(const std::string& text,
                             MatrixKind kind = MatrixKind::kAverage);

/// True when the text starts a `#expert` block (survey vs plain matrix).
bool looks_like_survey(const std::string& text);

/// Full-precision matrix CSV; parse_matrix(export_matrix_csv(m)) == m.
std::string export_matrix_csv(const InfluenceMatrix& m);

/// Versioned JSON report (schema_version 1).
std::string export_report_json(const AnalysisBundle& bundle);

/// Sectioned CSV report, one block per table.
std::string export_report_csv(const AnalysisBundle& bundle);

/// Graphviz digraph of the impact-relation map. Cause and effect nodes get
/// distinct fill styles; output is byte-deterministic.
std::string export_dot(const ImpactRelationMap& map,
                       const std::vector<FactorScore>& scores,
                       int rounding_digits = 2);

/// Shortest round-trip decimal form of a double (locale-free).
std::string format_full(double v);

}  // namespace fdm::io

#endif  // FDM_IO_HPP
