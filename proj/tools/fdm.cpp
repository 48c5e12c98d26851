// Batch front end for the fuzzy-DEMATEL analysis pipeline.
//
// Exit codes: 0 success, 2 domain/validation failure, 3 I/O failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "fdm/errors.hpp"
#include "fdm/io.hpp"
#include "fdm/pipeline.hpp"
#include "fdm/version.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kDomainError = 2;
constexpr int kIoError = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw fdm::IoError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw fdm::IoError("read failed for '" + path + "'");
  return buf.str();
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw fdm::IoError("cannot open '" + path + "' for writing");
  out << bytes;
  if (!out) throw fdm::IoError("write failed for '" + path + "'");
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

struct Options {
  std::string input;
  std::string threshold = "auto";
  double epsilon = 1e-9;
  int scale_max = 4;
  std::string cfcs_bounds = "global";
  bool allow_self_loops = false;
  std::size_t max_cycle_len = 0;
  std::size_t max_cycles = 10000;
  std::string out;
  std::string format = "json";
};

fdm::AnalysisConfig to_config(const Options& opt) {
  fdm::AnalysisConfig cfg;
  if (opt.threshold != "auto") {
    try {
      std::size_t pos = 0;
      cfg.threshold = std::stod(opt.threshold, &pos);
      if (pos != opt.threshold.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw fdm::ValidationError("--threshold must be a number or 'auto'");
    }
  }
  cfg.epsilon = opt.epsilon;
  cfg.crisp_scale_max = opt.scale_max;
  if (opt.cfcs_bounds == "per-column")
    cfg.cfcs_bounds = fdm::CfcsBounds::kPerColumn;
  else if (opt.cfcs_bounds != "global")
    throw fdm::ValidationError("--cfcs-bounds must be 'global' or 'per-column'");
  cfg.allow_self_loops = opt.allow_self_loops;
  cfg.cycle_limits = {opt.max_cycle_len, opt.max_cycles};
  cfg.validate();
  return cfg;
}

// Parses the input file as a survey (CSV `#expert` blocks or JSON) or a
// precomputed average matrix, and runs the pipeline either way.
fdm::AnalysisBundle analyze_input(const Options& opt) {
  const std::string text = read_file(opt.input);
  const fdm::AnalysisConfig cfg = to_config(opt);
  if (ends_with(opt.input, ".json"))
    return fdm::run_pipeline(
        fdm::io::parse_survey(text, fdm::io::SurveyFormat::kJson), cfg);
  if (fdm::io::looks_like_survey(text))
    return fdm::run_pipeline(fdm::io::parse_survey(text), cfg);
  return fdm::run_pipeline(fdm::io::parse_matrix(text), cfg);
}

void print_scores(const fdm::AnalysisBundle& bundle) {
  const int d = bundle.config.rounding_digits;
  std::printf("s = %.*f\n", d, fdm::round_display(bundle.scale, d));
  std::printf("threshold = %.*f\n", d,
              fdm::round_display(bundle.threshold, d));
  std::printf("%-8s %8s %8s %8s %8s  %s\n", "factor", "r", "c", "r+c", "r-c",
              "class");
  for (const auto& sc : bundle.scores)
    std::printf("%-8s %8.*f %8.*f %8.*f %8.*f  %s\n", sc.factor.c_str(), d,
                fdm::round_display(sc.dispatched, d), d,
                fdm::round_display(sc.received, d), d,
                fdm::round_display(sc.prominence, d), d,
                fdm::round_display(sc.relation, d), fdm::to_string(sc.cls));
}

int cmd_validate(const Options& opt) {
  const std::string text = read_file(opt.input);
  if (ends_with(opt.input, ".json") || fdm::io::looks_like_survey(text)) {
    const auto fmt = ends_with(opt.input, ".json")
                         ? fdm::io::SurveyFormat::kJson
                         : fdm::io::SurveyFormat::kCsv;
    fdm::ExpertSurvey survey = fdm::io::parse_survey(text, fmt);
    fdm::validate_survey(survey, to_config(opt));
    std::printf("%zu factors, %zu experts, %s survey\n",
                survey.factors.size(), survey.expert_count(),
                survey.kind == fdm::Elicitation::kCrisp ? "crisp"
                                                        : "linguistic");
  } else {
    fdm::InfluenceMatrix m = fdm::io::parse_matrix(text);
    std::printf("%zu factors, average matrix\n", m.size());
  }
  return kOk;
}

int cmd_analyze(const Options& opt) {
  fdm::AnalysisBundle bundle = analyze_input(opt);
  print_scores(bundle);
  if (!opt.out.empty()) {
    if (opt.format == "csv")
      write_file(opt.out, fdm::io::export_report_csv(bundle));
    else
      write_file(opt.out, fdm::io::export_report_json(bundle));
  }
  return kOk;
}

int cmd_loops(const Options& opt) {
  fdm::AnalysisBundle bundle = analyze_input(opt);
  std::printf("threshold = %.*f\n", bundle.config.rounding_digits,
              fdm::round_display(bundle.threshold,
                                 bundle.config.rounding_digits));
  std::printf("%zu cycles%s\n", bundle.loops.cycles.size(),
              bundle.loops.truncated ? " (truncated by caps)" : "");
  for (const auto& cycle : bundle.loops.cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k)
      std::printf("%s%s", k ? " -> " : "  ",
                  bundle.map.factors.at(cycle[k]).id.c_str());
    std::printf("\n");
  }
  std::printf("%-8s %10s %6s %5s\n", "factor", "relations", "loops", "rank");
  for (const auto& st : bundle.stats)
    std::printf("%-8s %10zu %6zu %5zu\n", st.factor.c_str(), st.relations,
                st.loops, st.rank);
  if (!opt.out.empty())
    write_file(opt.out, fdm::io::export_report_json(bundle));
  return kOk;
}

int cmd_export_dot(const Options& opt) {
  fdm::AnalysisBundle bundle = analyze_input(opt);
  const std::string dot = fdm::io::export_dot(
      bundle.map, bundle.scores, bundle.config.rounding_digits);
  if (opt.out.empty())
    std::fputs(dot.c_str(), stdout);
  else
    write_file(opt.out, dot);
  return kOk;
}

void add_common_flags(CLI::App* cmd, Options& opt, bool with_output) {
  cmd->add_option("input", opt.input, "survey or matrix file")->required();
  cmd->add_option("--threshold", opt.threshold,
                  "impact-relation threshold p, or 'auto' for the "
                  "off-diagonal mean of T");
  cmd->add_option("--epsilon", opt.epsilon,
                  "neutral band for the cause/effect split");
  cmd->add_option("--scale-max", opt.scale_max,
                  "maximum crisp rating (integer scale 0..max)");
  cmd->add_option("--cfcs-bounds", opt.cfcs_bounds,
                  "CFCS bound scope: global or per-column");
  cmd->add_flag("--allow-self-loops", opt.allow_self_loops,
                "keep diagonal entries above the threshold as edges");
  cmd->add_option("--max-cycle-len", opt.max_cycle_len,
                  "cap on enumerated cycle length (0 = no cap)");
  cmd->add_option("--max-cycles", opt.max_cycles,
                  "cap on the number of enumerated cycles");
  if (with_output) {
    cmd->add_option("--out", opt.out, "report output path");
    cmd->add_option("--format", opt.format, "report format: json or csv");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fuzzy-DEMATEL analysis toolkit"};
  app.set_version_flag("--version", fdm::kVersion);
  app.require_subcommand(1);

  Options opt;
  CLI::App* validate =
      app.add_subcommand("validate", "check a survey or matrix file");
  add_common_flags(validate, opt, false);
  CLI::App* analyze = app.add_subcommand(
      "analyze", "run the full pipeline and print the score table");
  add_common_flags(analyze, opt, true);
  CLI::App* loops = app.add_subcommand(
      "loops", "enumerate feedback loops and per-factor structure");
  add_common_flags(loops, opt, true);
  CLI::App* dot = app.add_subcommand(
      "export-dot", "emit the impact-relation map as a Graphviz digraph");
  add_common_flags(dot, opt, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    app.exit(e);
    return kDomainError;
  }

  try {
    if (*validate) return cmd_validate(opt);
    if (*analyze) return cmd_analyze(opt);
    if (*loops) return cmd_loops(opt);
    if (*dot) return cmd_export_dot(opt);
  } catch (const fdm::IoError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kIoError;
  } catch (const fdm::ValidationError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kDomainError;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kDomainError;
  }
  return kOk;
}
