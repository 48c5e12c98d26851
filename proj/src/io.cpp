#include "fdm/io.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>
#include <system_error>

#include "fdm/errors.hpp"
#include "fdm/version.hpp"
#include "json.hpp"

namespace fdm::io {

namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char ch : text) {
    if (ch == '\n') {
      if (!cur.empty() && cur.back() == '\r') cur.pop_back();
      lines.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) {
    if (cur.back() == '\r') cur.pop_back();
    lines.push_back(cur);
  }
  return lines;
}

std::vector<std::string> split_cells(const std::string& line) {
  std::vector<std::string> cells;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      cells.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  cells.push_back(cur);
  for (auto& c : cells) {
    while (!c.empty() && (c.front() == ' ' || c.front() == '\t'))
      c.erase(c.begin());
    while (!c.empty() && (c.back() == ' ' || c.back() == '\t')) c.pop_back();
  }
  return cells;
}

double parse_number(const std::string& cell, int row, int col) {
  const char* begin = cell.data();
  const char* end = begin + cell.size();
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end || cell.empty())
    throw ParseError("'" + cell + "' is not a number", row, col);
  return value;
}

bool is_number(const std::string& cell) {
  double value = 0.0;
  auto [ptr, ec] =
      std::from_chars(cell.data(), cell.data() + cell.size(), value);
  return ec == std::errc{} && ptr == cell.data() + cell.size() &&
         !cell.empty();
}

// Reads one "header + n body rows" matrix block. `line0` is the 0-based
// index of the header line within `lines`. Returns the factor ids and the
// raw cell grid; numeric interpretation is up to the caller.
struct RawBlock {
  std::vector<std::string> ids;
  std::vector<std::string> cells;  // row-major n*n
  std::size_t next_line = 0;       // first line after the block
};

RawBlock read_block(const std::vector<std::string>& lines, std::size_t line0) {
  if (line0 >= lines.size())
    throw ParseError("missing matrix header line", (int)line0 + 1, 1);
  std::vector<std::string> header = split_cells(lines[line0]);
  if (header.size() < 3)
    throw ParseError("matrix header needs at least 2 factor ids",
                     (int)line0 + 1, 1);
  RawBlock blk;
  blk.ids.assign(header.begin() + 1, header.end());
  const std::size_t n = blk.ids.size();
  for (std::size_t i = 0; i < n; ++i)
    if (blk.ids[i].empty())
      throw ParseError("empty factor id in header", (int)line0 + 1,
                       (int)i + 2);
  blk.cells.resize(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    const std::size_t li = line0 + 1 + r;
    if (li >= lines.size())
      throw ParseError("matrix is not square: expected " + std::to_string(n) +
                           " body rows",
                       (int)lines.size() + 1, 1);
    std::vector<std::string> row = split_cells(lines[li]);
    if (row.size() < n + 1)
      throw ParseError("matrix is not square: row has " +
                           std::to_string(row.size() - 1) + " cells, expected " +
                           std::to_string(n),
                       (int)li + 1, (int)row.size());
    if (row[0] != blk.ids[r])
      throw ParseError("row id '" + row[0] + "' does not match header id '" +
                           blk.ids[r] + "'",
                       (int)li + 1, 1);
    for (std::size_t c = 0; c < n; ++c) blk.cells[r * n + c] = row[c + 1];
  }
  blk.next_line = line0 + 1 + n;
  return blk;
}

FactorSet factor_set_from_ids(const std::vector<std::string>& ids) {
  std::vector<Factor> fs;
  fs.reserve(ids.size());
  for (const auto& id : ids) fs.push_back({id, id});
  return FactorSet(std::move(fs));
}

ExpertSurvey parse_survey_csv(const std::string& text) {
  const std::vector<std::string> lines = split_lines(text);
  ExpertSurvey survey{FactorSet::numbered(2), Elicitation::kCrisp, {}};
  std::vector<std::string> ids;
  std::size_t li = 0;
  bool first = true;
  while (li < lines.size()) {
    if (lines[li].empty()) {
      ++li;
      continue;
    }
    if (lines[li].rfind("#expert", 0) != 0)
      throw ParseError("expected '#expert <k>' block header, got '" +
                           lines[li] + "'",
                       (int)li + 1, 1);
    RawBlock blk = read_block(lines, li + 1);
    if (first) {
      ids = blk.ids;
      survey.factors = factor_set_from_ids(ids);
      first = false;
    } else if (blk.ids != ids) {
      throw ParseError("expert block factor ids differ from the first block",
                       (int)li + 1, 1);
    }
    survey.experts.push_back(std::move(blk.cells));
    li = blk.next_line;
  }
  if (survey.experts.empty())
    throw ParseError("survey contains no '#expert' blocks");
  // linguistic iff any off-diagonal cell is non-numeric
  const std::size_t n = survey.factors.size();
  survey.kind = Elicitation::kCrisp;
  for (const auto& grid : survey.experts)
    for (std::size_t i = 0; i < n && survey.kind == Elicitation::kCrisp; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j && !is_number(grid[i * n + j])) {
          survey.kind = Elicitation::kLinguistic;
          break;
        }
  return survey;
}

ExpertSurvey parse_survey_json(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("factors") || !doc.contains("experts"))
    throw ParseError("survey JSON needs 'factors' and 'experts' fields");
  std::vector<Factor> fs;
  for (const auto& f : doc["factors"]) {
    if (f.is_string())
      fs.push_back({f.get<std::string>(), f.get<std::string>()});
    else
      fs.push_back({f.at("id").get<std::string>(),
                    f.value("name", f.at("id").get<std::string>())});
  }
  ExpertSurvey survey{FactorSet(std::move(fs)), Elicitation::kCrisp, {}};
  const std::size_t n = survey.factors.size();
  for (const auto& grid : doc["experts"]) {
    if (!grid.is_array() || grid.size() != n)
      throw ParseError("expert grid does not have " + std::to_string(n) +
                       " rows");
    std::vector<std::string> cells;
    cells.reserve(n * n);
    for (const auto& row : grid) {
      if (!row.is_array() || row.size() != n)
        throw ParseError("expert row does not have " + std::to_string(n) +
                         " cells");
      for (const auto& cell : row) {
        if (cell.is_string())
          cells.push_back(cell.get<std::string>());
        else if (cell.is_number_integer())
          cells.push_back(std::to_string(cell.get<long long>()));
        else
          throw ParseError("survey cells must be strings or integers");
      }
    }
    survey.experts.push_back(std::move(cells));
  }
  if (survey.experts.empty()) throw ParseError("survey has no experts");
  const std::string kind = doc.value("kind", "");
  if (kind == "linguistic")
    survey.kind = Elicitation::kLinguistic;
  else if (kind == "crisp" || kind.empty())
    survey.kind = Elicitation::kCrisp;
  else
    throw ParseError("unknown elicitation kind '" + kind + "'");
  return survey;
}

ordered_json matrix_to_json(const InfluenceMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(m.at(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string format_rounded(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, round_display(v, digits));
  return buf;
}

}  // namespace

ExpertSurvey parse_survey(const std::string& text, SurveyFormat format) {
  return format == SurveyFormat::kCsv ? parse_survey_csv(text)
                                      : parse_survey_json(text);
}

InfluenceMatrix parse_matrix(const std::string& text, MatrixKind kind) {
  const std::vector<std::string> lines = split_lines(text);
  std::size_t li = 0;
  while (li < lines.size() && lines[li].empty()) ++li;
  RawBlock blk = read_block(lines, li);
  const std::size_t n = blk.ids.size();
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const int row = (int)(li + 2 + i), col = (int)j + 2;
      const double v = parse_number(blk.cells[i * n + j], row, col);
      if (v < 0.0)
        throw ParseError("negative entry " + blk.cells[i * n + j], row, col);
      m(i, j) = v;
    }
  return InfluenceMatrix(factor_set_from_ids(blk.ids), std::move(m), kind);
}

bool looks_like_survey(const std::string& text) {
  for (const auto& line : split_lines(text)) {
    if (line.empty()) continue;
    return line.rfind("#expert", 0) == 0;
  }
  return false;
}

std::string format_full(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string export_matrix_csv(const InfluenceMatrix& m) {
  std::ostringstream out;
  for (std::size_t j = 0; j < m.size(); ++j)
    out << ',' << m.factor_set().at(j).id;
  out << '\n';
  for (std::size_t i = 0; i < m.size(); ++i) {
    out << m.factor_set().at(i).id;
    for (std::size_t j = 0; j < m.size(); ++j)
      out << ',' << format_full(m.at(i, j));
    out << '\n';
  }
  return out.str();
}

std::string export_report_json(const AnalysisBundle& bundle) {
  const int digits = bundle.config.rounding_digits;
  ordered_json doc;
  doc["schema_version"] = 1;
  doc["toolkit_version"] = kVersion;

  ordered_json config;
  config["threshold"] = bundle.config.threshold
                            ? ordered_json(*bundle.config.threshold)
                            : ordered_json("auto");
  config["epsilon"] = bundle.config.epsilon;
  config["cfcs_bounds"] = bundle.config.cfcs_bounds == CfcsBounds::kGlobal
                              ? "global"
                              : "per-column";
  config["crisp_scale_max"] = bundle.config.crisp_scale_max;
  config["allow_self_loops"] = bundle.config.allow_self_loops;
  config["max_cycle_len"] = bundle.config.cycle_limits.max_length;
  config["max_cycles"] = bundle.config.cycle_limits.max_cycles;
  config["rounding_digits"] = digits;
  doc["config"] = std::move(config);

  ordered_json factors = ordered_json::array();
  for (const auto& f : bundle.average.factor_set().factors())
    factors.push_back({{"id", f.id}, {"name", f.name}});
  doc["factors"] = std::move(factors);

  doc["s"] = bundle.scale;
  doc["average"] = matrix_to_json(bundle.average);
  doc["normalized"] = matrix_to_json(bundle.normalized);
  doc["total"] = matrix_to_json(bundle.total);

  ordered_json scores = ordered_json::array();
  for (const auto& sc : bundle.scores) {
    ordered_json row;
    row["factor"] = sc.factor;
    row["r"] = sc.dispatched;
    row["c"] = sc.received;
    row["prominence"] = sc.prominence;
    row["relation"] = sc.relation;
    row["class"] = to_string(sc.cls);
    row["r_display"] = round_display(sc.dispatched, digits);
    row["c_display"] = round_display(sc.received, digits);
    row["prominence_display"] = round_display(sc.prominence, digits);
    row["relation_display"] = round_display(sc.relation, digits);
    scores.push_back(std::move(row));
  }
  doc["scores"] = std::move(scores);

  doc["threshold"] = bundle.threshold;
  ordered_json edges = ordered_json::array();
  for (const Edge& e : bundle.map.edges)
    edges.push_back({{"source", bundle.map.factors.at(e.source).id},
                     {"target", bundle.map.factors.at(e.target).id},
                     {"weight", e.weight}});
  doc["edges"] = std::move(edges);

  ordered_json cycles = ordered_json::array();
  for (const auto& cycle : bundle.loops.cycles) {
    ordered_json seq = ordered_json::array();
    for (std::size_t v : cycle) seq.push_back(bundle.map.factors.at(v).id);
    cycles.push_back(std::move(seq));
  }
  doc["cycles"] = std::move(cycles);
  doc["cycles_truncated"] = bundle.loops.truncated;

  ordered_json stats = ordered_json::array();
  for (const auto& st : bundle.stats)
    stats.push_back({{"factor", st.factor},
                     {"relations", st.relations},
                     {"loops", st.loops},
                     {"rank", st.rank}});
  doc["factor_stats"] = std::move(stats);

  return doc.dump(2) + "\n";
}

std::string export_report_csv(const AnalysisBundle& bundle) {
  const int digits = bundle.config.rounding_digits;
  std::ostringstream out;
  out << "# meta\nschema_version,1\ntoolkit_version," << kVersion << "\ns,"
      << format_full(bundle.scale) << "\nthreshold,"
      << format_full(bundle.threshold) << "\n\n";

  const auto emit_matrix = [&](const char* title, const InfluenceMatrix& m) {
    out << "# " << title << '\n' << export_matrix_csv(m) << '\n';
  };
  emit_matrix("average", bundle.average);
  emit_matrix("normalized", bundle.normalized);
  emit_matrix("total", bundle.total);

  out << "# scores\nfactor,r,c,prominence,relation,class,r_display,c_display,"
         "prominence_display,relation_display\n";
  for (const auto& sc : bundle.scores)
    out << sc.factor << ',' << format_full(sc.dispatched) << ','
        << format_full(sc.received) << ',' << format_full(sc.prominence) << ','
        << format_full(sc.relation) << ',' << to_string(sc.cls) << ','
        << format_rounded(sc.dispatched, digits) << ','
        << format_rounded(sc.received, digits) << ','
        << format_rounded(sc.prominence, digits) << ','
        << format_rounded(sc.relation, digits) << '\n';
  out << '\n';

  out << "# edges\nsource,target,weight\n";
  for (const Edge& e : bundle.map.edges)
    out << bundle.map.factors.at(e.source).id << ','
        << bundle.map.factors.at(e.target).id << ',' << format_full(e.weight)
        << '\n';
  out << '\n';

  out << "# cycles\n";
  for (const auto& cycle : bundle.loops.cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k)
      out << (k ? "," : "") << bundle.map.factors.at(cycle[k]).id;
    out << '\n';
  }
  out << '\n';

  out << "# factor_stats\nfactor,relations,loops,rank\n";
  for (const auto& st : bundle.stats)
    out << st.factor << ',' << st.relations << ',' << st.loops << ','
        << st.rank << '\n';
  return out.str();
}

std::string export_dot(const ImpactRelationMap& map,
                       const std::vector<FactorScore>& scores,
                       int rounding_digits) {
  std::ostringstream out;
  out << "digraph irm {\n  rankdir=LR;\n  node [shape=ellipse];\n";
  for (std::size_t i = 0; i < map.factors.size(); ++i) {
    const Factor& f = map.factors.at(i);
    const FactorScore* sc = nullptr;
    for (const auto& s : scores)
      if (s.factor == f.id) sc = &s;
    out << "  \"" << f.id << "\" [label=\"" << f.id;
    if (sc)
      out << "\\n(r+c=" << format_rounded(sc->prominence, rounding_digits)
          << ", r-c=" << format_rounded(sc->relation, rounding_digits) << ")";
    out << "\"";
    if (sc && sc->cls == FactorClass::kCause)
      out << ", style=filled, fillcolor=lightblue";
    else if (sc && sc->cls == FactorClass::kEffect)
      out << ", style=filled, fillcolor=lightsalmon";
    out << "];\n";
  }
  for (const Edge& e : map.edges)
    out << "  \"" << map.factors.at(e.source).id << "\" -> \""
        << map.factors.at(e.target).id << "\" [label=\""
        << format_rounded(e.weight, rounding_digits) << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace fdm::io
