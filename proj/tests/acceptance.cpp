// End-to-end acceptance suite. Each criterion prints one pass/fail line.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "fdm/dematel.hpp"
#include "fdm/fuzzy.hpp"
#include "fdm/graph.hpp"
#include "fdm/io.hpp"
#include "fdm/pipeline.hpp"
#include "helpers.hpp"

using namespace fdm;
namespace fs = std::filesystem;

namespace {

struct Criterion {
  int number;
  const char* title;
  bool passed = true;

  ~Criterion() {
    std::printf("[%s] criterion %d: %s\n", passed ? "PASS" : "FAIL", number,
                title);
  }
  void require(bool ok) {
    passed = passed && ok;
    CHECK(ok);
  }
};

InfluenceMatrix fixture_matrix(const std::string& name,
                               MatrixKind kind = MatrixKind::kAverage) {
  return io::parse_matrix(testutil::load_file(testutil::fixture_path(name)),
                          kind);
}

double elapsed_s(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

Tfn random_tfn(std::mt19937& rng) {
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  double a = dist(rng), b = dist(rng), c = dist(rng);
  if (a > b) std::swap(a, b);
  if (b > c) std::swap(b, c);
  if (a > b) std::swap(a, b);
  return {a, b, c};
}

}  // namespace

TEST_CASE("criterion 1: normalization reproduces s and the normalized matrix") {
  Criterion c{1, "s = 6.56 and D matches the published table within 0.01"};
  const auto t0 = std::chrono::steady_clock::now();
  const InfluenceMatrix a = fixture_matrix("table2.csv");
  const auto [d, s] = normalize(a);
  c.require(std::fabs(s - 6.56) <= 0.005);
  const InfluenceMatrix d_published = fixture_matrix("table3.csv");
  for (std::size_t i = 0; i < 10; ++i)
    for (std::size_t j = 0; j < 10; ++j)
      c.require(std::fabs(d.at(i, j) - d_published.at(i, j)) <= 0.01);
  c.require(elapsed_s(t0) < 1.0);
}

TEST_CASE("criterion 2: total-relation matrix matches the published table") {
  Criterion c{2, "T matches all 100 published entries within 0.02"};
  const auto t0 = std::chrono::steady_clock::now();
  const auto [d, s] = normalize(fixture_matrix("table2.csv"));
  const InfluenceMatrix t = total_relation(d);
  const InfluenceMatrix t_published = fixture_matrix("table4.csv", MatrixKind::kTotal);
  for (std::size_t i = 0; i < 10; ++i)
    for (std::size_t j = 0; j < 10; ++j)
      c.require(std::fabs(t.at(i, j) - t_published.at(i, j)) <= 0.02);
  c.require(elapsed_s(t0) < 1.0);
}

TEST_CASE("criterion 3: factor scores and the cause/effect partition") {
  Criterion c{3, "scores match the published table within 0.03 and the "
                 "cause set is {F2,F4,F5,F7,F8}"};
  // published score values trace to the published T, so score them from the
  // table-4 fixture; the partition must also hold end to end from table 2
  const InfluenceMatrix t = io::parse_matrix(
      testutil::load_file(testutil::fixture_path("table4.csv")),
      MatrixKind::kTotal);
  const auto scores = factor_scores(t);

  // published reference rows (factor, r, c, r+c, r-c)
  struct Row {
    const char* id;
    double r, cc, prom, rel;
  };
  const Row published[] = {
      {"F1", 6.28, 7.55, 13.83, -1.27}, {"F2", 6.85, 6.63, 13.48, 0.22},
      {"F3", 6.87, 7.05, 13.92, -0.18}, {"F4", 7.83, 7.04, 14.87, 0.79},
      {"F5", 7.57, 7.49, 15.06, 0.08},  {"F6", 6.92, 7.42, 14.34, -0.51},
      {"F7", 7.11, 5.83, 12.95, 1.28},  {"F8", 6.61, 6.48, 13.08, 0.13},
      {"F9", 5.87, 6.32, 12.19, -0.46}, {"F10", 7.24, 7.33, 14.57, -0.09}};
  for (std::size_t i = 0; i < 10; ++i) {
    c.require(scores[i].factor == published[i].id);
    c.require(std::fabs(scores[i].dispatched - published[i].r) <= 0.03);
    c.require(std::fabs(scores[i].received - published[i].cc) <= 0.03);
    c.require(std::fabs(scores[i].prominence - published[i].prom) <= 0.03);
    c.require(std::fabs(scores[i].relation - published[i].rel) <= 0.03);
  }
  const std::set<std::string> expected_causes = {"F2", "F4", "F5", "F7", "F8"};
  const auto check_partition = [&](const std::vector<FactorScore>& sc) {
    for (const auto& s : sc) {
      const bool is_cause = expected_causes.count(s.factor) > 0;
      c.require(s.cls ==
                (is_cause ? FactorClass::kCause : FactorClass::kEffect));
    }
  };
  check_partition(scores);
  check_partition(run_pipeline(fixture_matrix("table2.csv")).scores);
}

TEST_CASE("criterion 4: internal consistency of the published tables") {
  Criterion c{4, "published F1 row reproduces r = 6.28 and sum r equals "
                 "sum c within 0.05"};
  const InfluenceMatrix t4 = fixture_matrix("table4.csv", MatrixKind::kTotal);
  double f1_row = 0.0;
  for (std::size_t j = 0; j < 10; ++j) f1_row += t4.at(0, j);
  c.require(std::fabs(f1_row - 6.28) <= 0.01);
  const double published_r[] = {6.28, 6.85, 6.87, 7.83, 7.57,
                                6.92, 7.11, 6.61, 5.87, 7.24};
  const double published_c[] = {7.55, 6.63, 7.05, 7.04, 7.49,
                                7.42, 5.83, 6.48, 6.32, 7.33};
  double sum_r = 0.0, sum_c = 0.0;
  for (int i = 0; i < 10; ++i) {
    sum_r += published_r[i];
    sum_c += published_c[i];
  }
  c.require(std::fabs(sum_r - sum_c) <= 0.05);
}

TEST_CASE("criterion 5: CFCS property suite") {
  Criterion c{5, "crisp identity, range containment, and the two "
                 "hand-derived values"};
  std::mt19937 rng(501);
  std::uniform_int_distribution<std::size_t> size(2, 6);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = size(rng);
    FuzzyMatrix crisp(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) crisp.set(i, j, Tfn::crisp(unit(rng)));
    const CfcsResult res = cfcs_defuzzify(crisp);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j)
          c.require(std::fabs(res.crisp(i, j) - crisp.at(i, j).m) <= 1e-9);
  }
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = size(rng);
    FuzzyMatrix fm(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) fm.set(i, j, random_tfn(rng));
    const CfcsResult res = cfcs_defuzzify(fm);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        const CfcsTrace& t = res.trace(i, j);
        for (double v : {t.xl, t.xm, t.xr, t.xls, t.xrs, t.x})
          c.require(v >= -1e-12 && v <= 1.0 + 1e-12);
        c.require(res.crisp(i, j) >= res.min_l - 1e-12 &&
                  res.crisp(i, j) <= res.max_r + 1e-12);
      }
  }
  FuzzyMatrix fm(2);
  fm.set(0, 1, {0.25, 0.5, 0.75});
  fm.set(1, 0, {0.0, 0.5, 1.0});
  c.require(std::fabs(cfcs_defuzzify(fm).crisp(0, 1) - 0.5) <= 1e-9);
  FuzzyMatrix fm2(2);
  fm2.set(0, 1, {0.0, 0.0, 0.25});
  fm2.set(1, 0, {0.0, 0.5, 1.0});
  c.require(std::fabs(cfcs_defuzzify(fm2).crisp(0, 1) - 0.04 / 1.2) <= 1e-9);
}

TEST_CASE("criterion 6: linear solve matches the truncated series oracle") {
  Criterion c{6, "solver T equals the 50-term series within 1e-6 on 100 "
                 "random matrices"};
  std::mt19937 rng(601);
  std::uniform_int_distribution<std::size_t> size(2, 6);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  // row sums are kept at or below 0.75 so the 50-term truncation error
  // (at most 0.75^51 / 0.25 = 1.7e-7) stays inside the 1e-6 tolerance
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = size(rng);
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      double row = 0.0;
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) row += (m(i, j) = unit(rng));
      if (row > 0.0) {
        const double f = 0.75 * unit(rng) / row;
        for (std::size_t j = 0; j < n; ++j) m(i, j) *= f;
      }
    }
    const InfluenceMatrix d(FactorSet::numbered(n), m,
                            MatrixKind::kNormalized);
    const InfluenceMatrix t = total_relation(d);
    const Matrix oracle = testutil::series_total(d.entries(), 50);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        c.require(std::fabs(t.at(i, j) - oracle(i, j)) <= 1e-6);
  }
}

TEST_CASE("criterion 7: cycle enumeration equals the brute-force oracle") {
  Criterion c{7, "exact set equality on 200 random digraphs and 5 cycles "
                 "on the complete 3-vertex digraph"};
  std::mt19937 rng(701);
  std::uniform_int_distribution<std::size_t> size(2, 6);
  std::bernoulli_distribution coin(0.5);
  for (int k = 0; k < 200; ++k) {
    const std::size_t n = size(rng);
    std::set<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j && coin(rng)) edges.insert({i, j});
    ImpactRelationMap map{FactorSet::numbered(n), {}, 0.0, false};
    for (auto [s, t] : edges) map.edges.push_back({s, t, 1.0});
    const FeedbackLoopSet loops = enumerate_cycles(map);
    c.require(!loops.truncated);
    c.require(loops.cycles == testutil::brute_force_cycles(n, edges));
  }
  ImpactRelationMap k3{FactorSet::numbered(3), {}, 0.0, false};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (i != j) k3.edges.push_back({i, j, 1.0});
  c.require(enumerate_cycles(k3).cycles.size() == 5);
}

TEST_CASE("criterion 8: loop reporting is verified by oracle, not by the "
          "paper's unpublished diagram") {
  // The source causal diagram and its threshold are not published, so the
  // paper's 20-loop count and per-factor loop table are documented as
  // non-reproducible. The loops path is instead pinned to the derived
  // 0.80-threshold fixture.
  Criterion c{8, "0.80-threshold map has the 9 derived edges and exactly "
                 "the cycle F5 -> F10 -> F5"};
  const InfluenceMatrix t = io::parse_matrix(
      testutil::load_file(testutil::fixture_path("table4.csv")),
      MatrixKind::kTotal);
  const ImpactRelationMap map = threshold_map(t, 0.80);
  c.require(map.edges.size() == 9);
  const FeedbackLoopSet loops = enumerate_cycles(map);
  c.require(loops.cycles.size() == 1);
  if (loops.cycles.size() == 1) {
    c.require(map.factors.at(loops.cycles[0][0]).id == "F5");
    c.require(map.factors.at(loops.cycles[0][1]).id == "F10");
  }
}

TEST_CASE("criterion 9: end-to-end runs are byte-deterministic") {
  Criterion c{9, "repeated analyze and export-dot runs produce identical "
                 "bytes"};
  const std::string input = testutil::fixture_path("table2.csv");
  const fs::path dir = fs::temp_directory_path();
  const auto report = [&](const std::string& name) {
    const fs::path out = dir / name;
    const auto res = testutil::run_cli("analyze " + input +
                                       " --threshold 0.80 --out " +
                                       out.string());
    c.require(res.exit_code == 0);
    return testutil::load_file(out.string());
  };
  c.require(report("fdm_acc_a.json") == report("fdm_acc_b.json"));
  const auto dot = [&](const std::string& name) {
    const fs::path out = dir / name;
    const auto res = testutil::run_cli("export-dot " + input +
                                       " --threshold 0.80 --out " +
                                       out.string());
    c.require(res.exit_code == 0);
    return testutil::load_file(out.string());
  };
  c.require(dot("fdm_acc_a.dot") == dot("fdm_acc_b.dot"));
  const auto loops_run = [&] {
    return testutil::run_cli("loops " + input + " --threshold 0.80");
  };
  const auto la = loops_run();
  const auto lb = loops_run();
  c.require(la.exit_code == 0 && la.output == lb.output);
}

TEST_CASE("criterion 10: CLI exit-status contract and runtime") {
  Criterion c{10, "exit statuses 0/2/3 hold per command and analyze "
                  "finishes under 5 s"};
  const std::string input = testutil::fixture_path("table2.csv");
  const fs::path bad = fs::temp_directory_path() / "fdm_acc_bad.csv";
  std::ofstream(bad) << ",F1,F2\nF1,1,1\nF2,1,0\n";
  const fs::path zero = fs::temp_directory_path() / "fdm_acc_zero.csv";
  std::ofstream(zero) << ",F1,F2\nF1,0,0\nF2,0,0\n";

  c.require(testutil::run_cli("validate " + input).exit_code == 0);
  c.require(testutil::run_cli("validate " + bad.string() + " 2>/dev/null")
                .exit_code == 2);
  c.require(testutil::run_cli("validate /missing 2>/dev/null").exit_code == 3);

  const auto t0 = std::chrono::steady_clock::now();
  c.require(testutil::run_cli("analyze " + input).exit_code == 0);
  c.require(elapsed_s(t0) < 5.0);
  c.require(testutil::run_cli("analyze " + zero.string() + " 2>/dev/null")
                .exit_code == 2);
  c.require(testutil::run_cli("analyze /missing 2>/dev/null").exit_code == 3);

  c.require(testutil::run_cli("loops " + input).exit_code == 0);
  c.require(testutil::run_cli("loops " + bad.string() + " 2>/dev/null")
                .exit_code == 2);
  c.require(testutil::run_cli("loops /missing 2>/dev/null").exit_code == 3);
}
