// Test-only helpers: fixture loading, CLI execution, and the independent
// brute-force oracles the suites check the library against.
#ifndef FDM_TESTS_HELPERS_HPP
#define FDM_TESTS_HELPERS_HPP

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "fdm/matrix.hpp"

namespace testutil {

inline std::string fixture_path(const std::string& name) {
  return std::string(FDM_FIXTURE_DIR) + "/" + name;
}

inline std::string load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct CmdResult {
  int exit_code = -1;
  std::string output;  // stdout only
};

inline CmdResult run_cli(const std::string& args) {
  const std::string cmd = std::string(FDM_CLI_PATH) + " " + args;
  CmdResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
    res.output.append(buf, got);
  const int status = pclose(pipe);
  res.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status)
                                                     : -1;
  return res;
}

// Truncated-series evaluation of D + D^2 + ... + D^terms, the convergence
// definition of the total-relation matrix. Independent of the solver path.
inline fdm::Matrix series_total(const fdm::Matrix& d, int terms) {
  const std::size_t n = d.rows();
  fdm::Matrix power = d;
  fdm::Matrix sum = d;
  for (int m = 2; m <= terms; ++m) {
    fdm::Matrix next(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        double acc = 0.0;
        for (std::size_t k = 0; k < n; ++k) acc += power(i, k) * d(k, j);
        next(i, j) = acc;
      }
    power = next;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) sum(i, j) += power(i, j);
  }
  return sum;
}

// All elementary cycles of a digraph by exhaustive DFS over simple paths
// that close back at their smallest vertex. Returns canonical sequences
// (smallest vertex first), sorted by (length, lexicographic).
inline std::vector<std::vector<std::size_t>> brute_force_cycles(
    std::size_t n, const std::set<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<std::vector<std::size_t>> found;
  for (std::size_t v = 0; v < n; ++v)
    if (edges.count({v, v})) found.push_back({v});

  std::vector<std::size_t> path;
  std::vector<bool> on_path(n, false);
  std::size_t start = 0;
  auto dfs = [&](auto&& self, std::size_t v) -> void {
    path.push_back(v);
    on_path[v] = true;
    for (std::size_t w = 0; w < n; ++w) {
      if (!edges.count({v, w}) || v == w) continue;
      if (w == start)
        found.push_back(path);
      else if (w > start && !on_path[w])
        self(self, w);
    }
    on_path[v] = false;
    path.pop_back();
  };
  for (start = 0; start < n; ++start) dfs(dfs, start);

  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return found;
}

}  // namespace testutil

#endif  // FDM_TESTS_HELPERS_HPP
