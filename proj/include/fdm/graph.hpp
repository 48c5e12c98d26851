#ifndef FDM_GRAPH_HPP
#define FDM_GRAPH_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "fdm/dematel.hpp"

namespace fdm {

struct Edge {
  std::size_t source = 0;
  std::size_t target = 0;
  double weight = 0.0;
};

/// Digraph of influences strictly above the threshold.
struct ImpactRelationMap {
  FactorSet factors;
  std::vector<Edge> edges;  // sorted by (source, target)
  double threshold = 0.0;
  bool self_loops_allowed = false;

  bool has_edge(std::size_t from, std::size_t to) const;
};

/// Edge (i, j) iff t_ij > p, with self-loops dropped unless allowed.
ImpactRelationMap threshold_map(const InfluenceMatrix& total, double p,
                                bool allow_self_loops = false);

/// Mean of the off-diagonal entries of T.
double default_threshold(const InfluenceMatrix& total);

struct CycleLimits {
  std::size_t max_length = 0;  // 0 = no limit (up to n)
  std::size_t max_cycles = 10000;
};

/// Elementary cycles as vertex-index sequences. Each cycle starts at its
/// smallest vertex; the list is sorted by (length, lexicographic sequence).
struct FeedbackLoopSet {
  std::vector<std::vector<std::size_t>> cycles;
  bool truncated = false;
};

/// Johnson-style elementary-circuit enumeration with optional caps.
/// Hitting a cap sets `truncated` instead of failing.
FeedbackLoopSet enumerate_cycles(const ImpactRelationMap& map,
                                 CycleLimits limits = {});

struct FactorStructure {
  std::string factor;
  std::size_t relations = 0;  // out-degree in the map
  std::size_t loops = 0;      // elementary cycles through the factor
  std::size_t rank = 0;       // 1-based, by (loops, relations) descending
};

/// Per-factor out-degree and loop participation, ranked by
/// (loops, relations) descending with factor order as the tiebreak.
std::vector<FactorStructure> factor_stats(const ImpactRelationMap& map,
                                          const FeedbackLoopSet& loops);

}  // namespace fdm

#endif  // FDM_GRAPH_HPP
