#include "fdm/graph.hpp"

#include <algorithm>

#include "fdm/errors.hpp"

namespace fdm {

bool ImpactRelationMap::has_edge(std::size_t from, std::size_t to) const {
  for (const Edge& e : edges)
    if (e.source == from && e.target == to) return true;
  return false;
}

ImpactRelationMap threshold_map(const InfluenceMatrix& total, double p,
                                bool allow_self_loops) {
  if (p < 0.0) throw ValidationError("threshold must be nonnegative");
  ImpactRelationMap map{total.factor_set(), {}, p, allow_self_loops};
  const std::size_t n = total.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j && !allow_self_loops) continue;
      if (total.at(i, j) > p) map.edges.push_back({i, j, total.at(i, j)});
    }
  return map;
}

double default_threshold(const InfluenceMatrix& total) {
  const std::size_t n = total.size();
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) sum += total.at(i, j);
  return sum / static_cast<double>(n * (n - 1));
}

namespace {

// Johnson's elementary-circuit search restricted to the subgraph induced on
// vertices >= start, so every cycle is emitted exactly once with its
// smallest vertex first. A length cap prunes the descent; a pruned branch
// is treated as if it closed a circuit so that unblocking stays
// conservative and no circuit within the cap is missed.
class CircuitSearch {
 public:
  CircuitSearch(const std::vector<std::vector<std::size_t>>& adj,
                CycleLimits limits, FeedbackLoopSet& out)
      : adj_(adj), limits_(limits), out_(out), n_(adj.size()) {}

  void run() {
    blocked_.assign(n_, false);
    block_list_.assign(n_, {});
    for (start_ = 0; start_ < n_; ++start_) {
      if (out_.truncated) return;
      std::fill(blocked_.begin(), blocked_.end(), false);
      for (auto& b : block_list_) b.clear();
      path_.clear();
      circuit(start_);
    }
  }

 private:
  bool circuit(std::size_t v) {
    bool found = false;
    path_.push_back(v);
    blocked_[v] = true;
    const bool at_cap =
        limits_.max_length != 0 && path_.size() >= limits_.max_length;
    for (std::size_t w : adj_[v]) {
      if (w < start_) continue;  // not in the induced subgraph
      if (w == start_) {
        emit();
        found = true;
        if (out_.truncated) break;
      } else if (!blocked_[w]) {
        if (at_cap) {
          found = true;  // deeper circuits may exist past the cap
        } else {
          if (circuit(w)) found = true;
          if (out_.truncated) break;
        }
      }
    }
    if (found) {
      unblock(v);
    } else {
      for (std::size_t w : adj_[v]) {
        if (w < start_) continue;
        auto& lst = block_list_[w];
        if (std::find(lst.begin(), lst.end(), v) == lst.end())
          lst.push_back(v);
      }
    }
    path_.pop_back();
    return found;
  }

  void emit() {
    if (out_.cycles.size() >= limits_.max_cycles) {
      out_.truncated = true;
      return;
    }
    out_.cycles.push_back(path_);
  }

  void unblock(std::size_t v) {
    blocked_[v] = false;
    auto pending = std::move(block_list_[v]);
    block_list_[v].clear();
    for (std::size_t w : pending)
      if (blocked_[w]) unblock(w);
  }

  const std::vector<std::vector<std::size_t>>& adj_;
  CycleLimits limits_;
  FeedbackLoopSet& out_;
  std::size_t n_;
  std::size_t start_ = 0;
  std::vector<bool> blocked_;
  std::vector<std::vector<std::size_t>> block_list_;
  std::vector<std::size_t> path_;
};

}  // namespace

FeedbackLoopSet enumerate_cycles(const ImpactRelationMap& map,
                                 CycleLimits limits) {
  const std::size_t n = map.factors.size();
  std::vector<std::vector<std::size_t>> adj(n);
  std::vector<std::vector<std::size_t>> self(n);
  for (const Edge& e : map.edges) {
    if (e.source == e.target)
      self[e.source].push_back(e.source);
    else
      adj[e.source].push_back(e.target);
  }
  for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());

  FeedbackLoopSet out;
  // self-loops are length-1 elementary cycles
  for (std::size_t v = 0; v < n; ++v) {
    if (self[v].empty()) continue;
    if (out.cycles.size() >= limits.max_cycles) {
      out.truncated = true;
      break;
    }
    out.cycles.push_back({v});
  }
  if (!out.truncated && (limits.max_length == 0 || limits.max_length >= 2)) {
    CircuitSearch search(adj, limits, out);
    search.run();
  }

  std::sort(out.cycles.begin(), out.cycles.end(),
            [](const auto& a, const auto& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  return out;
}

std::vector<FactorStructure> factor_stats(const ImpactRelationMap& map,
                                          const FeedbackLoopSet& loops) {
  const std::size_t n = map.factors.size();
  std::vector<FactorStructure> stats(n);
  for (std::size_t i = 0; i < n; ++i)
    stats[i].factor = map.factors.at(i).id;
  for (const Edge& e : map.edges) ++stats[e.source].relations;
  for (const auto& cycle : loops.cycles)
    for (std::size_t v : cycle) ++stats[v].loops;

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     if (stats[a].loops != stats[b].loops)
                       return stats[a].loops > stats[b].loops;
                     return stats[a].relations > stats[b].relations;
                   });
  for (std::size_t r = 0; r < n; ++r) stats[order[r]].rank = r + 1;
  return stats;
}

}  // namespace fdm
