#include "netint/mincut.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace netint {
namespace {

// Each undirected edge k becomes arcs 2k (i -> j) and 2k+1 (j -> i), each of
// capacity one and each the other's reverse.
class UnitFlowNetwork {
 public:
  UnitFlowNetwork(int n, const EdgeList& edges)
      : n_(n), head_(static_cast<std::size_t>(n)), to_(2 * edges.size()), cap_(2 * edges.size(), 1) {
    for (std::size_t k = 0; k < edges.size(); ++k) {
      const auto [i, j] = edges[k];
      to_[2 * k] = j;
      to_[2 * k + 1] = i;
      head_[static_cast<std::size_t>(i)].push_back(static_cast<int>(2 * k));
      head_[static_cast<std::size_t>(j)].push_back(static_cast<int>(2 * k + 1));
    }
  }

  int max_flow(int s, int t) {
    int total = 0;
    while (build_levels(s, t)) {
      next_.assign(static_cast<std::size_t>(n_), 0);
      while (int pushed = augment(s, t, std::numeric_limits<int>::max())) total += pushed;
    }
    return total;
  }

  std::vector<bool> residual_reachable(int s) const {
    std::vector<bool> seen(static_cast<std::size_t>(n_), false);
    std::queue<int> q;
    q.push(s);
    seen[static_cast<std::size_t>(s)] = true;
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int a : head_[static_cast<std::size_t>(v)]) {
        const int w = to_[static_cast<std::size_t>(a)];
        if (cap_[static_cast<std::size_t>(a)] > 0 && !seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          q.push(w);
        }
      }
    }
    return seen;
  }

 private:
  bool build_levels(int s, int t) {
    level_.assign(static_cast<std::size_t>(n_), -1);
    std::queue<int> q;
    q.push(s);
    level_[static_cast<std::size_t>(s)] = 0;
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int a : head_[static_cast<std::size_t>(v)]) {
        const int w = to_[static_cast<std::size_t>(a)];
        if (cap_[static_cast<std::size_t>(a)] > 0 && level_[static_cast<std::size_t>(w)] < 0) {
          level_[static_cast<std::size_t>(w)] = level_[static_cast<std::size_t>(v)] + 1;
          q.push(w);
        }
      }
    }
    return level_[static_cast<std::size_t>(t)] >= 0;
  }

  int augment(int v, int t, int limit) {
    if (v == t) return limit;
    auto& adj = head_[static_cast<std::size_t>(v)];
    for (int& k = next_[static_cast<std::size_t>(v)]; k < static_cast<int>(adj.size()); ++k) {
      const int a = adj[static_cast<std::size_t>(k)];
      const int w = to_[static_cast<std::size_t>(a)];
      if (cap_[static_cast<std::size_t>(a)] <= 0 ||
          level_[static_cast<std::size_t>(w)] != level_[static_cast<std::size_t>(v)] + 1) {
        continue;
      }
      if (int got = augment(w, t, std::min(limit, cap_[static_cast<std::size_t>(a)]))) {
        cap_[static_cast<std::size_t>(a)] -= got;
        cap_[static_cast<std::size_t>(a ^ 1)] += got;
        return got;
      }
    }
    return 0;
  }

  int n_;
  std::vector<std::vector<int>> head_;
  std::vector<int> to_;
  std::vector<int> cap_;
  std::vector<int> level_;
  std::vector<int> next_;
};

}  // namespace

CutResult min_st_cut(int n, const EdgeList& edges, int s, int t) {
  if (s < 0 || s >= n || t < 0 || t >= n || s == t) {
    throw Error(Errc::InvalidGraph, "invalid terminals for min cut");
  }
  UnitFlowNetwork net(n, edges);
  CutResult out;
  out.cut_value = net.max_flow(s, t);
  const auto side = net.residual_reachable(s);
  for (int v = 0; v < n; ++v) {
    if (side[static_cast<std::size_t>(v)]) out.source_side.push_back(v);
  }
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const auto [i, j] = edges[k];
    if (side[static_cast<std::size_t>(i)] != side[static_cast<std::size_t>(j)]) {
      out.cut_edges.push_back(static_cast<int>(k));
    }
  }
  return out;
}

int edge_connectivity(int n, const EdgeList& edges) {
  if (n <= 1) return 0;
  int best = std::numeric_limits<int>::max();
  for (int v = 1; v < n; ++v) {
    best = std::min(best, min_st_cut(n, edges, 0, v).cut_value);
    if (best == 0) break;
  }
  return best;
}

}  // namespace netint
