#ifndef NETINT_MINCUT_HPP
#define NETINT_MINCUT_HPP

#include <vector>

#include "netint/graph.hpp"

namespace netint {

struct CutResult {
  /// Max-flow value; equals cut_edges.size().
  int cut_value = 0;
  /// Ids of edges leaving the residual-reachable side of s, ascending.
  std::vector<int> cut_edges;
  /// Nodes reachable from s in the final residual graph, ascending.
  std::vector<int> source_side;
};

/// Unit-capacity max-flow / min-cut between s and t on the undirected graph
/// (n, edges), ignoring any edge weights. Uses blocking flows on BFS level
/// graphs. The reported cut is the canonical one defined by residual
/// reachability from s.
CutResult min_st_cut(int n, const EdgeList& edges, int s, int t);

inline CutResult min_st_cut(const WeightedGraph& g) {
  return min_st_cut(g.node_count(), g.pairs(), g.source(), g.sink());
}

/// Global edge connectivity: min over v != 0 of the 0-v min cut; 0 when the
/// graph is disconnected.
int edge_connectivity(int n, const EdgeList& edges);

inline int edge_connectivity(const WeightedGraph& g) {
  return edge_connectivity(g.node_count(), g.pairs());
}

}  // namespace netint

#endif  // NETINT_MINCUT_HPP
