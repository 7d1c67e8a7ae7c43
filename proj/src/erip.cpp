#include "netint/erip.hpp"

#include <numeric>

#include "netint/mincut.hpp"
#include "netint/spectral.hpp"

namespace netint {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int v) {
    while (parent_[static_cast<std::size_t>(v)] != v) {
      auto& p = parent_[static_cast<std::size_t>(v)];
      p = parent_[static_cast<std::size_t>(p)];
      v = p;
    }
    return v;
  }
  void unite(int a, int b) { parent_[static_cast<std::size_t>(find(a))] = find(b); }

 private:
  std::vector<int> parent_;
};

std::vector<int> ascending_resistance_order(const WeightedGraph& g) {
  std::vector<int> order(static_cast<std::size_t>(g.edge_count()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.resistance(a) < g.resistance(b); });
  return order;
}

}  // namespace

double phi_value(const WeightedGraph& g) {
  DisjointSets sets(g.node_count());
  for (int id : ascending_resistance_order(g)) {
    const auto& e = g.edge(id);
    sets.unite(e.i, e.j);
    if (sets.find(g.source()) == sets.find(g.sink())) return g.resistance(id);
  }
  throw Error(Errc::Disconnected, "source and sink are not connected");
}

EripSolution erip_interdict(const WeightedGraph& g, int budget) {
  if (budget < 0) throw Error(Errc::BudgetTooLarge, "budget must be nonnegative");
  const int lambda = edge_connectivity(g);
  if (budget >= lambda) {
    throw Error(Errc::BudgetTooLarge, "budget " + std::to_string(budget) +
                                          " is not below the edge connectivity " +
                                          std::to_string(lambda));
  }
  const WeightedGraph rg = g.as_resistance();
  const std::vector<int> order = ascending_resistance_order(rg);

  EripSolution out;
  EdgeList prefix;
  std::vector<int> prefix_ids;
  std::vector<int> previous_cut;  // E_{i-1}, as prefix positions
  for (std::size_t i = 0; i < order.size(); ++i) {
    const int id = order[i];
    prefix.emplace_back(rg.edge(id).i, rg.edge(id).j);
    prefix_ids.push_back(id);
    CutResult cut = min_st_cut(rg.node_count(), prefix, rg.source(), rg.sink());
    out.cut_sizes.push_back(cut.cut_value);
    if (cut.cut_value >= budget + 1) {
      out.size_jump = cut.cut_value > budget + 1;
      out.k_index = static_cast<int>(i);
      out.threshold_edge = id;
      std::vector<int> removed;
      for (int pos : previous_cut) removed.push_back(prefix_ids[static_cast<std::size_t>(pos)]);
      out.cut = EdgeCut(rg.edge_count(), std::move(removed));
      const WeightedGraph rest = rg.without(out.cut.removed());
      out.phi_after = phi_value(rest);
      out.reff_after = effective_resistance(rest);
      return out;
    }
    previous_cut = std::move(cut.cut_edges);
  }
  // Unreachable when budget < edge connectivity: the full graph's s-t cut
  // has at least budget + 1 edges.
  throw Error(Errc::BudgetTooLarge, "no prefix reached a cut of size budget + 1");
}

}  // namespace netint
