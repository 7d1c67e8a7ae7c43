#ifndef NETINT_ERIP_HPP
#define NETINT_ERIP_HPP

#include <vector>

#include "netint/graph.hpp"

namespace netint {

/// Bottleneck value: the minimum over s-t paths of the largest edge
/// resistance on the path. Throws Disconnected if no s-t path exists.
double phi_value(const WeightedGraph& g);

struct EripSolution {
  EdgeCut cut;
  /// Bottleneck value of the graph after removing `cut`.
  double phi_after = 0.0;
  double reff_after = 0.0;
  /// Number k of cheapest edges whose min s-t cut is returned; edge
  /// `threshold_edge` (the (k+1)-th cheapest) is where the cut size first
  /// exceeds the budget.
  int k_index = 0;
  int threshold_edge = -1;
  /// |E_i| for i = 1 .. k+1.
  std::vector<int> cut_sizes;
  /// Set if the cut size jumped past budget+1 in a single step (cannot
  /// happen on simple graphs).
  bool size_jump = false;
};

/// Min-cut approximation for effective-resistance interdiction. Processes
/// edges by ascending resistance (ties by edge id), taking unweighted min
/// s-t cuts of growing prefixes, and returns the last prefix cut of size at
/// most `budget`. The result maximizes the bottleneck value over all cuts of
/// that size and is within a factor n*m of the best effective resistance.
///
/// Conductance and stochastic inputs are read as r_e = 1/p_e. Throws
/// BudgetTooLarge unless 0 <= budget < edge_connectivity(g).
EripSolution erip_interdict(const WeightedGraph& g, int budget);

}  // namespace netint

#endif  // NETINT_ERIP_HPP
