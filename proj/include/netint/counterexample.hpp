#ifndef NETINT_COUNTEREXAMPLE_HPP
#define NETINT_COUNTEREXAMPLE_HPP

#include <Eigen/Dense>

#include <string>
#include <vector>

#include "netint/graph.hpp"

namespace netint {

// Three-node instance on which breaking the edge of highest power
// dissipation is not optimal for budget 1 and x0 = e_0 - e_2.

StochasticMatrix<double> triangle_matrix();
Eigen::VectorXd triangle_x0();

struct CounterexampleOptions {
  /// Multiplier on every consensus objective.
  double kernel = 1.0;
  /// Debug: swap the two interdicted edges in every check, which must fail.
  bool transpose_cut = false;
  double tolerance = 1e-9;
};

struct CheckLine {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CounterexampleReport {
  bool pass = false;
  std::vector<CheckLine> checks;
  /// Human-readable dump: matrices, dissipations, objectives, check lines.
  std::string text;
  double reff_best = 0.0;
  double reff_greedy = 0.0;
  double objective_best = 0.0;
  double objective_greedy = 0.0;
  std::vector<double> dissipation;
  EdgeCut greedy_cut;
  EdgeCut brute_cut;
};

CounterexampleReport run_counterexample(const CounterexampleOptions& options = {});

}  // namespace netint

#endif  // NETINT_COUNTEREXAMPLE_HPP
