#ifndef NETINT_ORACLE_HPP
#define NETINT_ORACLE_HPP

#include <Eigen/Dense>

#include <cstdint>
#include <limits>
#include <vector>

#include "netint/graph.hpp"

namespace netint {

inline constexpr std::int64_t kDefaultOracleCap = 10'000'000;
inline constexpr double kTieTolerance = 1e-12;
inline constexpr std::size_t kMaxTiedCuts = 64;

struct OracleResult {
  EdgeCut best_cut;
  double best_value = -std::numeric_limits<double>::infinity();
  /// Feasible cuts whose objective was computed.
  std::int64_t evaluated = 0;
  /// Cuts skipped because they disconnect the network.
  std::int64_t skipped = 0;
  /// Largest value not tied with the best; -inf if there is none.
  double runner_up_value = -std::numeric_limits<double>::infinity();
  /// Cuts tied with the best (best_cut first), at most kMaxTiedCuts of them.
  std::vector<EdgeCut> tied_cuts;
  std::int64_t tie_count = 0;
};

/// sum_{k <= budget} C(m, k), saturating at INT64_MAX.
std::int64_t cut_count(int m, int budget);

/// Calls visit(removed_ids) for every subset of {0..m-1} of size at most
/// `budget`: by size, then lexicographically within a size.
template <typename Visit>
void for_each_cut(int m, int budget, Visit&& visit) {
  std::vector<int> combo;
  for (int k = 0; k <= budget && k <= m; ++k) {
    combo.resize(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) combo[static_cast<std::size_t>(i)] = i;
    while (true) {
      visit(static_cast<const std::vector<int>&>(combo));
      int i = k - 1;
      while (i >= 0 && combo[static_cast<std::size_t>(i)] == m - k + i) --i;
      if (i < 0) break;
      ++combo[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j) {
        combo[static_cast<std::size_t>(j)] = combo[static_cast<std::size_t>(j - 1)] + 1;
      }
    }
  }
}

/// Exact effective-resistance interdiction by enumeration: the largest s-t
/// effective resistance over all cuts of at most `budget` edges. Throws
/// BudgetTooLarge unless budget < edge connectivity, TooLarge if the number
/// of cuts exceeds `cap`.
OracleResult brute_erip(const WeightedGraph& g, int budget, std::int64_t cap = kDefaultOracleCap);

/// Exact consensus interdiction by enumeration over cuts of at most
/// `budget` edges. Values are consensus objectives times `kernel`.
OracleResult brute_cip(const StochasticMatrix<double>& p, const Eigen::VectorXd& x0, int budget,
                       std::int64_t cap = kDefaultOracleCap, double kernel = 1.0);

}  // namespace netint

#endif  // NETINT_ORACLE_HPP
