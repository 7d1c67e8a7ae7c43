#include "netint/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "netint/mincut.hpp"
#include "netint/spectral.hpp"

namespace netint {
namespace {

void check_budget(int n, const EdgeList& edges, int budget, std::int64_t cap) {
  if (budget < 0) throw Error(Errc::BudgetTooLarge, "budget must be nonnegative");
  const int lambda = edge_connectivity(n, edges);
  if (budget >= lambda) {
    throw Error(Errc::BudgetTooLarge, "budget " + std::to_string(budget) +
                                          " is not below the edge connectivity " +
                                          std::to_string(lambda));
  }
  const std::int64_t count = cut_count(static_cast<int>(edges.size()), budget);
  if (count > cap) {
    throw Error(Errc::TooLarge, std::to_string(count) + " cuts exceed the cap of " + std::to_string(cap));
  }
}

// Keeps the first maximum in enumeration order. Values within a relative
// kTieTolerance of the best count as ties, so mirror-image cuts whose values
// differ only by rounding resolve to the earlier one.
void record(OracleResult& r, int m, const std::vector<int>& removed, double value) {
  ++r.evaluated;
  const double tol = kTieTolerance * std::max(1.0, std::abs(r.best_value));
  if (r.evaluated == 1 || value > r.best_value + tol) {
    r.runner_up_value = std::max(r.runner_up_value, r.best_value);
    r.best_value = value;
    r.best_cut = EdgeCut(m, removed);
    r.tied_cuts.assign(1, r.best_cut);
    r.tie_count = 1;
  } else if (value >= r.best_value - tol) {
    ++r.tie_count;
    if (r.tied_cuts.size() < kMaxTiedCuts) r.tied_cuts.emplace_back(m, removed);
  } else if (value > r.runner_up_value) {
    r.runner_up_value = value;
  }
}

}  // namespace

std::int64_t cut_count(int m, int budget) {
  constexpr auto limit = std::numeric_limits<std::int64_t>::max();
  std::int64_t total = 0;
  std::int64_t c = 1;  // C(m, k)
  for (int k = 0; k <= budget && k <= m; ++k) {
    if (k > 0) {
      const std::int64_t factor = m - k + 1;
      if (c > limit / factor) return limit;
      c = c * factor / k;
    }
    if (total > limit - c) return limit;
    total += c;
  }
  return total;
}

OracleResult brute_erip(const WeightedGraph& g, int budget, std::int64_t cap) {
  const EdgeList edges = g.pairs();
  check_budget(g.node_count(), edges, budget, cap);
  Eigen::MatrixXd base = g.conductance_matrix();
  base.diagonal().setZero();
  const int m = g.edge_count();
  OracleResult r;
  for_each_cut(m, budget, [&](const std::vector<int>& removed) {
    Eigen::MatrixXd w = base;
    for (int id : removed) {
      const auto [i, j] = edges[static_cast<std::size_t>(id)];
      w(i, j) = 0.0;
      w(j, i) = 0.0;
    }
    if (!is_connected(w)) {
      ++r.skipped;
      return;
    }
    record(r, m, removed, effective_resistance(w, g.source(), g.sink()));
  });
  return r;
}

OracleResult brute_cip(const StochasticMatrix<double>& p, const Eigen::VectorXd& x0, int budget,
                       std::int64_t cap, double kernel) {
  check_budget(static_cast<int>(p.size()), p.edges(), budget, cap);
  const int m = p.edge_count();
  OracleResult r;
  for_each_cut(m, budget, [&](const std::vector<int>& removed) {
    const EdgeCut cut(m, removed);
    const auto q = interdict(p, cut);
    if (!q.connected()) {
      ++r.skipped;
      return;
    }
    try {
      record(r, m, removed, consensus_objective(q, x0, kernel));
    } catch (const Error& e) {
      // A periodic interdicted matrix has a disconnected square; its series
      // diverges and the cut is treated as infeasible.
      if (e.code() != Errc::Disconnected && e.code() != Errc::SingularSystem) throw;
      ++r.skipped;
    }
  });
  return r;
}

}  // namespace netint
