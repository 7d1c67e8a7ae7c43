#ifndef NETINT_CIP_HPP
#define NETINT_CIP_HPP

#include <Eigen/Dense>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "netint/graph.hpp"
#include "netint/mincut.hpp"
#include "netint/spectral.hpp"

namespace netint {

// Quadratic-program view of consensus interdiction. For a network variable
// y in [0,1]^m (y_e = 0 means edge e is removed) and a voltage variable u,
//
//   f(u, y) = u' (I - P(y)^2 + J/n) u,
//
// where P(y) keeps p_e * y_e off the diagonal and refills the diagonal so
// rows sum to one. Minimizing f over u'x0 = 1 gives 1 / x0'(L(y)+J/n)^{-1}x0,
// so driving f down drives the consensus objective up.

/// P(y): off-diagonals p_ij * y_ij, diagonal 1 - sum_k [P(y)]_ik.
template <typename Scalar, typename Derived>
MatrixX<Scalar> p_of_y(const StochasticMatrix<Scalar>& p, const Eigen::MatrixBase<Derived>& y) {
  if (y.size() != p.edge_count()) throw Error(Errc::NotSquare, "y has wrong length");
  const Eigen::Index n = p.size();
  MatrixX<Scalar> out = MatrixX<Scalar>::Zero(n, n);
  const auto& edges = p.edges();
  for (int e = 0; e < p.edge_count(); ++e) {
    const auto [i, j] = edges[static_cast<std::size_t>(e)];
    const Scalar w = p(i, j) * static_cast<Scalar>(y(e));
    out(i, j) = w;
    out(j, i) = w;
  }
  for (Eigen::Index i = 0; i < n; ++i) out(i, i) = Scalar(1) - out.row(i).sum();
  return out;
}

/// f(u, y) = u'(I - P(y)^2 + J/n)u.
template <typename Scalar, typename DerivedY, typename DerivedU>
Scalar f_value(const StochasticMatrix<Scalar>& p, const Eigen::MatrixBase<DerivedY>& y,
               const Eigen::MatrixBase<DerivedU>& u) {
  const MatrixX<Scalar> py = p_of_y(p, y);
  const VectorX<Scalar> uu = u.template cast<Scalar>();
  const VectorX<Scalar> pu = py * uu;
  const Scalar total = uu.sum();
  return uu.squaredNorm() - pu.squaredNorm() + total * total / Scalar(p.size());
}

/// x0'(L(y) + J/n)^{-1} x0 together with the solve it came from.
template <typename Scalar>
struct ShiftedSolve {
  VectorX<Scalar> z;
  Scalar quadratic = 0;
};

template <typename Scalar, typename DerivedY, typename DerivedX>
ShiftedSolve<Scalar> shifted_inverse_quadratic(const StochasticMatrix<Scalar>& p,
                                               const Eigen::MatrixBase<DerivedY>& y,
                                               const Eigen::MatrixBase<DerivedX>& x0) {
  if (x0.size() != p.size()) throw Error(Errc::NotSquare, "x0 has wrong length");
  const MatrixX<Scalar> py = p_of_y(p, y);
  const VectorX<Scalar> x = x0.template cast<Scalar>();
  ShiftedSolve<Scalar> out;
  out.z = solve_shifted(conductance_laplacian(MatrixX<Scalar>(py * py)), x);
  out.quadratic = x.dot(out.z);
  if (!(out.quadratic > Scalar(0))) {
    throw Error(Errc::SingularSystem, "x0'(L+J/n)^{-1}x0 is not positive; x0 must be nonzero");
  }
  return out;
}

/// Minimizer of f(., y) over the hyperplane u'x0 = 1:
/// u* = (L(y)+J/n)^{-1}x0 / x0'(L(y)+J/n)^{-1}x0.
template <typename Scalar, typename DerivedY, typename DerivedX>
VectorX<Scalar> optimal_u(const StochasticMatrix<Scalar>& p, const Eigen::MatrixBase<DerivedY>& y,
                          const Eigen::MatrixBase<DerivedX>& x0) {
  const auto solved = shifted_inverse_quadratic(p, y, x0);
  return solved.z / solved.quadratic;
}

/// Exact partial derivatives of f(u, y) with respect to each y_e. For edge
/// {i,j} with weight p_ij this is
///
///   p_ij (u_i-u_j)^2 ([P(y)]_ii + [P(y)]_jj - 2[P(y)]_ij)
///   + p_ij sum_{k != i,j} ((u_k-u_j)^2 - (u_k-u_i)^2) ([P(y)]_ik - [P(y)]_jk).
///
/// At y = 0 it reduces to 2 p_ij (u_i-u_j)^2, twice the power dissipated on
/// the edge under potentials u.
template <typename Scalar, typename DerivedY, typename DerivedU>
VectorX<Scalar> gradient_y(const StochasticMatrix<Scalar>& p, const Eigen::MatrixBase<DerivedY>& y,
                           const Eigen::MatrixBase<DerivedU>& u) {
  if (u.size() != p.size()) throw Error(Errc::NotSquare, "u has wrong length");
  const MatrixX<Scalar> py = p_of_y(p, y);
  const VectorX<Scalar> uu = u.template cast<Scalar>();
  const Eigen::Index n = p.size();
  VectorX<Scalar> g(p.edge_count());
  const auto& edges = p.edges();
  for (int e = 0; e < p.edge_count(); ++e) {
    const auto [i, j] = edges[static_cast<std::size_t>(e)];
    const Scalar pij = p(i, j);
    const Scalar dij = uu(i) - uu(j);
    Scalar value = dij * dij * (py(i, i) + py(j, j) - Scalar(2) * py(i, j));
    Scalar cross = 0;
    for (Eigen::Index k = 0; k < n; ++k) {
      if (k == i || k == j) continue;
      const Scalar dkj = uu(k) - uu(j);
      const Scalar dki = uu(k) - uu(i);
      cross += (dkj * dkj - dki * dki) * (py(i, k) - py(j, k));
    }
    g(e) = pij * (value + cross);
  }
  return g;
}

// ---------------------------------------------------------------------------
// Iterative solver

enum class CipMode { Adaptive, PotentialIter, PotentialOneShot };

/// TopBudget zeroes exactly `budget` coordinates with the largest gradients.
/// PositiveOnly zeroes only those of them with positive gradient, which is
/// the exact minimizer of the linearization over the budget polytope.
enum class UpdateRule { TopBudget, PositiveOnly };

std::string to_string(CipMode mode);
CipMode cip_mode_from_string(const std::string& name);

struct CipOptions {
  CipMode mode = CipMode::Adaptive;
  UpdateRule rule = UpdateRule::TopBudget;
  /// Starting cut (binary y0). Default: nothing removed.
  std::vector<int> initial_cut;
  /// 0 selects 10 * C(m, budget), capped at one million.
  std::int64_t max_iter = 0;
  /// Multiplier applied to reported consensus objectives.
  double kernel = 1.0;
};

template <typename Scalar>
struct CipIterate {
  /// f(u*, y) at this iterate's network variable.
  Scalar f_value = 0;
  EdgeCut cut;
};

template <typename Scalar>
struct CipSolution {
  EdgeCut cut;
  /// Consensus objective (times kernel) of the interdicted matrix.
  Scalar objective = 0;
  std::vector<CipIterate<Scalar>> trace;
  /// Final voltage variable, optimal for `cut`.
  VectorX<Scalar> u;
  int iterations = 0;
  bool converged = false;
  bool max_iter_exceeded = false;
  bool stationary = false;
};

template <typename Scalar>
struct StationarityReport {
  bool pass = false;
  bool u_optimal = false;
  bool y_optimal = false;
  /// max |u - u*|.
  Scalar u_violation = 0;
  /// u* - u: a feasible direction of decrease when u is not optimal.
  VectorX<Scalar> u_direction;
  /// Amount by which the best swap (restore `swap_restore`, remove
  /// `swap_remove`) or single change lowers the linearization; <= tol passes.
  Scalar y_violation = 0;
  int swap_restore = -1;
  int swap_remove = -1;
  VectorX<Scalar> gradient;
};

inline std::int64_t default_max_iter(int m, int budget) {
  constexpr std::int64_t cap = 1'000'000;
  std::int64_t c = 1;
  for (int k = 1; k <= budget && k <= m; ++k) {
    c = c * (m - budget + k) / k;
    if (c * 10 >= cap) return cap;
  }
  return std::max<std::int64_t>(1, std::min(cap, 10 * c));
}

/// Picks the coordinates to zero from a gradient: largest first, ties by
/// ascending edge id, skipping any edge whose removal would disconnect the
/// pattern together with the edges already picked.
template <typename Scalar>
EdgeCut select_cut(int n, const EdgeList& edges, const VectorX<Scalar>& g, int budget,
                   UpdateRule rule) {
  const int m = static_cast<int>(edges.size());
  std::vector<int> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g(a) > g(b); });
  std::vector<bool> removed(static_cast<std::size_t>(m), false);
  std::vector<int> picked;
  for (int id : order) {
    if (static_cast<int>(picked.size()) >= budget) break;
    if (rule == UpdateRule::PositiveOnly && !(g(id) > Scalar(0))) break;
    removed[static_cast<std::size_t>(id)] = true;
    EdgeList rest;
    for (int e = 0; e < m; ++e) {
      if (!removed[static_cast<std::size_t>(e)]) rest.push_back(edges[static_cast<std::size_t>(e)]);
    }
    if (is_connected(n, rest)) {
      picked.push_back(id);
    } else {
      removed[static_cast<std::size_t>(id)] = false;
    }
  }
  return EdgeCut(m, std::move(picked));
}

/// Checks first-order stationarity of (u, cut): u must equal the optimal
/// voltage for the cut within 1e-8 (relative to max|u*|), and the removed
/// edges must minimize the linearization of f(u, .) under `rule`.
template <typename Scalar, typename DerivedX, typename DerivedU>
StationarityReport<Scalar> stationarity_check(const StochasticMatrix<Scalar>& p,
                                              const Eigen::MatrixBase<DerivedX>& x0,
                                              const Eigen::MatrixBase<DerivedU>& u,
                                              const EdgeCut& cut, int budget,
                                              UpdateRule rule = UpdateRule::TopBudget) {
  StationarityReport<Scalar> r;
  const VectorX<Scalar> y = cut.y<Scalar>();
  const VectorX<Scalar> ustar = optimal_u(p, y, x0);
  r.u_direction = ustar - u.template cast<Scalar>();
  r.u_violation = r.u_direction.cwiseAbs().maxCoeff();
  r.u_optimal = r.u_violation <= Scalar(1e-8) * std::max(Scalar(1), ustar.cwiseAbs().maxCoeff());

  r.gradient = gradient_y(p, y, u);
  const auto& g = r.gradient;
  const Scalar tol = Scalar(1e-9) * (Scalar(1) + (g.size() ? g.cwiseAbs().maxCoeff() : Scalar(0)));
  const int m = p.edge_count();
  const int want = std::min(budget, m);

  int min_zeroed = -1;
  int max_kept = -1;
  for (int e = 0; e < m; ++e) {
    if (cut.contains(e)) {
      if (min_zeroed < 0 || g(e) < g(min_zeroed)) min_zeroed = e;
    } else if (max_kept < 0 || g(e) > g(max_kept)) {
      max_kept = e;
    }
  }
  const Scalar inf = std::numeric_limits<Scalar>::infinity();
  const Scalar lowest_zeroed = min_zeroed >= 0 ? g(min_zeroed) : inf;
  const Scalar highest_kept = max_kept >= 0 ? g(max_kept) : -inf;

  Scalar violation = -inf;
  if (cut.size() > budget) {
    violation = inf;
  } else if (rule == UpdateRule::TopBudget) {
    if (cut.size() < want) violation = inf;
    else if (min_zeroed >= 0 && max_kept >= 0) violation = highest_kept - lowest_zeroed;
  } else {
    // Restoring a zeroed edge with negative gradient lowers the linearization.
    if (min_zeroed >= 0) violation = std::max(violation, -lowest_zeroed);
    if (cut.size() < budget) {
      if (max_kept >= 0) violation = std::max(violation, highest_kept);
    } else if (min_zeroed >= 0 && max_kept >= 0) {
      violation = std::max(violation, highest_kept - lowest_zeroed);
    }
  }
  r.y_violation = violation == -inf ? Scalar(0) : violation;
  r.swap_restore = min_zeroed;
  r.swap_remove = max_kept;
  r.y_optimal = r.y_violation <= tol;
  r.pass = r.u_optimal && r.y_optimal;
  return r;
}

/// Block-coordinate interdiction heuristic. Each iteration solves for the
/// optimal voltage u at the current cut, ranks edges by a gradient of f
/// (adaptive: at the current y; potential modes: at y = 0, i.e. by power
/// dissipation), and removes the `budget` top-ranked edges. Adaptive mode
/// strictly decreases f until the cut repeats, at which point (u, y) is
/// first-order stationary.
///
/// Throws BudgetTooLarge unless budget < edge connectivity of P's pattern.
/// Exhausting max_iter is not an error: the best iterate found is returned
/// with `stationary == false`.
template <typename Scalar, typename DerivedX>
CipSolution<Scalar> cip_solve(const StochasticMatrix<Scalar>& p, const Eigen::MatrixBase<DerivedX>& x0,
                              int budget, const CipOptions& options = {}) {
  const int n = static_cast<int>(p.size());
  const int m = p.edge_count();
  if (x0.size() != n) throw Error(Errc::NotSquare, "x0 has wrong length");
  if (budget < 0) throw Error(Errc::BudgetTooLarge, "budget must be nonnegative");
  const int lambda = edge_connectivity(n, p.edges());
  if (budget >= lambda) {
    throw Error(Errc::BudgetTooLarge, "budget " + std::to_string(budget) +
                                          " is not below the edge connectivity " +
                                          std::to_string(lambda));
  }
  EdgeCut cut(m, options.initial_cut);
  if (cut.size() > budget) throw Error(Errc::BudgetTooLarge, "initial cut exceeds the budget");
  const std::int64_t max_iter = options.max_iter > 0 ? options.max_iter : default_max_iter(m, budget);
  const VectorX<Scalar> x = x0.template cast<Scalar>();
  const VectorX<Scalar> zeros = VectorX<Scalar>::Zero(m);

  CipSolution<Scalar> out;
  auto evaluate = [&](const EdgeCut& c) {
    const auto solved = shifted_inverse_quadratic(p, c.y<Scalar>(), x);
    out.trace.push_back({Scalar(1) / solved.quadratic, c});
    return VectorX<Scalar>(solved.z / solved.quadratic);
  };
  auto rank_gradient = [&](const EdgeCut& c, const VectorX<Scalar>& u) {
    return options.mode == CipMode::Adaptive ? gradient_y(p, c.y<Scalar>(), u) : gradient_y(p, zeros, u);
  };

  if (options.mode == CipMode::PotentialOneShot) {
    const VectorX<Scalar> u0 = evaluate(cut);
    cut = select_cut(n, p.edges(), rank_gradient(cut, u0), budget, options.rule);
    out.u = evaluate(cut);
    out.iterations = 1;
  } else {
    std::set<std::vector<int>> visited;
    VectorX<Scalar> u;
    for (std::int64_t iter = 0;; ++iter) {
      if (iter >= max_iter) {
        out.max_iter_exceeded = true;
        break;
      }
      u = evaluate(cut);
      visited.insert(cut.removed());
      EdgeCut next = select_cut(n, p.edges(), rank_gradient(cut, u), budget, options.rule);
      if (next == cut) {
        out.converged = true;
        break;
      }
      if (visited.count(next.removed())) break;  // cycle; only possible in potential mode
      cut = std::move(next);
    }
    out.iterations = static_cast<int>(out.trace.size());
    if (!out.converged) {
      auto best = std::min_element(out.trace.begin(), out.trace.end(),
                                   [](const auto& a, const auto& b) { return a.f_value < b.f_value; });
      cut = best->cut;
      u = optimal_u(p, cut.y<Scalar>(), x);
    }
    out.u = u;
  }
  out.cut = cut;
  out.objective = consensus_objective(interdict(p, cut), x, static_cast<Scalar>(options.kernel));
  out.stationary = (out.converged || options.mode == CipMode::PotentialOneShot) &&
                   stationarity_check(p, x, out.u, cut, budget, options.rule).pass;
  return out;
}

}  // namespace netint

#endif  // NETINT_CIP_HPP
