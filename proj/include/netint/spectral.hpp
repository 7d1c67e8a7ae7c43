#ifndef NETINT_SPECTRAL_HPP
#define NETINT_SPECTRAL_HPP

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "netint/graph.hpp"

namespace netint {

/// Solves (L + J/n) z = b for a Laplacian L of a connected conductance
/// pattern. L + J/n is positive definite exactly when the pattern is
/// connected, so a disconnected pattern is reported as SingularSystem.
template <typename DerivedL, typename DerivedB>
VectorX<typename DerivedL::Scalar> solve_shifted(const Eigen::MatrixBase<DerivedL>& l,
                                                 const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedL::Scalar;
  const Eigen::Index n = l.rows();
  if (l.cols() != n || b.size() != n) throw Error(Errc::NotSquare, "dimension mismatch");
  if (!is_connected(l)) {
    throw Error(Errc::SingularSystem, "Laplacian pattern is disconnected");
  }
  MatrixX<Scalar> shifted = l;
  shifted.array() += Scalar(1) / Scalar(n);
  Eigen::LLT<MatrixX<Scalar>> llt(shifted);
  if (llt.info() != Eigen::Success) {
    throw Error(Errc::SingularSystem, "shifted Laplacian is not positive definite");
  }
  VectorX<Scalar> z = llt.solve(b);
  if (!z.allFinite()) throw Error(Errc::SingularSystem, "non-finite solution");
  return z;
}

/// s-t effective resistance of the network whose edge conductances are the
/// off-diagonal entries of `w`: (e_s - e_t)' (L + J/n)^{-1} (e_s - e_t).
/// Evaluated as e_s' L_t^{-1} e_s for the Laplacian L_t grounded at t, through
/// a pivoted QR of the square-root-weighted incidence matrix (rows sorted by
/// weight) rather than L itself, which keeps conductances spanning many
/// orders of magnitude accurate.
template <typename Derived>
typename Derived::Scalar effective_resistance(const Eigen::MatrixBase<Derived>& w, int s, int t) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = w.rows();
  if (w.cols() != n) throw Error(Errc::NotSquare, "matrix must be square");
  if (s < 0 || t < 0 || s >= n || t >= n) throw Error(Errc::InvalidGraph, "terminal out of range");
  if (s == t) throw Error(Errc::InvalidGraph, "source and sink coincide");
  if (!is_connected(w)) throw Error(Errc::Disconnected, "conductance network is disconnected");
  struct Branch {
    Scalar conductance;
    Eigen::Index i, j;
  };
  std::vector<Branch> branches;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (w(i, j) != Scalar(0)) branches.push_back({w(i, j), i, j});
    }
  }
  std::stable_sort(branches.begin(), branches.end(),
                   [](const Branch& a, const Branch& b) { return a.conductance > b.conductance; });
  auto column = [t](Eigen::Index v) { return v < t ? v : v - 1; };
  MatrixX<Scalar> incidence = MatrixX<Scalar>::Zero(static_cast<Eigen::Index>(branches.size()), n - 1);
  for (std::size_t k = 0; k < branches.size(); ++k) {
    const auto& b = branches[k];
    const Scalar root = std::sqrt(b.conductance);
    const auto row = static_cast<Eigen::Index>(k);
    if (b.i != t) incidence(row, column(b.i)) = root;
    if (b.j != t) incidence(row, column(b.j)) = -root;
  }
  const Eigen::ColPivHouseholderQR<MatrixX<Scalar>> qr(incidence);
  VectorX<Scalar> rhs = VectorX<Scalar>::Zero(n - 1);
  rhs(column(s)) = Scalar(1);
  rhs = qr.colsPermutation().transpose() * rhs;
  const MatrixX<Scalar> r = qr.matrixR().topLeftCorner(n - 1, n - 1).template triangularView<Eigen::Upper>();
  if ((r.diagonal().array() == Scalar(0)).any()) {
    throw Error(Errc::SingularSystem, "grounded Laplacian is singular");
  }
  const VectorX<Scalar> y = r.transpose().template triangularView<Eigen::Lower>().solve(rhs);
  const Scalar value = y.squaredNorm();
  if (!std::isfinite(static_cast<double>(value))) throw Error(Errc::SingularSystem, "non-finite solution");
  return value;
}

inline double effective_resistance(const WeightedGraph& g) {
  return effective_resistance(g.conductance_matrix(), g.source(), g.sink());
}

template <typename Scalar>
Scalar effective_resistance(const StochasticMatrix<Scalar>& p, int s, int t) {
  return effective_resistance(p.matrix(), s, t);
}

/// Aggregate squared deviation sum_{t>=0} ||P^t x0 - xbar||^2, evaluated in
/// closed form through the squared-matrix Laplacian I - P^2. The projection
/// of x0 onto 1-perp makes this the literal series value even when the
/// entries of x0 do not sum to zero. `kernel` scales every term.
template <typename Scalar, typename Derived>
Scalar consensus_objective(const StochasticMatrix<Scalar>& p, const Eigen::MatrixBase<Derived>& x0,
                           Scalar kernel = Scalar(1)) {
  const Eigen::Index n = p.size();
  if (x0.size() != n) throw Error(Errc::NotSquare, "x0 has wrong length");
  const MatrixX<Scalar> p2 = p.matrix() * p.matrix();
  if (!is_connected(p2)) {
    throw Error(Errc::Disconnected, "squared conductance matrix is disconnected");
  }
  const VectorX<Scalar> centered = x0.template cast<Scalar>().array() - x0.template cast<Scalar>().mean();
  const VectorX<Scalar> z = solve_shifted(conductance_laplacian(p2), centered);
  return kernel * std::max(Scalar(0), centered.dot(z));
}

template <typename Scalar>
struct DynamicsSum {
  Scalar value = 0;
  /// Number of terms summed (t = 0 .. steps-1).
  std::int64_t steps = 0;
  /// Upper bound on the neglected tail, from the spectral radius of P - J/n;
  /// infinite when that radius is not below one.
  Scalar tail_bound = 0;
};

/// Sums ||x(t) - xbar||^2 by iterating x(t+1) = P x(t) for t = 0..horizon,
/// stopping once a term drops below `tail_tol`.
template <typename Scalar, typename Derived>
DynamicsSum<Scalar> simulate_dynamics(const StochasticMatrix<Scalar>& p,
                                      const Eigen::MatrixBase<Derived>& x0,
                                      std::int64_t horizon = 100'000'000,
                                      Scalar tail_tol = Scalar(1e-12)) {
  const Eigen::Index n = p.size();
  if (x0.size() != n) throw Error(Errc::NotSquare, "x0 has wrong length");
  // Deviations evolve under P as well (P 1 = 1), so iterate them directly.
  VectorX<Scalar> dev = x0.template cast<Scalar>().array() - x0.template cast<Scalar>().mean();
  VectorX<Scalar> next(n);
  DynamicsSum<Scalar> out;
  Scalar term = dev.squaredNorm();
  // Whether `term` is already part of the sum when the loop ends.
  bool counted = false;
  for (std::int64_t t = 0; t <= horizon; ++t) {
    out.value += term;
    ++out.steps;
    counted = true;
    if (term < tail_tol) break;
    counted = false;
    next.noalias() = p.matrix() * dev;
    dev.swap(next);
    // Re-center to keep rounding from leaking into the consensus direction.
    dev.array() -= dev.mean();
    term = dev.squaredNorm();
  }
  MatrixX<Scalar> shifted = p.matrix();
  shifted.array() -= Scalar(1) / Scalar(n);
  Eigen::SelfAdjointEigenSolver<MatrixX<Scalar>> eig(shifted, Eigen::EigenvaluesOnly);
  const Scalar rho = eig.eigenvalues().cwiseAbs().maxCoeff();
  const Scalar rho2 = rho * rho;
  const Scalar first = counted ? term * rho2 : term;
  out.tail_bound = rho2 < Scalar(1) ? first / (Scalar(1) - rho2) : std::numeric_limits<Scalar>::infinity();
  return out;
}

/// Second-smallest eigenvalue of a symmetric Laplacian. Diagnostic only.
template <typename Derived>
typename Derived::Scalar algebraic_connectivity(const Eigen::MatrixBase<Derived>& l) {
  using Scalar = typename Derived::Scalar;
  Eigen::SelfAdjointEigenSolver<MatrixX<Scalar>> eig(MatrixX<Scalar>(l), Eigen::EigenvaluesOnly);
  return eig.eigenvalues().size() > 1 ? eig.eigenvalues()(1) : Scalar(0);
}

// ---------------------------------------------------------------------------
// Flows

/// Signed per-edge flow; positive values travel from the lower to the higher
/// endpoint id of the edge.
struct FlowAssignment {
  std::vector<double> flow;
  double strength = 1.0;
};

inline constexpr double kFlowTolerance = 1e-9;

/// Throws NotAFlow unless f conserves flow at every node other than the
/// terminals and sends exactly `strength` out of the source.
void check_flow(const WeightedGraph& g, const FlowAssignment& f, double tol = kFlowTolerance);

/// Energy sum_e r_e f_e^2 of a valid s-t flow.
double flow_energy(const WeightedGraph& g, const FlowAssignment& f);

/// Electrical flow of the given strength, recovered from node potentials
/// z = (L + J/n)^{-1} (e_s - e_t) as f_ij = p_ij (z_i - z_j).
FlowAssignment electrical_flow(const WeightedGraph& g, double strength = 1.0);

}  // namespace netint

#endif  // NETINT_SPECTRAL_HPP
