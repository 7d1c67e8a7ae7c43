#ifndef NETINT_GRAPH_HPP
#define NETINT_GRAPH_HPP

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "netint/error.hpp"

namespace netint {

using NodePair = std::pair<int, int>;
/// Undirected edges as (i, j) with i < j, sorted lexicographically. The
/// position of a pair in this list is its edge id.
using EdgeList = std::vector<NodePair>;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Returns the id of {i, j} in a sorted edge list, if present.
std::optional<int> find_edge(const EdgeList& edges, int i, int j);

// ---------------------------------------------------------------------------
// WeightedGraph

enum class EdgeMode { Resistance, Conductance, Stochastic };

std::string to_string(EdgeMode mode);
EdgeMode edge_mode_from_string(const std::string& name);

struct Edge {
  int i = 0;
  int j = 0;
  double value = 0.0;
};

/// Undirected simple graph with one positive value per edge and two
/// terminals. Edges are stored with i < j in lexicographic order; the index
/// into `edges()` is the edge id used everywhere else.
///
/// In `Stochastic` mode the edge values are the off-diagonal entries p_ij of
/// a symmetric stochastic matrix and `diag()` holds the self-loop weights.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  WeightedGraph(int n, std::vector<Edge> edges, EdgeMode mode, int source, int sink,
                std::vector<double> diag = {});

  int node_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int id) const { return edges_.at(static_cast<std::size_t>(id)); }
  EdgeMode mode() const { return mode_; }
  int source() const { return s_; }
  int sink() const { return t_; }
  const std::vector<double>& diag() const { return diag_; }

  double resistance(int id) const;
  double conductance(int id) const;
  std::optional<int> edge_id(int i, int j) const;
  EdgeList pairs() const;

  /// Same nodes and terminals with the listed edge ids dropped; surviving
  /// edges keep their relative order.
  WeightedGraph without(const std::vector<int>& removed) const;
  /// Same graph with different terminals.
  WeightedGraph with_terminals(int source, int sink) const;
  /// Same topology in resistance mode (r_e = 1/p_e for conductance inputs).
  WeightedGraph as_resistance() const;

  /// Symmetric matrix of edge conductances; the diagonal is zero except in
  /// stochastic mode, where it carries the self-loop weights.
  Eigen::MatrixXd conductance_matrix() const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  EdgeMode mode_ = EdgeMode::Resistance;
  int s_ = 0;
  int t_ = 1;
  std::vector<double> diag_;
};

// ---------------------------------------------------------------------------
// Pattern helpers

/// Sorted list of {i, j}, i < j, with a strictly positive off-diagonal entry.
template <typename Derived>
EdgeList off_diagonal_pattern(const Eigen::MatrixBase<Derived>& w) {
  EdgeList out;
  for (Eigen::Index i = 0; i < w.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < w.cols(); ++j) {
      if (w(i, j) > 0) out.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return out;
}

bool is_connected(int n, const EdgeList& edges);

/// Connectivity of the graph whose edges are the nonzero off-diagonals of w.
template <typename Derived>
bool is_connected(const Eigen::MatrixBase<Derived>& w) {
  const auto n = static_cast<int>(w.rows());
  EdgeList edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (w(i, j) != 0) edges.emplace_back(i, j);
    }
  }
  return is_connected(n, edges);
}

// ---------------------------------------------------------------------------
// EdgeCut

/// A set of removed edge ids over an edge list of fixed length m, together
/// with its complement characteristic vector y (y_e = 0 iff e removed).
class EdgeCut {
 public:
  EdgeCut() = default;
  EdgeCut(int edge_count, std::vector<int> removed);

  /// Cut encoded by a binary vector; entries below 1/2 count as removed.
  template <typename Derived>
  static EdgeCut from_y(const Eigen::MatrixBase<Derived>& y) {
    std::vector<int> removed;
    for (Eigen::Index e = 0; e < y.size(); ++e) {
      if (y(e) < 0.5) removed.push_back(static_cast<int>(e));
    }
    return EdgeCut(static_cast<int>(y.size()), std::move(removed));
  }

  int edge_count() const { return m_; }
  int size() const { return static_cast<int>(removed_.size()); }
  bool empty() const { return removed_.empty(); }
  const std::vector<int>& removed() const { return removed_; }
  bool contains(int id) const { return std::binary_search(removed_.begin(), removed_.end(), id); }

  template <typename Scalar = double>
  VectorX<Scalar> y() const {
    VectorX<Scalar> out = VectorX<Scalar>::Ones(m_);
    for (int e : removed_) out(e) = Scalar(0);
    return out;
  }

  /// Endpoint pairs of the removed edges.
  EdgeList pairs(const EdgeList& edges) const;

  friend bool operator==(const EdgeCut&, const EdgeCut&) = default;

 private:
  int m_ = 0;
  std::vector<int> removed_;
};

// ---------------------------------------------------------------------------
// StochasticMatrix

inline constexpr double kRowSumTolerance = 1e-12;

/// Symmetric, entrywise nonnegative matrix with unit row sums. Only
/// obtainable through `validate_stochastic`, so every instance satisfies the
/// invariants. The positive off-diagonal pattern defines the edge set.
template <typename Scalar = double>
class StochasticMatrix {
 public:
  using Matrix = MatrixX<Scalar>;

  StochasticMatrix() = default;

  const Matrix& matrix() const { return p_; }
  Eigen::Index size() const { return p_.rows(); }
  Scalar operator()(Eigen::Index i, Eigen::Index j) const { return p_(i, j); }
  const EdgeList& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  std::optional<int> edge_id(int i, int j) const { return find_edge(edges_, i, j); }
  bool connected() const { return is_connected(static_cast<int>(size()), edges_); }

  /// Off-diagonal values p_e in edge-id order.
  VectorX<Scalar> edge_weights() const {
    VectorX<Scalar> w(edge_count());
    for (int e = 0; e < edge_count(); ++e) w(e) = p_(edges_[e].first, edges_[e].second);
    return w;
  }

  /// Wraps a matrix that already passed the checks in validate_stochastic.
  struct Checked {};
  StochasticMatrix(Checked, Matrix p) : p_(std::move(p)), edges_(off_diagonal_pattern(p_)) {}

 private:
  Matrix p_;
  EdgeList edges_;
};

/// Checks the symmetric stochastic contract: square, finite, exactly
/// symmetric, nonnegative, and every row summing to 1 within `tolerance`.
/// Reducible matrices are accepted; solvers reject them later.
template <typename Derived>
StochasticMatrix<typename Derived::Scalar> validate_stochastic(
    const Eigen::MatrixBase<Derived>& m, double tolerance = kRowSumTolerance) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw Error(Errc::NotSquare, "matrix must be square");
  if (m.rows() == 0) throw Error(Errc::NotSquare, "matrix must be nonempty");
  const Eigen::Index n = m.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (!std::isfinite(static_cast<double>(m(i, j)))) {
        throw Error(Errc::NonFinite, "entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (m(i, j) != m(j, i)) {
        throw Error(Errc::NotSymmetric,
                    "entries (" + std::to_string(i) + "," + std::to_string(j) + ") differ");
      }
    }
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (m(i, j) < Scalar(0)) {
        throw Error(Errc::NegativeEntry, "entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    const Scalar row = m.row(i).sum();
    if (std::abs(static_cast<double>(row - Scalar(1))) > tolerance) {
      throw Error(Errc::RowSumViolation, "row " + std::to_string(i) + " sums to " +
                                             std::to_string(static_cast<double>(row)));
    }
  }
  return StochasticMatrix<Scalar>(typename StochasticMatrix<Scalar>::Checked{}, MatrixX<Scalar>(m));
}

/// Removes the listed edges, returning each removed weight p_ij to both
/// diagonal entries so rows still sum to one.
template <typename Scalar>
StochasticMatrix<Scalar> interdict(const StochasticMatrix<Scalar>& p, const EdgeList& removed) {
  MatrixX<Scalar> out = p.matrix();
  for (auto [a, b] : removed) {
    const int i = std::min(a, b);
    const int j = std::max(a, b);
    if (i == j || i < 0 || j >= p.size() || out(i, j) <= Scalar(0)) {
      throw Error(Errc::EdgeNotPresent,
                  "edge {" + std::to_string(i) + "," + std::to_string(j) + "} not in matrix");
    }
    const Scalar w = out(i, j);
    out(i, j) = Scalar(0);
    out(j, i) = Scalar(0);
    out(i, i) += w;
    out(j, j) += w;
  }
  return validate_stochastic(out);
}

template <typename Scalar>
StochasticMatrix<Scalar> interdict(const StochasticMatrix<Scalar>& p, const EdgeCut& cut) {
  if (cut.edge_count() != p.edge_count()) {
    throw Error(Errc::EdgeNotPresent, "cut refers to an edge list of length " +
                                          std::to_string(cut.edge_count()) + ", matrix has " +
                                          std::to_string(p.edge_count()));
  }
  return interdict(p, cut.pairs(p.edges()));
}

/// Laplacian of an arbitrary symmetric conductance matrix; diagonal entries of
/// `w` are self-loops and do not contribute.
template <typename Derived>
MatrixX<typename Derived::Scalar> conductance_laplacian(const Eigen::MatrixBase<Derived>& w) {
  using Scalar = typename Derived::Scalar;
  MatrixX<Scalar> l = -w;
  l.diagonal().setZero();
  for (Eigen::Index i = 0; i < l.rows(); ++i) l(i, i) = -l.row(i).sum();
  return l;
}

/// I - P, or I - P^2 when `squared` is set.
template <typename Scalar>
MatrixX<Scalar> laplacian(const StochasticMatrix<Scalar>& p, bool squared = false) {
  const auto n = p.size();
  if (!squared) return MatrixX<Scalar>::Identity(n, n) - p.matrix();
  return MatrixX<Scalar>::Identity(n, n) - p.matrix() * p.matrix();
}

/// Builds the stochastic matrix described by a stochastic-mode graph.
StochasticMatrix<double> to_stochastic(const WeightedGraph& g);

/// Stochastic-mode graph carrying exactly the entries of P.
WeightedGraph to_graph(const StochasticMatrix<double>& p, int source, int sink);

}  // namespace netint

#endif  // NETINT_GRAPH_HPP
