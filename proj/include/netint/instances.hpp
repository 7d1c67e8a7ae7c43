#ifndef NETINT_INSTANCES_HPP
#define NETINT_INSTANCES_HPP

#include <Eigen/Dense>

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "netint/graph.hpp"

namespace netint {

// ---------------------------------------------------------------------------
// Random streams. Draws are derived from raw mt19937_64 output so instances
// are identical across standard libraries.

using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi].
int uniform_int(Rng& rng, int lo, int hi);
/// True with probability p.
bool bernoulli(Rng& rng, double p);

// ---------------------------------------------------------------------------
// Graph families. All generators return unit-resistance graphs with
// terminals (0, n-1).

enum class Family { Complete, Bipartite, Ring4, ErdosRenyi };

std::string to_string(Family family);
Family family_from_string(const std::string& name);

WeightedGraph gen_complete(int n);
/// Complete bipartite graph with parts floor(n/2) and ceil(n/2).
WeightedGraph gen_bipartite(int n);
/// Cycle where every node also links to the nodes two steps away (n >= 5).
WeightedGraph gen_ring4(int n);
/// G(n, p), resampled (up to `max_attempts` times) until its edge
/// connectivity is at least `min_connectivity`.
WeightedGraph gen_er(int n, double p, int min_connectivity, std::uint64_t seed,
                     int max_attempts = 1000);

WeightedGraph generate(Family family, int n, int min_connectivity, std::uint64_t seed,
                       double er_p = 0.5);

/// Same topology with integer weights drawn uniformly from {1, ..., 10}.
WeightedGraph with_random_weights(const WeightedGraph& g, std::uint64_t seed);

/// Metropolis normalization of edge weights w:
/// P_ij = w_ij / max(sum_k w_ik, sum_k w_jk), diagonal filling rows to one.
StochasticMatrix<double> metropolis(const WeightedGraph& g);

/// x0 with entry 0 at odd and 1 at even 1-based positions: (0, 1, 0, 1, ...).
Eigen::VectorXd alternating_x0(int n);

/// Uniformly random cut of exactly `budget` edges that keeps the pattern
/// connected.
EdgeCut random_feasible_cut(const StochasticMatrix<double>& p, int budget, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Reduction gadget: s joins one vertex v_ij per base edge (left side), each
// v_ij joins v_i and v_j (middle edges), and every v_i joins t.

/// Resistance standing in for zero-resistance middle edges.
inline constexpr double kZeroResistance = 1e-12;

enum class GadgetMode {
  /// Left edges a, middle edges delta (0 means kZeroResistance), right 1.
  Clique,
  /// Left and middle edges delta, right edges 1.
  Densest,
};

enum class GadgetEdgeClass { Left, Middle, Right };

struct GadgetGraph {
  WeightedGraph base;
  WeightedGraph gadget;
  GadgetMode mode = GadgetMode::Clique;
  double a = 0.0;
  double delta = 0.0;
  /// Gadget node of v_ij, by base edge id.
  std::vector<int> left_node;
  /// Gadget node of v_i, by base node.
  std::vector<int> right_node;
  /// Gadget edge {s, v_ij}, by base edge id.
  std::vector<int> left_edge;
  /// Gadget edges {v_ij, v_i} and {v_ij, v_j} (i < j), by base edge id.
  std::vector<std::array<int, 2>> middle_edge;
  /// Gadget edge {v_i, t}, by base node.
  std::vector<int> right_edge;
  /// Class of every gadget edge, by gadget edge id.
  std::vector<GadgetEdgeClass> edge_class;
};

GadgetGraph build_gadget(const WeightedGraph& base, double a, double delta, GadgetMode mode);

/// Cut associated with a base node subset S: the left edges of edges inside
/// S and, for edges with exactly one endpoint i in S, the middle edge
/// {v_i, v_ij}. Its size is m - |E[V \ S]|.
EdgeCut cut_from_subset(const GadgetGraph& gg, const std::vector<int>& subset);

/// Removes both middle edges of every base edge not inside `clique`.
EdgeCut clique_cut(const GadgetGraph& gg, const std::vector<int>& clique);

/// Effective resistance of parallel branches s -> u_k -> t, where branch k
/// has n_k left edges of resistance a and m_k unit right edges:
/// (sum_k 1 / (a/n_k + 1/m_k))^{-1}.
double contracted_reff(double a, const std::vector<std::pair<int, int>>& components);

}  // namespace netint

#endif  // NETINT_INSTANCES_HPP
