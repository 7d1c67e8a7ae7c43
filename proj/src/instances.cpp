#include "netint/instances.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "netint/mincut.hpp"

namespace netint {

int uniform_int(Rng& rng, int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  // Rejection keeps the draw unbiased.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return lo + static_cast<int>(x % span);
}

bool bernoulli(Rng& rng, double p) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return u < p;
}

std::string to_string(Family family) {
  switch (family) {
    case Family::Complete: return "complete";
    case Family::Bipartite: return "bipartite";
    case Family::Ring4: return "ring4";
    case Family::ErdosRenyi: return "er";
  }
  return "complete";
}

Family family_from_string(const std::string& name) {
  if (name == "complete") return Family::Complete;
  if (name == "bipartite") return Family::Bipartite;
  if (name == "ring4") return Family::Ring4;
  if (name == "er") return Family::ErdosRenyi;
  throw Error(Errc::ParseError, "unknown family '" + name + "'");
}

namespace {

WeightedGraph unit_graph(int n, const EdgeList& pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [i, j] : pairs) edges.push_back({i, j, 1.0});
  return WeightedGraph(n, std::move(edges), EdgeMode::Resistance, 0, n - 1);
}

void require_nodes(int n, int minimum, const char* family) {
  if (n < minimum) {
    throw Error(Errc::TooSmall, std::string(family) + " needs at least " + std::to_string(minimum) +
                                    " nodes, got " + std::to_string(n));
  }
}

}  // namespace

WeightedGraph gen_complete(int n) {
  require_nodes(n, 2, "complete");
  EdgeList pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  return unit_graph(n, pairs);
}

WeightedGraph gen_bipartite(int n) {
  require_nodes(n, 2, "bipartite");
  const int left = n / 2;
  EdgeList pairs;
  for (int i = 0; i < left; ++i) {
    for (int j = left; j < n; ++j) pairs.emplace_back(i, j);
  }
  return unit_graph(n, pairs);
}

WeightedGraph gen_ring4(int n) {
  require_nodes(n, 5, "ring4");
  EdgeList pairs;
  for (int i = 0; i < n; ++i) {
    for (int step : {1, 2}) {
      const int j = (i + step) % n;
      pairs.emplace_back(std::min(i, j), std::max(i, j));
    }
  }
  std::sort(pairs.begin(), pairs.end());
  return unit_graph(n, pairs);
}

WeightedGraph gen_er(int n, double p, int min_connectivity, std::uint64_t seed, int max_attempts) {
  require_nodes(n, 2, "er");
  if (!(p > 0.0 && p < 1.0)) throw Error(Errc::InvalidGraph, "edge probability must lie in (0, 1)");
  Rng rng(seed);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    EdgeList pairs;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (bernoulli(rng, p)) pairs.emplace_back(i, j);
      }
    }
    if (edge_connectivity(n, pairs) >= std::max(min_connectivity, 1)) return unit_graph(n, pairs);
  }
  throw Error(Errc::ResampleLimit, "no " + std::to_string(min_connectivity) +
                                       "-edge-connected G(" + std::to_string(n) + ", p) within " +
                                       std::to_string(max_attempts) + " attempts");
}

WeightedGraph generate(Family family, int n, int min_connectivity, std::uint64_t seed, double er_p) {
  switch (family) {
    case Family::Complete: return gen_complete(n);
    case Family::Bipartite: return gen_bipartite(n);
    case Family::Ring4: return gen_ring4(n);
    case Family::ErdosRenyi: return gen_er(n, er_p, min_connectivity, seed);
  }
  throw Error(Errc::InvalidGraph, "unknown family");
}

WeightedGraph with_random_weights(const WeightedGraph& g, std::uint64_t seed) {
  // Offset the stream so topology and weights never share draws.
  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<Edge> edges = g.edges();
  for (auto& e : edges) e.value = uniform_int(rng, 1, 10);
  return WeightedGraph(g.node_count(), std::move(edges), EdgeMode::Resistance, g.source(), g.sink());
}

StochasticMatrix<double> metropolis(const WeightedGraph& g) {
  const int n = g.node_count();
  std::vector<double> strength(static_cast<std::size_t>(n), 0.0);
  for (const auto& e : g.edges()) {
    strength[static_cast<std::size_t>(e.i)] += e.value;
    strength[static_cast<std::size_t>(e.j)] += e.value;
  }
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(n, n);
  // Diagonal as a sum of slack terms w/d_i - w/max(d_i, d_j).
  for (const auto& e : g.edges()) {
    const double di = strength[static_cast<std::size_t>(e.i)];
    const double dj = strength[static_cast<std::size_t>(e.j)];
    const double top = std::max(di, dj);
    const double v = e.value / top;
    p(e.i, e.j) = v;
    p(e.j, e.i) = v;
    p(e.i, e.i) += e.value * (top - di) / (di * top);
    p(e.j, e.j) += e.value * (top - dj) / (dj * top);
  }
  return validate_stochastic(p);
}

Eigen::VectorXd alternating_x0(int n) {
  if (n < 1) throw Error(Errc::TooSmall, "x0 needs at least one entry");
  Eigen::VectorXd x(n);
  for (int k = 0; k < n; ++k) x(k) = (k + 1) % 2 == 0 ? 1.0 : 0.0;
  return x;
}

EdgeCut random_feasible_cut(const StochasticMatrix<double>& p, int budget, std::uint64_t seed) {
  const int m = p.edge_count();
  if (budget < 0 || budget > m) throw Error(Errc::BudgetTooLarge, "budget out of range");
  Rng rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<int> ids(static_cast<std::size_t>(m));
    std::iota(ids.begin(), ids.end(), 0);
    // Partial Fisher-Yates.
    for (int k = 0; k < budget; ++k) {
      std::swap(ids[static_cast<std::size_t>(k)], ids[static_cast<std::size_t>(uniform_int(rng, k, m - 1))]);
    }
    ids.resize(static_cast<std::size_t>(budget));
    EdgeCut cut(m, ids);
    EdgeList rest;
    for (int e = 0; e < m; ++e) {
      if (!cut.contains(e)) rest.push_back(p.edges()[static_cast<std::size_t>(e)]);
    }
    if (is_connected(static_cast<int>(p.size()), rest)) return cut;
  }
  throw Error(Errc::ResampleLimit, "no connectivity-preserving random cut found");
}

GadgetGraph build_gadget(const WeightedGraph& base, double a, double delta, GadgetMode mode) {
  const int n = base.node_count();
  const int m = base.edge_count();
  if (n < 2) throw Error(Errc::TooSmall, "gadget base needs at least two nodes");
  if (!(delta >= 0.0) || (mode == GadgetMode::Clique && !(a > 0.0))) {
    throw Error(Errc::InvalidGraph, "gadget resistances must be positive");
  }
  const double small = delta > 0.0 ? delta : kZeroResistance;
  const double left_r = mode == GadgetMode::Clique ? a : small;

  GadgetGraph gg;
  gg.base = base;
  gg.mode = mode;
  gg.a = a;
  gg.delta = delta;
  const int s = 0;
  const int t = n + m + 1;
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(3 * m + n));
  for (int e = 0; e < m; ++e) {
    const int v = 1 + e;
    gg.left_node.push_back(v);
    edges.push_back({s, v, left_r});
  }
  for (int i = 0; i < n; ++i) {
    const int v = 1 + m + i;
    gg.right_node.push_back(v);
    edges.push_back({v, t, 1.0});
  }
  for (int e = 0; e < m; ++e) {
    const auto& be = base.edge(e);
    edges.push_back({gg.left_node[static_cast<std::size_t>(e)], gg.right_node[static_cast<std::size_t>(be.i)], small});
    edges.push_back({gg.left_node[static_cast<std::size_t>(e)], gg.right_node[static_cast<std::size_t>(be.j)], small});
  }
  gg.gadget = WeightedGraph(n + m + 2, std::move(edges), EdgeMode::Resistance, s, t);

  gg.edge_class.assign(static_cast<std::size_t>(gg.gadget.edge_count()), GadgetEdgeClass::Middle);
  for (int e = 0; e < m; ++e) {
    const auto& be = base.edge(e);
    const int v = gg.left_node[static_cast<std::size_t>(e)];
    const int left = *gg.gadget.edge_id(s, v);
    gg.left_edge.push_back(left);
    gg.edge_class[static_cast<std::size_t>(left)] = GadgetEdgeClass::Left;
    gg.middle_edge.push_back({*gg.gadget.edge_id(v, gg.right_node[static_cast<std::size_t>(be.i)]),
                              *gg.gadget.edge_id(v, gg.right_node[static_cast<std::size_t>(be.j)])});
  }
  for (int i = 0; i < n; ++i) {
    const int right = *gg.gadget.edge_id(gg.right_node[static_cast<std::size_t>(i)], t);
    gg.right_edge.push_back(right);
    gg.edge_class[static_cast<std::size_t>(right)] = GadgetEdgeClass::Right;
  }
  return gg;
}

EdgeCut cut_from_subset(const GadgetGraph& gg, const std::vector<int>& subset) {
  std::vector<bool> in(static_cast<std::size_t>(gg.base.node_count()), false);
  for (int v : subset) in.at(static_cast<std::size_t>(v)) = true;
  std::vector<int> removed;
  for (int e = 0; e < gg.base.edge_count(); ++e) {
    const auto& be = gg.base.edge(e);
    const bool in_i = in[static_cast<std::size_t>(be.i)];
    const bool in_j = in[static_cast<std::size_t>(be.j)];
    if (in_i && in_j) {
      removed.push_back(gg.left_edge[static_cast<std::size_t>(e)]);
    } else if (in_i) {
      removed.push_back(gg.middle_edge[static_cast<std::size_t>(e)][0]);
    } else if (in_j) {
      removed.push_back(gg.middle_edge[static_cast<std::size_t>(e)][1]);
    }
  }
  return EdgeCut(gg.gadget.edge_count(), std::move(removed));
}

EdgeCut clique_cut(const GadgetGraph& gg, const std::vector<int>& clique) {
  std::vector<bool> in(static_cast<std::size_t>(gg.base.node_count()), false);
  for (int v : clique) in.at(static_cast<std::size_t>(v)) = true;
  std::vector<int> removed;
  for (int e = 0; e < gg.base.edge_count(); ++e) {
    const auto& be = gg.base.edge(e);
    if (in[static_cast<std::size_t>(be.i)] && in[static_cast<std::size_t>(be.j)]) continue;
    removed.push_back(gg.middle_edge[static_cast<std::size_t>(e)][0]);
    removed.push_back(gg.middle_edge[static_cast<std::size_t>(e)][1]);
  }
  return EdgeCut(gg.gadget.edge_count(), std::move(removed));
}

double contracted_reff(double a, const std::vector<std::pair<int, int>>& components) {
  if (components.empty()) throw Error(Errc::InvalidGraph, "no components");
  double conductance = 0.0;
  for (auto [nk, mk] : components) {
    if (nk < 1 || mk < 1) throw Error(Errc::InvalidGraph, "component sizes must be positive");
    conductance += 1.0 / (a / nk + 1.0 / mk);
  }
  return 1.0 / conductance;
}

}  // namespace netint
