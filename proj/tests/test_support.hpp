#ifndef NETINT_TEST_SUPPORT_HPP
#define NETINT_TEST_SUPPORT_HPP

#include <Eigen/Dense>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include "netint/graph.hpp"
#include "netint/instances.hpp"
#include "netint/spectral.hpp"

namespace support {

using netint::EdgeList;
using netint::Rng;
using netint::WeightedGraph;

inline double uniform_real(Rng& rng, double lo, double hi) {
  return lo + (hi - lo) * static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline Eigen::VectorXd random_vector(Rng& rng, int n, double lo = -1.0, double hi = 1.0) {
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v(i) = uniform_real(rng, lo, hi);
  return v;
}

/// Connected G(n, density) with real edge values drawn from [lo, hi].
inline WeightedGraph random_graph(Rng& rng, int n, double density, double lo, double hi,
                                  netint::EdgeMode mode = netint::EdgeMode::Resistance,
                                  int min_connectivity = 1) {
  const auto topology = netint::gen_er(n, density, min_connectivity, rng());
  std::vector<netint::Edge> edges = topology.edges();
  for (auto& e : edges) e.value = uniform_real(rng, lo, hi);
  return WeightedGraph(n, std::move(edges), mode, 0, n - 1);
}

/// Metropolis matrix of a random connected graph with real weights.
inline netint::StochasticMatrix<double> random_stochastic(Rng& rng, int n, double density = 0.5,
                                                          int min_connectivity = 1) {
  return netint::metropolis(random_graph(rng, n, density, 1.0, 10.0, netint::EdgeMode::Resistance,
                                         min_connectivity));
}

/// Smallest number of edges whose removal separates s from t, by trying
/// every subset in order of size.
inline int brute_min_cut(int n, const EdgeList& edges, int s, int t) {
  const int m = static_cast<int>(edges.size());
  auto separated = [&](std::uint32_t mask) {
    EdgeList rest;
    for (int e = 0; e < m; ++e) {
      if (!(mask >> e & 1U)) rest.push_back(edges[static_cast<std::size_t>(e)]);
    }
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (auto [i, j] : rest) {
      adj[static_cast<std::size_t>(i)].push_back(j);
      adj[static_cast<std::size_t>(j)].push_back(i);
    }
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<int> stack{s};
    seen[static_cast<std::size_t>(s)] = true;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : adj[static_cast<std::size_t>(v)]) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          stack.push_back(w);
        }
      }
    }
    return !seen[static_cast<std::size_t>(t)];
  };
  int best = m;
  for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
    const int size = __builtin_popcount(mask);
    if (size < best && separated(mask)) best = size;
  }
  return best;
}

/// Bottleneck value by enumerating every simple s-t path; edges listed in
/// `removed` are skipped. Infinity when no path exists.
inline double brute_phi(const WeightedGraph& g, const std::vector<int>& removed = {}) {
  const int n = g.node_count();
  std::vector<bool> drop(static_cast<std::size_t>(g.edge_count()), false);
  for (int id : removed) drop[static_cast<std::size_t>(id)] = true;
  std::vector<std::vector<std::pair<int, double>>> adj(static_cast<std::size_t>(n));
  for (int id = 0; id < g.edge_count(); ++id) {
    if (drop[static_cast<std::size_t>(id)]) continue;
    const auto& e = g.edge(id);
    adj[static_cast<std::size_t>(e.i)].push_back({e.j, g.resistance(id)});
    adj[static_cast<std::size_t>(e.j)].push_back({e.i, g.resistance(id)});
  }
  double best = std::numeric_limits<double>::infinity();
  std::vector<bool> on_path(static_cast<std::size_t>(n), false);
  std::function<void(int, double)> walk = [&](int v, double worst) {
    if (v == g.sink()) {
      best = std::min(best, worst);
      return;
    }
    on_path[static_cast<std::size_t>(v)] = true;
    for (auto [w, r] : adj[static_cast<std::size_t>(v)]) {
      if (!on_path[static_cast<std::size_t>(w)]) walk(w, std::max(worst, r));
    }
    on_path[static_cast<std::size_t>(v)] = false;
  };
  walk(g.source(), 0.0);
  return best;
}

/// A unit s-t flow along one randomly chosen simple path.
inline netint::FlowAssignment random_path_flow(const WeightedGraph& g, Rng& rng) {
  const int n = g.node_count();
  std::vector<std::vector<int>> incident(static_cast<std::size_t>(n));
  for (int id = 0; id < g.edge_count(); ++id) {
    incident[static_cast<std::size_t>(g.edge(id).i)].push_back(id);
    incident[static_cast<std::size_t>(g.edge(id).j)].push_back(id);
  }
  for (auto& list : incident) {
    for (std::size_t k = list.size(); k > 1; --k) std::swap(list[k - 1], list[rng() % k]);
  }
  std::vector<int> via(static_cast<std::size_t>(n), -2);
  std::vector<int> stack{g.source()};
  via[static_cast<std::size_t>(g.source())] = -1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int id : incident[static_cast<std::size_t>(v)]) {
      const auto& e = g.edge(id);
      const int w = e.i == v ? e.j : e.i;
      if (via[static_cast<std::size_t>(w)] != -2) continue;
      via[static_cast<std::size_t>(w)] = id;
      stack.push_back(w);
    }
  }
  netint::FlowAssignment f;
  f.flow.assign(static_cast<std::size_t>(g.edge_count()), 0.0);
  for (int v = g.sink(); v != g.source();) {
    const int id = via[static_cast<std::size_t>(v)];
    const auto& e = g.edge(id);
    const int prev = e.i == v ? e.j : e.i;
    f.flow[static_cast<std::size_t>(id)] += prev == e.i ? 1.0 : -1.0;
    v = prev;
  }
  return f;
}

/// A random unit flow: a convex mix of a few path flows and the electrical
/// flow of the same topology under scrambled resistances.
inline netint::FlowAssignment random_unit_flow(const WeightedGraph& g, Rng& rng) {
  std::vector<netint::Edge> edges = g.edges();
  for (auto& e : edges) e.value = uniform_real(rng, 0.1, 10.0);
  const WeightedGraph scrambled(g.node_count(), edges, netint::EdgeMode::Resistance, g.source(), g.sink());
  netint::FlowAssignment mix = netint::electrical_flow(scrambled);
  double weight = uniform_real(rng, 0.0, 1.0);
  for (auto& v : mix.flow) v *= weight;
  double left = 1.0 - weight;
  for (int k = 0; k < 3; ++k) {
    const double w = k == 2 ? left : left * uniform_real(rng, 0.0, 1.0);
    left -= w;
    const auto path = random_path_flow(g, rng);
    for (std::size_t e = 0; e < mix.flow.size(); ++e) mix.flow[e] += w * path.flow[e];
  }
  mix.strength = 1.0;
  return mix;
}

}  // namespace support

#endif  // NETINT_TEST_SUPPORT_HPP
