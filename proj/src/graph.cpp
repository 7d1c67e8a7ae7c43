#include "netint/graph.hpp"

#include <numeric>
#include <queue>

namespace netint {

std::optional<int> find_edge(const EdgeList& edges, int i, int j) {
  const NodePair key{std::min(i, j), std::max(i, j)};
  auto it = std::lower_bound(edges.begin(), edges.end(), key);
  if (it == edges.end() || *it != key) return std::nullopt;
  return static_cast<int>(it - edges.begin());
}

std::string to_string(EdgeMode mode) {
  switch (mode) {
    case EdgeMode::Resistance: return "resistance";
    case EdgeMode::Conductance: return "conductance";
    case EdgeMode::Stochastic: return "stochastic";
  }
  return "resistance";
}

EdgeMode edge_mode_from_string(const std::string& name) {
  if (name == "resistance") return EdgeMode::Resistance;
  if (name == "conductance") return EdgeMode::Conductance;
  if (name == "stochastic") return EdgeMode::Stochastic;
  throw Error(Errc::ParseError, "unknown edge mode '" + name + "'");
}

WeightedGraph::WeightedGraph(int n, std::vector<Edge> edges, EdgeMode mode, int source,
                             int sink, std::vector<double> diag)
    : n_(n), edges_(std::move(edges)), mode_(mode), s_(source), t_(sink), diag_(std::move(diag)) {
  if (n_ < 2) throw Error(Errc::InvalidGraph, "graph needs at least two nodes");
  if (s_ < 0 || s_ >= n_ || t_ < 0 || t_ >= n_) {
    throw Error(Errc::InvalidGraph, "terminal out of range");
  }
  if (s_ == t_) throw Error(Errc::InvalidGraph, "source and sink coincide");
  for (auto& e : edges_) {
    if (e.i > e.j) std::swap(e.i, e.j);
    if (e.i == e.j) throw Error(Errc::InvalidGraph, "self-loop on node " + std::to_string(e.i));
    if (e.i < 0 || e.j >= n_) throw Error(Errc::InvalidGraph, "edge endpoint out of range");
    if (!std::isfinite(e.value) || e.value <= 0.0) {
      throw Error(Errc::InvalidGraph, "edge {" + std::to_string(e.i) + "," + std::to_string(e.j) +
                                          "} has non-positive or non-finite value");
    }
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& a, const Edge& b) { return std::tie(a.i, a.j) < std::tie(b.i, b.j); });
  for (std::size_t k = 1; k < edges_.size(); ++k) {
    if (edges_[k].i == edges_[k - 1].i && edges_[k].j == edges_[k - 1].j) {
      throw Error(Errc::InvalidGraph, "duplicate edge {" + std::to_string(edges_[k].i) + "," +
                                          std::to_string(edges_[k].j) + "}");
    }
  }
  if (!diag_.empty()) {
    if (static_cast<int>(diag_.size()) != n_) {
      throw Error(Errc::InvalidGraph, "diag must have one entry per node");
    }
    for (double d : diag_) {
      if (!std::isfinite(d) || d < 0.0) throw Error(Errc::InvalidGraph, "diag entries must be >= 0");
    }
  }
  if (mode_ == EdgeMode::Stochastic && diag_.empty()) {
    diag_.assign(static_cast<std::size_t>(n_), 1.0);
    for (const auto& e : edges_) {
      diag_[static_cast<std::size_t>(e.i)] -= e.value;
      diag_[static_cast<std::size_t>(e.j)] -= e.value;
    }
  }
}

double WeightedGraph::resistance(int id) const {
  const double v = edge(id).value;
  return mode_ == EdgeMode::Resistance ? v : 1.0 / v;
}

double WeightedGraph::conductance(int id) const {
  const double v = edge(id).value;
  return mode_ == EdgeMode::Resistance ? 1.0 / v : v;
}

std::optional<int> WeightedGraph::edge_id(int i, int j) const {
  const auto key = std::make_pair(std::min(i, j), std::max(i, j));
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key, [](const Edge& e, const NodePair& k) {
    return std::tie(e.i, e.j) < std::tie(k.first, k.second);
  });
  if (it == edges_.end() || it->i != key.first || it->j != key.second) return std::nullopt;
  return static_cast<int>(it - edges_.begin());
}

EdgeList WeightedGraph::pairs() const {
  EdgeList out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.emplace_back(e.i, e.j);
  return out;
}

WeightedGraph WeightedGraph::without(const std::vector<int>& removed) const {
  std::vector<bool> drop(edges_.size(), false);
  for (int id : removed) drop.at(static_cast<std::size_t>(id)) = true;
  std::vector<Edge> kept;
  kept.reserve(edges_.size());
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    if (!drop[k]) kept.push_back(edges_[k]);
  }
  std::vector<double> diag;
  if (mode_ == EdgeMode::Stochastic) {
    diag = diag_;
    for (std::size_t k = 0; k < edges_.size(); ++k) {
      if (!drop[k]) continue;
      diag[static_cast<std::size_t>(edges_[k].i)] += edges_[k].value;
      diag[static_cast<std::size_t>(edges_[k].j)] += edges_[k].value;
    }
  }
  return WeightedGraph(n_, std::move(kept), mode_, s_, t_, std::move(diag));
}

WeightedGraph WeightedGraph::with_terminals(int source, int sink) const {
  return WeightedGraph(n_, edges_, mode_, source, sink, diag_);
}

WeightedGraph WeightedGraph::as_resistance() const {
  if (mode_ == EdgeMode::Resistance) return *this;
  std::vector<Edge> edges = edges_;
  for (auto& e : edges) e.value = 1.0 / e.value;
  return WeightedGraph(n_, std::move(edges), EdgeMode::Resistance, s_, t_);
}

Eigen::MatrixXd WeightedGraph::conductance_matrix() const {
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n_, n_);
  for (int id = 0; id < edge_count(); ++id) {
    const auto& e = edges_[static_cast<std::size_t>(id)];
    const double c = conductance(id);
    w(e.i, e.j) = c;
    w(e.j, e.i) = c;
  }
  if (mode_ == EdgeMode::Stochastic) {
    for (int i = 0; i < n_; ++i) w(i, i) = diag_[static_cast<std::size_t>(i)];
  }
  return w;
}

bool is_connected(int n, const EdgeList& edges) {
  if (n <= 1) return true;
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (auto [i, j] : edges) {
    adj[static_cast<std::size_t>(i)].push_back(j);
    adj[static_cast<std::size_t>(j)].push_back(i);
  }
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::queue<int> frontier;
  frontier.push(0);
  seen[0] = true;
  int count = 1;
  while (!frontier.empty()) {
    const int v = frontier.front();
    frontier.pop();
    for (int w : adj[static_cast<std::size_t>(v)]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        ++count;
        frontier.push(w);
      }
    }
  }
  return count == n;
}

EdgeCut::EdgeCut(int edge_count, std::vector<int> removed) : m_(edge_count), removed_(std::move(removed)) {
  std::sort(removed_.begin(), removed_.end());
  removed_.erase(std::unique(removed_.begin(), removed_.end()), removed_.end());
  for (int id : removed_) {
    if (id < 0 || id >= m_) {
      throw Error(Errc::EdgeNotPresent, "edge id " + std::to_string(id) + " out of range");
    }
  }
}

EdgeList EdgeCut::pairs(const EdgeList& edges) const {
  EdgeList out;
  out.reserve(removed_.size());
  for (int id : removed_) out.push_back(edges.at(static_cast<std::size_t>(id)));
  return out;
}

StochasticMatrix<double> to_stochastic(const WeightedGraph& g) {
  if (g.mode() != EdgeMode::Stochastic) {
    throw Error(Errc::InvalidGraph, "graph is in " + to_string(g.mode()) +
                                        " mode; a stochastic-mode graph is required");
  }
  return validate_stochastic(g.conductance_matrix());
}

WeightedGraph to_graph(const StochasticMatrix<double>& p, int source, int sink) {
  std::vector<Edge> edges;
  for (auto [i, j] : p.edges()) edges.push_back({i, j, p(i, j)});
  std::vector<double> diag(static_cast<std::size_t>(p.size()));
  for (Eigen::Index i = 0; i < p.size(); ++i) diag[static_cast<std::size_t>(i)] = p(i, i);
  return WeightedGraph(static_cast<int>(p.size()), std::move(edges), EdgeMode::Stochastic, source, sink,
                       std::move(diag));
}

}  // namespace netint
