#include "netint/spectral.hpp"

namespace netint {

void check_flow(const WeightedGraph& g, const FlowAssignment& f, double tol) {
  if (static_cast<int>(f.flow.size()) != g.edge_count()) {
    throw Error(Errc::NotAFlow, "flow has " + std::to_string(f.flow.size()) + " entries for " +
                                    std::to_string(g.edge_count()) + " edges");
  }
  std::vector<double> net(static_cast<std::size_t>(g.node_count()), 0.0);
  for (int id = 0; id < g.edge_count(); ++id) {
    const auto& e = g.edge(id);
    const double v = f.flow[static_cast<std::size_t>(id)];
    if (!std::isfinite(v)) throw Error(Errc::NotAFlow, "non-finite flow value");
    net[static_cast<std::size_t>(e.i)] += v;
    net[static_cast<std::size_t>(e.j)] -= v;
  }
  for (int v = 0; v < g.node_count(); ++v) {
    const double out = net[static_cast<std::size_t>(v)];
    double expected = 0.0;
    if (v == g.source()) expected = f.strength;
    if (v == g.sink()) expected = -f.strength;
    if (std::abs(out - expected) > tol) {
      throw Error(Errc::NotAFlow, "net out-flow " + std::to_string(out) + " at node " +
                                      std::to_string(v) + ", expected " + std::to_string(expected));
    }
  }
}

double flow_energy(const WeightedGraph& g, const FlowAssignment& f) {
  check_flow(g, f);
  double energy = 0.0;
  for (int id = 0; id < g.edge_count(); ++id) {
    const double v = f.flow[static_cast<std::size_t>(id)];
    energy += g.resistance(id) * v * v;
  }
  return energy;
}

FlowAssignment electrical_flow(const WeightedGraph& g, double strength) {
  const Eigen::MatrixXd w = g.conductance_matrix();
  if (!is_connected(w)) throw Error(Errc::Disconnected, "network is disconnected");
  Eigen::VectorXd chi = Eigen::VectorXd::Zero(g.node_count());
  chi(g.source()) = strength;
  chi(g.sink()) = -strength;
  const Eigen::VectorXd z = solve_shifted(conductance_laplacian(w), chi);
  FlowAssignment f;
  f.strength = strength;
  f.flow.reserve(static_cast<std::size_t>(g.edge_count()));
  for (int id = 0; id < g.edge_count(); ++id) {
    const auto& e = g.edge(id);
    f.flow.push_back(g.conductance(id) * (z(e.i) - z(e.j)));
  }
  return f;
}

}  // namespace netint
