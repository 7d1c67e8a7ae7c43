#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "netint/counterexample.hpp"
#include "netint/spectral.hpp"
#include "test_support.hpp"

using namespace netint;

namespace {

Eigen::MatrixXd squared(const StochasticMatrix<double>& p) { return p.matrix() * p.matrix(); }

WeightedGraph chain(const std::vector<double>& r) {
  std::vector<Edge> edges;
  for (std::size_t k = 0; k < r.size(); ++k) edges.push_back({static_cast<int>(k), static_cast<int>(k + 1), r[k]});
  return WeightedGraph(static_cast<int>(r.size()) + 1, edges, EdgeMode::Resistance, 0, static_cast<int>(r.size()));
}

}  // namespace

TEST_CASE("solve_shifted") {
  Rng rng(3);
  const auto p = support::random_stochastic(rng, 7);
  const Eigen::MatrixXd l = laplacian(p);
  const Eigen::VectorXd ones = Eigen::VectorXd::Ones(7);
  CHECK((solve_shifted(l, ones) - ones).cwiseAbs().maxCoeff() < 1e-12);

  const auto q = interdict(triangle_matrix(), EdgeList{{0, 2}});
  const Eigen::VectorXd chi = Eigen::Vector3d(1, 0, -1);
  CHECK(chi.dot(solve_shifted(conductance_laplacian(squared(q)), chi)) == doctest::Approx(18.0 / 5).epsilon(1e-12));

  for (int trial = 0; trial < 30; ++trial) {
    const int n = 3 + trial % 15;
    const auto r = support::random_stochastic(rng, n);
    const Eigen::MatrixXd lr = laplacian(r, trial % 2 == 0);
    const Eigen::VectorXd b = support::random_vector(rng, n);
    const Eigen::VectorXd z = solve_shifted(lr, b);
    Eigen::MatrixXd shifted = lr;
    shifted.array() += 1.0 / n;
    CHECK((shifted * z - b).norm() <= 1e-9 * (1 + b.norm()));
  }

  CHECK_THROWS_AS(solve_shifted(laplacian(validate_stochastic(Eigen::Matrix3d::Identity())), ones.head(3)), Error);
}

TEST_CASE("effective resistance closed forms") {
  const WeightedGraph one(2, {{0, 1, 2.0}}, EdgeMode::Resistance, 0, 1);
  CHECK(effective_resistance(one) == doctest::Approx(2.0).epsilon(1e-14));
  const WeightedGraph parallel(2, {{0, 1, 1.0 + 1.0 / 5}}, EdgeMode::Conductance, 0, 1);
  CHECK(effective_resistance(parallel) == doctest::Approx(5.0 / 6).epsilon(1e-14));

  const auto q = interdict(triangle_matrix(), EdgeList{{1, 2}});
  CHECK(effective_resistance(squared(q), 0, 2) == doctest::Approx(400.0 / 71).epsilon(1e-12));
  CHECK(effective_resistance(squared(q), 2, 0) == doctest::Approx(400.0 / 71).epsilon(1e-12));

  const WeightedGraph split(3, {{0, 1, 1.0}}, EdgeMode::Resistance, 0, 2);
  try {
    effective_resistance(split);
    FAIL("expected Disconnected");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::Disconnected);
  }
}

TEST_CASE("series and parallel laws") {
  Rng rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> r;
    double total = 0;
    for (int k = 0; k < 1 + trial % 8; ++k) {
      r.push_back(support::uniform_real(rng, 0.1, 10));
      total += r.back();
    }
    CHECK(std::abs(effective_resistance(chain(r)) - total) <= 1e-12 * std::max(1.0, total));

    // Bundle of two-edge branches between s = 0 and t = 1.
    const int branches = 1 + trial % 6;
    std::vector<Edge> edges;
    double conductance = 0;
    for (int b = 0; b < branches; ++b) {
      const double r1 = support::uniform_real(rng, 0.1, 10);
      const double r2 = support::uniform_real(rng, 0.1, 10);
      edges.push_back({0, 2 + b, r1});
      edges.push_back({1, 2 + b, r2});
      conductance += 1.0 / (r1 + r2);
    }
    const WeightedGraph bundle(2 + branches, edges, EdgeMode::Resistance, 0, 1);
    CHECK(std::abs(effective_resistance(bundle) - 1.0 / conductance) <= 1e-12 / conductance);
  }
}

TEST_CASE("adding an edge never raises effective resistance") {
  Rng rng(23);
  int checked = 0;
  while (checked < 200) {
    const int n = 3 + static_cast<int>(rng() % 10);
    const auto g = support::random_graph(rng, n, 0.4, 0.1, 10.0);
    const int i = static_cast<int>(rng() % n);
    const int j = static_cast<int>(rng() % n);
    if (i == j || g.edge_id(i, j)) continue;
    std::vector<Edge> more = g.edges();
    more.push_back({i, j, support::uniform_real(rng, 0.1, 10.0)});
    const WeightedGraph bigger(n, more, EdgeMode::Resistance, g.source(), g.sink());
    CHECK(effective_resistance(bigger) <= effective_resistance(g) + 1e-9);
    ++checked;
  }
}

TEST_CASE("every unit flow dissipates at least the effective resistance") {
  Rng rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = support::random_graph(rng, 3 + trial % 10, 0.5, 0.1, 10.0);
    const auto f = support::random_unit_flow(g, rng);
    CHECK(flow_energy(g, f) >= effective_resistance(g) - 1e-9);
  }
}

TEST_CASE("flow energy") {
  const WeightedGraph single(2, {{0, 1, 3.0}}, EdgeMode::Resistance, 0, 1);
  CHECK(flow_energy(single, {{1.0}, 1.0}) == doctest::Approx(3.0));
  const WeightedGraph two(4, {{0, 1, 0.5}, {1, 3, 0.5}, {0, 2, 0.5}, {2, 3, 0.5}}, EdgeMode::Resistance, 0, 3);
  CHECK(flow_energy(two, {{0.5, 0.5, 0.5, 0.5}, 1.0}) == doctest::Approx(0.5));

  CHECK_THROWS_AS(flow_energy(single, {{0.5}, 1.0}), Error);
  CHECK_THROWS_AS(flow_energy(two, {{1.0, 0.0, 0.0, 0.0}, 1.0}), Error);
  CHECK_THROWS_AS(flow_energy(two, {{1.0}, 1.0}), Error);

  Rng rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = support::random_graph(rng, 3 + trial % 10, 0.5, 0.1, 10.0);
    const auto f = electrical_flow(g);
    CHECK_NOTHROW(check_flow(g, f));
    CHECK(flow_energy(g, f) == doctest::Approx(effective_resistance(g)).epsilon(1e-10));
  }
}

TEST_CASE("consensus objective") {
  const auto p = triangle_matrix();
  CHECK(consensus_objective(p, Eigen::Vector3d(2, 2, 2)) == doctest::Approx(0.0).epsilon(1e-14));
  const auto q = interdict(p, EdgeList{{1, 2}});
  CHECK(consensus_objective(q, triangle_x0()) == doctest::Approx(400.0 / 71).epsilon(1e-12));
  CHECK(consensus_objective(q, triangle_x0(), 2.0) == doctest::Approx(800.0 / 71).epsilon(1e-12));

  Rng rng(37);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + trial % 13;
    const auto r = support::random_stochastic(rng, n);
    const Eigen::VectorXd x0 = support::random_vector(rng, n, -2, 3);
    const double closed = consensus_objective(r, x0);
    const auto series = simulate_dynamics(r, x0, 100'000'000, 1e-14);
    CHECK(std::abs(closed - series.value) <= 1e-6);
    CHECK(series.tail_bound < 1e-6);

    // Uncentered closed form minus the consensus offset.
    Eigen::MatrixXd shifted = laplacian(r, true);
    shifted.array() += 1.0 / n;
    const double raw = x0.dot(shifted.llt().solve(x0)) - x0.sum() * x0.sum() / n;
    CHECK(closed == doctest::Approx(raw).epsilon(1e-9));

    const int s = 0;
    const int t = n - 1;
    Eigen::VectorXd chi = Eigen::VectorXd::Zero(n);
    chi(s) = 1;
    chi(t) = -1;
    CHECK(std::abs(consensus_objective(r, chi) - effective_resistance(squared(r), s, t)) <= 1e-9);
  }
}

TEST_CASE("simulate_dynamics") {
  const auto p = triangle_matrix();
  const auto flat = simulate_dynamics(p, Eigen::Vector3d(4, 4, 4), 1000);
  CHECK(flat.value == 0.0);

  const auto avg = validate_stochastic(Eigen::Matrix4d::Constant(0.25));
  const Eigen::Vector4d x0(1, 2, 3, 6);
  const auto one = simulate_dynamics(avg, x0, 1000);
  CHECK(one.value == doctest::Approx((x0.array() - x0.mean()).matrix().squaredNorm()).epsilon(1e-14));
  CHECK(one.steps == 2);

  const auto q = interdict(p, EdgeList{{1, 2}});
  CHECK(std::abs(simulate_dynamics(q, triangle_x0()).value - 400.0 / 71) <= 1e-6);

  const auto partial = simulate_dynamics(q, triangle_x0(), 3, 0.0);
  CHECK(partial.steps == 4);
  CHECK(partial.value + partial.tail_bound >= 400.0 / 71 - 1e-9);
}

TEST_CASE("algebraic connectivity is positive exactly for connected patterns") {
  CHECK(algebraic_connectivity(laplacian(triangle_matrix())) > 0.0);
  CHECK(algebraic_connectivity(laplacian(validate_stochastic(Eigen::Matrix3d::Identity()))) ==
        doctest::Approx(0.0));
}
