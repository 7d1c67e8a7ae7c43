#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "netint/cip.hpp"
#include "netint/counterexample.hpp"
#include "netint/oracle.hpp"
#include "test_support.hpp"

using namespace netint;

namespace {

Eigen::VectorXd random_y(Rng& rng, int m) { return support::random_vector(rng, m, 0.0, 1.0); }

Eigen::VectorXd finite_difference(const StochasticMatrix<double>& p, const Eigen::VectorXd& y,
                                  const Eigen::VectorXd& u, double h = 1e-6) {
  Eigen::VectorXd g(y.size());
  for (Eigen::Index e = 0; e < y.size(); ++e) {
    Eigen::VectorXd up = y, down = y;
    up(e) += h;
    down(e) -= h;
    g(e) = (f_value(p, up, u) - f_value(p, down, u)) / (2 * h);
  }
  return g;
}

}  // namespace

TEST_CASE("network variable to matrix") {
  Rng rng(61);
  const auto p = support::random_stochastic(rng, 8);
  const int m = p.edge_count();
  CHECK((p_of_y(p, Eigen::VectorXd::Ones(m)) - p.matrix()).cwiseAbs().maxCoeff() <= 1e-15);
  CHECK((p_of_y(p, Eigen::VectorXd::Zero(m)) - Eigen::MatrixXd::Identity(8, 8)).cwiseAbs().maxCoeff() <= 1e-15);
  const EdgeCut cut(m, {0, 3, m - 1});
  CHECK((p_of_y(p, cut.y()) - interdict(p, cut).matrix()).cwiseAbs().maxCoeff() <= 1e-15);
  for (int trial = 0; trial < 20; ++trial) {
    const Eigen::MatrixXd q = p_of_y(p, random_y(rng, m));
    CHECK_NOTHROW(validate_stochastic(q));
  }
}

TEST_CASE("quadratic objective") {
  Rng rng(67);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 3 + trial % 10;
    const auto p = support::random_stochastic(rng, n);
    const Eigen::VectorXd y = random_y(rng, p.edge_count());
    const Eigen::VectorXd flat = Eigen::VectorXd::Constant(n, 1.0 / n);
    CHECK(f_value(p, y, flat) == doctest::Approx(1.0 / n).epsilon(1e-12));

    const Eigen::VectorXd u = support::random_vector(rng, n);
    const Eigen::MatrixXd py = p_of_y(p, y);
    const Eigen::MatrixXd sq = py * py;
    double expanded = u.sum() * u.sum() / n;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) expanded += sq(i, j) * (u(i) - u(j)) * (u(i) - u(j));
    }
    CHECK(f_value(p, y, u) == doctest::Approx(expanded).epsilon(1e-12));

    const Eigen::VectorXd x0 = support::random_vector(rng, n);
    const auto solved = shifted_inverse_quadratic(p, y, x0);
    const Eigen::VectorXd ustar = optimal_u(p, y, x0);
    CHECK(std::abs(ustar.dot(x0) - 1.0) <= 1e-10);
    CHECK(f_value(p, y, ustar) == doctest::Approx(1.0 / solved.quadratic).epsilon(1e-10));
    for (int k = 0; k < 10; ++k) {
      Eigen::VectorXd d = support::random_vector(rng, n);
      d -= (d.dot(x0) / x0.squaredNorm()) * x0;
      CHECK(f_value(p, y, ustar) <= f_value(p, y, Eigen::VectorXd(ustar + 0.1 * d)) + 1e-12);
    }
  }
}

TEST_CASE("optimal voltage needs a connected pattern") {
  const auto id = validate_stochastic(Eigen::Matrix3d::Identity());
  CHECK_THROWS_AS(optimal_u(id, Eigen::VectorXd::Zero(0), Eigen::Vector3d(1, 0, 0)), Error);
  const auto p = triangle_matrix();
  CHECK_THROWS_AS(optimal_u(p, Eigen::Vector3d(0, 0, 1), Eigen::Vector3d(1, 0, -1)), Error);
}

TEST_CASE("gradient matches central finite differences") {
  Rng rng(71);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 11;
    const auto p = support::random_stochastic(rng, n, 0.6);
    const Eigen::VectorXd y = random_y(rng, p.edge_count());
    const Eigen::VectorXd u = support::random_vector(rng, n, -2, 2);
    const Eigen::VectorXd g = gradient_y(p, y, u);
    const Eigen::VectorXd fd = finite_difference(p, y, u);
    CHECK((g - fd).cwiseAbs().maxCoeff() <= 1e-6 * std::max(1e-12, g.cwiseAbs().maxCoeff()));
  }
}

TEST_CASE("gradient at the empty network is twice the dissipation") {
  // The derivative at y = 0 is 2 p_ij (u_i - u_j)^2; the ordering equals the
  // ordering by dissipated power p_ij (u_i - u_j)^2.
  Rng rng(73);
  const auto p = support::random_stochastic(rng, 9);
  const Eigen::VectorXd u = support::random_vector(rng, 9);
  const Eigen::VectorXd g = gradient_y(p, Eigen::VectorXd::Zero(p.edge_count()), u);
  const Eigen::VectorXd fd = finite_difference(p, Eigen::VectorXd::Zero(p.edge_count()), u);
  for (int e = 0; e < p.edge_count(); ++e) {
    const auto [i, j] = p.edges()[static_cast<std::size_t>(e)];
    const double power = p(i, j) * (u(i) - u(j)) * (u(i) - u(j));
    CHECK(g(e) == doctest::Approx(2 * power).epsilon(1e-12));
    CHECK(fd(e) == doctest::Approx(2 * power).epsilon(1e-6));
  }
  const Eigen::VectorXd flat = Eigen::VectorXd::Constant(9, 0.7);
  CHECK(gradient_y(p, random_y(rng, p.edge_count()), flat).cwiseAbs().maxCoeff() <= 1e-15);
}

TEST_CASE("concavity in the network variable and the linear upper bound") {
  Rng rng(79);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + trial % 9;
    const auto p = support::random_stochastic(rng, n);
    const int m = p.edge_count();
    const Eigen::VectorXd u = support::random_vector(rng, n);
    const Eigen::VectorXd y1 = random_y(rng, m), y2 = random_y(rng, m);
    const double lam = support::uniform_real(rng, 0, 1);
    const Eigen::VectorXd mid = lam * y1 + (1 - lam) * y2;
    CHECK(f_value(p, mid, u) >= lam * f_value(p, y1, u) + (1 - lam) * f_value(p, y2, u) - 1e-9);

    const Eigen::VectorXd g = gradient_y(p, y1, u);
    CHECK(f_value(p, y2, u) <= f_value(p, y1, u) + g.dot(y2 - y1) + 1e-9);
  }
}

TEST_CASE("one-shot dissipation rule on the triangle") {
  const auto p = triangle_matrix();
  CipOptions options;
  options.mode = CipMode::PotentialOneShot;
  const auto sol = cip_solve(p, triangle_x0(), 1, options);
  CHECK(sol.cut.pairs(p.edges()) == EdgeList{{0, 2}});
  CHECK(sol.objective == doctest::Approx(18.0 / 5).epsilon(1e-12));
  CHECK(sol.iterations == 1);
  CHECK(sol.trace.size() == 2);

  const auto adaptive = cip_solve(p, triangle_x0(), 1);
  CHECK(adaptive.objective >= 18.0 / 5 - 1e-9);
  CHECK(adaptive.objective <= brute_cip(p, triangle_x0(), 1).best_value + 1e-9);
  CHECK(adaptive.stationary);
}

TEST_CASE("zero budget returns the uninterdicted objective") {
  Rng rng(83);
  const auto p = support::random_stochastic(rng, 7);
  const Eigen::VectorXd x0 = alternating_x0(7);
  for (auto mode : {CipMode::Adaptive, CipMode::PotentialIter}) {
    CipOptions options;
    options.mode = mode;
    const auto sol = cip_solve(p, x0, 0, options);
    CHECK(sol.cut.empty());
    CHECK(sol.iterations == 1);
    CHECK(sol.converged);
    CHECK(sol.objective == doctest::Approx(consensus_objective(p, x0)).epsilon(1e-12));
  }
}

TEST_CASE("budget at or above edge connectivity is rejected") {
  try {
    cip_solve(triangle_matrix(), triangle_x0(), 2);
    FAIL("expected BudgetTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::BudgetTooLarge);
  }
}

TEST_CASE("adaptive runs descend strictly and end stationary") {
  Rng rng(89);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 6 + trial % 9;
    const auto p = support::random_stochastic(rng, n, 0.7, 3);
    const Eigen::VectorXd x0 = trial % 2 ? alternating_x0(n) : support::random_vector(rng, n);
    const int budget = 1 + trial % 2;
    const auto sol = cip_solve(p, x0, budget);
    REQUIRE(sol.converged);
    CHECK(sol.stationary);
    for (std::size_t k = 0; k + 1 < sol.trace.size(); ++k) {
      CHECK(sol.trace[k + 1].f_value < sol.trace[k].f_value);
    }
    CHECK(sol.iterations <= default_max_iter(p.edge_count(), budget) / 10);
    CHECK(sol.cut.size() == budget);
    CHECK(std::abs(sol.u.dot(x0) - 1.0) <= 1e-10);
    CHECK(sol.objective == doctest::Approx(consensus_objective(interdict(p, sol.cut), x0)).epsilon(1e-9));

    const double inv_f = 1.0 / sol.trace.back().f_value;
    const double offset = x0.sum() * x0.sum() / n;
    CHECK(inv_f == doctest::Approx(sol.objective + offset).epsilon(1e-9));

    CipOptions scaled;
    const auto again = cip_solve(p, Eigen::VectorXd(-3.5 * x0), budget, scaled);
    CHECK(again.cut == sol.cut);
  }
}

TEST_CASE("stationarity check") {
  Rng rng(97);
  const auto p = support::random_stochastic(rng, 10, 0.7, 3);
  const Eigen::VectorXd x0 = alternating_x0(10);
  const auto sol = cip_solve(p, x0, 2);
  REQUIRE(sol.converged);
  const auto ok = stationarity_check(p, x0, sol.u, sol.cut, 2);
  CHECK(ok.pass);

  Eigen::VectorXd bent = sol.u;
  bent(3) += 1e-3;
  const auto moved = stationarity_check(p, x0, bent, sol.cut, 2);
  CHECK_FALSE(moved.pass);
  CHECK_FALSE(moved.u_optimal);
  CHECK(moved.u_direction(3) == doctest::Approx(-1e-3));

  // Swap a zeroed coordinate with the best kept one.
  const Eigen::VectorXd g = gradient_y(p, sol.cut.y(), sol.u);
  int best_kept = -1;
  for (int e = 0; e < p.edge_count(); ++e) {
    if (!sol.cut.contains(e) && (best_kept < 0 || g(e) > g(best_kept))) best_kept = e;
  }
  int worst_kept = -1;
  for (int e = 0; e < p.edge_count(); ++e) {
    if (!sol.cut.contains(e) && g(e) < g(best_kept) && (worst_kept < 0 || g(e) < g(worst_kept))) worst_kept = e;
  }
  REQUIRE(worst_kept >= 0);
  std::vector<int> swapped = sol.cut.removed();
  swapped[0] = worst_kept;
  const EdgeCut other(p.edge_count(), swapped);
  const auto bad = stationarity_check(p, x0, optimal_u(p, other.y(), x0), other, 2);
  CHECK(bad.u_optimal);
  CHECK_FALSE(bad.y_optimal);
  CHECK(bad.swap_restore >= 0);
  CHECK(bad.swap_remove >= 0);
}

TEST_CASE("potential iteration, random starts and iteration limits") {
  Rng rng(101);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 7 + trial % 6;
    const auto p = support::random_stochastic(rng, n, 0.7, 3);
    const Eigen::VectorXd x0 = alternating_x0(n);
    CipOptions iter;
    iter.mode = CipMode::PotentialIter;
    const auto pot = cip_solve(p, x0, 2, iter);
    CHECK(pot.cut.size() == 2);
    CHECK(pot.objective <= brute_cip(p, x0, 2).best_value + 1e-9);

    CipOptions start;
    start.initial_cut = random_feasible_cut(p, 2, rng()).removed();
    const auto from_random = cip_solve(p, x0, 2, start);
    CHECK(from_random.trace.front().cut.removed() == start.initial_cut);
    CHECK(from_random.converged);

    CipOptions one;
    one.max_iter = 1;
    const auto capped = cip_solve(p, x0, 2, one);
    if (!capped.converged) {
      CHECK(capped.max_iter_exceeded);
      CHECK_FALSE(capped.stationary);
      CHECK(capped.iterations == 1);
    }

    CipOptions positive;
    positive.rule = UpdateRule::PositiveOnly;
    const auto pos = cip_solve(p, x0, 2, positive);
    CHECK(pos.cut.size() <= 2);
    if (pos.converged) CHECK(stationarity_check(p, x0, pos.u, pos.cut, 2, UpdateRule::PositiveOnly).pass);
  }
}

TEST_CASE("default iteration limit") {
  CHECK(default_max_iter(10, 0) == 10);
  CHECK(default_max_iter(10, 3) == 1200);
  CHECK(default_max_iter(400, 20) == 1'000'000);
}
