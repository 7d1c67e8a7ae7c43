#include "netint/counterexample.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "netint/cip.hpp"
#include "netint/oracle.hpp"
#include "netint/spectral.hpp"

namespace netint {

StochasticMatrix<double> triangle_matrix() {
  Eigen::Matrix3d p;
  p << 17.0 / 30, 1.0 / 3, 1.0 / 10,
       1.0 / 3, 1.0 / 3, 1.0 / 3,
       1.0 / 10, 1.0 / 3, 17.0 / 30;
  return validate_stochastic(p);
}

Eigen::VectorXd triangle_x0() { return Eigen::Vector3d(1.0, 0.0, -1.0); }

namespace {

std::string format_matrix(const Eigen::MatrixXd& m) {
  std::ostringstream out;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    out << "  ";
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%12.9f", m(i, j));
      out << buf;
    }
    out << '\n';
  }
  return out.str();
}

std::string format_cut(const EdgeCut& cut, const EdgeList& edges) {
  std::string out = "{";
  for (auto [i, j] : cut.pairs(edges)) {
    if (out.size() > 1) out += ", ";
    out += "{" + std::to_string(i) + "," + std::to_string(j) + "}";
  }
  return out + "}";
}

std::string format_value(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12f", v);
  return buf;
}

}  // namespace

CounterexampleReport run_counterexample(const CounterexampleOptions& options) {
  CounterexampleReport r;
  const double tol = options.tolerance;
  const double k = options.kernel;
  std::ostringstream text;
  auto check = [&](const std::string& name, bool pass, const std::string& detail) {
    r.checks.push_back({name, pass, detail});
  };
  auto near = [&](double a, double b) { return std::abs(a - b) <= tol; };

  const auto p = triangle_matrix();
  const Eigen::VectorXd x0 = triangle_x0();
  const EdgeList& edges = p.edges();
  // Edge ids: {0,1} -> 0, {0,2} -> 1, {1,2} -> 2.
  NodePair best_edge{1, 2};
  NodePair greedy_edge{0, 2};
  if (options.transpose_cut) std::swap(best_edge, greedy_edge);

  text << "P (nodes 0-based)\n" << format_matrix(p.matrix());
  text << "x0 = (1, 0, -1)\n";

  r.dissipation.resize(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto [i, j] = edges[e];
    const double d = x0(i) - x0(j);
    r.dissipation[e] = p(i, j) * d * d;
  }
  text << "power dissipation p_ij (x0_i - x0_j)^2\n";
  for (std::size_t e = 0; e < edges.size(); ++e) {
    text << "  {" << edges[e].first << "," << edges[e].second << "}  " << format_value(r.dissipation[e])
         << '\n';
  }
  check("dissipation",
        near(r.dissipation[0], 1.0 / 3) && near(r.dissipation[1], 0.4) && near(r.dissipation[2], 1.0 / 3),
        "expected {0,1}: 1/3, {0,2}: 2/5, {1,2}: 1/3");

  const auto p_best = interdict(p, EdgeList{best_edge});
  const auto p_greedy = interdict(p, EdgeList{greedy_edge});
  Eigen::Matrix3d want_best, want_greedy, want_best_sq, want_greedy_sq;
  want_best << 17.0 / 30, 1.0 / 3, 1.0 / 10, 1.0 / 3, 2.0 / 3, 0, 1.0 / 10, 0, 9.0 / 10;
  want_greedy << 2.0 / 3, 1.0 / 3, 0, 1.0 / 3, 1.0 / 3, 1.0 / 3, 0, 1.0 / 3, 2.0 / 3;
  want_best_sq << 199.0 / 450, 37.0 / 90, 11.0 / 75, 37.0 / 90, 5.0 / 9, 1.0 / 30, 11.0 / 75, 1.0 / 30, 41.0 / 50;
  want_greedy_sq << 5.0 / 9, 1.0 / 3, 1.0 / 9, 1.0 / 3, 1.0 / 3, 1.0 / 3, 1.0 / 9, 1.0 / 3, 5.0 / 9;

  const Eigen::MatrixXd best_sq = p_best.matrix() * p_best.matrix();
  const Eigen::MatrixXd greedy_sq = p_greedy.matrix() * p_greedy.matrix();
  text << "P without {1,2}\n" << format_matrix(p_best.matrix());
  text << "P without {0,2}\n" << format_matrix(p_greedy.matrix());
  text << "(P without {1,2})^2\n" << format_matrix(best_sq);
  text << "(P without {0,2})^2\n" << format_matrix(greedy_sq);
  auto max_diff = [](const Eigen::MatrixXd& a, const Eigen::Matrix3d& b) { return (a - b).cwiseAbs().maxCoeff(); };
  check("interdict {1,2}", max_diff(p_best.matrix(), want_best) <= tol, "weight moved to the diagonal");
  check("interdict {0,2}", max_diff(p_greedy.matrix(), want_greedy) <= tol, "weight moved to the diagonal");
  check("square without {1,2}", max_diff(best_sq, want_best_sq) <= tol, "rows 199/450 37/90 11/75 ...");
  check("square without {0,2}", max_diff(greedy_sq, want_greedy_sq) <= tol, "rows 5/9 1/3 1/9 ...");

  r.reff_best = effective_resistance(best_sq, 0, 2);
  r.reff_greedy = effective_resistance(greedy_sq, 0, 2);
  r.objective_best = consensus_objective(p_best, x0, k);
  r.objective_greedy = consensus_objective(p_greedy, x0, k);
  text << "R_eff((P without {1,2})^2, 0, 2) = " << format_value(r.reff_best) << "  (400/71)\n";
  text << "R_eff((P without {0,2})^2, 0, 2) = " << format_value(r.reff_greedy) << "  (18/5)\n";
  text << "objective without {1,2} = " << format_value(r.objective_best) << "\n";
  text << "objective without {0,2} = " << format_value(r.objective_greedy) << "\n";
  check("reff 400/71", near(r.reff_best, 400.0 / 71), format_value(r.reff_best));
  check("reff 18/5", near(r.reff_greedy, 18.0 / 5), format_value(r.reff_greedy));
  check("objective 400/71", near(r.objective_best, k * 400.0 / 71), format_value(r.objective_best));
  check("objective 18/5", near(r.objective_greedy, k * 18.0 / 5), format_value(r.objective_greedy));
  check("400/71 > 18/5", r.reff_best > r.reff_greedy, "");

  CipOptions one_shot;
  one_shot.mode = CipMode::PotentialOneShot;
  one_shot.kernel = k;
  const auto greedy = cip_solve(p, x0, 1, one_shot);
  r.greedy_cut = greedy.cut;
  const EdgeCut expect_greedy(p.edge_count(), {*p.edge_id(greedy_edge.first, greedy_edge.second)});
  text << "potential one-shot breaks " << format_cut(greedy.cut, edges) << ", objective "
       << format_value(greedy.objective) << '\n';
  check("potential one-shot cut", greedy.cut == expect_greedy, format_cut(greedy.cut, edges));

  const auto brute = brute_cip(p, x0, 1, kDefaultOracleCap, k);
  r.brute_cut = brute.best_cut;
  const EdgeCut expect_best(p.edge_count(), {*p.edge_id(best_edge.first, best_edge.second)});
  const bool optimal = std::find(brute.tied_cuts.begin(), brute.tied_cuts.end(), expect_best) != brute.tied_cuts.end();
  std::string tied;
  for (const auto& c : brute.tied_cuts) tied += (tied.empty() ? "" : " ") + format_cut(c, edges);
  text << "brute force optimum " << format_value(brute.best_value) << " attained by " << tied
       << ", runner-up " << format_value(brute.runner_up_value) << '\n';
  check("brute-force optimum", optimal && near(brute.best_value, k * 400.0 / 71), tied);
  check("brute-force runner-up", near(brute.runner_up_value, k * 18.0 / 5), format_value(brute.runner_up_value));

  r.pass = std::all_of(r.checks.begin(), r.checks.end(), [](const CheckLine& c) { return c.pass; });
  for (const auto& c : r.checks) {
    text << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) text << "  " << c.detail;
    text << '\n';
  }
  text << (r.pass ? "PASS" : "FAIL") << '\n';
  r.text = text.str();
  return r;
}

}  // namespace netint
