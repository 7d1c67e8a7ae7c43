#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>

#include "netint/cip.hpp"
#include "netint/counterexample.hpp"
#include "netint/erip.hpp"
#include "netint/experiment.hpp"
#include "netint/instances.hpp"
#include "netint/io.hpp"
#include "netint/oracle.hpp"
#include "netint/spectral.hpp"

using namespace netint;
using nlohmann::json;

namespace {

int exit_code(Errc code) {
  switch (code) {
    case Errc::ParseError: return 2;
    case Errc::Disconnected:
    case Errc::SingularSystem: return 3;
    case Errc::BudgetTooLarge: return 4;
    default: return 1;
  }
}

json cut_json(const EdgeCut& cut, const EdgeList& edges) {
  json out = json::array();
  for (auto [i, j] : cut.pairs(edges)) out.push_back({i, j});
  return out;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw Error(Errc::ParseError, "cannot write '" + out_path + "'");
  out << text;
}

StochasticMatrix<double> stochastic_input(const WeightedGraph& g) {
  if (g.mode() == EdgeMode::Stochastic) return to_stochastic(g);
  return metropolis(g);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Effective-resistance and consensus interdiction tools. Node ids are 0-based."};
  app.require_subcommand(1);

  std::string graph_path, x0_path, out_path, config_path;
  int budget = 1;
  std::uint64_t seed = 1;
  std::string mode = "adaptive";
  double kernel = 1.0;
  std::int64_t oracle_cap = kDefaultOracleCap;
  std::optional<int> source, sink;

  auto* reff = app.add_subcommand("reff", "Print the s-t effective resistance of a graph file");
  reff->add_option("graph", graph_path, "JSON graph file")->required();
  reff->add_option("--s", source, "Source node (default: from file)");
  reff->add_option("--t", sink, "Sink node (default: from file)");

  auto* erip = app.add_subcommand("erip", "Min-cut approximation for effective-resistance interdiction");
  erip->add_option("graph", graph_path, "JSON graph file")->required();
  erip->add_option("--budget,-l", budget, "Number of edges to remove");

  bool random_start = false;
  bool positive_only = false;
  std::int64_t max_iter = 0;
  auto* cip = app.add_subcommand("cip", "Iterative consensus interdiction");
  cip->add_option("graph", graph_path, "JSON graph file (stochastic mode, or weights for Metropolis)")->required();
  cip->add_option("x0", x0_path, "JSON array with the initial state")->required();
  cip->add_option("--budget,-l", budget, "Number of edges to remove");
  cip->add_option("--mode", mode, "adaptive | potential_iter | potential_oneshot")
      ->check(CLI::IsMember({"adaptive", "potential", "potential_iter", "potential_oneshot"}));
  cip->add_option("--kernel", kernel, "Objective multiplier");
  cip->add_option("--max-iter", max_iter, "Iteration limit (0: 10 C(m, l), at most 1e6)");
  cip->add_flag("--random-start", random_start, "Start from a seeded random feasible cut");
  cip->add_option("--seed", seed, "Seed for --random-start");
  cip->add_flag("--positive-only", positive_only, "Zero only coordinates with positive gradient");

  auto* brute = app.add_subcommand("brute", "Exhaustive optimum (consensus when x0 is given, else resistance)");
  brute->add_option("graph", graph_path, "JSON graph file")->required();
  brute->add_option("x0", x0_path, "JSON array with the initial state");
  brute->add_option("--budget,-l", budget, "Number of edges to remove");
  brute->add_option("--kernel", kernel, "Objective multiplier");
  brute->add_option("--oracle-cap", oracle_cap, "Largest number of cuts to enumerate");

  std::string family = "complete";
  int n = 10;
  double er_p = 0.5;
  bool raw = false;
  std::string x0_out;
  auto* gen = app.add_subcommand("gen", "Generate a seeded experiment instance");
  gen->add_option("family", family, "complete | bipartite | ring4 | er")->required();
  gen->add_option("--n", n, "Node count");
  gen->add_option("--budget,-l", budget, "Budget the instance must admit (edge connectivity > l)");
  gen->add_option("--seed", seed, "Seed");
  gen->add_option("--er-p", er_p, "Edge probability for er");
  gen->add_flag("--raw", raw, "Write the unit-resistance topology instead of the Metropolis matrix");
  gen->add_option("--x0-out", x0_out, "Also write the alternating initial state here");
  gen->add_option("--out", out_path, "Output file (default stdout)");

  double a = 0.0, delta = 0.0;
  std::string gadget_mode = "clique";
  auto* gadget = app.add_subcommand("gadget", "Build the reduction gadget of a base graph");
  gadget->add_option("graph", graph_path, "JSON base graph")->required();
  gadget->add_option("--a", a, "Left-edge resistance (default n^4)");
  gadget->add_option("--delta", delta, "Small resistance (0 allowed in clique mode)");
  gadget->add_option("--mode", gadget_mode, "clique | densest")->check(CLI::IsMember({"clique", "densest"}));
  gadget->add_option("--out", out_path, "Output file (default stdout)");

  int threads = 0;
  auto* experiment = app.add_subcommand("experiment", "Run a seeded sweep and write CSV");
  experiment->add_option("config", config_path, "key = value config file")->required();
  experiment->add_option("--out", out_path, "CSV output (default stdout)");
  experiment->add_option("--threads", threads, "Worker threads (overrides config)");
  experiment->add_option("--oracle-cap", oracle_cap, "Override the oracle cap");

  bool transpose = false;
  auto* counter = app.add_subcommand("counterexample", "Three-node instance where the dissipation rule is not optimal");
  counter->add_option("--kernel", kernel, "Objective multiplier");
  counter->add_flag("--transpose-cut", transpose, "Debug: swap the two cuts so the checks fail");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*reff) {
      WeightedGraph g = read_graph_file(graph_path);
      if (source || sink) g = g.with_terminals(source.value_or(g.source()), sink.value_or(g.sink()));
      std::printf("%.12f\n", effective_resistance(g));
    } else if (*erip) {
      const WeightedGraph g = read_graph_file(graph_path);
      const auto sol = erip_interdict(g, budget);
      json out = {{"cut", cut_json(sol.cut, g.pairs())},
                  {"objective", sol.reff_after},
                  {"phi", sol.phi_after},
                  {"iterations", sol.cut_sizes.size()},
                  {"trace", sol.cut_sizes},
                  {"k_index", sol.k_index}};
      std::cout << out.dump(2) << '\n';
    } else if (*cip) {
      const auto p = stochastic_input(read_graph_file(graph_path));
      const Eigen::VectorXd x0 = read_vector_file(x0_path);
      CipOptions options;
      options.mode = cip_mode_from_string(mode);
      options.rule = positive_only ? UpdateRule::PositiveOnly : UpdateRule::TopBudget;
      options.kernel = kernel;
      options.max_iter = max_iter;
      if (random_start) options.initial_cut = random_feasible_cut(p, budget, seed).removed();
      const auto sol = cip_solve(p, x0, budget, options);
      json trace = json::array();
      for (const auto& it : sol.trace) trace.push_back({{"f", it.f_value}, {"cut", cut_json(it.cut, p.edges())}});
      json out = {{"cut", cut_json(sol.cut, p.edges())},
                  {"objective", sol.objective},
                  {"iterations", sol.iterations},
                  {"trace", trace},
                  {"converged", sol.converged},
                  {"stationary", sol.stationary},
                  {"max_iter_exceeded", sol.max_iter_exceeded}};
      std::cout << out.dump(2) << '\n';
    } else if (*brute) {
      const WeightedGraph g = read_graph_file(graph_path);
      OracleResult best;
      EdgeList edges;
      if (x0_path.empty()) {
        best = brute_erip(g, budget, oracle_cap);
        edges = g.pairs();
      } else {
        const auto p = stochastic_input(g);
        best = brute_cip(p, read_vector_file(x0_path), budget, oracle_cap, kernel);
        edges = p.edges();
      }
      json tied = json::array();
      for (const auto& c : best.tied_cuts) tied.push_back(cut_json(c, edges));
      json out = {{"cut", cut_json(best.best_cut, edges)},
                  {"objective", best.best_value},
                  {"iterations", best.evaluated},
                  {"trace", json::array()},
                  {"skipped", best.skipped},
                  {"runner_up", best.runner_up_value},
                  {"tied", tied}};
      std::cout << out.dump(2) << '\n';
    } else if (*gen) {
      const Family fam = family_from_string(family);
      std::string text;
      if (raw) {
        text = graph_to_json(generate(fam, n, budget + 1, seed, er_p), 2);
      } else {
        text = graph_to_json(to_graph(experiment_instance(fam, n, budget, seed, er_p), 0, n - 1), 2);
      }
      emit(text + "\n", out_path);
      if (!x0_out.empty()) {
        const Eigen::VectorXd x0 = alternating_x0(n);
        emit(json(std::vector<double>(x0.data(), x0.data() + x0.size())).dump() + "\n", x0_out);
      }
    } else if (*gadget) {
      const WeightedGraph base = read_graph_file(graph_path);
      const double nn = base.node_count();
      const double left = a > 0.0 ? a : nn * nn * nn * nn;
      const GadgetMode gm = gadget_mode == "clique" ? GadgetMode::Clique : GadgetMode::Densest;
      const double small = gm == GadgetMode::Densest && delta <= 0.0 ? 1.0 / (nn * nn * nn * nn) : delta;
      emit(gadget_to_json(build_gadget(base, left, small, gm), 2) + "\n", out_path);
    } else if (*experiment) {
      ExperimentConfig config = parse_experiment_config(read_text_file(config_path));
      if (threads > 0) config.threads = threads;
      if (experiment->count("--oracle-cap")) config.oracle_cap = oracle_cap;
      const auto rows = run_experiment(config);
      std::ostringstream csv;
      write_csv(csv, rows);
      emit(csv.str(), out_path);
      for (const auto& r : rows) {
        if (r.algorithm == "ERROR") {
          std::cerr << "error: " << r.family << " n=" << r.n << " l=" << r.budget << " seed=" << r.seed << ": "
                    << r.error << '\n';
        }
      }
    } else if (*counter) {
      CounterexampleOptions options;
      options.kernel = kernel;
      options.transpose_cut = transpose;
      const auto report = run_counterexample(options);
      std::cout << report.text;
      return report.pass ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
