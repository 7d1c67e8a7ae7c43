#include "netint/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>
#include <tuple>

#include "netint/cip.hpp"
#include "netint/erip.hpp"

namespace netint {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename Int>
Int parse_int(const std::string& text, int line) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    if constexpr (std::is_unsigned_v<Int>) {
      if (v < 0) throw std::invalid_argument(text);
    }
    return static_cast<Int>(v);
  } catch (const std::logic_error&) {
    throw Error(Errc::ParseError, "line " + std::to_string(line) + ": bad integer '" + text + "'");
  }
}

template <typename Int>
void append_range(std::vector<Int>& out, const std::string& text, int line) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    out.push_back(parse_int<Int>(text, line));
    return;
  }
  const Int lo = parse_int<Int>(trim(text.substr(0, dots)), line);
  const Int hi = parse_int<Int>(trim(text.substr(dots + 2)), line);
  if (hi < lo) throw Error(Errc::ParseError, "line " + std::to_string(line) + ": empty range");
  for (Int v = lo; v <= hi; ++v) out.push_back(v);
}

bool known_algorithm(const std::string& name) {
  return name == "erip_approx" ||
         std::find(kCipAlgorithms.begin(), kCipAlgorithms.end(), name) != kCipAlgorithms.end();
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

struct Task {
  Family family;
  int n;
  int budget;
  std::uint64_t seed;
};

ExperimentRecord run_algorithm(const std::string& algorithm, const StochasticMatrix<double>& p,
                               const Eigen::VectorXd& x0, const ExperimentConfig& config,
                               ExperimentRecord row) {
  row.algorithm = algorithm;
  const auto start = std::chrono::steady_clock::now();
  if (algorithm == "optimal") {
    const auto best = brute_cip(p, x0, row.budget, config.oracle_cap);
    row.objective = best.best_value;
    row.iterations = 0;
  } else if (algorithm == "erip_approx") {
    const auto g = to_graph(p, 0, row.n - 1);
    const auto sol = erip_interdict(g, row.budget);
    row.objective = consensus_objective(interdict(p, sol.cut.pairs(g.pairs())), x0);
    row.iterations = static_cast<std::int64_t>(sol.cut_sizes.size());
  } else {
    CipOptions options;
    options.mode = cip_mode_from_string(algorithm);
    options.max_iter = config.max_iter;
    const auto sol = cip_solve(p, x0, row.budget, options);
    row.objective = sol.objective;
    row.iterations = sol.iterations;
  }
  row.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                    .count();
  return row;
}

}  // namespace

ExperimentConfig parse_experiment_config(const std::string& text) {
  ExperimentConfig config;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    const std::string body = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) {
      throw Error(Errc::ParseError, "line " + std::to_string(line) + ": expected key = value");
    }
    const std::string key = trim(body.substr(0, eq));
    std::vector<std::string> values;
    std::istringstream list(body.substr(eq + 1));
    for (std::string item; std::getline(list, item, ',');) {
      item = trim(item);
      if (!item.empty()) values.push_back(item);
    }
    if (values.empty()) throw Error(Errc::ParseError, "line " + std::to_string(line) + ": missing value");
    for (const auto& v : values) {
      if (key == "family") {
        config.families.push_back(family_from_string(v));
      } else if (key == "n") {
        append_range(config.sizes, v, line);
      } else if (key == "budget" || key == "l") {
        append_range(config.budgets, v, line);
      } else if (key == "seed") {
        append_range(config.seeds, v, line);
      } else if (key == "algorithm") {
        if (v == "all") {
          config.algorithms.insert(config.algorithms.end(), kCipAlgorithms.begin(), kCipAlgorithms.end());
        } else if (known_algorithm(v)) {
          config.algorithms.push_back(v);
        } else {
          throw Error(Errc::ParseError, "line " + std::to_string(line) + ": unknown algorithm '" + v + "'");
        }
      } else if (key == "oracle_cap") {
        config.oracle_cap = parse_int<std::int64_t>(v, line);
      } else if (key == "er_p") {
        try {
          config.er_p = std::stod(v);
        } catch (const std::logic_error&) {
          throw Error(Errc::ParseError, "line " + std::to_string(line) + ": bad number '" + v + "'");
        }
      } else if (key == "max_iter") {
        config.max_iter = parse_int<std::int64_t>(v, line);
      } else if (key == "threads") {
        config.threads = parse_int<int>(v, line);
      } else {
        throw Error(Errc::ParseError, "line " + std::to_string(line) + ": unknown key '" + key + "'");
      }
    }
  }
  if (config.families.empty() || config.sizes.empty() || config.budgets.empty() || config.seeds.empty()) {
    throw Error(Errc::ParseError, "config needs family, n, budget and seed entries");
  }
  if (config.algorithms.empty()) config.algorithms = kCipAlgorithms;
  std::sort(config.algorithms.begin(), config.algorithms.end());
  config.algorithms.erase(std::unique(config.algorithms.begin(), config.algorithms.end()),
                          config.algorithms.end());
  return config;
}

StochasticMatrix<double> experiment_instance(Family family, int n, int budget, std::uint64_t seed,
                                             double er_p) {
  const WeightedGraph topology = generate(family, n, budget + 1, seed, er_p);
  return metropolis(with_random_weights(topology, seed));
}

std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& config) {
  std::vector<Task> tasks;
  for (Family f : config.families) {
    for (int n : config.sizes) {
      for (int b : config.budgets) {
        for (std::uint64_t s : config.seeds) tasks.push_back({f, n, b, s});
      }
    }
  }

  std::vector<std::vector<ExperimentRecord>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < tasks.size(); k = next++) {
      const Task& task = tasks[k];
      ExperimentRecord base;
      base.family = to_string(task.family);
      base.n = task.n;
      base.budget = task.budget;
      base.seed = task.seed;
      auto fail = [&](const std::string& why) {
        ExperimentRecord row = base;
        row.algorithm = "ERROR";
        row.objective = std::nan("");
        row.iterations = -1;
        row.error = why;
        results[k].push_back(row);
      };
      StochasticMatrix<double> p;
      try {
        p = experiment_instance(task.family, task.n, task.budget, task.seed, config.er_p);
      } catch (const std::exception& e) {
        fail(e.what());
        continue;
      }
      const Eigen::VectorXd x0 = alternating_x0(task.n);
      for (const auto& algorithm : config.algorithms) {
        try {
          results[k].push_back(run_algorithm(algorithm, p, x0, config, base));
        } catch (const std::exception& e) {
          fail(algorithm + ": " + e.what());
        }
      }
    }
  };
  int threads = config.threads > 0 ? config.threads : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::clamp(threads, 1, std::max(1, static_cast<int>(tasks.size())));
  std::vector<std::thread> pool;
  for (int i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::vector<ExperimentRecord> rows;
  for (auto& chunk : results) {
    for (auto& row : chunk) rows.push_back(std::move(row));
  }
  std::stable_sort(rows.begin(), rows.end(), [](const ExperimentRecord& a, const ExperimentRecord& b) {
    return std::tie(a.family, a.n, a.budget, a.seed, a.algorithm) <
           std::tie(b.family, b.n, b.budget, b.seed, b.algorithm);
  });
  return rows;
}

void write_csv(std::ostream& out, const std::vector<ExperimentRecord>& rows) {
  out << kCsvHeader << '\n';
  for (const auto& r : rows) {
    out << r.family << ',' << r.n << ',' << r.budget << ',' << r.seed << ',' << r.algorithm << ','
        << format_double(r.objective) << ',' << r.iterations << ',' << r.wall_ms << '\n';
  }
}

}  // namespace netint
