#ifndef NETINT_EXPERIMENT_HPP
#define NETINT_EXPERIMENT_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "netint/instances.hpp"
#include "netint/oracle.hpp"

namespace netint {

inline const std::vector<std::string> kCipAlgorithms = {"optimal", "adaptive", "potential_iter",
                                                         "potential_oneshot"};
inline const std::string kCsvHeader = "family,n,l,seed,algorithm,objective,iterations,wall_ms";

// Flat key = value file, one entry per line, '#' starts a comment. Repeated
// keys append; integer values may be ranges "a..b". Keys:
//   family     complete | bipartite | ring4 | er
//   n, budget, seed
//   algorithm  optimal | adaptive | potential_iter | potential_oneshot |
//              erip_approx | all   (all = the four CIP algorithms)
//   oracle_cap, er_p, max_iter, threads
struct ExperimentConfig {
  std::vector<Family> families;
  std::vector<int> sizes;
  std::vector<int> budgets;
  std::vector<std::uint64_t> seeds;
  std::vector<std::string> algorithms;
  std::int64_t oracle_cap = kDefaultOracleCap;
  double er_p = 0.5;
  std::int64_t max_iter = 0;
  /// 0 picks the hardware concurrency.
  int threads = 0;
};

ExperimentConfig parse_experiment_config(const std::string& text);

struct ExperimentRecord {
  std::string family;
  int n = 0;
  int budget = 0;
  std::uint64_t seed = 0;
  std::string algorithm;
  double objective = 0.0;
  std::int64_t iterations = 0;
  std::int64_t wall_ms = 0;
  /// Failure reason for algorithm == "ERROR" rows; not part of the CSV.
  std::string error;
};

/// The seeded instance behind every (family, n, budget, seed) row: topology
/// with edge connectivity above `budget`, integer weights, Metropolis
/// normalization.
StochasticMatrix<double> experiment_instance(Family family, int n, int budget, std::uint64_t seed,
                                             double er_p = 0.5);

/// Runs every configured instance and algorithm. Rows come back in
/// (family, n, budget, seed, algorithm) order whatever the completion order.
/// A failing algorithm yields an "ERROR" row instead of aborting the sweep.
std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& config);

void write_csv(std::ostream& out, const std::vector<ExperimentRecord>& rows);

}  // namespace netint

#endif  // NETINT_EXPERIMENT_HPP
