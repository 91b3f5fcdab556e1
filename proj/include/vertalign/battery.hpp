#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "vertalign/generator.hpp"
#include "vertalign/profile.hpp"
#include "vertalign/solvers.hpp"

namespace vertalign {

struct BatteryOptions {
  std::size_t count = 100;
  std::size_t n_min = 50;
  std::size_t n_max = 500;
  std::uint64_t base_seed = 1;
  GeneratorParams generator;
  /// gamma = 0.25 keeps every DR run on the default battery inside k_max;
  /// the library-wide default of 1.0 does not.
  SolverConfig solver = [] {
    SolverConfig c;
    c.gamma = 0.25;
    return c;
  }();
  std::vector<Algorithm> algorithms{Algorithm::cycip, Algorithm::drsb, Algorithm::drhb,
                                    Algorithm::drlb};
  std::size_t threads = 0;  ///< 0: hardware concurrency
};

/// Problem `id` uses seed base_seed + id and a size drawn from that seed.
AlignmentProblem battery_problem(const BatteryOptions& options, std::size_t id);

struct BatteryRecord {
  std::size_t problem = 0;
  std::size_t n = 0;
  Algorithm algorithm = Algorithm::cycip;
  std::size_t iterations = 0;
  double residual = 0.0;
  bool converged = false;
  CostBreakdown cost;
  double wall_time_seconds = 0.0;
};

/// Runs every algorithm on every problem, one solver run per task, on a
/// pool of worker threads. Records come back sorted by (problem, algorithm).
std::vector<BatteryRecord> run_battery(const BatteryOptions& options);

std::vector<ProfileRun> profile_runs(const std::vector<BatteryRecord>& records);

struct SavingRow {
  std::size_t problem = 0;
  double f_cycip = 0.0;
  double f_dr = 0.0;
  double delta = 0.0;
};

/// Saving ratio of `dr` against CycIP per problem, in problem order.
std::vector<SavingRow> savings(const std::vector<BatteryRecord>& records, Algorithm dr);

struct SavingSummary {
  double mean = 0.0;
  double standard_error = 0.0;
  double min = 0.0;
  double max = 0.0;
};

SavingSummary summarize(const std::vector<SavingRow>& rows);

}  // namespace vertalign
