#include "vertalign/battery.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>

namespace vertalign {

AlignmentProblem battery_problem(const BatteryOptions& options, std::size_t id) {
  if (options.n_min < 2 || options.n_max < options.n_min)
    throw std::invalid_argument("battery: bad size range");
  const std::uint64_t seed = options.base_seed + id;
  // Size comes from a separate stream so it does not shift the terrain draws.
  std::mt19937_64 sizer(seed ^ 0x9e3779b97f4a7c15ULL);
  const std::size_t span = options.n_max - options.n_min + 1;
  const std::size_t n = options.n_min + static_cast<std::size_t>(sizer() % span);
  return generate_problem(seed, n, options.generator);
}

std::vector<BatteryRecord> run_battery(const BatteryOptions& options) {
  options.solver.validate();
  const std::size_t algos = options.algorithms.size();
  const std::size_t tasks = options.count * algos;
  std::vector<BatteryRecord> records(tasks);
  std::vector<AlignmentProblem> problems;
  problems.reserve(options.count);
  for (std::size_t id = 0; id < options.count; ++id) problems.push_back(battery_problem(options, id));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t task = next++; task < tasks; task = next++) {
      try {
        const std::size_t id = task / algos;
        const Algorithm algorithm = options.algorithms[task % algos];
        const SolverReport report = solve(problems[id], algorithm, options.solver);
        records[task] = {id,
                         problems[id].size(),
                         algorithm,
                         report.iterations,
                         report.residual,
                         report.converged,
                         report.cost,
                         report.wall_time_seconds};
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::size_t threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(tasks, 1));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  std::stable_sort(records.begin(), records.end(), [](const BatteryRecord& a, const BatteryRecord& b) {
    return std::pair(a.problem, a.algorithm) < std::pair(b.problem, b.algorithm);
  });
  return records;
}

std::vector<ProfileRun> profile_runs(const std::vector<BatteryRecord>& records) {
  std::vector<ProfileRun> runs;
  runs.reserve(records.size());
  for (const auto& r : records)
    runs.push_back({std::string(to_string(r.algorithm)), r.problem, std::max<std::size_t>(r.iterations, 1),
                    r.converged});
  return runs;
}

std::vector<SavingRow> savings(const std::vector<BatteryRecord>& records, Algorithm dr) {
  std::vector<SavingRow> rows;
  for (const auto& base : records) {
    if (base.algorithm != Algorithm::cycip) continue;
    auto it = std::find_if(records.begin(), records.end(), [&](const BatteryRecord& r) {
      return r.problem == base.problem && r.algorithm == dr;
    });
    if (it == records.end()) continue;
    rows.push_back({base.problem, base.cost.total, it->cost.total,
                    saving_ratio(base.cost.total, it->cost.total)});
  }
  std::sort(rows.begin(), rows.end(),
            [](const SavingRow& a, const SavingRow& b) { return a.problem < b.problem; });
  return rows;
}

SavingSummary summarize(const std::vector<SavingRow>& rows) {
  SavingSummary s;
  if (rows.empty()) return s;
  const double m = static_cast<double>(rows.size());
  s.min = s.max = rows.front().delta;
  for (const auto& r : rows) {
    s.mean += r.delta;
    s.min = std::min(s.min, r.delta);
    s.max = std::max(s.max, r.delta);
  }
  s.mean /= m;
  if (rows.size() > 1) {
    double ss = 0.0;
    for (const auto& r : rows) ss += (r.delta - s.mean) * (r.delta - s.mean);
    s.standard_error = std::sqrt(ss / (m - 1.0) / m);
  }
  return s;
}

}  // namespace vertalign
