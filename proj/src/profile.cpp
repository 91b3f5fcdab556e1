#include "vertalign/profile.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <utility>

namespace vertalign {

PerformanceRatios performance_ratios(const std::vector<ProfileRun>& runs) {
  std::map<std::pair<std::string, std::size_t>, const ProfileRun*> table;
  PerformanceRatios out;
  for (const auto& run : runs) {
    if (run.solved && run.iterations == 0)
      throw std::invalid_argument("performance_ratios: solved run with zero iterations");
    if (!table.emplace(std::make_pair(run.algorithm, run.problem), &run).second)
      throw std::invalid_argument("performance_ratios: duplicate run for " + run.algorithm);
    out.algorithms.push_back(run.algorithm);
    out.problems.push_back(run.problem);
  }
  auto dedupe = [](auto& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  dedupe(out.algorithms);
  dedupe(out.problems);
  if (table.size() != out.algorithms.size() * out.problems.size())
    throw std::invalid_argument("performance_ratios: every algorithm needs a run on every problem");

  constexpr double inf = std::numeric_limits<double>::infinity();
  out.ratio.assign(out.algorithms.size(), std::vector<double>(out.problems.size(), inf));
  for (std::size_t p = 0; p < out.problems.size(); ++p) {
    double best = inf;
    for (const auto& a : out.algorithms) {
      const ProfileRun& run = *table.at({a, out.problems[p]});
      if (run.solved) best = std::min(best, static_cast<double>(run.iterations));
    }
    for (std::size_t a = 0; a < out.algorithms.size(); ++a) {
      const ProfileRun& run = *table.at({out.algorithms[a], out.problems[p]});
      if (run.solved) out.ratio[a][p] = static_cast<double>(run.iterations) / best;
    }
  }
  return out;
}

double rho(const PerformanceRatios& ratios, std::size_t algorithm, double kappa) {
  const auto& r = ratios.ratio.at(algorithm);
  if (r.empty()) return 0.0;
  std::size_t count = 0;
  for (double v : r)
    if (std::isfinite(v) && std::log2(v) <= kappa) ++count;
  return static_cast<double>(count) / static_cast<double>(r.size());
}

ProfileTable performance_profile(const std::vector<ProfileRun>& runs,
                                 const std::vector<double>& kappas) {
  const PerformanceRatios ratios = performance_ratios(runs);
  ProfileTable out;
  out.algorithms = ratios.algorithms;
  out.kappa = kappas;
  std::sort(out.kappa.begin(), out.kappa.end());
  out.rho.resize(out.algorithms.size());
  for (std::size_t a = 0; a < out.algorithms.size(); ++a)
    for (double k : out.kappa) out.rho[a].push_back(rho(ratios, a, k));
  return out;
}

ProfileTable performance_profile(const std::vector<ProfileRun>& runs) {
  const PerformanceRatios ratios = performance_ratios(runs);
  std::vector<double> kappas{0.0};
  for (const auto& row : ratios.ratio)
    for (double v : row)
      if (std::isfinite(v)) kappas.push_back(std::log2(v));
  std::sort(kappas.begin(), kappas.end());
  kappas.erase(std::unique(kappas.begin(), kappas.end()), kappas.end());
  return performance_profile(runs, kappas);
}

}  // namespace vertalign
