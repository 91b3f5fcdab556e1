#include "vertalign/solvers.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>
#include <string>

namespace vertalign {

std::string_view to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::cycip: return "cycip";
    case Algorithm::drsb: return "drsb";
    case Algorithm::drhb: return "drhb";
    case Algorithm::drlb: return "drlb";
  }
  return "unknown";
}

Algorithm parse_algorithm(std::string_view name) {
  for (Algorithm a : {Algorithm::cycip, Algorithm::drsb, Algorithm::drhb, Algorithm::drlb})
    if (to_string(a) == name) return a;
  throw std::invalid_argument("unknown algorithm: " + std::string(name));
}

PlanarNorm area_norm(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::drhb: return PlanarNorm::hexagonal;
    case Algorithm::drlb: return PlanarNorm::l1;
    default: return PlanarNorm::stadium;
  }
}

void SolverConfig::validate() const {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) throw std::invalid_argument("gamma must be positive");
  if (!(eps > 0.0) || !std::isfinite(eps)) throw std::invalid_argument("eps must be positive");
  if (k_max < 1) throw std::invalid_argument("k_max must be at least 1");
  if (alpha && !(*alpha >= 0.0)) throw std::invalid_argument("alpha must be nonnegative");
  if (beta && !(*beta >= 0.0)) throw std::invalid_argument("beta must be nonnegative");
  std::vector<std::size_t> order = cycip_order;
  std::sort(order.begin(), order.end());
  if (order != std::vector<std::size_t>{0, 1, 2, 3, 4, 5})
    throw std::invalid_argument("cycip_order must be a permutation of 0..5");
}

DRState DRState::uniform(std::size_t term_count, std::span<const double> start) {
  if (term_count == 0) throw std::invalid_argument("DRState: need at least one term");
  DRState s;
  s.blocks.assign(term_count, Vec(start.begin(), start.end()));
  s.average.assign(start.begin(), start.end());
  return s;
}

DRState dr_step(DRState state, std::span<const ProxTerm> terms, double gamma,
                ReflectionConvention reflection) {
  if (terms.size() != state.blocks.size())
    throw std::invalid_argument("dr_step: one term per block required");
  const std::size_t n = state.average.size();
  const Vec& xbar = state.average;
  Vec arg(n);
  // The per-term prox evaluations are independent; only the averaging
  // below needs all of them.
  for (std::size_t i = 0; i < terms.size(); ++i) {
    Vec& block = state.blocks[i];
    if (reflection == ReflectionConvention::standard)
      for (std::size_t j = 0; j < n; ++j) arg[j] = 2.0 * xbar[j] - block[j];
    else
      for (std::size_t j = 0; j < n; ++j) arg[j] = 2.0 * block[j] - xbar[j];
    const Vec y = terms[i].prox(gamma, arg);
    for (std::size_t j = 0; j < n; ++j) block[j] += y[j] - xbar[j];
  }
  Vec mean(n, 0.0);
  for (const Vec& block : state.blocks)
    for (std::size_t j = 0; j < n; ++j) mean[j] += block[j];
  const double inv = 1.0 / static_cast<double>(state.blocks.size());
  for (double& v : mean) v *= inv;
  state.average = std::move(mean);
  ++state.iteration;
  return state;
}

std::vector<ProxTerm> build_dr_terms(const AlignmentProblem& problem, PlanarNorm variant,
                                     double alpha, double beta) {
  const StationVector t = problem.stations();
  auto model = std::make_shared<const AreaModel>(t, problem.w, variant);
  std::vector<ProxTerm> terms;
  terms.reserve(9);
  if (alpha > 0.0) {
    terms.emplace_back(AreaPartTerm{model, AreaPart::odd, alpha});
    terms.emplace_back(AreaPartTerm{model, AreaPart::even, alpha});
  } else {
    terms.emplace_back(ZeroTerm{}, "area_odd_zero");
    terms.emplace_back(ZeroTerm{}, "area_even_zero");
  }
  if (beta > 0.0)
    terms.emplace_back(AbsSignedAreaTerm{problem.w, model->area_weights.eta, beta});
  else
    terms.emplace_back(ZeroTerm{}, "abs_signed_area_zero");
  for (auto& set : build_six_sets(problem))
    terms.push_back(make_indicator_term(std::make_shared<const ConstraintSet>(std::move(set))));
  return terms;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

SolverReport dr_solve(const AlignmentProblem& problem, const SolverConfig& config) {
  config.validate();
  validate(problem);
  const auto start = Clock::now();
  const double alpha = config.alpha.value_or(problem.alpha);
  const double beta = config.beta.value_or(problem.beta);
  const std::vector<ProxTerm> terms = build_dr_terms(problem, config.variant, alpha, beta);
  const std::vector<ConstraintSet> sets = build_six_sets(problem);

  DRState state = DRState::uniform(terms.size(), problem.w);
  Vec previous = state.average;
  Vec best;
  double best_residual = std::numeric_limits<double>::infinity();
  SolverReport report;
  while (state.iteration < config.k_max) {
    state = dr_step(std::move(state), terms, config.gamma, config.reflection);
    const double change = max_abs_diff(state.average, previous);
    previous = state.average;
    if (change >= config.eps) continue;
    const double r = feasibility_residual(state.average, sets);
    if (r < config.eps) {
      report.converged = true;
      best = state.average;
      best_residual = r;
      break;
    }
    if (r <= best_residual) {
      best_residual = r;
      best = state.average;
    }
  }
  if (best.empty()) {
    best = state.average;
    best_residual = feasibility_residual(best, sets);
  }
  report.iterations = state.iteration;
  report.residual = best_residual;
  report.cost = exact_cost(best, problem);
  report.x_final = std::move(best);
  report.wall_time_seconds = seconds_since(start);
  return report;
}

SolverReport cycip_solve(const AlignmentProblem& problem, const SolverConfig& config) {
  config.validate();
  validate(problem);
  const auto start = Clock::now();
  const std::vector<ConstraintSet> sets = build_six_sets(problem);

  Vec x = problem.w;
  SolverReport report;
  double r = feasibility_residual(x, sets);
  Vec best = x;
  double best_residual = r;
  std::size_t k = 0;
  while (!(r < config.eps) && k < config.k_max) {
    for (std::size_t idx : config.cycip_order) sets[idx].intrepid_project_inplace(x);
    ++k;
    r = feasibility_residual(x, sets);
    if (r <= best_residual) {
      best_residual = r;
      best = x;
    }
  }
  report.converged = r < config.eps;
  if (report.converged) {
    best = x;
    best_residual = r;
  }
  report.iterations = k;
  report.residual = best_residual;
  report.cost = exact_cost(best, problem);
  report.x_final = std::move(best);
  report.wall_time_seconds = seconds_since(start);
  return report;
}

SolverReport solve(const AlignmentProblem& problem, Algorithm algorithm, SolverConfig config) {
  if (algorithm == Algorithm::cycip) return cycip_solve(problem, config);
  config.variant = area_norm(algorithm);
  return dr_solve(problem, config);
}

double saving_ratio(double f_cycip, double f_dr) {
  if (f_cycip == 0.0) {
    if (f_dr == 0.0) return 0.0;
    throw std::domain_error("saving_ratio: CycIP cost is zero");
  }
  return (f_cycip - f_dr) / f_cycip;
}

}  // namespace vertalign
