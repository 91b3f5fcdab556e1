#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "vertalign/constraints.hpp"
#include "vertalign/earthwork.hpp"
#include "vertalign/prox_term.hpp"

namespace vertalign {

enum class Algorithm { cycip, drsb, drhb, drlb };

std::string_view to_string(Algorithm algorithm);
/// Accepts "cycip", "drsb", "drhb", "drlb". Throws std::invalid_argument.
Algorithm parse_algorithm(std::string_view name);
/// Area norm a DR algorithm optimizes over (stadium for CycIP, unused there).
PlanarNorm area_norm(Algorithm algorithm);

/// Argument of the per-block prox in a DR step:
///   standard  prox(2 xbar - x_i)
///   printed   prox(2 x_i - xbar)
enum class ReflectionConvention { standard, printed };

struct SolverConfig {
  double gamma = 1.0;
  double eps = 5e-3;
  std::size_t k_max = 100000;
  PlanarNorm variant = PlanarNorm::stadium;
  /// Override the problem's cost weights.
  std::optional<double> alpha;
  std::optional<double> beta;
  ReflectionConvention reflection = ReflectionConvention::standard;
  /// Order of the six sets within one CycIP sweep (indices into
  /// build_six_sets). Interpolation last by default.
  std::vector<std::size_t> cycip_order{1, 2, 3, 4, 5, 0};

  void validate() const;
};

struct SolverReport {
  Vec x_final;
  std::size_t iterations = 0;
  double residual = 0.0;
  CostBreakdown cost;  ///< always the exact (stadium) earthwork cost
  bool converged = false;
  double wall_time_seconds = 0.0;
};

/// Product-space iterate: one copy of R^n per objective term.
struct DRState {
  std::vector<Vec> blocks;
  Vec average;
  std::size_t iteration = 0;

  static DRState uniform(std::size_t term_count, std::span<const double> start);
};

/// One Douglas-Rachford step in the product space:
///   y_i = prox_{gamma f_i}(reflection), x_i += y_i - xbar, xbar = mean(x_i).
DRState dr_step(DRState state, std::span<const ProxTerm> terms, double gamma,
                ReflectionConvention reflection = ReflectionConvention::standard);

/// The nine DR terms: alpha A_odd, alpha A_even, beta |S|, then the
/// indicators of the six constraint sets. Zero weights give zero terms.
std::vector<ProxTerm> build_dr_terms(const AlignmentProblem& problem, PlanarNorm variant,
                                     double alpha, double beta);

/// Runs DR from all blocks equal to the ground profile. Stops at the first
/// k >= 1 with feasibility_residual(xbar_k) < eps and |xbar_k - xbar_{k-1}|_inf < eps.
/// On k_max exhaustion returns the lowest-residual iterate among those checked
/// (the last iterate when none was checked) with converged = false.
SolverReport dr_solve(const AlignmentProblem& problem, const SolverConfig& config);

/// Cyclic intrepid projections from the ground profile; stops when the
/// feasibility residual of a sweep result drops below eps.
SolverReport cycip_solve(const AlignmentProblem& problem, const SolverConfig& config);

/// Dispatch by algorithm; DR variants override config.variant.
SolverReport solve(const AlignmentProblem& problem, Algorithm algorithm, SolverConfig config);

/// (F_cycip - F_dr) / F_cycip. Returns 0 when both costs are 0; throws
/// std::domain_error when only F_cycip is 0.
double saving_ratio(double f_cycip, double f_dr);

}  // namespace vertalign
