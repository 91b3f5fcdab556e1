#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace vertalign {

/// Iteration count of one algorithm on one problem.
struct ProfileRun {
  std::string algorithm;
  std::size_t problem = 0;
  std::size_t iterations = 0;
  bool solved = false;
};

/// r_{a,p} = k_{a,p} / min_b k_{b,p} over solving algorithms b; +inf when
/// a did not solve p. Algorithms and problems are listed in sorted order.
struct PerformanceRatios {
  std::vector<std::string> algorithms;
  std::vector<std::size_t> problems;
  std::vector<std::vector<double>> ratio;  ///< [algorithm][problem]
};

/// Throws std::invalid_argument on duplicate (algorithm, problem) pairs,
/// missing pairs, or a solved run with zero iterations.
PerformanceRatios performance_ratios(const std::vector<ProfileRun>& runs);

/// rho_a(kappa) = |{p : log2 r_{a,p} <= kappa}| / |P|.
double rho(const PerformanceRatios& ratios, std::size_t algorithm, double kappa);

struct ProfileTable {
  std::vector<std::string> algorithms;
  std::vector<double> kappa;
  std::vector<std::vector<double>> rho;  ///< [algorithm][kappa index]
};

ProfileTable performance_profile(const std::vector<ProfileRun>& runs,
                                 const std::vector<double>& kappas);
/// Evaluates at 0 and at every finite log2 r breakpoint.
ProfileTable performance_profile(const std::vector<ProfileRun>& runs);

}  // namespace vertalign
