#pragma once

#include <cstddef>
#include <cstdint>

#include "vertalign/problem.hpp"

namespace vertalign {

/// Knobs for synthetic terrain. Lengths in metres, grades dimensionless.
struct GeneratorParams {
  double spacing_min = 20.0;
  double spacing_max = 60.0;
  double ground_start = 100.0;
  double ground_grade_max = 0.15;   ///< ground grade stays in [-max, max]
  double ground_grade_step = 0.04;  ///< per-segment change of the ground grade
  double ground_grade_memory = 0.85;  ///< grade is pulled toward 0 by this factor each segment
  double sigma = 0.05;              ///< design grade limit
  double curvature = 0.02;          ///< |grade change| limit per knot; 0 disables
  std::size_t interior_interpolation = 1;
  double witness_margin = 0.8;  ///< witness uses this fraction of each bound
  double alpha = 4.0;
  double beta = 1.0;
};

/// Deterministic in (seed, n, params) on every platform: uses mt19937_64 bits
/// directly rather than std distributions.
///
/// A feasible witness is built first by a grade-limited tracking of the
/// ground. Interpolation points (both ends plus `interior_interpolation`
/// interior knots) are sampled from it, so the constraint set is nonempty.
AlignmentProblem generate_problem(std::uint64_t seed, std::size_t n,
                                  const GeneratorParams& params = {});

}  // namespace vertalign
