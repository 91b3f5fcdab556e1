#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "vertalign/spline_area.hpp"
#include "vertalign/vec.hpp"

namespace vertalign {

/// One road vertical-alignment instance. Knot indices are 0-based.
///
/// Constraints on the design x:
///   interpolation  x[interp_index[k]] == interp_value[k]
///   slope          |x[j+1] - x[j]| <= sigma[j] (t[j+1] - t[j])          j < n-1
///   curvature      delta[j] <= s[j+1] - s[j] <= gamma_c[j]               j < n-2
/// where s[j] is the grade of segment j. The curvature family may be empty.
struct AlignmentProblem {
  std::string name;
  std::uint64_t seed = 0;
  Vec t;
  Vec w;
  std::vector<std::size_t> interp_index;
  Vec interp_value;
  Vec sigma;
  Vec delta;
  Vec gamma_c;
  double alpha = 4.0;  ///< unit cost of cut-and-fill area
  double beta = 1.0;   ///< unit cost of the final cut/fill imbalance
  Vec witness;         ///< a known feasible design, or empty

  std::size_t size() const { return t.size(); }
  StationVector stations() const { return StationVector(t); }
  bool has_curvature() const { return !delta.empty(); }
};

/// Throws std::invalid_argument describing the first violated invariant.
/// Does not check the witness for feasibility (see check_witness).
void validate(const AlignmentProblem& problem);

}  // namespace vertalign
