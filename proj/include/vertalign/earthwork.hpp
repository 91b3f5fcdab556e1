#pragma once

#include <span>

#include "vertalign/problem.hpp"
#include "vertalign/vec.hpp"

namespace vertalign {

/// Exact earthwork for a design: stadium (true) area, |signed area|, and
/// F = alpha A + beta |S|.
struct CostBreakdown {
  double area = 0.0;
  double abs_signed = 0.0;
  double total = 0.0;
};

CostBreakdown exact_cost(std::span<const double> x, const AlignmentProblem& problem);

/// Running sums per station, starting at 0 at the first station: signed
/// segment areas (mass diagram, ends at S(x)) and absolute exact segment
/// areas (cumulative cut-and-fill, ends at A(x)).
struct MassSeries {
  Vec station;
  Vec signed_cumulative;
  Vec abs_cumulative;
};

MassSeries mass_diagram(std::span<const double> x, std::span<const double> w,
                        std::span<const double> t);
Vec cumulative_cut_fill(std::span<const double> x, std::span<const double> w,
                        std::span<const double> t);

}  // namespace vertalign
