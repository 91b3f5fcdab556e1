#include "vertalign/earthwork.hpp"

#include <cmath>
#include <stdexcept>

#include "vertalign/spline_area.hpp"

namespace vertalign {

CostBreakdown exact_cost(std::span<const double> x, const AlignmentProblem& problem) {
  const StationVector t = problem.stations();
  CostBreakdown c;
  c.area = total_area(x, problem.w, t, PlanarNorm::stadium);
  c.abs_signed = std::abs(signed_total_area(x, problem.w, t));
  c.total = problem.alpha * c.area + problem.beta * c.abs_signed;
  return c;
}

MassSeries mass_diagram(std::span<const double> x, std::span<const double> w,
                        std::span<const double> t) {
  if (x.size() != t.size() || w.size() != t.size() || t.size() < 2)
    throw std::invalid_argument("mass_diagram: dimension mismatch");
  const std::size_t n = t.size();
  MassSeries m;
  m.station.assign(t.begin(), t.end());
  m.signed_cumulative.assign(n, 0.0);
  m.abs_cumulative.assign(n, 0.0);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (!(t[i] < t[i + 1])) throw std::invalid_argument("mass_diagram: stations must increase");
    const double tau = 0.5 * (t[i + 1] - t[i]);
    const double d1 = x[i] - w[i];
    const double d2 = x[i + 1] - w[i + 1];
    m.signed_cumulative[i + 1] = m.signed_cumulative[i] + tau * (d1 + d2);
    m.abs_cumulative[i + 1] = m.abs_cumulative[i] + segment_area(tau, d1, d2, PlanarNorm::stadium);
  }
  return m;
}

Vec cumulative_cut_fill(std::span<const double> x, std::span<const double> w,
                        std::span<const double> t) {
  return mass_diagram(x, w, t).abs_cumulative;
}

}  // namespace vertalign
