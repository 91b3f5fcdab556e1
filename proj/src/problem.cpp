#include "vertalign/problem.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace vertalign {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument("invalid problem: " + message);
}

bool all_finite(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

}  // namespace

void validate(const AlignmentProblem& p) {
  const std::size_t n = p.t.size();
  require(n >= 2, "need at least two stations");
  for (std::size_t i = 1; i < n; ++i) require(p.t[i - 1] < p.t[i], "stations must be strictly increasing");
  require(all_finite(p.t), "stations must be finite");
  require(p.w.size() == n, "ground profile w must have n entries");
  require(all_finite(p.w), "ground profile must be finite");

  require(p.interp_index.size() == p.interp_value.size(), "J and y must have equal length");
  std::vector<std::size_t> sorted = p.interp_index;
  std::sort(sorted.begin(), sorted.end());
  require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
          "interpolation indices must be unique");
  require(sorted.empty() || sorted.back() < n, "interpolation index out of range");
  require(all_finite(p.interp_value), "interpolation targets must be finite");

  require(p.sigma.size() == n - 1, "sigma must have n-1 entries");
  for (double s : p.sigma) require(std::isfinite(s) && s > 0.0, "slope bounds must be positive");

  require(p.delta.size() == p.gamma_c.size(), "delta and gamma_c must have equal length");
  require(p.delta.empty() || p.delta.size() == n - 2,
          "curvature bounds must be empty or have n-2 entries");
  require(all_finite(p.delta) && all_finite(p.gamma_c), "curvature bounds must be finite");
  for (std::size_t j = 0; j < p.delta.size(); ++j)
    require(p.delta[j] <= p.gamma_c[j], "curvature bounds need delta <= gamma_c");

  require(std::isfinite(p.alpha) && p.alpha >= 0.0, "alpha must be nonnegative");
  require(std::isfinite(p.beta) && p.beta >= 0.0, "beta must be nonnegative");
  require(p.witness.empty() || p.witness.size() == n, "witness must be empty or have n entries");
  require(all_finite(p.witness), "witness must be finite");
}

}  // namespace vertalign
