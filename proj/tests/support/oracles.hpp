#pragma once

// Independent numerical checkers used only by the tests. Nothing here calls
// the closed forms under test.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

/// Reproducible uniform draws (53-bit mantissa from mt19937_64).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
  /// log-uniform in [lo, hi], lo > 0
  double log_uniform(double lo, double hi) { return lo * std::pow(hi / lo, unit()); }
  int integer(int lo, int hi) { return lo + static_cast<int>(unit() * (hi - lo + 1)); }
  std::vector<double> vec(std::size_t n, double lo, double hi) {
    std::vector<double> v(n);
    for (double& e : v) e = uniform(lo, hi);
    return v;
  }

 private:
  std::mt19937_64 engine_;
};

/// Golden-section minimization of a unimodal function on [lo, hi].
/// Returns (argmin, min value) once the bracket is narrower than tol.
template <class F>
std::pair<double, double> golden_min(F&& f, double lo, double hi, double tol) {
  constexpr double r = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - r * (b - a), d = a + r * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - r * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + r * (b - a);
      fd = f(d);
    }
  }
  return fc <= fd ? std::pair{c, fc} : std::pair{d, fd};
}

using Point = std::array<double, 3>;

/// argmin_y objective(y) + |x - y|^2 / (2 gamma) over the box [lo, hi] for
/// dimension <= 3, by nested golden-section search: the outer coordinate
/// minimizes the inner partial minimum, which is again convex.
template <class F>
std::vector<double> brute_force_prox_box(const F& objective, const std::vector<double>& x, double gamma,
                                         const std::vector<double>& lo, const std::vector<double>& hi) {
  const int dim = static_cast<int>(x.size());
  Point xp{}, y{};
  for (int i = 0; i < dim; ++i) xp[i] = y[i] = x[i];
  double span = 0.0;
  for (int i = 0; i < dim; ++i) span = std::max(span, hi[i] - lo[i]);
  auto total = [&](const Point& z) {
    double q = 0.0;
    for (int i = 0; i < dim; ++i) q += (z[i] - xp[i]) * (z[i] - xp[i]);
    return objective(z) + q / (2.0 * gamma);
  };
  std::function<double(int)> level = [&](int k) -> double {
    if (k == dim) return total(y);
    const double tol = 1e-11 * (1.0 + span) * (k + 1 == dim ? 0.1 : 1.0);
    auto g = [&](double v) {
      y[k] = v;
      return level(k + 1);
    };
    const auto [best, value] = golden_min(g, lo[k], hi[k], tol);
    y[k] = best;
    level(k + 1);  // leave the inner coordinates at their argmin
    return value;
  };
  level(0);
  return std::vector<double>(y.begin(), y.begin() + dim);
}

/// Unconstrained version for objective >= 0: the minimizer lies in the box
/// |y - x|_inf <= R with R = sqrt(2 gamma objective(x)).
template <class F>
std::vector<double> brute_force_prox(const F& objective, const std::vector<double>& x, double gamma) {
  Point xp{};
  for (std::size_t i = 0; i < x.size(); ++i) xp[i] = x[i];
  const double R = std::sqrt(2.0 * gamma * objective(xp)) * (1.0 + 1e-9) + 1e-12;
  if (R <= 1e-12) return x;
  std::vector<double> lo(x), hi(x);
  for (std::size_t i = 0; i < x.size(); ++i) lo[i] -= R, hi[i] += R;
  return brute_force_prox_box(objective, x, gamma, lo, hi);
}

/// Boundary-sampling projector onto a convex planar set: `samples` points
/// along a closed boundary curve, nearest-sample search, then golden-section
/// refinement of the curve parameter around the winner.
class BoundaryProjector {
 public:
  using Curve = std::function<std::array<double, 2>(double)>;  ///< parameter in [0, 1)
  using Inside = std::function<bool(double, double)>;

  BoundaryProjector(Curve curve, Inside inside, std::size_t samples);
  std::array<double, 2> project(double x1, double x2) const;

 private:
  Curve curve_;
  Inside inside_;
  std::vector<double> px_, py_;
};

/// Dual unit balls described without the dual-norm formulas: boundary
/// curves and independent membership tests.
BoundaryProjector square_ball_oracle(std::size_t samples = 100000);
BoundaryProjector hexagon_ball_oracle(std::size_t samples = 100000);
BoundaryProjector stadium_ball_oracle(std::size_t samples = 100000);

/// sup { <y, u> : norm(u) = 1 } over `samples` directions on the unit circle.
double sampled_dual_norm(const std::function<double(double, double)>& norm, double y1, double y2,
                         std::size_t samples = 10000);

/// Linear interpolation written independently of spline_eval.
double interpolate(const std::vector<double>& t, const std::vector<double>& v, double s);

/// Trapezoid rule for the integral of |l_x - l_w| (or l_x - l_w when
/// `absolute` is false) with `steps` uniform steps over [t_1, t_n].
double trapezoid_area(const std::vector<double>& t, const std::vector<double>& x,
                      const std::vector<double>& w, std::size_t steps, bool absolute = true);

}  // namespace oracle
