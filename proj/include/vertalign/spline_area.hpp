#pragma once

#include <span>

#include "vertalign/planar_norms.hpp"
#include "vertalign/vec.hpp"

namespace vertalign {

/// Strictly increasing horizontal stations t_1 < ... < t_n (meters), n >= 2.
class StationVector {
 public:
  explicit StationVector(Vec t);
  std::size_t size() const { return t_.size(); }
  double operator[](std::size_t i) const { return t_[i]; }
  const Vec& values() const { return t_; }
  double width() const { return t_.back() - t_.front(); }

 private:
  Vec t_;
};

/// The linear spline through (t_i, x_i).
class SplineProfile {
 public:
  SplineProfile(StationVector stations, Vec elevations);
  const StationVector& stations() const { return stations_; }
  const Vec& elevations() const { return elevations_; }

 private:
  StationVector stations_;
  Vec elevations_;
};

/// tau_i = (t_{i+1} - t_i) / 2 per segment; eta_i is the total half-width
/// of the segments touching knot i, so sum(eta) = t_n - t_1.
struct AreaWeights {
  Vec tau;
  Vec eta;
};

/// Piecewise-linear interpolation. Throws std::out_of_range outside [t_1, t_n].
double spline_eval(const SplineProfile& profile, double s);

AreaWeights weights(const StationVector& t);

/// tau * f(d1, d2). With the stadium norm this is the exact area between a
/// segment and its ground segment over width 2 tau.
double segment_area(double tau, double d1, double d2, PlanarNorm norm);

double total_area(std::span<const double> x, std::span<const double> w, const StationVector& t,
                  PlanarNorm norm);

/// <eta, x - w>: integral of the design minus ground spline.
double signed_total_area(std::span<const double> x, std::span<const double> w,
                         const StationVector& t);

/// Which alternating subset of segments a split area term covers. Odd holds
/// segments (1,2), (3,4), ...; even holds (2,3), (4,5), ... (1-based knots).
enum class AreaPart { odd, even };

/// Everything an area functional needs besides the design itself.
struct AreaModel {
  AreaModel(const StationVector& t, Vec ground, PlanarNorm norm);

  Vec ground;
  AreaWeights area_weights;
  PlanarNorm norm;
};

double area_part_value(const AreaModel& model, AreaPart part, std::span<const double> x);

/// prox of gamma * alpha * A_part. Coordinates outside every block of the
/// part pass through unchanged.
Vec prox_area(const AreaModel& model, AreaPart part, double alpha, double gamma,
              std::span<const double> x);
/// prox of gamma * (alpha A_part)*. Uncovered coordinates map to 0.
Vec prox_area_conjugate(const AreaModel& model, AreaPart part, double alpha, double gamma,
                        std::span<const double> x);

inline Vec prox_area_odd(const AreaModel& m, double alpha, double gamma, std::span<const double> x) {
  return prox_area(m, AreaPart::odd, alpha, gamma, x);
}
inline Vec prox_area_even(const AreaModel& m, double alpha, double gamma,
                          std::span<const double> x) {
  return prox_area(m, AreaPart::even, alpha, gamma, x);
}

/// l1 area sum_i eta_i |x_i - w_i|: separable soft threshold at gamma alpha eta_i.
double area_l1_value(std::span<const double> w, std::span<const double> eta,
                     std::span<const double> x);
Vec prox_area_l1(std::span<const double> w, std::span<const double> eta, double alpha,
                 double gamma, std::span<const double> x);
Vec prox_area_l1_conjugate(std::span<const double> w, std::span<const double> eta, double alpha,
                           double gamma, std::span<const double> x);

/// |S| = |<eta, x - w>| weighted by alpha.
Vec prox_abs_signed_area(std::span<const double> w, std::span<const double> eta, double alpha,
                         double gamma, std::span<const double> x);
Vec prox_abs_signed_area_conjugate(std::span<const double> w, std::span<const double> eta,
                                   double alpha, double gamma, std::span<const double> x);

}  // namespace vertalign
