#pragma once

#include <string_view>

namespace vertalign {

/// A pair of elevation deviations (x1, x2) in meters: the deviation of the
/// design from the ground at the two ends of one spline segment.
struct PlanarPoint {
  double x1 = 0.0;
  double x2 = 0.0;

  friend PlanarPoint operator+(PlanarPoint a, PlanarPoint b) { return {a.x1 + b.x1, a.x2 + b.x2}; }
  friend PlanarPoint operator-(PlanarPoint a, PlanarPoint b) { return {a.x1 - b.x1, a.x2 - b.x2}; }
  friend PlanarPoint operator*(double s, PlanarPoint a) { return {s * a.x1, s * a.x2}; }
  friend bool operator==(PlanarPoint, PlanarPoint) = default;
};

/// The three planar norms used to measure (or bound) the area between two
/// line segments.
enum class PlanarNorm {
  stadium,    ///< exact area
  hexagonal,  ///< polyhedral upper bound max{|x1|,|x2|,|x1+x2|}
  l1,         ///< classical upper bound |x1|+|x2|
};

std::string_view to_string(PlanarNorm norm);

/// (x1^2 + x2^2 + 2 max{0, x1 x2}) / (|x1| + |x2|), and 0 at the origin.
double stadium_norm(PlanarPoint p);
double hexagonal_norm(PlanarPoint p);
double l1_norm(PlanarPoint p);

/// 0.5 |x1 - x2| + ||x|| / sqrt(2)
double dual_stadium_norm(PlanarPoint p);
/// max{|x1|, |x2|, |x1 - x2|}
double dual_hexagonal_norm(PlanarPoint p);
/// max{|x1|, |x2|}
double dual_l1_norm(PlanarPoint p);

/// Gradient of the stadium norm, defined away from the origin.
/// Closed quadrants; points on the axes resolve to the constant-gradient
/// quadrants (both coordinates >= 0, or both <= 0).
/// Throws std::domain_error at (0, 0).
PlanarPoint stadium_gradient(PlanarPoint p);

double norm_value(PlanarNorm norm, PlanarPoint p);
double dual_norm_value(PlanarNorm norm, PlanarPoint p);

}  // namespace vertalign
