#pragma once

#include <span>

#include "vertalign/planar_norms.hpp"
#include "vertalign/vec.hpp"

namespace vertalign {

/// Closed interval [lo, hi] with lo <= hi.
class Interval {
 public:
  Interval(double lo, double hi);
  double lo() const { return lo_; }
  double hi() const { return hi_; }

 private:
  double lo_;
  double hi_;
};

/// Line segment [a, b] in R^n with a != b.
class Segment {
 public:
  Segment(Vec a, Vec b);
  const Vec& a() const { return a_; }
  const Vec& b() const { return b_; }

 private:
  Vec a_;
  Vec b_;
};

/// {z : lo <= <normal, z> <= hi}; lo == hi gives a hyperplane.
class Slab {
 public:
  Slab(Vec normal, double lo, double hi);
  const Vec& normal() const { return normal_; }
  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double normal_sq() const { return normal_sq_; }

 private:
  Vec normal_;
  double lo_;
  double hi_;
  double normal_sq_;
};

double project_interval(const Interval& interval, double x);

/// Clamp-of-lambda form: (1 - l) a + l b with l = P_[0,1](<a-x, a-b> / |a-b|^2).
Vec project_segment(const Segment& segment, std::span<const double> x);
/// Symmetric form: P_[0,1](<b-x,b-a>/|b-a|^2) a + P_[0,1](<a-x,a-b>/|a-b|^2) b.
Vec project_segment_symmetric(const Segment& segment, std::span<const double> x);

Vec project_slab(const Slab& slab, std::span<const double> x);
/// In-place variant over a block of coordinates.
void project_slab_inplace(const Slab& slab, std::span<double> x);

/// Euclidean unit ball (self-dual).
Vec project_unit_ball(std::span<const double> x);

/// Projector onto [-1,1]^2, the unit ball of max{|x1|,|x2|}.
PlanarPoint project_dual_l1_ball(PlanarPoint p);

/// Projector onto conv{±(1,0), ±(0,1), ±(1,1)}, the unit ball of
/// max{|x1|,|x2|,|x1-x2|}.
PlanarPoint project_dual_hexagon_ball(PlanarPoint p);

/// Projector onto {0.5|x1-x2| + |x|/sqrt(2) <= 1}. Outside the ball and away
/// from the corner cones at ±(1,1) the nearest boundary point comes from the
/// unique real root of a depressed cubic, taken in Cardano form.
PlanarPoint project_dual_stadium_ball(PlanarPoint p);

PlanarPoint project_dual_ball(PlanarNorm norm, PlanarPoint p);

}  // namespace vertalign
