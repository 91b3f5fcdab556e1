#include "vertalign/projectors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vertalign {

Interval::Interval(double lo, double hi) : lo_(lo), hi_(hi) {
  if (!(lo <= hi)) throw std::invalid_argument("Interval: requires lo <= hi");
}

Segment::Segment(Vec a, Vec b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.size() != b_.size()) throw std::invalid_argument("Segment: endpoint dimensions differ");
  if (a_ == b_) throw std::invalid_argument("Segment: endpoints must be distinct");
}

Slab::Slab(Vec normal, double lo, double hi)
    : normal_(std::move(normal)), lo_(lo), hi_(hi), normal_sq_(dot(normal_, normal_)) {
  if (!(lo <= hi)) throw std::invalid_argument("Slab: requires lo <= hi");
  if (!(normal_sq_ > 0.0)) throw std::invalid_argument("Slab: normal must be nonzero");
}

double project_interval(const Interval& interval, double x) {
  return std::max(interval.lo(), std::min(interval.hi(), x));
}

namespace {

double clamp01(double q) { return std::max(0.0, std::min(1.0, q)); }

// <u - x, u - v> / |u - v|^2
double segment_coordinate(std::span<const double> u, std::span<const double> v,
                          std::span<const double> x) {
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    num += (u[i] - x[i]) * (u[i] - v[i]);
    den += (u[i] - v[i]) * (u[i] - v[i]);
  }
  return num / den;
}

}  // namespace

Vec project_segment(const Segment& segment, std::span<const double> x) {
  require_same_size(segment.a(), x, "project_segment: dimension mismatch");
  const double lambda = clamp01(segment_coordinate(segment.a(), segment.b(), x));
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    out[i] = (1.0 - lambda) * segment.a()[i] + lambda * segment.b()[i];
  return out;
}

Vec project_segment_symmetric(const Segment& segment, std::span<const double> x) {
  require_same_size(segment.a(), x, "project_segment_symmetric: dimension mismatch");
  const double wa = clamp01(segment_coordinate(segment.b(), segment.a(), x));
  const double wb = clamp01(segment_coordinate(segment.a(), segment.b(), x));
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = wa * segment.a()[i] + wb * segment.b()[i];
  return out;
}

void project_slab_inplace(const Slab& slab, std::span<double> x) {
  const std::span<const double> cx(x.data(), x.size());
  require_same_size(slab.normal(), cx, "project_slab: dimension mismatch");
  const double ax = dot(slab.normal(), cx);
  const double excess = ax - std::max(slab.lo(), std::min(slab.hi(), ax));
  if (excess == 0.0) return;
  const double scale = excess / slab.normal_sq();
  for (std::size_t i = 0; i < x.size(); ++i) x[i] -= scale * slab.normal()[i];
}

Vec project_slab(const Slab& slab, std::span<const double> x) {
  Vec out(x.begin(), x.end());
  project_slab_inplace(slab, out);
  return out;
}

Vec project_unit_ball(std::span<const double> x) {
  const double r = norm2(x);
  Vec out(x.begin(), x.end());
  if (r > 1.0)
    for (double& v : out) v /= r;
  return out;
}

PlanarPoint project_dual_l1_ball(PlanarPoint p) {
  return {std::clamp(p.x1, -1.0, 1.0), std::clamp(p.x2, -1.0, 1.0)};
}

PlanarPoint project_dual_hexagon_ball(PlanarPoint p) {
  if (dual_hexagonal_norm(p) <= 1.0) return p;
  if (p.x1 * p.x2 >= 0.0) return project_dual_l1_ball(p);
  const double sign = p.x1 > 0.0 ? 1.0 : -1.0;
  const double along = std::clamp(p.x1 + p.x2, -1.0, 1.0);
  return {0.5 * sign + 0.5 * along, -0.5 * sign + 0.5 * along};
}

PlanarPoint project_dual_stadium_ball(PlanarPoint p) {
  const double x1 = p.x1;
  const double x2 = p.x2;
  if (x1 >= 1.0 && x2 >= 1.0) return {1.0, 1.0};
  if (x1 <= -1.0 && x2 <= -1.0) return {-1.0, -1.0};
  const double diff = x1 - x2;
  if (std::sqrt(2.0 * (x1 * x1 + x2 * x2)) + std::abs(diff) <= 2.0) return p;

  // Root of s^3 + (1 + |diff|) s - 2 beta = 0; alpha = ((1 + |diff|) / 3)^3.
  const double sign = diff >= 0.0 ? 1.0 : -1.0;
  const double third_p = (1.0 + std::abs(diff)) / 3.0;
  const double alpha = third_p * third_p * third_p;
  const double beta = 0.5 * sign * (x1 + x2);
  const double root = std::sqrt(beta * beta + alpha);
  // The two Cardano cube roots multiply to -third_p; take the larger-magnitude
  // one directly and recover the other from the product.
  const double big = beta >= 0.0 ? std::cbrt(beta + root) : std::cbrt(beta - root);
  const double s = big - third_p / big;
  return {sign * 0.5 * (1.0 + 2.0 * s - s * s), sign * 0.5 * (-1.0 + 2.0 * s + s * s)};
}

PlanarPoint project_dual_ball(PlanarNorm norm, PlanarPoint p) {
  switch (norm) {
    case PlanarNorm::stadium: return project_dual_stadium_ball(p);
    case PlanarNorm::hexagonal: return project_dual_hexagon_ball(p);
    case PlanarNorm::l1: return project_dual_l1_ball(p);
  }
  throw std::invalid_argument("project_dual_ball: unknown norm");
}

}  // namespace vertalign
