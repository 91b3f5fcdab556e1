#include "vertalign/planar_norms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace vertalign {

std::string_view to_string(PlanarNorm norm) {
  switch (norm) {
    case PlanarNorm::stadium: return "stadium";
    case PlanarNorm::hexagonal: return "hexagonal";
    case PlanarNorm::l1: return "l1";
  }
  return "unknown";
}

double stadium_norm(PlanarPoint p) {
  const double denom = std::abs(p.x1) + std::abs(p.x2);
  if (denom == 0.0) return 0.0;
  return (p.x1 * p.x1 + p.x2 * p.x2 + 2.0 * std::max(0.0, p.x1 * p.x2)) / denom;
}

double hexagonal_norm(PlanarPoint p) {
  return std::max({std::abs(p.x1), std::abs(p.x2), std::abs(p.x1 + p.x2)});
}

double l1_norm(PlanarPoint p) { return std::abs(p.x1) + std::abs(p.x2); }

double dual_stadium_norm(PlanarPoint p) {
  return 0.5 * std::abs(p.x1 - p.x2) + std::hypot(p.x1, p.x2) / std::numbers::sqrt2;
}

double dual_hexagonal_norm(PlanarPoint p) {
  return std::max({std::abs(p.x1), std::abs(p.x2), std::abs(p.x1 - p.x2)});
}

double dual_l1_norm(PlanarPoint p) { return std::max(std::abs(p.x1), std::abs(p.x2)); }

PlanarPoint stadium_gradient(PlanarPoint p) {
  const double a = p.x1;
  const double b = p.x2;
  if (a == 0.0 && b == 0.0) throw std::domain_error("stadium_gradient: undefined at the origin");
  if (a >= 0.0 && b >= 0.0) return {1.0, 1.0};
  if (a <= 0.0 && b <= 0.0) return {-1.0, -1.0};
  // Mixed signs: a != b, so the denominator is positive.
  const double d2 = (a - b) * (a - b);
  if (a < 0.0) {
    return {(-a * a + 2.0 * a * b + b * b) / d2, (-a * a - 2.0 * a * b + b * b) / d2};
  }
  return {(a * a - 2.0 * a * b - b * b) / d2, (a * a + 2.0 * a * b - b * b) / d2};
}

double norm_value(PlanarNorm norm, PlanarPoint p) {
  switch (norm) {
    case PlanarNorm::stadium: return stadium_norm(p);
    case PlanarNorm::hexagonal: return hexagonal_norm(p);
    case PlanarNorm::l1: return l1_norm(p);
  }
  throw std::invalid_argument("norm_value: unknown norm");
}

double dual_norm_value(PlanarNorm norm, PlanarPoint p) {
  switch (norm) {
    case PlanarNorm::stadium: return dual_stadium_norm(p);
    case PlanarNorm::hexagonal: return dual_hexagonal_norm(p);
    case PlanarNorm::l1: return dual_l1_norm(p);
  }
  throw std::invalid_argument("dual_norm_value: unknown norm");
}

}  // namespace vertalign
