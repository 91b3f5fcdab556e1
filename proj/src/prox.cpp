#include "vertalign/prox.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "vertalign/projectors.hpp"

namespace vertalign {

namespace {

void require_positive(double value, const char* what) {
  if (!(value > 0.0)) throw std::invalid_argument(what);
}

Vec scaled_offset(std::span<const double> x, std::span<const double> w, double w_scale,
                  double divisor) {
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = (x[i] - w_scale * w[i]) / divisor;
  return out;
}

}  // namespace

Vec moreau_complement(const ProxFn& prox_f, double gamma, std::span<const double> x) {
  require_positive(gamma, "moreau_complement: gamma must be positive");
  Vec scaled(x.begin(), x.end());
  for (double& v : scaled) v /= gamma;
  const Vec p = prox_f(1.0 / gamma, scaled);
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] - gamma * p[i];
  return out;
}

Vec prox_scaled_shifted_homogeneous(const VecMap& base_prox, double alpha, double gamma,
                                    std::span<const double> w, std::span<const double> x) {
  require_positive(alpha, "prox_scaled_shifted_homogeneous: alpha must be positive");
  require_positive(gamma, "prox_scaled_shifted_homogeneous: gamma must be positive");
  require_same_size(w, x, "prox_scaled_shifted_homogeneous: dimension mismatch");
  const double ga = gamma * alpha;
  const Vec p = base_prox(scaled_offset(x, w, 1.0, ga));
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = w[i] + ga * p[i];
  return out;
}

Vec prox_scaled_shifted_homogeneous_conjugate(const VecMap& base_conjugate_prox, double alpha,
                                              double gamma, std::span<const double> w,
                                              std::span<const double> x) {
  require_positive(alpha, "prox_scaled_shifted_homogeneous_conjugate: alpha must be positive");
  require_positive(gamma, "prox_scaled_shifted_homogeneous_conjugate: gamma must be positive");
  require_same_size(w, x, "prox_scaled_shifted_homogeneous_conjugate: dimension mismatch");
  Vec out = base_conjugate_prox(scaled_offset(x, w, gamma, alpha));
  for (double& v : out) v *= alpha;
  return out;
}

Vec prox_via_dual_ball(const VecMap& ball_projector, double alpha, double gamma,
                       std::span<const double> w, std::span<const double> x) {
  require_positive(alpha, "prox_via_dual_ball: alpha must be positive");
  require_positive(gamma, "prox_via_dual_ball: gamma must be positive");
  require_same_size(w, x, "prox_via_dual_ball: dimension mismatch");
  const double ga = gamma * alpha;
  const Vec p = ball_projector(scaled_offset(x, w, 1.0, ga));
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] - ga * p[i];
  return out;
}

Vec prox_via_dual_ball_conjugate(const VecMap& ball_projector, double alpha, double gamma,
                                 std::span<const double> w, std::span<const double> x) {
  require_positive(alpha, "prox_via_dual_ball_conjugate: alpha must be positive");
  require_positive(gamma, "prox_via_dual_ball_conjugate: gamma must be positive");
  require_same_size(w, x, "prox_via_dual_ball_conjugate: dimension mismatch");
  Vec out = ball_projector(scaled_offset(x, w, gamma, alpha));
  for (double& v : out) v *= alpha;
  return out;
}

PlanarPoint prox_planar_norm(PlanarNorm norm, double alpha, double gamma, PlanarPoint w,
                             PlanarPoint x) {
  require_positive(alpha, "prox_planar_norm: alpha must be positive");
  require_positive(gamma, "prox_planar_norm: gamma must be positive");
  const double ga = gamma * alpha;
  return x - ga * project_dual_ball(norm, (1.0 / ga) * (x - w));
}

PlanarPoint prox_planar_norm_conjugate(PlanarNorm norm, double alpha, double gamma, PlanarPoint w,
                                       PlanarPoint x) {
  require_positive(alpha, "prox_planar_norm_conjugate: alpha must be positive");
  require_positive(gamma, "prox_planar_norm_conjugate: gamma must be positive");
  return alpha * project_dual_ball(norm, (1.0 / alpha) * (x - gamma * w));
}

Vec prox_indicator(const VecMap& projector, std::span<const double> x) { return projector(x); }

Vec prox_indicator_conjugate(const VecMap& projector, double gamma, std::span<const double> x) {
  require_positive(gamma, "prox_indicator_conjugate: gamma must be positive");
  Vec scaled(x.begin(), x.end());
  for (double& v : scaled) v /= gamma;
  const Vec p = projector(scaled);
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] - gamma * p[i];
  return out;
}

Vec prox_squared_distance(double alpha, double gamma, std::span<const double> w,
                          std::span<const double> x) {
  require_positive(alpha, "prox_squared_distance: alpha must be positive");
  require_positive(gamma, "prox_squared_distance: gamma must be positive");
  require_same_size(w, x, "prox_squared_distance: dimension mismatch");
  const double c = 2.0 * alpha * gamma;
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = (x[i] + c * w[i]) / (1.0 + c);
  return out;
}

Vec prox_squared_distance_conjugate(double alpha, double gamma, std::span<const double> w,
                                    std::span<const double> x) {
  require_positive(alpha, "prox_squared_distance_conjugate: alpha must be positive");
  require_positive(gamma, "prox_squared_distance_conjugate: gamma must be positive");
  require_same_size(w, x, "prox_squared_distance_conjugate: dimension mismatch");
  const double c = gamma / (gamma + 2.0 * alpha);
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] - c * (x[i] + 2.0 * alpha * w[i]);
  return out;
}

Vec prox_norm_distance(double alpha, double gamma, std::span<const double> w,
                       std::span<const double> x) {
  require_positive(alpha, "prox_norm_distance: alpha must be positive");
  require_positive(gamma, "prox_norm_distance: gamma must be positive");
  require_same_size(w, x, "prox_norm_distance: dimension mismatch");
  const double ga = gamma * alpha;
  const double r = dist2(w, x);
  if (r <= ga) return Vec(w.begin(), w.end());
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] + ga * (w[i] - x[i]) / r;
  return out;
}

Vec prox_norm_distance_conjugate(double alpha, double gamma, std::span<const double> w,
                                 std::span<const double> x) {
  require_positive(alpha, "prox_norm_distance_conjugate: alpha must be positive");
  require_positive(gamma, "prox_norm_distance_conjugate: gamma must be positive");
  require_same_size(w, x, "prox_norm_distance_conjugate: dimension mismatch");
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] - gamma * w[i];
  const double r = norm2(out);
  if (r > alpha)
    for (double& v : out) v *= alpha / r;
  return out;
}

Vec prox_l1_distance(double alpha, double gamma, std::span<const double> w,
                     std::span<const double> x) {
  require_positive(alpha, "prox_l1_distance: alpha must be positive");
  require_positive(gamma, "prox_l1_distance: gamma must be positive");
  require_same_size(w, x, "prox_l1_distance: dimension mismatch");
  const double ga = gamma * alpha;
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = w[i] - x[i];
    out[i] = std::abs(d) > ga ? x[i] + std::copysign(ga, d) : w[i];
  }
  return out;
}

Vec prox_l1_distance_conjugate(double alpha, double gamma, std::span<const double> w,
                               std::span<const double> x) {
  require_positive(alpha, "prox_l1_distance_conjugate: alpha must be positive");
  require_positive(gamma, "prox_l1_distance_conjugate: gamma must be positive");
  require_same_size(w, x, "prox_l1_distance_conjugate: dimension mismatch");
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = std::clamp(x[i] - gamma * w[i], -alpha, alpha);
  return out;
}

Vec prox_abs_inner(double alpha, double gamma, std::span<const double> direction,
                   std::span<const double> w, std::span<const double> x) {
  require_positive(alpha, "prox_abs_inner: alpha must be positive");
  require_positive(gamma, "prox_abs_inner: gamma must be positive");
  require_same_size(w, x, "prox_abs_inner: dimension mismatch");
  require_same_size(direction, x, "prox_abs_inner: dimension mismatch");
  const double dd = dot(direction, direction);
  if (!(dd > 0.0)) throw std::invalid_argument("prox_abs_inner: direction must be nonzero");
  const double ga = gamma * alpha;
  double inner = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) inner += direction[i] * (x[i] - w[i]);
  const double q = std::clamp(inner / (ga * dd), -1.0, 1.0);
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] - ga * q * direction[i];
  return out;
}

Vec prox_abs_inner_conjugate(double alpha, double gamma, std::span<const double> direction,
                             std::span<const double> w, std::span<const double> x) {
  require_positive(alpha, "prox_abs_inner_conjugate: alpha must be positive");
  require_positive(gamma, "prox_abs_inner_conjugate: gamma must be positive");
  require_same_size(w, x, "prox_abs_inner_conjugate: dimension mismatch");
  require_same_size(direction, x, "prox_abs_inner_conjugate: dimension mismatch");
  const double dd = dot(direction, direction);
  if (!(dd > 0.0)) throw std::invalid_argument("prox_abs_inner_conjugate: direction must be nonzero");
  double inner = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) inner += direction[i] * (x[i] - gamma * w[i]);
  const double q = std::clamp(inner / (alpha * dd), -1.0, 1.0);
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = alpha * q * direction[i];
  return out;
}

std::string_view to_string(TableKind kind) {
  switch (kind) {
    case TableKind::indicator: return "indicator";
    case TableKind::squared_distance: return "squared_distance";
    case TableKind::norm_distance: return "norm_distance";
    case TableKind::l1_distance: return "l1_distance";
    case TableKind::abs_inner: return "abs_inner";
  }
  return "unknown";
}

namespace {

const VecMap& require_projector(const TableTerm& term) {
  if (!term.projector) throw std::invalid_argument("indicator term requires a projector");
  return term.projector;
}

}  // namespace

Vec prox_table(const TableTerm& term, double gamma, std::span<const double> x) {
  switch (term.kind) {
    case TableKind::indicator: return prox_indicator(require_projector(term), x);
    case TableKind::squared_distance: return prox_squared_distance(term.alpha, gamma, term.w, x);
    case TableKind::norm_distance: return prox_norm_distance(term.alpha, gamma, term.w, x);
    case TableKind::l1_distance: return prox_l1_distance(term.alpha, gamma, term.w, x);
    case TableKind::abs_inner: return prox_abs_inner(term.alpha, gamma, term.direction, term.w, x);
  }
  throw std::invalid_argument("prox_table: unknown kind");
}

Vec prox_table_conjugate(const TableTerm& term, double gamma, std::span<const double> x) {
  switch (term.kind) {
    case TableKind::indicator:
      return prox_indicator_conjugate(require_projector(term), gamma, x);
    case TableKind::squared_distance:
      return prox_squared_distance_conjugate(term.alpha, gamma, term.w, x);
    case TableKind::norm_distance:
      return prox_norm_distance_conjugate(term.alpha, gamma, term.w, x);
    case TableKind::l1_distance: return prox_l1_distance_conjugate(term.alpha, gamma, term.w, x);
    case TableKind::abs_inner:
      return prox_abs_inner_conjugate(term.alpha, gamma, term.direction, term.w, x);
  }
  throw std::invalid_argument("prox_table_conjugate: unknown kind");
}

double table_value(const TableTerm& term, std::span<const double> x) {
  switch (term.kind) {
    case TableKind::indicator: {
      const Vec p = require_projector(term)(x);
      return max_abs_diff(p, x) <= 1e-12 * (1.0 + max_abs(x))
                 ? 0.0
                 : std::numeric_limits<double>::infinity();
    }
    case TableKind::squared_distance: {
      const double d = dist2(x, term.w);
      return term.alpha * d * d;
    }
    case TableKind::norm_distance: return term.alpha * dist2(x, term.w);
    case TableKind::l1_distance: {
      double s = 0.0;
      for (std::size_t i = 0; i < x.size(); ++i) s += std::abs(x[i] - term.w[i]);
      return term.alpha * s;
    }
    case TableKind::abs_inner: {
      double s = 0.0;
      for (std::size_t i = 0; i < x.size(); ++i) s += term.direction[i] * (x[i] - term.w[i]);
      return term.alpha * std::abs(s);
    }
  }
  throw std::invalid_argument("table_value: unknown kind");
}

}  // namespace vertalign
