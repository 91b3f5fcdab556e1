#include "vertalign/spline_area.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "vertalign/projectors.hpp"
#include "vertalign/prox.hpp"

namespace vertalign {

StationVector::StationVector(Vec t) : t_(std::move(t)) {
  if (t_.size() < 2) throw std::invalid_argument("StationVector: need at least two stations");
  for (std::size_t i = 0; i < t_.size(); ++i) {
    if (!std::isfinite(t_[i])) throw std::invalid_argument("StationVector: stations must be finite");
    if (i > 0 && !(t_[i - 1] < t_[i]))
      throw std::invalid_argument("StationVector: stations must be strictly increasing");
  }
}

SplineProfile::SplineProfile(StationVector stations, Vec elevations)
    : stations_(std::move(stations)), elevations_(std::move(elevations)) {
  if (stations_.size() != elevations_.size())
    throw std::invalid_argument("SplineProfile: stations and elevations differ in length");
}

double spline_eval(const SplineProfile& profile, double s) {
  const Vec& t = profile.stations().values();
  const Vec& x = profile.elevations();
  if (!(s >= t.front() && s <= t.back())) throw std::out_of_range("spline_eval: station outside profile");
  // First knot strictly greater than s; knot hits return x_i exactly.
  auto it = std::upper_bound(t.begin(), t.end(), s);
  if (it == t.end()) return x.back();
  const std::size_t i = static_cast<std::size_t>(it - t.begin()) - 1;
  if (s == t[i]) return x[i];
  return x[i] + (x[i + 1] - x[i]) * (s - t[i]) / (t[i + 1] - t[i]);
}

AreaWeights weights(const StationVector& t) {
  const std::size_t n = t.size();
  AreaWeights out;
  out.tau.resize(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) out.tau[i] = 0.5 * (t[i + 1] - t[i]);
  out.eta.assign(n, 0.0);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    out.eta[i] += out.tau[i];
    out.eta[i + 1] += out.tau[i];
  }
  return out;
}

double segment_area(double tau, double d1, double d2, PlanarNorm norm) {
  return tau * norm_value(norm, {d1, d2});
}

double total_area(std::span<const double> x, std::span<const double> w, const StationVector& t,
                  PlanarNorm norm) {
  if (x.size() != t.size() || w.size() != t.size())
    throw std::invalid_argument("total_area: dimension mismatch");
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < t.size(); ++i)
    sum += segment_area(0.5 * (t[i + 1] - t[i]), x[i] - w[i], x[i + 1] - w[i + 1], norm);
  return sum;
}

double signed_total_area(std::span<const double> x, std::span<const double> w,
                         const StationVector& t) {
  if (x.size() != t.size() || w.size() != t.size())
    throw std::invalid_argument("signed_total_area: dimension mismatch");
  const AreaWeights aw = weights(t);
  double sum = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) sum += aw.eta[i] * (x[i] - w[i]);
  return sum;
}

AreaModel::AreaModel(const StationVector& t, Vec g, PlanarNorm nrm)
    : ground(std::move(g)), area_weights(weights(t)), norm(nrm) {
  if (ground.size() != t.size()) throw std::invalid_argument("AreaModel: ground/station size mismatch");
}

namespace {

std::size_t first_segment(AreaPart part) { return part == AreaPart::odd ? 0 : 1; }

void check_area_args(const AreaModel& model, double alpha, double gamma,
                     std::span<const double> x) {
  if (x.size() < 2) throw std::invalid_argument("area prox: need n >= 2");
  if (x.size() != model.ground.size()) throw std::invalid_argument("area prox: dimension mismatch");
  if (!(alpha > 0.0) || !(gamma > 0.0))
    throw std::invalid_argument("area prox: alpha and gamma must be positive");
}

}  // namespace

double area_part_value(const AreaModel& model, AreaPart part, std::span<const double> x) {
  if (x.size() != model.ground.size()) throw std::invalid_argument("area_part_value: dimension mismatch");
  const Vec& w = model.ground;
  double sum = 0.0;
  for (std::size_t k = first_segment(part); k + 1 < x.size(); k += 2)
    sum += model.area_weights.tau[k] * norm_value(model.norm, {x[k] - w[k], x[k + 1] - w[k + 1]});
  return sum;
}

Vec prox_area(const AreaModel& model, AreaPart part, double alpha, double gamma,
              std::span<const double> x) {
  check_area_args(model, alpha, gamma, x);
  const Vec& w = model.ground;
  Vec out(x.begin(), x.end());
  // Blocks touch disjoint coordinate pairs and may be evaluated in any order.
  for (std::size_t k = first_segment(part); k + 1 < x.size(); k += 2) {
    const double scale = gamma * alpha * model.area_weights.tau[k];
    const PlanarPoint p = project_dual_ball(
        model.norm, {(x[k] - w[k]) / scale, (x[k + 1] - w[k + 1]) / scale});
    out[k] = x[k] - scale * p.x1;
    out[k + 1] = x[k + 1] - scale * p.x2;
  }
  return out;
}

Vec prox_area_conjugate(const AreaModel& model, AreaPart part, double alpha, double gamma,
                        std::span<const double> x) {
  check_area_args(model, alpha, gamma, x);
  const Vec& w = model.ground;
  Vec out(x.size(), 0.0);
  for (std::size_t k = first_segment(part); k + 1 < x.size(); k += 2) {
    const double weight = alpha * model.area_weights.tau[k];
    const PlanarPoint p = project_dual_ball(
        model.norm, {(x[k] - gamma * w[k]) / weight, (x[k + 1] - gamma * w[k + 1]) / weight});
    out[k] = weight * p.x1;
    out[k + 1] = weight * p.x2;
  }
  return out;
}

double area_l1_value(std::span<const double> w, std::span<const double> eta,
                     std::span<const double> x) {
  double sum = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) sum += eta[i] * std::abs(x[i] - w[i]);
  return sum;
}

Vec prox_area_l1(std::span<const double> w, std::span<const double> eta, double alpha,
                 double gamma, std::span<const double> x) {
  require_same_size(w, x, "prox_area_l1: dimension mismatch");
  require_same_size(eta, x, "prox_area_l1: dimension mismatch");
  if (!(alpha > 0.0) || !(gamma > 0.0))
    throw std::invalid_argument("prox_area_l1: alpha and gamma must be positive");
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double threshold = gamma * alpha * eta[i];
    const double d = w[i] - x[i];
    out[i] = std::abs(d) > threshold ? x[i] + std::copysign(threshold, d) : w[i];
  }
  return out;
}

Vec prox_area_l1_conjugate(std::span<const double> w, std::span<const double> eta, double alpha,
                           double gamma, std::span<const double> x) {
  require_same_size(w, x, "prox_area_l1_conjugate: dimension mismatch");
  require_same_size(eta, x, "prox_area_l1_conjugate: dimension mismatch");
  if (!(alpha > 0.0) || !(gamma > 0.0))
    throw std::invalid_argument("prox_area_l1_conjugate: alpha and gamma must be positive");
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double bound = alpha * eta[i];
    out[i] = std::clamp(x[i] - gamma * w[i], -bound, bound);
  }
  return out;
}

Vec prox_abs_signed_area(std::span<const double> w, std::span<const double> eta, double alpha,
                         double gamma, std::span<const double> x) {
  return prox_abs_inner(alpha, gamma, eta, w, x);
}

Vec prox_abs_signed_area_conjugate(std::span<const double> w, std::span<const double> eta,
                                   double alpha, double gamma, std::span<const double> x) {
  return prox_abs_inner_conjugate(alpha, gamma, eta, w, x);
}

}  // namespace vertalign
