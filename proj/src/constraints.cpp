#include "vertalign/constraints.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace vertalign {

std::string_view to_string(ConstraintKind kind) {
  switch (kind) {
    case ConstraintKind::interpolation: return "interpolation";
    case ConstraintKind::slope_even: return "slope_even";
    case ConstraintKind::slope_odd: return "slope_odd";
    case ConstraintKind::curvature_0: return "curvature_0";
    case ConstraintKind::curvature_1: return "curvature_1";
    case ConstraintKind::curvature_2: return "curvature_2";
  }
  return "unknown";
}

ConstraintSet::ConstraintSet(ConstraintKind kind, std::size_t dimension,
                             std::vector<FixedCoordinate> fixed, std::vector<SlabBlock> slabs)
    : kind_(kind), dimension_(dimension), fixed_(std::move(fixed)), slabs_(std::move(slabs)) {
  std::vector<bool> used(dimension_, false);
  auto claim = [&](std::size_t i) {
    if (i >= dimension_) throw std::invalid_argument("ConstraintSet: block outside the dimension");
    if (used[i]) throw std::invalid_argument("ConstraintSet: blocks must touch disjoint coordinates");
    used[i] = true;
  };
  for (const auto& f : fixed_) claim(f.index);
  for (const auto& b : slabs_)
    for (std::size_t k = 0; k < b.slab.normal().size(); ++k) claim(b.first + k);
}

void ConstraintSet::project_inplace(std::span<double> x) const {
  if (x.size() != dimension_) throw std::invalid_argument("project_set: dimension mismatch");
  for (const auto& f : fixed_) x[f.index] = f.value;
  for (const auto& b : slabs_) project_slab_inplace(b.slab, x.subspan(b.first, b.slab.normal().size()));
}

void ConstraintSet::intrepid_project_inplace(std::span<double> x) const {
  if (!has_enlargement()) {
    project_inplace(x);
    return;
  }
  if (x.size() != dimension_) throw std::invalid_argument("intrepid_project: dimension mismatch");
  for (const auto& b : slabs_) {
    const Slab& slab = b.slab;
    const Vec& a = slab.normal();
    std::span<double> z = x.subspan(b.first, a.size());
    const double norm_a = std::sqrt(slab.normal_sq());
    const double center = 0.5 * (slab.lo() + slab.hi());
    const double radius = 0.5 * (slab.hi() - slab.lo()) / norm_a;
    const double offset = dot(a, std::span<const double>(z.data(), z.size())) - center;
    const double dist = std::abs(offset) / norm_a;
    // Displacement x - P_Z x = (offset / |a|^2) a.
    double step = 0.0;
    if (radius == 0.0 || dist >= 2.0 * radius) {
      step = -offset / slab.normal_sq();
    } else if (dist <= radius) {
      continue;
    } else {
      step = (radius - dist) / radius * offset / slab.normal_sq();
    }
    for (std::size_t k = 0; k < a.size(); ++k) z[k] += step * a[k];
  }
}

double ConstraintSet::max_violation(std::span<const double> x) const {
  double worst = 0.0;
  for (const auto& f : fixed_) worst = std::max(worst, std::abs(x[f.index] - f.value));
  for (const auto& b : slabs_) {
    const double ax = dot(b.slab.normal(), x.subspan(b.first, b.slab.normal().size()));
    worst = std::max({worst, b.slab.lo() - ax, ax - b.slab.hi()});
  }
  return worst;
}

std::vector<ConstraintSet> build_six_sets(const AlignmentProblem& problem) {
  validate(problem);
  const std::size_t n = problem.size();
  const Vec& t = problem.t;

  std::vector<FixedCoordinate> fixed;
  for (std::size_t k = 0; k < problem.interp_index.size(); ++k)
    fixed.push_back({problem.interp_index[k], problem.interp_value[k]});

  std::vector<SlabBlock> slope[2];
  for (std::size_t j = 0; j + 1 < n; ++j) {
    const double bound = problem.sigma[j] * (t[j + 1] - t[j]);
    slope[j % 2].push_back({j, Slab({-1.0, 1.0}, -bound, bound)});
  }

  std::vector<SlabBlock> curvature[3];
  for (std::size_t j = 0; j < problem.delta.size(); ++j) {
    const double inv0 = 1.0 / (t[j + 1] - t[j]);
    const double inv1 = 1.0 / (t[j + 2] - t[j + 1]);
    curvature[j % 3].push_back(
        {j, Slab({inv0, -inv0 - inv1, inv1}, problem.delta[j], problem.gamma_c[j])});
  }

  std::vector<ConstraintSet> sets;
  sets.reserve(6);
  sets.emplace_back(ConstraintKind::interpolation, n, std::move(fixed), std::vector<SlabBlock>{});
  sets.emplace_back(ConstraintKind::slope_even, n, std::vector<FixedCoordinate>{}, std::move(slope[0]));
  sets.emplace_back(ConstraintKind::slope_odd, n, std::vector<FixedCoordinate>{}, std::move(slope[1]));
  sets.emplace_back(ConstraintKind::curvature_0, n, std::vector<FixedCoordinate>{}, std::move(curvature[0]));
  sets.emplace_back(ConstraintKind::curvature_1, n, std::vector<FixedCoordinate>{}, std::move(curvature[1]));
  sets.emplace_back(ConstraintKind::curvature_2, n, std::vector<FixedCoordinate>{}, std::move(curvature[2]));
  return sets;
}

Vec project_set(const ConstraintSet& set, std::span<const double> x) {
  Vec out(x.begin(), x.end());
  set.project_inplace(out);
  return out;
}

Vec intrepid_project(const ConstraintSet& set, std::span<const double> x) {
  Vec out(x.begin(), x.end());
  set.intrepid_project_inplace(out);
  return out;
}

double feasibility_residual(std::span<const double> x, std::span<const ConstraintSet> sets) {
  double worst = 0.0;
  Vec scratch(x.size());
  for (const auto& set : sets) {
    std::copy(x.begin(), x.end(), scratch.begin());
    set.project_inplace(scratch);
    worst = std::max(worst, max_abs_diff(scratch, x));
  }
  return worst;
}

void check_witness(const AlignmentProblem& problem, double tolerance) {
  if (problem.witness.empty()) return;
  const auto sets = build_six_sets(problem);
  const double r = feasibility_residual(problem.witness, sets);
  if (!(r <= tolerance))
    throw std::invalid_argument("invalid problem: witness violates the constraints by " +
                                std::to_string(r));
}

}  // namespace vertalign
