#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "vertalign/problem.hpp"
#include "vertalign/projectors.hpp"
#include "vertalign/vec.hpp"

namespace vertalign {

/// The six sets whose intersection is the feasible region:
///   interpolation            fixed knots
///   slope_even / slope_odd   slope slabs of segments j with j even / odd
///   curvature_0/1/2          grade-change slabs of knot triples j with j mod 3 = 0/1/2
/// Within each set the blocks touch disjoint coordinates, so the set's
/// projector is the blockwise composition of exact block projectors.
enum class ConstraintKind { interpolation, slope_even, slope_odd, curvature_0, curvature_1, curvature_2 };

std::string_view to_string(ConstraintKind kind);

struct FixedCoordinate {
  std::size_t index;
  double value;
};

/// A slab acting on the contiguous coordinates first .. first + dim - 1.
struct SlabBlock {
  std::size_t first;
  Slab slab;
};

class ConstraintSet {
 public:
  ConstraintSet(ConstraintKind kind, std::size_t dimension, std::vector<FixedCoordinate> fixed,
                std::vector<SlabBlock> slabs);

  ConstraintKind kind() const { return kind_; }
  std::size_t dimension() const { return dimension_; }
  const std::vector<FixedCoordinate>& fixed() const { return fixed_; }
  const std::vector<SlabBlock>& slabs() const { return slabs_; }

  /// True for slab-based sets: each block {lo <= <a,z> <= hi} is the
  /// beta-enlargement of its central hyperplane <a,z> = (lo+hi)/2 with
  /// beta = (hi-lo) / (2|a|).
  bool has_enlargement() const { return kind_ != ConstraintKind::interpolation; }
  /// True when the set imposes nothing (empty constraint family).
  bool is_whole_space() const { return fixed_.empty() && slabs_.empty(); }

  void project_inplace(std::span<double> x) const;
  void intrepid_project_inplace(std::span<double> x) const;
  /// Largest violation of any defining (in)equality, in the units of <a,z>
  /// for slabs and meters for fixed coordinates.
  double max_violation(std::span<const double> x) const;

 private:
  ConstraintKind kind_;
  std::size_t dimension_;
  std::vector<FixedCoordinate> fixed_;
  std::vector<SlabBlock> slabs_;
};

/// Builds the six sets in ConstraintKind order. Empty families give
/// whole-space sets. Throws std::invalid_argument on malformed problems.
std::vector<ConstraintSet> build_six_sets(const AlignmentProblem& problem);

/// Exact Euclidean projection onto the set.
Vec project_set(const ConstraintSet& set, std::span<const double> x);

/// Blockwise intrepid projector: P_Z x when d_Z(x) >= 2 beta, x when
/// d_Z(x) <= beta, and x + (beta - d_Z(x)) (x - P_Z x) / beta in between.
/// Sets without an enlargement structure fall back to project_set.
Vec intrepid_project(const ConstraintSet& set, std::span<const double> x);

/// max_i |x - P_{C_i} x|_inf
double feasibility_residual(std::span<const double> x, std::span<const ConstraintSet> sets);

/// Throws std::invalid_argument unless the problem's witness (when present)
/// lies in every set up to `tolerance` in max-norm displacement.
void check_witness(const AlignmentProblem& problem, double tolerance = 1e-9);

}  // namespace vertalign
