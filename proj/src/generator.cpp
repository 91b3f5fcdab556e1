#include "vertalign/generator.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

#include "vertalign/constraints.hpp"

namespace vertalign {

namespace {

class Uniform {
 public:
  explicit Uniform(std::uint64_t seed) : engine_(seed) {}
  /// [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double between(double lo, double hi) { return lo + (hi - lo) * unit(); }
  std::size_t index(std::size_t count) {
    return std::min(count - 1, static_cast<std::size_t>(unit() * static_cast<double>(count)));
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace

AlignmentProblem generate_problem(std::uint64_t seed, std::size_t n, const GeneratorParams& g) {
  if (n < 2) throw std::invalid_argument("generate_problem: n must be at least 2");
  if (!(g.spacing_min > 0.0) || g.spacing_max < g.spacing_min)
    throw std::invalid_argument("generate_problem: bad spacing range");
  if (!(g.ground_grade_memory >= 0.0 && g.ground_grade_memory <= 1.0))
    throw std::invalid_argument("generate_problem: grade memory must lie in [0, 1]");
  if (!(g.sigma > 0.0) || g.curvature < 0.0 || !(g.witness_margin > 0.0 && g.witness_margin <= 1.0))
    throw std::invalid_argument("generate_problem: bad bounds");

  Uniform rng(seed);
  AlignmentProblem p;
  p.name = "synthetic-" + std::to_string(seed) + "-n" + std::to_string(n);
  p.seed = seed;
  p.alpha = g.alpha;
  p.beta = g.beta;

  p.t.resize(n);
  p.t[0] = 0.0;
  for (std::size_t i = 1; i < n; ++i) p.t[i] = p.t[i - 1] + rng.between(g.spacing_min, g.spacing_max);

  p.w.resize(n);
  p.w[0] = g.ground_start;
  double grade = rng.between(-g.ground_grade_max, g.ground_grade_max);
  for (std::size_t i = 1; i < n; ++i) {
    grade = std::clamp(g.ground_grade_memory * grade + rng.between(-g.ground_grade_step, g.ground_grade_step),
                       -g.ground_grade_max, g.ground_grade_max);
    p.w[i] = p.w[i - 1] + grade * (p.t[i] - p.t[i - 1]);
  }

  p.sigma.assign(n - 1, g.sigma);
  const bool curved = g.curvature > 0.0 && n >= 3;
  if (curved) {
    p.delta.assign(n - 2, -g.curvature);
    p.gamma_c.assign(n - 2, g.curvature);
  }

  // Witness: follow the ground with the grade clipped to the shrunken slope
  // bound and the grade change clipped to the shrunken curvature bound.
  const double s_max = g.witness_margin * g.sigma;
  const double c_max = g.witness_margin * g.curvature;
  p.witness.resize(n);
  p.witness[0] = p.w[0];
  double previous = 0.0;
  for (std::size_t j = 0; j + 1 < n; ++j) {
    const double dt = p.t[j + 1] - p.t[j];
    double s = std::clamp((p.w[j + 1] - p.witness[j]) / dt, -s_max, s_max);
    if (curved && j > 0) s = std::clamp(s, previous - c_max, previous + c_max);
    p.witness[j + 1] = p.witness[j] + s * dt;
    previous = s;
  }

  std::vector<std::size_t> picks{0, n - 1};
  if (n > 2) {
    const std::size_t interior = std::min(g.interior_interpolation, n - 2);
    while (picks.size() < interior + 2) {
      const std::size_t k = 1 + rng.index(n - 2);
      if (std::find(picks.begin(), picks.end(), k) == picks.end()) picks.push_back(k);
    }
  }
  std::sort(picks.begin(), picks.end());
  picks.erase(std::unique(picks.begin(), picks.end()), picks.end());
  for (std::size_t k : picks) {
    p.interp_index.push_back(k);
    p.interp_value.push_back(p.witness[k]);
  }

  validate(p);
  check_witness(p);
  return p;
}

}  // namespace vertalign
