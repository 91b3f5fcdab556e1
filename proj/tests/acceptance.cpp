// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "vertalign/battery.hpp"
#include "vertalign/planar_norms.hpp"
#include "vertalign/projectors.hpp"
#include "vertalign/prox.hpp"
#include "vertalign/solvers.hpp"
#include "vertalign/spline_area.hpp"

using namespace vertalign;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(int id, const char* title, const Outcome& o) {
  std::printf("%s criterion %d: %s | %s\n", o.pass ? "PASS" : "FAIL", id, title, o.detail.c_str());
  std::fflush(stdout);
  if (!o.pass) ++failures;
}

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

Vec to_vec(const oracle::Point& p, std::size_t n) { return Vec(p.begin(), p.begin() + static_cast<long>(n)); }

// One randomly drawn prox instance: the operator under test and its objective.
struct ProxCase {
  std::function<Vec(double, std::span<const double>)> prox;
  std::function<Vec(double, std::span<const double>)> conjugate;
  std::function<double(std::span<const double>)> value;
  std::size_t dim = 1;
  // Set for indicators: the oracle searches this box with a zero objective.
  Vec box_lo, box_hi;
};

using CaseFactory = std::function<ProxCase(oracle::Rng&)>;

StationVector random_stations(oracle::Rng& rng, std::size_t n) {
  Vec t(n);
  t[0] = rng.uniform(-10, 10);
  for (std::size_t i = 1; i < n; ++i) t[i] = t[i - 1] + rng.uniform(0.2, 4);
  return StationVector(t);
}

std::vector<std::pair<std::string, CaseFactory>> prox_catalog() {
  std::vector<std::pair<std::string, CaseFactory>> c;
  auto dim = [](oracle::Rng& rng) { return 1 + static_cast<std::size_t>(rng.integer(0, 2)); };
  auto table = [dim](TableKind kind) {
    return [dim, kind](oracle::Rng& rng) {
      const std::size_t n = dim(rng);
      auto term = std::make_shared<TableTerm>();
      term->kind = kind;
      term->alpha = rng.log_uniform(0.1, 10);
      term->w = rng.vec(n, -2, 2);
      ProxCase pc;
      pc.dim = n;
      if (kind == TableKind::abs_inner) {
        term->direction = rng.vec(n, -2, 2);
        term->direction[0] += term->direction[0] >= 0 ? 0.3 : -0.3;
      }
      if (kind == TableKind::indicator) {
        pc.box_lo = rng.vec(n, -3, 0);
        pc.box_hi = pc.box_lo;
        for (double& v : pc.box_hi) v += rng.uniform(0.1, 3);
        term->projector = [lo = pc.box_lo, hi = pc.box_hi](std::span<const double> x) {
          Vec r(x.begin(), x.end());
          for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::clamp(r[i], lo[i], hi[i]);
          return r;
        };
      }
      pc.prox = [term](double g, std::span<const double> x) { return prox_table(*term, g, x); };
      pc.conjugate = [term](double g, std::span<const double> x) { return prox_table_conjugate(*term, g, x); };
      pc.value = [term](std::span<const double> x) { return table_value(*term, x); };
      return pc;
    };
  };
  for (TableKind k : {TableKind::indicator, TableKind::squared_distance, TableKind::norm_distance,
                      TableKind::l1_distance, TableKind::abs_inner})
    c.emplace_back("table " + std::string(to_string(k)), table(k));

  for (PlanarNorm norm : {PlanarNorm::stadium, PlanarNorm::hexagonal, PlanarNorm::l1}) {
    c.emplace_back("planar " + std::string(to_string(norm)), [norm](oracle::Rng& rng) {
      const double alpha = rng.log_uniform(0.1, 10);
      const PlanarPoint w{rng.uniform(-2, 2), rng.uniform(-2, 2)};
      ProxCase pc;
      pc.dim = 2;
      pc.prox = [=](double g, std::span<const double> x) {
        const PlanarPoint p = prox_planar_norm(norm, alpha, g, w, {x[0], x[1]});
        return Vec{p.x1, p.x2};
      };
      pc.conjugate = [=](double g, std::span<const double> x) {
        const PlanarPoint p = prox_planar_norm_conjugate(norm, alpha, g, w, {x[0], x[1]});
        return Vec{p.x1, p.x2};
      };
      pc.value = [=](std::span<const double> x) { return alpha * norm_value(norm, {x[0] - w.x1, x[1] - w.x2}); };
      return pc;
    });
    for (AreaPart part : {AreaPart::odd, AreaPart::even}) {
      const std::string name = std::string("area ") + (part == AreaPart::odd ? "odd " : "even ") +
                               std::string(to_string(norm));
      c.emplace_back(name, [norm, part](oracle::Rng& rng) {
        const StationVector t = random_stations(rng, 2 + static_cast<std::size_t>(rng.integer(0, 1)));
        auto model = std::make_shared<const AreaModel>(t, rng.vec(t.size(), -2, 2), norm);
        const double alpha = rng.log_uniform(0.1, 10);
        ProxCase pc;
        pc.dim = t.size();
        pc.prox = [=](double g, std::span<const double> x) { return prox_area(*model, part, alpha, g, x); };
        pc.conjugate = [=](double g, std::span<const double> x) {
          return prox_area_conjugate(*model, part, alpha, g, x);
        };
        pc.value = [=](std::span<const double> x) { return alpha * area_part_value(*model, part, x); };
        return pc;
      });
    }
  }
  c.emplace_back("area l1 separable", [dim](oracle::Rng& rng) {
    const std::size_t n = dim(rng);
    const Vec w = rng.vec(n, -2, 2), eta = rng.vec(n, 0.1, 3);
    const double alpha = rng.log_uniform(0.1, 10);
    ProxCase pc;
    pc.dim = n;
    pc.prox = [=](double g, std::span<const double> x) { return prox_area_l1(w, eta, alpha, g, x); };
    pc.conjugate = [=](double g, std::span<const double> x) { return prox_area_l1_conjugate(w, eta, alpha, g, x); };
    pc.value = [=](std::span<const double> x) { return alpha * area_l1_value(w, eta, x); };
    return pc;
  });
  c.emplace_back("abs signed area", [dim](oracle::Rng& rng) {
    const std::size_t n = dim(rng);
    const Vec w = rng.vec(n, -2, 2), eta = rng.vec(n, 0.1, 3);
    const double alpha = rng.log_uniform(0.1, 10);
    ProxCase pc;
    pc.dim = n;
    pc.prox = [=](double g, std::span<const double> x) { return prox_abs_signed_area(w, eta, alpha, g, x); };
    pc.conjugate = [=](double g, std::span<const double> x) {
      return prox_abs_signed_area_conjugate(w, eta, alpha, g, x);
    };
    pc.value = [=](std::span<const double> x) {
      double s = 0;
      for (std::size_t i = 0; i < x.size(); ++i) s += eta[i] * (x[i] - w[i]);
      return alpha * std::abs(s);
    };
    return pc;
  });
  return c;
}

Outcome operator_oracle() {
  const auto start = Clock::now();
  oracle::Rng rng(1001);
  double worst = 0;
  std::string worst_name;
  std::size_t instances = 0;
  for (const auto& [name, factory] : prox_catalog()) {
    for (int k = 0; k < 1000; ++k) {
      const ProxCase pc = factory(rng);
      const double gamma = rng.log_uniform(0.1, 10);
      const Vec x = rng.vec(pc.dim, -5, 5);
      Vec o;
      if (!pc.box_lo.empty()) {
        o = oracle::brute_force_prox_box([](const oracle::Point&) { return 0.0; }, x, gamma, pc.box_lo, pc.box_hi);
      } else {
        const auto f = [&](const oracle::Point& p) { return pc.value(to_vec(p, pc.dim)); };
        o = oracle::brute_force_prox(f, x, gamma);
      }
      const double err = max_abs_diff(o, pc.prox(gamma, x));
      if (err > worst) worst = err, worst_name = name;
      ++instances;
    }
  }
  const double secs = seconds_since(start);
  return {worst < 1e-4 && secs < 60,
          fmt("%zu instances, max error %.2e (%s), %.1f s", instances, worst, worst_name.c_str(), secs)};
}

Outcome dual_ball() {
  const auto start = Clock::now();
  const oracle::BoundaryProjector oracles[] = {oracle::stadium_ball_oracle(100000),
                                               oracle::hexagon_ball_oracle(100000),
                                               oracle::square_ball_oracle(100000)};
  const std::function<PlanarPoint(PlanarPoint)> projectors[] = {project_dual_stadium_ball,
                                                                project_dual_hexagon_ball, project_dual_l1_ball};
  oracle::Rng rng(1002);
  double worst = 0;
  for (int b = 0; b < 3; ++b) {
    for (int k = 0; k < 10000; ++k) {
      const double x1 = rng.uniform(-5, 5), x2 = rng.uniform(-5, 5);
      const auto o = oracles[b].project(x1, x2);
      const PlanarPoint p = projectors[b]({x1, x2});
      worst = std::max(worst, std::hypot(p.x1 - o[0], p.x2 - o[1]));
    }
  }
  const bool exact = project_dual_stadium_ball({2, 2}) == PlanarPoint{1, 1};
  return {worst < 1e-6 && exact, fmt("30000 points, max distance %.2e; stadium(2,2) -> (1,1) %s; %.1f s", worst,
                                     exact ? "exactly" : "NOT exactly", seconds_since(start))};
}

Outcome moreau() {
  oracle::Rng rng(1003);
  double worst = 0;
  std::size_t pairs = 0;
  for (const auto& [name, factory] : prox_catalog()) {
    ++pairs;
    for (int k = 0; k < 10000; ++k) {
      const ProxCase pc = factory(rng);
      const double gamma = rng.log_uniform(0.1, 10);
      const Vec x = rng.vec(pc.dim, -10, 10);
      Vec scaled = x;
      for (double& v : scaled) v /= gamma;
      const Vec p = pc.prox(1 / gamma, scaled), c = pc.conjugate(gamma, x);
      Vec r(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] - gamma * p[i] - c[i];
      worst = std::max(worst, norm2(r));
    }
  }
  return {worst < 1e-9, fmt("%zu operator pairs x 10000 draws, max residual %.2e", pairs, worst)};
}

Outcome norm_inequalities() {
  oracle::Rng rng(1004);
  std::size_t violations = 0;
  for (int k = 0; k < 100000; ++k) {
    const PlanarPoint x{rng.uniform(-10, 10), rng.uniform(-10, 10)};
    const double f = stadium_norm(x), h = hexagonal_norm(x), l = l1_norm(x);
    bool ok = f <= h + 1e-12 && h <= l + 1e-12 && l - f >= 2 * (h - f) - 1e-12;
    if (x.x1 * x.x2 >= 0)
      ok = ok && std::abs(f - l) <= 1e-12 * (1 + l) && std::abs(h - l) <= 1e-12 * (1 + l);
    else
      ok = ok && f < l && f < h;
    if (!ok) ++violations;
  }
  return {violations == 0, fmt("100000 points, %zu violations", violations)};
}

Outcome stadium_axioms() {
  oracle::Rng rng(1005);
  std::size_t violations = 0;
  for (int k = 0; k < 100000; ++k) {
    const PlanarPoint x{rng.uniform(-10, 10), rng.uniform(-10, 10)}, y{rng.uniform(-10, 10), rng.uniform(-10, 10)},
        z{rng.uniform(-10, 10), rng.uniform(-10, 10)};
    const double lam = rng.uniform(-5, 5);
    bool ok = stadium_norm(x - z) <= stadium_norm(x - y) + stadium_norm(y - z) + 1e-12;
    ok = ok && stadium_norm(x) > 0;
    ok = ok && std::abs(stadium_norm(lam * x) - std::abs(lam) * stadium_norm(x)) <= 1e-12 * (1 + stadium_norm(x));
    if (!ok) ++violations;
  }
  if (stadium_norm({0, 0}) != 0) ++violations;
  double worst = 0;
  for (int k = 0; k < 500; ++k) {
    const double y1 = rng.uniform(-5, 5), y2 = rng.uniform(-5, 5);
    const double sampled =
        oracle::sampled_dual_norm([](double a, double b) { return stadium_norm({a, b}); }, y1, y2, 20000);
    const double closed = dual_stadium_norm({y1, y2});
    worst = std::max(worst, std::abs(sampled - closed) / closed);
  }
  return {violations == 0 && worst < 1e-3,
          fmt("100000 triples, %zu axiom violations; sampled dual max rel. error %.2e", violations, worst)};
}

Outcome area_fidelity() {
  const auto start = Clock::now();
  oracle::Rng rng(1006);
  double worst = 0;
  std::size_t bound_failures = 0;
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = 2 + static_cast<std::size_t>(rng.integer(0, 48));
    Vec t(n);
    t[0] = rng.uniform(0, 100);
    for (std::size_t i = 1; i < n; ++i) t[i] = t[i - 1] + rng.uniform(5, 60);
    const Vec x = rng.vec(n, 90, 110), w = rng.vec(n, 90, 110);
    const StationVector st(t);
    const double o = oracle::trapezoid_area(t, x, w, 1000000);
    worst = std::max(worst, std::abs(total_area(x, w, st, PlanarNorm::stadium) - o) / o);
    if (total_area(x, w, st, PlanarNorm::hexagonal) < o * (1 - 1e-6)) ++bound_failures;
    if (total_area(x, w, st, PlanarNorm::l1) < o * (1 - 1e-6)) ++bound_failures;
  }
  return {worst < 1e-6 && bound_failures == 0,
          fmt("100 spline pairs, max rel. error %.2e, %zu upper-bound failures, %.1f s", worst, bound_failures,
              seconds_since(start))};
}

std::vector<BatteryRecord> battery_records;
BatteryOptions battery_options;

Outcome solver_convergence() {
  const auto start = Clock::now();
  battery_records = run_battery(battery_options);
  const double secs = seconds_since(start);
  std::size_t failed = 0, max_k = 0;
  double worst_residual = 0;
  for (const auto& r : battery_records) {
    if (!r.converged || !(r.residual < battery_options.solver.eps)) ++failed;
    worst_residual = std::max(worst_residual, r.residual);
    max_k = std::max(max_k, r.iterations);
  }
  const bool complete = battery_records.size() == battery_options.count * battery_options.algorithms.size();
  return {complete && failed == 0 && secs < 600,
          fmt("%zu runs (gamma %.2f), %zu not converged, max residual %.2e, max k %zu, %.1f s",
              battery_records.size(), battery_options.solver.gamma, failed, worst_residual, max_k, secs)};
}

Outcome cost_savings() {
  if (battery_records.empty()) return {false, "battery did not run"};
  SavingSummary sb = summarize(savings(battery_records, Algorithm::drsb));
  SavingSummary hb = summarize(savings(battery_records, Algorithm::drhb));
  SavingSummary lb = summarize(savings(battery_records, Algorithm::drlb));
  const bool positive = sb.mean > 0;
  const bool order = sb.mean >= hb.mean - std::max(sb.standard_error, hb.standard_error) &&
                     hb.mean >= lb.mean - std::max(hb.standard_error, lb.standard_error);
  const double floor = std::min({sb.min, hb.min, lb.min});
  const bool individual = floor >= -0.01;
  return {positive && order && individual,
          fmt("mean (SE) sb %.2f%% (%.2f), hb %.2f%% (%.2f), lb %.2f%% (%.2f); min delta %.2f%%",
              100 * sb.mean, 100 * sb.standard_error, 100 * hb.mean, 100 * hb.standard_error, 100 * lb.mean,
              100 * lb.standard_error, 100 * floor)};
}

Outcome profiles() {
  // Hand-computed: ratios A (1,2,1,1), B (2,1,inf,1), C (4,1,4,inf).
  const std::vector<ProfileRun> runs{{"A", 0, 10, true}, {"B", 0, 20, true}, {"C", 0, 40, true},
                                     {"A", 1, 30, true}, {"B", 1, 15, true}, {"C", 1, 15, true},
                                     {"A", 2, 5, true},  {"B", 2, 9, false}, {"C", 2, 20, true},
                                     {"A", 3, 8, true},  {"B", 3, 8, true},  {"C", 3, 3, false}};
  const std::vector<double> kappas{0, 0.5, 1, 2, 10};
  const std::vector<std::vector<double>> expected{
      {0.75, 0.75, 1, 1, 1}, {0.5, 0.5, 0.75, 0.75, 0.75}, {0.25, 0.25, 0.25, 0.75, 0.75}};
  const ProfileTable table = performance_profile(runs, kappas);
  bool exact = table.algorithms == std::vector<std::string>{"A", "B", "C"} && table.rho == expected;

  bool shape = true;
  std::vector<ProfileTable> tables{performance_profile(runs)};
  if (!battery_records.empty()) tables.push_back(performance_profile(profile_runs(battery_records)));
  for (const auto& t : tables)
    for (const auto& curve : t.rho)
      for (std::size_t k = 0; k < curve.size(); ++k)
        shape = shape && curve[k] <= 1 && curve[k] >= 0 && (k == 0 || curve[k] >= curve[k - 1]);
  return {exact && shape, fmt("toy curves %s hand values; %zu profiles nondecreasing and <= 1: %s",
                              exact ? "match" : "DIFFER from", tables.size(), shape ? "yes" : "no")};
}

Outcome one_dim_regression() {
  std::vector<ProxTerm> terms;
  terms.emplace_back(TableTerm{TableKind::norm_distance, 1, {0}, {}, {}});
  terms.emplace_back(TableTerm{TableKind::indicator, 1, {}, {},
                               [](std::span<const double> x) { return Vec{std::clamp(x[0], 1.0, 2.0)}; }});
  double worst = 0;
  for (double start : {5.0, -3.0, 0.0, 1.5, 100.0}) {
    DRState s = DRState::uniform(2, Vec{start});
    for (int k = 0; k < 2000; ++k) s = dr_step(std::move(s), terms, 1.0);
    worst = std::max(worst, std::abs(s.average[0] - 1));
  }
  return {worst < 1e-3, fmt("5 starts, gamma 1, max |xbar - 1| = %.2e", worst)};
}

}  // namespace

int main() {
  report(1, "operator-oracle equivalence", operator_oracle());
  report(2, "dual-ball projector equivalence", dual_ball());
  report(3, "Moreau identity", moreau());
  report(4, "norm inequality suite", norm_inequalities());
  report(5, "stadium norm axioms and duality", stadium_axioms());
  report(6, "exact-area fidelity", area_fidelity());
  report(7, "solver convergence on the battery", solver_convergence());
  report(8, "cost-saving properties", cost_savings());
  report(9, "performance profiles", profiles());
  report(10, "1-D analytic regression", one_dim_regression());
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
