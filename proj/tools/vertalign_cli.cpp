// vertalign: command-line driver for the vertical alignment solvers.
//
// Exit codes: 0 success / converged, 2 iteration limit reached (or design
// infeasible for `feasibility`), 1 bad input.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vertalign/battery.hpp"
#include "vertalign/constraints.hpp"
#include "vertalign/earthwork.hpp"
#include "vertalign/generator.hpp"
#include "vertalign/io.hpp"
#include "vertalign/profile.hpp"
#include "vertalign/solvers.hpp"

using namespace vertalign;

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kNotConverged = 2;

struct SolveArgs {
  std::string problem;
  std::string algo = "drsb";
  double gamma = 1.0;
  double eps = 5e-3;
  std::size_t kmax = 100000;
  std::string reflection = "standard";
  std::string design_out;
  std::string mass_out;
};

struct BatteryArgs {
  std::size_t count = 100;
  std::uint64_t base_seed = 1;
  std::size_t n_min = 50;
  std::size_t n_max = 500;
  double gamma = 0.25;
  double eps = 5e-3;
  std::size_t kmax = 100000;
  std::size_t threads = 0;
  std::vector<std::string> problems;
};

void add_battery_options(CLI::App* cmd, BatteryArgs& b) {
  cmd->add_option("problems", b.problems, "Problem files (default: synthetic battery)");
  cmd->add_option("--count", b.count, "Number of synthetic problems")->capture_default_str();
  cmd->add_option("--base-seed", b.base_seed, "Seed of problem 0")->capture_default_str();
  cmd->add_option("--n-min", b.n_min, "Smallest problem size")->capture_default_str();
  cmd->add_option("--n-max", b.n_max, "Largest problem size")->capture_default_str();
  cmd->add_option("--gamma", b.gamma, "DR prox step")->capture_default_str();
  cmd->add_option("--eps", b.eps, "Stopping tolerance")->capture_default_str();
  cmd->add_option("--kmax", b.kmax, "Iteration limit")->capture_default_str();
  cmd->add_option("--threads", b.threads, "Worker threads (0: all cores)")->capture_default_str();
}

std::vector<BatteryRecord> run(const BatteryArgs& b) {
  BatteryOptions options;
  options.count = b.count;
  options.base_seed = b.base_seed;
  options.n_min = b.n_min;
  options.n_max = b.n_max;
  options.solver.gamma = b.gamma;
  options.solver.eps = b.eps;
  options.solver.k_max = b.kmax;
  options.threads = b.threads;
  if (b.problems.empty()) return run_battery(options);

  // Explicit files: same record layout, problem id = position on the command line.
  options.solver.validate();
  std::vector<BatteryRecord> records;
  for (std::size_t id = 0; id < b.problems.size(); ++id) {
    const AlignmentProblem p = load_problem(b.problems[id]);
    for (Algorithm a : options.algorithms) {
      const SolverReport r = solve(p, a, options.solver);
      records.push_back({id, p.size(), a, r.iterations, r.residual, r.converged, r.cost,
                         r.wall_time_seconds});
    }
  }
  return records;
}

int cmd_generate(std::uint64_t seed, std::size_t n, const GeneratorParams& params,
                 const std::string& out) {
  const AlignmentProblem p = generate_problem(seed, n, params);
  if (out.empty() || out == "-")
    std::cout << problem_to_json(p);
  else
    save_problem(out, p);
  return kOk;
}

int cmd_solve(const SolveArgs& a) {
  const AlignmentProblem p = load_problem(a.problem);
  SolverConfig config;
  config.gamma = a.gamma;
  config.eps = a.eps;
  config.k_max = a.kmax;
  if (a.reflection == "printed")
    config.reflection = ReflectionConvention::printed;
  else if (a.reflection != "standard")
    throw std::invalid_argument("--reflection must be standard or printed");
  const Algorithm algorithm = parse_algorithm(a.algo);
  const SolverReport r = solve(p, algorithm, config);

  std::printf("algorithm   %s\n", std::string(to_string(algorithm)).c_str());
  std::printf("converged   %s\n", r.converged ? "yes" : "no");
  std::printf("iterations  %zu\n", r.iterations);
  std::printf("residual    %.6g\n", r.residual);
  std::printf("area        %.10g\n", r.cost.area);
  std::printf("|signed|    %.10g\n", r.cost.abs_signed);
  std::printf("cost        %.10g\n", r.cost.total);
  std::printf("seconds     %.3f\n", r.wall_time_seconds);
  if (!a.design_out.empty()) save_design(a.design_out, p, r.x_final);
  if (!a.mass_out.empty()) save_mass(a.mass_out, mass_diagram(r.x_final, p.w, p.t));
  return r.converged ? kOk : kNotConverged;
}

int cmd_feasibility(const std::string& problem, const std::string& design, double eps) {
  const AlignmentProblem p = load_problem(problem);
  Vec x = design.empty() ? p.witness : load_design(design, p);
  if (x.empty()) throw std::invalid_argument("no design given and the problem has no witness");
  const auto sets = build_six_sets(p);
  double worst = 0.0;
  for (const auto& set : sets) {
    const double r = max_abs_diff(project_set(set, x), x);
    worst = std::max(worst, r);
    std::printf("%-14s %.6g\n", std::string(to_string(set.kind())).c_str(), r);
  }
  std::printf("residual       %.6g\n", worst);
  return worst < eps ? kOk : kNotConverged;
}

int cmd_report(const BatteryArgs& b, const std::string& savings_out, const std::string& dr_name) {
  const auto records = run(b);
  std::printf("%-8s %-6s %6s %9s %10s %16s %9s\n", "problem", "algo", "n", "iters", "residual", "cost",
              "seconds");
  bool all = true;
  for (const auto& r : records) {
    all = all && r.converged;
    std::printf("%-8zu %-6s %6zu %9zu %10.3g %16.8g %9.3f%s\n", r.problem,
                std::string(to_string(r.algorithm)).c_str(), r.n, r.iterations, r.residual, r.cost.total,
                r.wall_time_seconds, r.converged ? "" : "  (not converged)");
  }
  std::printf("\nsavings vs cycip      mean     std.err    min        max\n");
  for (Algorithm dr : {Algorithm::drsb, Algorithm::drhb, Algorithm::drlb}) {
    const auto rows = savings(records, dr);
    const SavingSummary s = summarize(rows);
    std::printf("%-18s %9.4f%% %9.4f%% %9.4f%% %9.4f%%\n", std::string(to_string(dr)).c_str(),
                100 * s.mean, 100 * s.standard_error, 100 * s.min, 100 * s.max);
    if (!savings_out.empty() && to_string(dr) == dr_name) {
      CsvTable t{{"problem", "F_cycip", "F_dr", "delta"}, {}};
      for (const auto& row : rows)
        t.rows.push_back({static_cast<double>(row.problem), row.f_cycip, row.f_dr, row.delta});
      write_csv(savings_out, t);
    }
  }
  return all ? kOk : kNotConverged;
}

int cmd_profile(const BatteryArgs& b, const std::string& out) {
  const auto records = run(b);
  const ProfileTable table = performance_profile(profile_runs(records));
  CsvTable t;
  t.header.push_back("kappa");
  for (const auto& a : table.algorithms) t.header.push_back("rho_" + a);
  for (std::size_t k = 0; k < table.kappa.size(); ++k) {
    std::vector<double> row{table.kappa[k]};
    for (std::size_t a = 0; a < table.algorithms.size(); ++a) row.push_back(table.rho[a][k]);
    t.rows.push_back(std::move(row));
  }
  if (out.empty() || out == "-") {
    for (std::size_t c = 0; c < t.header.size(); ++c) std::printf(c ? ",%s" : "%s", t.header[c].c_str());
    std::printf("\n");
    for (const auto& row : t.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) std::printf(c ? ",%.17g" : "%.17g", row[c]);
      std::printf("\n");
    }
  } else {
    write_csv(out, t);
  }
  bool all = true;
  for (const auto& r : records) all = all && r.converged;
  return all ? kOk : kNotConverged;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Road vertical alignment: CycIP feasibility and Douglas-Rachford earthwork optimization"};
  app.require_subcommand(1);

  std::uint64_t seed = 1;
  std::size_t n = 100;
  GeneratorParams params;
  std::string gen_out;
  auto* gen = app.add_subcommand("generate", "Write a synthetic problem with a feasible witness");
  gen->add_option("--seed", seed, "Random seed")->capture_default_str();
  gen->add_option("--n", n, "Number of stations")->capture_default_str();
  gen->add_option("--sigma", params.sigma, "Grade limit")->capture_default_str();
  gen->add_option("--curvature", params.curvature, "Grade change limit per knot (0: none)")
      ->capture_default_str();
  gen->add_option("--interior", params.interior_interpolation, "Interior interpolation knots")
      ->capture_default_str();
  gen->add_option("--alpha", params.alpha, "Area weight")->capture_default_str();
  gen->add_option("--beta", params.beta, "Imbalance weight")->capture_default_str();
  gen->add_option("-o,--out", gen_out, "Output file (default: stdout)");

  SolveArgs s;
  auto* sol = app.add_subcommand("solve", "Solve one problem");
  sol->add_option("problem", s.problem, "Problem file")->required();
  sol->add_option("--algo", s.algo, "cycip, drsb, drhb or drlb")
      ->check(CLI::IsMember({"cycip", "drsb", "drhb", "drlb"}))
      ->capture_default_str();
  sol->add_option("--gamma", s.gamma, "DR prox step")->capture_default_str();
  sol->add_option("--eps", s.eps, "Stopping tolerance")->capture_default_str();
  sol->add_option("--kmax", s.kmax, "Iteration limit")->capture_default_str();
  sol->add_option("--reflection", s.reflection, "standard or printed")->capture_default_str();
  sol->add_option("--design", s.design_out, "Write design.csv here");
  sol->add_option("--mass", s.mass_out, "Write mass.csv here");

  std::string feas_problem, feas_design;
  double feas_eps = 5e-3;
  auto* feas = app.add_subcommand("feasibility", "Per-set residuals of a design (default: the witness)");
  feas->add_option("problem", feas_problem, "Problem file")->required();
  feas->add_option("--design", feas_design, "design.csv to check");
  feas->add_option("--eps", feas_eps, "Tolerance")->capture_default_str();

  BatteryArgs rep_args;
  std::string rep_out, rep_dr = "drsb";
  auto* rep = app.add_subcommand("report", "Cost table and savings of every DR variant over CycIP");
  add_battery_options(rep, rep_args);
  rep->add_option("--savings", rep_out, "Write savings.csv for one DR variant here");
  rep->add_option("--dr", rep_dr, "DR variant written to --savings")
      ->check(CLI::IsMember({"drsb", "drhb", "drlb"}))
      ->capture_default_str();

  BatteryArgs prof_args;
  std::string prof_out;
  auto* prof = app.add_subcommand("profile", "Iteration performance profiles of all algorithms");
  add_battery_options(prof, prof_args);
  prof->add_option("-o,--out", prof_out, "profile.csv path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*gen) return cmd_generate(seed, n, params, gen_out);
    if (*sol) return cmd_solve(s);
    if (*feas) return cmd_feasibility(feas_problem, feas_design, feas_eps);
    if (*rep) return cmd_report(rep_args, rep_out, rep_dr);
    if (*prof) return cmd_profile(prof_args, prof_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
