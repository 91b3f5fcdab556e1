#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "vertalign/earthwork.hpp"
#include "vertalign/problem.hpp"

namespace vertalign {

inline constexpr int kProblemSchemaVersion = 1;

/// JSON problem document. Fields:
///   schema_version, name, seed, n, t, w, J, y, sigma, delta, gamma_c,
///   alpha, beta, witness
/// J holds 0-based knot indices. Doubles are written in shortest
/// round-trip form, so save/load is lossless for finite values.
std::string problem_to_json(const AlignmentProblem& problem, int indent = 2);
/// Strict: unknown schema version, missing required fields, wrong types,
/// n disagreeing with the arrays, invalid problems and infeasible witnesses
/// all throw std::invalid_argument.
AlignmentProblem problem_from_json(const std::string& text);

AlignmentProblem load_problem(const std::filesystem::path& path);
void save_problem(const std::filesystem::path& path, const AlignmentProblem& problem);

/// Plain CSV with one header row; numbers in %.17g.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;

  std::vector<double> column(const std::string& name) const;
};

void write_csv(const std::filesystem::path& path, const CsvTable& table);
/// Accepts "inf"/"-inf"/"nan" as produced by write_csv.
CsvTable read_csv(const std::filesystem::path& path);

/// design.csv: station, ground, design.
void save_design(const std::filesystem::path& path, const AlignmentProblem& problem,
                 std::span<const double> x);
/// Reads the design column back, checking that stations match the problem.
Vec load_design(const std::filesystem::path& path, const AlignmentProblem& problem);

/// mass.csv: station, signed_cum, abs_cum.
void save_mass(const std::filesystem::path& path, const MassSeries& series);

}  // namespace vertalign
