#include "vertalign/io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "vertalign/constraints.hpp"

namespace vertalign {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& what) {
  throw std::invalid_argument("invalid problem file: " + what);
}

const json& field(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) bad(std::string("missing field '") + key + "'");
  return *it;
}

double number(const json& v, const std::string& key) {
  if (!v.is_number()) bad("field '" + key + "' must be a number");
  return v.get<double>();
}

Vec numbers(const json& doc, const char* key, bool required) {
  auto it = doc.find(key);
  if (it == doc.end()) {
    if (required) bad(std::string("missing field '") + key + "'");
    return {};
  }
  if (!it->is_array()) bad(std::string("field '") + key + "' must be an array");
  Vec out;
  out.reserve(it->size());
  for (const auto& v : *it) out.push_back(number(v, key));
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_double(const std::string& cell, const std::filesystem::path& path) {
  if (cell == "inf") return HUGE_VAL;
  if (cell == "-inf") return -HUGE_VAL;
  if (cell == "nan") return std::nan("");
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(cell.c_str(), &end);
  // ERANGE on underflow still yields the correctly rounded subnormal.
  if (cell.empty() || end != cell.c_str() + cell.size() || (errno == ERANGE && std::isinf(v)))
    throw std::invalid_argument(path.string() + ": bad number '" + cell + "'");
  return v;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

}  // namespace

std::string problem_to_json(const AlignmentProblem& p, int indent) {
  json doc;
  doc["schema_version"] = kProblemSchemaVersion;
  doc["name"] = p.name;
  doc["seed"] = p.seed;
  doc["n"] = p.size();
  doc["t"] = p.t;
  doc["w"] = p.w;
  doc["J"] = p.interp_index;
  doc["y"] = p.interp_value;
  doc["sigma"] = p.sigma;
  doc["delta"] = p.delta;
  doc["gamma_c"] = p.gamma_c;
  doc["alpha"] = p.alpha;
  doc["beta"] = p.beta;
  doc["witness"] = p.witness;
  return doc.dump(indent) + "\n";
}

AlignmentProblem problem_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    bad(std::string("not JSON: ") + e.what());
  }
  if (!doc.is_object()) bad("top level must be an object");
  const json& version = field(doc, "schema_version");
  if (!version.is_number_integer() || version.get<int>() != kProblemSchemaVersion)
    bad("unsupported schema_version");

  AlignmentProblem p;
  if (auto it = doc.find("name"); it != doc.end()) {
    if (!it->is_string()) bad("field 'name' must be a string");
    p.name = it->get<std::string>();
  }
  if (auto it = doc.find("seed"); it != doc.end()) {
    if (!it->is_number_unsigned()) bad("field 'seed' must be a nonnegative integer");
    p.seed = it->get<std::uint64_t>();
  }
  p.t = numbers(doc, "t", true);
  p.w = numbers(doc, "w", true);
  p.interp_value = numbers(doc, "y", true);
  p.sigma = numbers(doc, "sigma", true);
  p.delta = numbers(doc, "delta", false);
  p.gamma_c = numbers(doc, "gamma_c", false);
  p.witness = numbers(doc, "witness", false);
  const json& J = field(doc, "J");
  if (!J.is_array()) bad("field 'J' must be an array");
  for (const auto& v : J) {
    if (!v.is_number_unsigned()) bad("field 'J' must hold nonnegative integers");
    p.interp_index.push_back(v.get<std::size_t>());
  }
  p.alpha = number(field(doc, "alpha"), "alpha");
  p.beta = number(field(doc, "beta"), "beta");
  const json& n = field(doc, "n");
  if (!n.is_number_unsigned() || n.get<std::size_t>() != p.t.size())
    bad("field 'n' must equal the number of stations");

  validate(p);
  check_witness(p);
  return p;
}

AlignmentProblem load_problem(const std::filesystem::path& path) {
  return problem_from_json(read_file(path));
}

void save_problem(const std::filesystem::path& path, const AlignmentProblem& problem) {
  validate(problem);
  write_file(path, problem_to_json(problem));
}

std::vector<double> CsvTable::column(const std::string& name) const {
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (header[c] != name) continue;
    std::vector<double> out;
    out.reserve(rows.size());
    for (const auto& row : rows) out.push_back(row.at(c));
    return out;
  }
  throw std::invalid_argument("no CSV column named " + name);
}

void write_csv(const std::filesystem::path& path, const CsvTable& table) {
  std::string text;
  for (std::size_t c = 0; c < table.header.size(); ++c) {
    if (c) text += ',';
    text += table.header[c];
  }
  text += '\n';
  for (const auto& row : table.rows) {
    if (row.size() != table.header.size()) throw std::invalid_argument("write_csv: ragged row");
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) text += ',';
      text += format_double(row[c]);
    }
    text += '\n';
  }
  write_file(path, text);
}

CsvTable read_csv(const std::filesystem::path& path) {
  std::istringstream in(read_file(path));
  CsvTable table;
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument(path.string() + ": empty CSV");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  table.header = split(line);
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto cells = split(line);
    if (cells.size() != table.header.size())
      throw std::invalid_argument(path.string() + ": row width differs from header");
    std::vector<double> row;
    row.reserve(cells.size());
    for (const auto& cell : cells) row.push_back(parse_double(cell, path));
    table.rows.push_back(std::move(row));
  }
  return table;
}

void save_design(const std::filesystem::path& path, const AlignmentProblem& problem,
                 std::span<const double> x) {
  if (x.size() != problem.size()) throw std::invalid_argument("save_design: dimension mismatch");
  CsvTable table{{"station", "ground", "design"}, {}};
  for (std::size_t i = 0; i < x.size(); ++i) table.rows.push_back({problem.t[i], problem.w[i], x[i]});
  write_csv(path, table);
}

Vec load_design(const std::filesystem::path& path, const AlignmentProblem& problem) {
  const CsvTable table = read_csv(path);
  const Vec station = table.column("station");
  if (station != problem.t) throw std::invalid_argument(path.string() + ": stations differ from problem");
  return table.column("design");
}

void save_mass(const std::filesystem::path& path, const MassSeries& series) {
  CsvTable table{{"station", "signed_cum", "abs_cum"}, {}};
  for (std::size_t i = 0; i < series.station.size(); ++i)
    table.rows.push_back({series.station[i], series.signed_cumulative[i], series.abs_cumulative[i]});
  write_csv(path, table);
}

}  // namespace vertalign
