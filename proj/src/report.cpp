#include "ebem/report.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "ebem/types.hpp"

namespace ebem {

std::string csv_render(const CsvCell& cell) {
  if (const auto* i = std::get_if<long long>(&cell)) return std::to_string(*i);
  if (const auto* d = std::get_if<double>(&cell)) {
    std::ostringstream os;
    os << std::scientific << std::setprecision(16) << *d;
    return os.str();
  }
  const std::string& s = std::get<std::string>(cell);
  if (s.find_first_of(",\"\n") != std::string::npos)
    throw std::invalid_argument("csv_render: cell would need quoting: " + s);
  return s;
}

CsvTable::CsvTable(std::vector<std::string> header) : n_cols_(header.size()) {
  if (header.empty())
    throw std::invalid_argument("CsvTable: header must not be empty");
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (c) text_ += ',';
    text_ += csv_render(header[c]);
  }
  text_ += '\n';
}

void CsvTable::row(const std::vector<CsvCell>& cells) {
  if (cells.size() != n_cols_)
    throw std::invalid_argument("CsvTable: row width " +
                                std::to_string(cells.size()) + " != header " +
                                std::to_string(n_cols_));
  for (std::size_t c = 0; c < cells.size(); ++c) {
    if (c) text_ += ',';
    text_ += csv_render(cells[c]);
  }
  text_ += '\n';
  ++n_rows_;
}

void CsvTable::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("CsvTable: cannot write " + path);
  out << text_;
}

void save_json(const std::string& path, const nlohmann::json& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("save_json: cannot write " + path);
  out << doc.dump(2) << '\n';
}

nlohmann::json to_json(const PhaseTimes& phases) {
  return nlohmann::json{{"assembly_seconds", phases.assembly},
                        {"compression_seconds", phases.compression},
                        {"factorization_seconds", phases.factorization},
                        {"top_solve_seconds", phases.top_solve},
                        {"downward_seconds", phases.downward},
                        {"per_rhs_seconds", phases.per_rhs},
                        {"total_seconds", phases.total}};
}

nlohmann::json RunReport::to_json() const {
  nlohmann::json doc;
  doc["config"] = config;
  doc["phases"] = ebem::to_json(phases);
  doc["max_rank_per_level"] = max_rank;
  doc["relative_errors"] = errors;
  doc["peak_memory_mib"] = peak_memory_mib;
  return doc;
}

void RunReport::save(const std::string& path) const {
  save_json(path, to_json());
}

double median_seconds(const std::function<void()>& fn, int repeats,
                      bool warm_up) {
  if (repeats <= 0)
    throw std::invalid_argument("median_seconds: repeats must be positive");
  if (warm_up) fn();
  std::vector<double> times(repeats);
  for (int r = 0; r < repeats; ++r) {
    Stopwatch clock;
    fn();
    times[r] = clock.seconds();
  }
  std::sort(times.begin(), times.end());
  const int mid = repeats / 2;
  return repeats % 2 ? times[mid] : 0.5 * (times[mid - 1] + times[mid]);
}

double fit_exponent(const std::vector<double>& n,
                    const std::vector<double>& t) {
  if (n.size() != t.size() || n.size() < 2)
    throw std::invalid_argument("fit_exponent: need matching samples, >= 2");
  const double m = double(n.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (n[i] <= 0.0 || t[i] <= 0.0)
      throw std::invalid_argument("fit_exponent: samples must be positive");
    const double x = std::log(n[i]), y = std::log(t[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double denom = m * sxx - sx * sx;
  if (denom <= 0.0)
    throw std::invalid_argument("fit_exponent: degenerate abscissae");
  return (m * sxy - sx * sy) / denom;
}

double peak_memory_mib() {
  std::ifstream status("/proc/self/status");
  std::string line;
  while (std::getline(status, line)) {
    if (line.rfind("VmHWM:", 0) == 0) {
      std::istringstream is(line.substr(6));
      double kb = 0.0;
      is >> kb;
      return kb / 1024.0;
    }
  }
  return 0.0;
}

}  // namespace ebem
