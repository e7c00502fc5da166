#pragma once

#include <functional>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

namespace ebem {

// One CSV cell: integers and reals render differently (reals always in
// full-precision scientific notation so replotting loses nothing).
using CsvCell = std::variant<long long, double, std::string>;

std::string csv_render(const CsvCell& cell);

// Comma-separated table with a fixed header row, UTF-8, '\n' line ends.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);

  void row(const std::vector<CsvCell>& cells);
  int rows() const { return n_rows_; }
  const std::string& text() const { return text_; }
  void save(const std::string& path) const;

 private:
  std::size_t n_cols_;
  int n_rows_ = 0;
  std::string text_;
};

// Writes a JSON document; the standard config echo placed next to a CSV.
void save_json(const std::string& path, const nlohmann::json& doc);

// Wall times of the pipeline phases of one experiment run, seconds.
struct PhaseTimes {
  double assembly = 0.0;
  double compression = 0.0;     // hierarchical reduction
  double factorization = 0.0;   // dense factorization (reference or top)
  double top_solve = 0.0;
  double downward = 0.0;
  double per_rhs = 0.0;         // marginal cost of one extra right-hand side
  double total = 0.0;           // whole run, outermost clock

  double phase_sum() const {
    return assembly + compression + factorization + top_solve + downward +
           per_rhs;
  }
  // Phases are nested inside the total; allow 5% clock skew.
  bool consistent() const { return phase_sum() <= 1.05 * total + 1e-9; }
};

nlohmann::json to_json(const PhaseTimes& phases);

// Everything recorded about one experiment run.
struct RunReport {
  nlohmann::json config;
  PhaseTimes phases;
  std::vector<int> max_rank;               // per tree level, root first
  std::map<std::string, double> errors;    // labeled relative errors
  double peak_memory_mib = 0.0;

  nlohmann::json to_json() const;
  void save(const std::string& path) const;
};

// Median wall time of `repeats` calls (after one untimed warm-up call
// when `warm_up` is set).  Monotonic clock.
double median_seconds(const std::function<void()>& fn, int repeats,
                      bool warm_up = true);

// Measurement policy: small cases are timed three times, large ones once.
inline int timing_repeats(int n_elements) { return n_elements <= 1600 ? 3 : 1; }

// Least-squares exponent p of t ~ c * n^p through (n, t) samples.
double fit_exponent(const std::vector<double>& n, const std::vector<double>& t);

}  // namespace ebem
