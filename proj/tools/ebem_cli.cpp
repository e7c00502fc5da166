// Experiment driver for the elastic-wave boundary-element solvers.
//
// Subcommands produce one CSV table plus a JSON run report (config echo,
// phase wall times, ranks, errors, peak memory) next to it:
//   error_table         hierarchical vs dense solver accuracy ladder
//   single_level_error  one compression level vs the multi-level solver
//   scaling             build+solve time ladders and fitted exponents
//   multi_rhs           amortized cost of many incident angles
//   omega_time          solver timing across angular frequencies
//   omega_error         solver accuracy across angular frequencies
//   intensity_sweep     boundary wave intensity vs frequency per solver
//   null_field          interior field residual under mesh refinement
#include <omp.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "CLI11.hpp"
#include "json.hpp"

#include "ebem/assembly.hpp"
#include "ebem/compression.hpp"
#include "ebem/dense_solver.hpp"
#include "ebem/fds.hpp"
#include "ebem/geometry.hpp"
#include "ebem/kernels.hpp"
#include "ebem/lapack.hpp"
#include "ebem/medium.hpp"
#include "ebem/postprocess.hpp"
#include "ebem/report.hpp"
#include "ebem/types.hpp"

namespace {

using namespace ebem;
using nlohmann::json;

struct Options {
  int n_elements = 0;  // 0: experiment-specific default ladder
  int leaf_size = 100;
  int levels = 0;  // 0: derived from n_elements and leaf_size
  int ell0 = 1;
  double epsilon = 0.0;  // 0: experiment-specific default
  double omega = 2.0;
  double omega_max = 0.0;   // 0: experiment-specific default
  double omega_step = 0.0;  // 0: experiment-specific default
  double alpha_re = 0.0;
  double alpha_im = 0.0;
  bool alpha_set = false;
  double incident_angle_deg = 0.0;
  int rhs_count = 180;
  int threads = 0;  // 0: scaling -> 1, others -> environment default
  double proxy_radius_factor = 1.5;
  int proxy_m = 64;
  std::string solver = "fds";
  std::string out;
  unsigned seed = 0;
};

Medium make_medium(double omega) {
  return Medium::from_lame(1.0, 1.0, 1.0, omega);
}

cd coupling_for(const Options& opt, const Medium& med, bool non_bm) {
  if (opt.alpha_set) return cd(opt.alpha_re, opt.alpha_im);
  if (non_bm) return cd(0.0, 0.0);
  return med.default_coupling();
}

int resolve_levels(const Options& opt, int n) {
  const int levels =
      opt.levels > 0 ? opt.levels : ClusterTree::depth_for(n, opt.leaf_size);
  if (levels < 1)
    throw std::invalid_argument("need at least one tree level; " +
                                std::to_string(n) + " elements is too small");
  return levels;
}

int resolve_ell0(const Options& opt, int levels) {
  return std::min(opt.ell0, levels - 1);
}

double incident_angle_rad(const Options& opt) {
  return opt.incident_angle_deg * kPi / 180.0;
}

ProxyConfig proxy_for(const Options& opt) {
  ProxyConfig proxy;
  proxy.radius_factor = opt.proxy_radius_factor;
  proxy.m_prime = opt.proxy_m;
  return proxy;
}

std::string json_path_for(const std::string& csv_path) {
  const std::string suffix = ".csv";
  if (csv_path.size() > suffix.size() &&
      csv_path.compare(csv_path.size() - suffix.size(), suffix.size(),
                       suffix) == 0)
    return csv_path.substr(0, csv_path.size() - suffix.size()) + ".json";
  return csv_path + ".json";
}

json config_echo(const Options& opt, const std::string& experiment,
                 int threads) {
  return json{{"experiment", experiment},
              {"n_elements", opt.n_elements},
              {"leaf_size", opt.leaf_size},
              {"levels", opt.levels},
              {"ell0", opt.ell0},
              {"epsilon", opt.epsilon},
              {"omega", opt.omega},
              {"omega_max", opt.omega_max},
              {"omega_step", opt.omega_step},
              {"alpha_re", opt.alpha_re},
              {"alpha_im", opt.alpha_im},
              {"alpha_override", opt.alpha_set},
              {"incident_angle_deg", opt.incident_angle_deg},
              {"rhs_count", opt.rhs_count},
              {"threads", threads},
              {"proxy_radius_factor", opt.proxy_radius_factor},
              {"proxy_m", opt.proxy_m},
              {"solver", opt.solver},
              {"out", opt.out},
              {"seed", opt.seed}};
}

std::vector<double> omega_ladder(const Options& opt, double def_start,
                                 double def_max, double def_step) {
  const double start = opt.omega > 0.0 ? opt.omega : def_start;
  const double stop = opt.omega_max > 0.0 ? opt.omega_max : def_max;
  const double step = opt.omega_step > 0.0 ? opt.omega_step : def_step;
  if (stop < start)
    throw std::invalid_argument("omega range is empty (check --omega-max)");
  std::vector<double> ws;
  for (int k = 0;; ++k) {
    const double w = start + k * step;
    if (w > stop + 0.5 * step) break;
    ws.push_back(std::min(w, stop));
  }
  return ws;
}

double relative_error(const Eigen::VectorXcd& got,
                      const Eigen::VectorXcd& want) {
  return (got - want).norm() / want.norm();
}

struct FdsRun {
  Eigen::VectorXcd x;
  double assemble_rhs_seconds = 0.0;
  double build_seconds = 0.0;
  double solve_seconds = 0.0;
  FdsStats stats;
  FdsSolveTiming solve_timing;
};

FdsRun run_fds(const Mesh& mesh, const Medium& med, cd alpha,
               const Options& opt, double eps, int levels, int ell0) {
  FdsRun run;
  const BlockAssembler assembler(mesh, med, alpha);
  const AssemblerSource source(assembler, proxy_for(opt));
  const ClusterTree tree(mesh.size(), levels);

  Stopwatch clock;
  const FdsSolver fds(source, tree, FdsConfig{eps, ell0});
  run.build_seconds = clock.seconds();
  run.stats = fds.stats();

  clock.reset();
  const PlanePWave wave(med, 1.0, incident_angle_rad(opt));
  const Eigen::VectorXcd f = assembler.rhs(wave);
  run.assemble_rhs_seconds = clock.seconds();

  clock.reset();
  run.x = fds.solve(f, &run.solve_timing);
  run.solve_seconds = clock.seconds();
  return run;
}

struct ConvRun {
  Eigen::VectorXcd x;
  ConvStats stats;
  double solve_seconds = 0.0;
};

ConvRun run_conv(const Mesh& mesh, const Medium& med, cd alpha,
                 const Options& opt) {
  ConvRun run;
  const ConvSolver conv(mesh, med, alpha);
  run.stats = conv.stats();
  const PlanePWave wave(med, 1.0, incident_angle_rad(opt));
  const Eigen::VectorXcd f = conv.assembler().rhs(wave);
  Stopwatch clock;
  run.x = conv.solve(f);
  run.solve_seconds = clock.seconds();
  return run;
}

void save_outputs(const CsvTable& table, const RunReport& report,
                  const json& summary, const std::string& csv_path) {
  table.save(csv_path);
  json doc = report.to_json();
  doc["summary"] = summary;
  save_json(json_path_for(csv_path), doc);
  std::printf("wrote %s and %s\n", csv_path.c_str(),
              json_path_for(csv_path).c_str());
}

// ------------------------------------------------------------ error_table

int cmd_error_table(const Options& opt, int threads) {
  const std::vector<int> ns =
      opt.n_elements > 0 ? std::vector<int>{opt.n_elements}
                         : std::vector<int>{400, 1600, 6400};
  const std::vector<double> epss = opt.epsilon > 0.0
                                       ? std::vector<double>{opt.epsilon}
                                       : std::vector<double>{1e-8, 1e-10};

  CsvTable table({"n_elements", "levels", "ell0", "epsilon", "error_vs_conv",
                  "fds_build_seconds", "fds_solve_seconds",
                  "conv_build_seconds", "conv_solve_seconds"});
  RunReport report;
  report.config = config_echo(opt, "error_table", threads);
  Stopwatch total;
  double worst = 0.0;

  for (int n : ns) {
    const Mesh mesh = Mesh::star(n, StarShape{});
    const Medium med = make_medium(opt.omega);
    const cd alpha = coupling_for(opt, med, false);
    const int levels = resolve_levels(opt, n);
    const int ell0 = resolve_ell0(opt, levels);

    std::vector<FdsRun> runs;
    for (double eps : epss)
      runs.push_back(run_fds(mesh, med, alpha, opt, eps, levels, ell0));
    const ConvRun conv = run_conv(mesh, med, alpha, opt);

    for (std::size_t j = 0; j < epss.size(); ++j) {
      const FdsRun& fds = runs[j];
      const double err = relative_error(fds.x, conv.x);
      table.row({(long long)n, (long long)levels, (long long)ell0, epss[j],
                 err, fds.build_seconds, fds.solve_seconds,
                 conv.stats.assemble_seconds + conv.stats.factor_seconds,
                 conv.solve_seconds});
      report.errors["n" + std::to_string(n) + "_eps" + csv_render(epss[j])] =
          err;
      worst = std::max(worst, err / epss[j]);
      report.phases.compression += fds.build_seconds;
      report.phases.downward += fds.solve_seconds;
      if (n == ns.back() && j == 0) report.max_rank = fds.stats.max_rank;
    }
    report.phases.assembly += conv.stats.assemble_seconds;
    report.phases.factorization += conv.stats.factor_seconds;
  }

  report.phases.total = total.seconds();
  report.peak_memory_mib = peak_memory_mib();
  const json summary = {{"worst_error_over_epsilon", worst},
                        {"total_seconds", report.phases.total}};
  save_outputs(table, report,  summary,
               opt.out.empty() ? "error_table.csv" : opt.out);
  std::printf("error_table: worst error/epsilon ratio %.3g, %.1f s total\n",
              worst, report.phases.total);
  return 0;
}

// ---------------------------------------------------- single_level_error

int cmd_single_level_error(const Options& opt, int threads) {
  const std::vector<int> ns =
      opt.n_elements > 0 ? std::vector<int>{opt.n_elements}
                         : std::vector<int>{400, 800, 1600, 3200};
  const double eps = opt.epsilon > 0.0 ? opt.epsilon : 1e-8;

  CsvTable table({"n_elements", "levels", "ell0_single", "epsilon",
                  "error_single_level", "error_multi_level"});
  RunReport report;
  report.config = config_echo(opt, "single_level_error", threads);
  Stopwatch total;

  for (int n : ns) {
    const Mesh mesh = Mesh::star(n, StarShape{});
    const Medium med = make_medium(opt.omega);
    const cd alpha = coupling_for(opt, med, false);
    const int levels = resolve_levels(opt, n);
    const int ell0_single = levels - 1;
    const int ell0_multi = resolve_ell0(opt, levels);

    const FdsRun single =
        run_fds(mesh, med, alpha, opt, eps, levels, ell0_single);
    const FdsRun multi =
        run_fds(mesh, med, alpha, opt, eps, levels, ell0_multi);
    const ConvRun conv = run_conv(mesh, med, alpha, opt);

    const double err_single = relative_error(single.x, conv.x);
    const double err_multi = relative_error(multi.x, conv.x);
    table.row({(long long)n, (long long)levels, (long long)ell0_single, eps,
               err_single, err_multi});
    report.errors["n" + std::to_string(n) + "_single"] = err_single;
    report.errors["n" + std::to_string(n) + "_multi"] = err_multi;
    report.phases.assembly += conv.stats.assemble_seconds;
    report.phases.factorization += conv.stats.factor_seconds;
    report.phases.compression += single.build_seconds + multi.build_seconds;
    report.phases.downward += single.solve_seconds + multi.solve_seconds;
    std::printf("n=%d: single-level %.3e, multi-level %.3e\n", n, err_single,
                err_multi);
  }

  report.phases.total = total.seconds();
  report.peak_memory_mib = peak_memory_mib();
  save_outputs(table, report, json::object(),
               opt.out.empty() ? "single_level_error.csv" : opt.out);
  return 0;
}

// ----------------------------------------------------------------- scaling

int cmd_scaling(const Options& opt, int threads) {
  const int fds_max = opt.n_elements > 0 ? opt.n_elements : 25600;
  const int conv_max = std::min(3200, fds_max);

  CsvTable table({"solver", "n_elements", "levels", "ell0", "epsilon",
                  "seconds"});
  RunReport report;
  report.config = config_echo(opt, "scaling", threads);
  Stopwatch total;
  const double eps = opt.epsilon > 0.0 ? opt.epsilon : 1e-8;

  std::vector<double> fds_n, fds_t, conv_n, conv_t;
  for (int n = 800; n <= fds_max; n *= 2) {
    const Mesh mesh = Mesh::star(n, StarShape{});
    const Medium med = make_medium(opt.omega);
    const cd alpha = coupling_for(opt, med, false);
    const int levels = resolve_levels(opt, n);
    const int ell0 = resolve_ell0(opt, levels);
    const double seconds = median_seconds(
        [&] { run_fds(mesh, med, alpha, opt, eps, levels, ell0); },
        timing_repeats(n), timing_repeats(n) > 1);
    table.row({std::string("fds"), (long long)n, (long long)levels,
               (long long)ell0, eps, seconds});
    fds_n.push_back(n);
    fds_t.push_back(seconds);
    std::printf("fds  n=%6d: %10.3f s\n", n, seconds);
  }
  for (int n = 400; n <= conv_max; n *= 2) {
    const Mesh mesh = Mesh::star(n, StarShape{});
    const Medium med = make_medium(opt.omega);
    const cd alpha = coupling_for(opt, med, false);
    const double seconds = median_seconds(
        [&] { run_conv(mesh, med, alpha, opt); }, timing_repeats(n),
        timing_repeats(n) > 1);
    table.row({std::string("conv"), (long long)n, 0LL, 0LL, 0.0, seconds});
    conv_n.push_back(n);
    conv_t.push_back(seconds);
    std::printf("conv n=%6d: %10.3f s\n", n, seconds);
  }

  const double fds_p = fit_exponent(fds_n, fds_t);
  const double conv_p = fit_exponent(conv_n, conv_t);
  report.phases.total = total.seconds();
  report.peak_memory_mib = peak_memory_mib();
  const json summary = {{"fds_exponent", fds_p},
                        {"conv_exponent", conv_p},
                        {"fds_max_n", fds_max},
                        {"conv_max_n", conv_max}};
  save_outputs(table, report, summary,
               opt.out.empty() ? "scaling.csv" : opt.out);
  std::printf("scaling: fds exponent %.3f, conv exponent %.3f\n", fds_p,
              conv_p);
  return 0;
}

// --------------------------------------------------------------- multi_rhs

int cmd_multi_rhs(const Options& opt, int threads) {
  const int n = opt.n_elements > 0 ? opt.n_elements : 1600;
  const int count = opt.rhs_count;
  if (count < 2) throw std::invalid_argument("--rhs-count must be >= 2");
  const double eps = opt.epsilon > 0.0 ? opt.epsilon : 1e-8;

  const Mesh mesh = Mesh::star(n, StarShape{});
  const Medium med = make_medium(opt.omega);
  const cd alpha = coupling_for(opt, med, false);
  const int levels = resolve_levels(opt, n);
  const int ell0 = resolve_ell0(opt, levels);

  RunReport report;
  report.config = config_echo(opt, "multi_rhs", threads);
  Stopwatch total;

  const BlockAssembler assembler(mesh, med, alpha);
  const AssemblerSource source(assembler, proxy_for(opt));
  const ClusterTree tree(n, levels);

  Stopwatch clock;
  const FdsSolver fds(source, tree, FdsConfig{eps, ell0});
  const double build_seconds = clock.seconds();
  report.max_rank = fds.stats().max_rank;

  std::vector<double> angles(count);
  for (int j = 0; j < count; ++j)
    angles[j] = incident_angle_rad(opt) + 2.0 * kPi * j / count;
  clock.reset();
  const Eigen::MatrixXcd batch = assembler.rhs_batch(med, angles, 1.0);
  const double rhs_seconds = clock.seconds();

  clock.reset();
  const Eigen::VectorXcd x0 = fds.solve(Eigen::VectorXcd(batch.col(0)));
  const double first_solve_seconds = clock.seconds();
  const double first_total = build_seconds + first_solve_seconds;

  CsvTable table({"rhs_index", "angle_deg", "solve_seconds",
                  "deviation_vs_batch"});
  const Eigen::MatrixXcd all = fds.solve(batch);
  double max_dev = 0.0, per_rhs_sum = 0.0, per_rhs_worst = 0.0;
  for (int j = 0; j < count; ++j) {
    clock.reset();
    const Eigen::VectorXcd xj = fds.solve(Eigen::VectorXcd(batch.col(j)));
    const double tj = clock.seconds();
    const double dev = (all.col(j) - xj).norm() / xj.norm();
    table.row({(long long)j, angles[j] * 180.0 / kPi, tj, dev});
    max_dev = std::max(max_dev, dev);
    if (j > 0) {
      per_rhs_sum += tj;
      per_rhs_worst = std::max(per_rhs_worst, tj);
    }
  }
  const double per_rhs_mean = per_rhs_sum / (count - 1);

  report.phases.compression = build_seconds;
  report.phases.assembly = rhs_seconds;
  report.phases.per_rhs = per_rhs_mean;
  report.phases.total = total.seconds();
  report.peak_memory_mib = peak_memory_mib();
  report.errors["max_deviation_vs_batch"] = max_dev;
  const json summary = {{"build_seconds", build_seconds},
                        {"first_solve_seconds", first_solve_seconds},
                        {"first_total_seconds", first_total},
                        {"per_rhs_mean_seconds", per_rhs_mean},
                        {"per_rhs_worst_seconds", per_rhs_worst},
                        {"speedup_vs_rebuild", first_total / per_rhs_mean},
                        {"max_deviation_vs_batch", max_dev}};
  save_outputs(table, report, summary,
               opt.out.empty() ? "multi_rhs.csv" : opt.out);
  std::printf(
      "multi_rhs: first %.2f s, per-RHS %.4f s (worst %.4f), speedup %.0fx, "
      "max deviation %.2e\n",
      first_total, per_rhs_mean, per_rhs_worst, first_total / per_rhs_mean,
      max_dev);
  return 0;
}

// ------------------------------------------------------- omega_time/_error

int cmd_omega_time(const Options& opt, int threads) {
  const int n = opt.n_elements > 0 ? opt.n_elements : 1600;
  const double eps = opt.epsilon > 0.0 ? opt.epsilon : 1e-8;
  const std::vector<double> ws = omega_ladder(opt, 0.5, 8.0, 0.5);

  CsvTable table({"omega", "n_elements", "solver", "build_seconds",
                  "solve_seconds", "total_seconds"});
  RunReport report;
  report.config = config_echo(opt, "omega_time", threads);
  Stopwatch total;

  const Mesh mesh = Mesh::star(n, StarShape{});
  const int levels = resolve_levels(opt, n);
  const int ell0 = resolve_ell0(opt, levels);
  double fds_first = 0.0, fds_last = 0.0, conv_first = 0.0, conv_last = 0.0;

  for (double w : ws) {
    const Medium med = make_medium(w);
    const cd alpha = coupling_for(opt, med, false);
    const FdsRun fds = run_fds(mesh, med, alpha, opt, eps, levels, ell0);
    const double fds_total = fds.build_seconds + fds.solve_seconds;
    table.row({w, (long long)n, std::string("fds"), fds.build_seconds,
               fds.solve_seconds, fds_total});

    const ConvRun conv = run_conv(mesh, med, alpha, opt);
    const double conv_build =
        conv.stats.assemble_seconds + conv.stats.factor_seconds;
    table.row({w, (long long)n, std::string("conv"), conv_build,
               conv.solve_seconds, conv_build + conv.solve_seconds});

    if (w == ws.front()) {
      fds_first = fds_total;
      conv_first = conv_build + conv.solve_seconds;
    }
    fds_last = fds_total;
    conv_last = conv_build + conv.solve_seconds;
    std::printf("omega=%.2f: fds %.2f s, conv %.2f s\n", w, fds_total,
                conv_build + conv.solve_seconds);
  }

  report.phases.total = total.seconds();
  report.peak_memory_mib = peak_memory_mib();
  const json summary = {{"fds_growth_ratio", fds_last / fds_first},
                        {"conv_growth_ratio", conv_last / conv_first}};
  save_outputs(table, report, summary,
               opt.out.empty() ? "omega_time.csv" : opt.out);
  return 0;
}

int cmd_omega_error(const Options& opt, int threads) {
  const int n = opt.n_elements > 0 ? opt.n_elements : 1600;
  const double eps = opt.epsilon > 0.0 ? opt.epsilon : 1e-8;
  const std::vector<double> ws = omega_ladder(opt, 0.5, 8.0, 0.5);

  CsvTable table({"omega", "n_elements", "epsilon", "error_vs_conv"});
  RunReport report;
  report.config = config_echo(opt, "omega_error", threads);
  Stopwatch total;

  const Mesh mesh = Mesh::star(n, StarShape{});
  const int levels = resolve_levels(opt, n);
  const int ell0 = resolve_ell0(opt, levels);
  double worst = 0.0;

  for (double w : ws) {
    const Medium med = make_medium(w);
    const cd alpha = coupling_for(opt, med, false);
    const FdsRun fds = run_fds(mesh, med, alpha, opt, eps, levels, ell0);
    const ConvRun conv = run_conv(mesh, med, alpha, opt);
    const double err = relative_error(fds.x, conv.x);
    table.row({w, (long long)n, eps, err});
    report.errors["omega" + std::to_string(w)] = err;
    worst = std::max(worst, err);
    std::printf("omega=%.2f: error %.3e\n", w, err);
  }

  report.phases.total = total.seconds();
  report.peak_memory_mib = peak_memory_mib();
  const json summary = {{"worst_error", worst}};
  save_outputs(table, report, summary,
               opt.out.empty() ? "omega_error.csv" : opt.out);
  return 0;
}

// --------------------------------------------------------- intensity_sweep

int cmd_intensity_sweep(const Options& opt, int threads) {
  const int n = opt.n_elements > 0 ? opt.n_elements : 800;
  const double eps = opt.epsilon > 0.0 ? opt.epsilon : 1e-8;
  const std::vector<double> ws = omega_ladder(opt, 0.5, 8.0, 0.05);
  const bool non_bm = opt.solver == "conv-non-bm";
  const bool dense = opt.solver != "fds";
  const Vec2 observation{1.0, 0.0};

  CsvTable table({"omega", "n_elements", "solver", "node_index", "u1_re",
                  "u1_im", "u2_re", "u2_im", "intensity", "rcond"});
  RunReport report;
  report.config = config_echo(opt, "intensity_sweep", threads);
  Stopwatch total;

  const Mesh mesh = Mesh::star(n, StarShape{});
  const int levels = resolve_levels(opt, n);
  const int ell0 = resolve_ell0(opt, levels);

  for (double w : ws) {
    const Medium med = make_medium(w);
    const cd alpha = coupling_for(opt, med, non_bm);
    Eigen::VectorXcd x;
    double rcond = 0.0;
    if (dense) {
      const ConvRun conv = run_conv(mesh, med, alpha, opt);
      x = conv.x;
      rcond = conv.stats.rcond;
    } else {
      x = run_fds(mesh, med, alpha, opt, eps, levels, ell0).x;
    }
    const FieldSample s = boundary_sample(mesh, x, observation);
    const int g = nearest_node(mesh, observation);
    table.row({w, (long long)n, opt.solver, (long long)g,
               s.displacement.x.real(), s.displacement.x.imag(),
               s.displacement.y.real(), s.displacement.y.imag(), s.intensity,
               rcond});
  }

  report.phases.total = total.seconds();
  report.peak_memory_mib = peak_memory_mib();
  const json summary = {{"samples", (int)ws.size()}};
  save_outputs(table, report, summary,
               opt.out.empty() ? "intensity_sweep.csv" : opt.out);
  std::printf("intensity_sweep: %zu samples with solver %s\n", ws.size(),
              opt.solver.c_str());
  return 0;
}

// ------------------------------------------------------------- null_field

int cmd_null_field(const Options& opt, int threads) {
  const int cap = opt.n_elements > 0 ? opt.n_elements : 1600;
  std::vector<int> ns;
  for (int n : {400, 800, 1600}) {
    if (n <= cap) ns.push_back(n);
  }
  if (ns.empty() || ns.back() != cap) ns.push_back(cap);
  const double eps = opt.epsilon > 0.0 ? opt.epsilon : 1e-10;

  // Probe circle, rotated by a seed-derived phase for reproducible
  // variation of the probe set.
  const double phase =
      2.0 * kPi * std::fmod(opt.seed * 0.6180339887498949, 1.0);
  std::vector<Vec2> probes(16);
  for (int j = 0; j < 16; ++j) {
    const double a = phase + 2.0 * kPi * j / 16.0;
    probes[j] = 0.3 * Vec2{std::cos(a), std::sin(a)};
  }

  CsvTable table({"n_elements", "probe_index", "x", "y", "residual",
                  "incident_max"});
  RunReport report;
  report.config = config_echo(opt, "null_field", threads);
  Stopwatch total;

  std::vector<double> maxima;
  double incident_max = 0.0;
  for (int n : ns) {
    const Mesh mesh = Mesh::star(n, StarShape{});
    const Medium med = make_medium(opt.omega);
    const cd alpha = coupling_for(opt, med, false);
    const int levels = resolve_levels(opt, n);
    const int ell0 = resolve_ell0(opt, levels);
    const FdsRun fds = run_fds(mesh, med, alpha, opt, eps, levels, ell0);

    const PlanePWave wave(med, 1.0, incident_angle_rad(opt));
    incident_max = 0.0;
    for (const Vec2& p : probes)
      incident_max = std::max(
          incident_max, std::sqrt(wave_intensity(wave.displacement(p))));

    const std::vector<FieldSample> field =
        evaluate_field(mesh, med, wave, fds.x, probes);
    double max_res = 0.0;
    for (int j = 0; j < 16; ++j) {
      const double res = std::sqrt(field[j].intensity);
      table.row({(long long)n, (long long)j, probes[j].x, probes[j].y, res,
                 incident_max});
      max_res = std::max(max_res, res);
    }
    maxima.push_back(max_res);
    report.errors["n" + std::to_string(n) + "_max_residual"] = max_res;
    report.phases.compression += fds.build_seconds;
    report.phases.downward += fds.solve_seconds;
    std::printf("n=%d: max interior residual %.3e\n", n, max_res);
  }

  double worst_ratio = 0.0;
  for (std::size_t i = 1; i < maxima.size(); ++i)
    worst_ratio = std::max(worst_ratio, maxima[i] / maxima[i - 1]);
  report.phases.total = total.seconds();
  report.peak_memory_mib = peak_memory_mib();
  const json summary = {
      {"final_max_residual", maxima.back()},
      {"incident_max", incident_max},
      {"bound", 1e-3 * incident_max},
      {"worst_refinement_ratio", maxima.size() > 1 ? worst_ratio : 0.0}};
  save_outputs(table, report, summary,
               opt.out.empty() ? "null_field.csv" : opt.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Boundary-element experiments for elastic wave scattering"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--n-elements", opt.n_elements,
                 "Boundary element count (0 = experiment default)");
  app.add_option("--leaf-size", opt.leaf_size, "Target nodes per leaf cell");
  app.add_option("--levels", opt.levels, "Tree depth (0 = derive)");
  app.add_option("--ell0", opt.ell0, "Level solved densely");
  app.add_option("--epsilon", opt.epsilon,
                 "Compression tolerance (0 = experiment default)");
  app.add_option("--omega", opt.omega,
                 "Angular frequency (sweep start for sweeps)");
  app.add_option("--omega-max", opt.omega_max, "Sweep end (0 = default)");
  app.add_option("--omega-step", opt.omega_step, "Sweep step (0 = default)");
  auto* are = app.add_option("--alpha-re", opt.alpha_re,
                             "Coupling parameter override, real part");
  auto* aim = app.add_option("--alpha-im", opt.alpha_im,
                             "Coupling parameter override, imaginary part");
  app.add_option("--incident-angle-deg", opt.incident_angle_deg,
                 "Incident wave direction");
  app.add_option("--rhs-count", opt.rhs_count,
                 "Right-hand sides for multi_rhs");
  app.add_option("--threads", opt.threads,
                 "Worker threads (0 = default policy)");
  app.add_option("--proxy-radius-factor", opt.proxy_radius_factor,
                 "Virtual-boundary radius factor");
  app.add_option("--proxy-m", opt.proxy_m, "Virtual-boundary element count");
  app.add_option("--solver", opt.solver, "fds | conv | conv-non-bm")
      ->check(CLI::IsMember({"fds", "conv", "conv-non-bm"}));
  app.add_option("--out", opt.out, "Output CSV path");
  app.add_option("--seed", opt.seed, "Seed for probe-point placement");

  auto* c_error = app.add_subcommand("error_table",
                                     "Hierarchical vs dense solver accuracy");
  auto* c_single = app.add_subcommand("single_level_error",
                                      "Single- vs multi-level accuracy");
  auto* c_scaling = app.add_subcommand("scaling", "Runtime scaling ladders");
  auto* c_multi = app.add_subcommand("multi_rhs",
                                     "Amortized multi right-hand-side cost");
  auto* c_otime = app.add_subcommand("omega_time", "Timing vs frequency");
  auto* c_oerr = app.add_subcommand("omega_error", "Accuracy vs frequency");
  auto* c_int = app.add_subcommand("intensity_sweep",
                                   "Boundary intensity vs frequency");
  auto* c_null = app.add_subcommand("null_field",
                                    "Interior null-field residuals");

  CLI11_PARSE(app, argc, argv);
  opt.alpha_set = are->count() > 0 || aim->count() > 0;

  const std::string experiment = app.get_subcommands().front()->get_name();
  const int threads = opt.threads > 0
                          ? opt.threads
                          : (experiment == "scaling" ? 1
                                                     : omp_get_max_threads());
  omp_set_num_threads(threads);
  const BlasThreadGuard blas(threads);

  try {
    if (c_error->parsed()) return cmd_error_table(opt, threads);
    if (c_single->parsed()) return cmd_single_level_error(opt, threads);
    if (c_scaling->parsed()) return cmd_scaling(opt, threads);
    if (c_multi->parsed()) return cmd_multi_rhs(opt, threads);
    if (c_otime->parsed()) return cmd_omega_time(opt, threads);
    if (c_oerr->parsed()) return cmd_omega_error(opt, threads);
    if (c_int->parsed()) return cmd_intensity_sweep(opt, threads);
    if (c_null->parsed()) return cmd_null_field(opt, threads);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
