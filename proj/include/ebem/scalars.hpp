#pragma once

#include <array>
#include <vector>

#include "ebem/medium.hpp"
#include "ebem/types.hpp"

namespace ebem {

// The ten radial scalar functions that carry all kernel information.  The
// displacement kernel is
//   G_ij = (1/mu) (gpsi d_ij + gchi zh_i zh_j),
// the traction (double-layer) kernel is
//   D_ij = -[ d1 n_j zh_i + d2 ((n.zh) d_ij + n_i zh_j) + d3 (n.zh) zh_i zh_j ],
// and the hypersingular kernel, with m the observation normal and n the
// source normal, is
//   N_ij = n1 ((m.n) d_ij + n_i m_j)
//        + n2 ((m.n) zh_i zh_j + (m.zh)(n.zh) d_ij + (m.zh) n_i zh_j + (n.zh) zh_i m_j)
//        + n4 (m.zh)(n.zh) zh_i zh_j
//        + n5 m_i n_j
//        + n7 ((m.zh) zh_i n_j + (n.zh) m_i zh_j),
// where zh = (x - y)/r.
struct ScalarSet {
  cd gpsi, gchi, d1, d2, d3, n1, n2, n4, n5, n7;
};

// Zero-frequency (static) counterparts, used to split off the singular part
// of each kernel near r = 0.  The n5 scalar keeps its frequency-dependent
// log term in the remainder, so the static n5 carries only the 1/r^2 part.
struct StaticScalarSet {
  double gpsi, gchi, d1, d2, d3, n1, n2, n4, n5, n7;
};

// A truncated expansion sum_j (a_j + b_j ln r) r^{q_j} with integer powers.
// Supports the handful of operations needed to derive the near-field
// remainder scalars from the two base expansions with the exact same
// formulas as the far-field path.
class LogSeries {
 public:
  void add_term(int q, cd a, cd b);
  LogSeries derivative() const;
  LogSeries divided_by_r(int p = 1) const;
  LogSeries scaled(cd f) const;
  LogSeries plus(const LogSeries& other, cd factor = cd(1.0)) const;
  // Remove terms with negligible coefficients relative to the largest one
  // (exact cancellations leave true zeros behind).
  void prune(double rel_tol = 1e-25);
  // Surgically zero the log coefficient of power q (must already be
  // negligible relative to the series scale).
  void zero_log_coeff(int q);
  int min_power() const;
  int max_power() const;
  cd eval(double r, double logr, const double* rpow) const;
  // Closed form of int_0^1 u^j [series](c u) du, using
  // int_0^1 u^k du = 1/(k+1) and int_0^1 u^k ln u du = -1/(k+1)^2.
  cd integrate_scaled(double c, double logc, int j) const;
  std::size_t n_terms() const { return terms_.size(); }

 private:
  struct Term {
    int q;
    cd a, b;
  };
  std::vector<Term> terms_;  // kept sorted by q, unique powers
};

// Evaluator for the kernel scalars of one medium/frequency combination.
//
// full():      Hankel-function based evaluation, valid at any r > 0.
// static_part(): closed forms of the r -> 0 singular parts.
// remainder(): full minus static.  Below the series radius it is evaluated
//              from precomputed expansions (no cancellation); above it by
//              direct subtraction, where the cancellation loss is a few
//              digits at most.
class KernelScalars {
 public:
  explicit KernelScalars(const Medium& medium);

  ScalarSet full(double r) const;
  StaticScalarSet static_part(double r) const;
  ScalarSet remainder(double r) const;
  // Both in one evaluation (full = static + remainder below the series
  // radius, remainder = full - static above it).
  void split(double r, ScalarSet* full_out, ScalarSet* rem_out) const;

  // Per-scalar closed form of int_0^1 u^upow * scalar_remainder(scale*u) du,
  // in ScalarSet order.  Valid while k_T * scale stays moderate (the series
  // converges fast there); used by the singular-pair integrators where the
  // radial direction separates.
  std::array<cd, 10> integrated_remainder(double scale, int upow) const;

  double series_radius() const { return series_radius_; }
  double mu() const { return mu_; }
  double lambda() const { return lam_; }
  double k_L() const { return kL_; }
  double k_T() const { return kT_; }
  // Prefactor of the integrated-by-parts form of the static hypersingular
  // kernel: Q0_ij = qfactor (ln r d_ij - zh_i zh_j).
  double qfactor() const { return q_factor_; }

 private:
  double kL_, kT_, lam_, mu_, aratio_, cconst_, q_factor_, series_radius_;
  std::array<LogSeries, 10> series_;  // order: gpsi..n7 as in ScalarSet
  int max_pow_ = 0;
};

}  // namespace ebem
