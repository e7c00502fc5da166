#include "ebem/scalars.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ebem/hankel.hpp"

namespace ebem {

namespace {

constexpr double kEulerGamma = 0.57721566490153286060651209008240;

// Number of retained powers r^{2p} in the base expansions.  The pointwise
// switch happens at k_T r = 0.25, but the integrated form is used out to
// k_T r = 2.5; even there term p = 16 contributes ~1e-24, which leaves
// plenty of headroom for the derivative-induced growth of the coefficients.
constexpr int kSeriesTerms = 16;

double mag(cd z) { return std::abs(z.real()) + std::abs(z.imag()); }

}  // namespace

void LogSeries::add_term(int q, cd a, cd b) {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), q,
      [](const Term& t, int power) { return t.q < power; });
  if (it != terms_.end() && it->q == q) {
    it->a += a;
    it->b += b;
  } else {
    terms_.insert(it, Term{q, a, b});
  }
}

LogSeries LogSeries::derivative() const {
  // d/dr (a + b ln r) r^q = (qa + b + qb ln r) r^{q-1}
  LogSeries out;
  for (const Term& t : terms_) {
    cd a = double(t.q) * t.a + t.b;
    cd b = double(t.q) * t.b;
    if (a != cd(0.0) || b != cd(0.0)) out.add_term(t.q - 1, a, b);
  }
  return out;
}

LogSeries LogSeries::divided_by_r(int p) const {
  LogSeries out;
  for (const Term& t : terms_) out.add_term(t.q - p, t.a, t.b);
  return out;
}

LogSeries LogSeries::scaled(cd f) const {
  LogSeries out;
  for (const Term& t : terms_) out.add_term(t.q, f * t.a, f * t.b);
  return out;
}

LogSeries LogSeries::plus(const LogSeries& other, cd factor) const {
  LogSeries out = *this;
  for (const Term& t : other.terms_) out.add_term(t.q, factor * t.a, factor * t.b);
  return out;
}

void LogSeries::prune(double rel_tol) {
  double peak = 0.0;
  for (const Term& t : terms_) peak = std::max(peak, std::max(mag(t.a), mag(t.b)));
  const double cut = rel_tol * peak;
  std::vector<Term> kept;
  kept.reserve(terms_.size());
  for (const Term& t : terms_) {
    cd a = mag(t.a) > cut ? t.a : cd(0.0);
    cd b = mag(t.b) > cut ? t.b : cd(0.0);
    if (a != cd(0.0) || b != cd(0.0)) kept.push_back(Term{t.q, a, b});
  }
  terms_ = std::move(kept);
}

void LogSeries::zero_log_coeff(int q) {
  double peak = 0.0;
  for (const Term& t : terms_) peak = std::max(peak, std::max(mag(t.a), mag(t.b)));
  for (Term& t : terms_) {
    if (t.q != q) continue;
    if (mag(t.b) > 1e-10 * peak)
      throw std::logic_error("LogSeries: log coefficient is not negligible");
    t.b = cd(0.0);
  }
}

int LogSeries::min_power() const {
  return terms_.empty() ? 0 : terms_.front().q;
}

int LogSeries::max_power() const {
  return terms_.empty() ? 0 : terms_.back().q;
}

cd LogSeries::eval(double r, double logr, const double* rpow) const {
  (void)r;
  cd sum(0.0);
  for (const Term& t : terms_) sum += (t.a + t.b * logr) * rpow[t.q];
  return sum;
}

cd LogSeries::integrate_scaled(double c, double logc, int j) const {
  // term (a + b ln r) r^q at r = c u contributes
  //   c^q [ (a + b ln c)/(q+j+1) - b/(q+j+1)^2 ].
  cd sum(0.0);
  double cp = 1.0;
  int cur = 0;
  for (const Term& t : terms_) {
    while (cur < t.q) {
      cp *= c;
      ++cur;
    }
    const double inv = 1.0 / double(t.q + j + 1);
    sum += cp * ((t.a + t.b * logc) * inv - t.b * (inv * inv));
  }
  return sum;
}

KernelScalars::KernelScalars(const Medium& medium) {
  kL_ = medium.k_L();
  kT_ = medium.k_T();
  lam_ = medium.lambda();
  mu_ = medium.mu();
  aratio_ = lam_ / (lam_ + 2.0 * mu_);
  cconst_ = (lam_ + mu_) / (8.0 * kPi * (lam_ + 2.0 * mu_));
  q_factor_ = 8.0 * mu_ * cconst_;
  series_radius_ = 0.25 / kT_;

  // Base expansions chi_a + ln(r)/(2 pi) = sum_p (A_p + B_p ln r) r^{2p},
  // where chi_a(r) = (i/4) H0^(1)(k_a r).
  auto chi_reg = [](double k) {
    LogSeries s;
    const cd cconstant =
        cd(0.0, 0.25) - (std::log(0.5 * k) + kEulerGamma) / (2.0 * kPi);
    double ap = 1.0;       // (-1)^p (k/2)^{2p} / (p!)^2
    double harmonic = 0.0; // H_p
    for (int p = 0; p <= kSeriesTerms; ++p) {
      if (p > 0) {
        ap *= -0.25 * k * k / (double(p) * double(p));
        harmonic += 1.0 / double(p);
      }
      const cd A = ap * (cconstant + harmonic / (2.0 * kPi));
      const cd B = (p == 0) ? cd(0.0) : cd(-ap / (2.0 * kPi));
      s.add_term(2 * p, A, B);
    }
    return s;
  };

  const LogSeries chiT = chi_reg(kT_);
  const LogSeries chiL = chi_reg(kL_);

  // psi = (chi_T - chi_L)/k_T^2 has static part cconst * r^2 ln r; removing
  // it zeroes the r^2 log coefficient exactly.
  LogSeries psi = chiT.plus(chiL, cd(-1.0)).scaled(cd(1.0 / (kT_ * kT_)));
  psi.add_term(2, cd(0.0), cd(-cconst_));
  psi.zero_log_coeff(2);
  psi.prune();

  const LogSeries psi1 = psi.derivative();
  const LogSeries psi2 = psi1.derivative();
  const LogSeries psi3 = psi2.derivative();
  const LogSeries psi4 = psi3.derivative();
  const LogSeries chiT1 = chiT.derivative();
  const LogSeries chiT2 = chiT1.derivative();
  const LogSeries chiL1 = chiL.derivative();
  const LogSeries chiL2 = chiL1.derivative();

  LogSeries gpsi = chiT.plus(psi1.divided_by_r());
  LogSeries gchi = psi2.plus(psi1.divided_by_r(), cd(-1.0));
  gchi.prune();
  const LogSeries w = gchi.divided_by_r();
  const LogSeries gam = gchi.divided_by_r(2);
  LogSeries bet = psi3.plus(w, cd(-3.0)).divided_by_r();
  bet.prune();
  LogSeries alf =
      psi4.plus(psi3.divided_by_r(), cd(-6.0)).plus(gam, cd(15.0));
  alf.prune();

  LogSeries d1 = chiL1.scaled(cd(aratio_)).plus(w, cd(2.0));
  LogSeries d2 = chiT1.plus(w, cd(2.0));
  LogSeries d3 = psi3.plus(w, cd(-3.0)).scaled(cd(2.0));

  LogSeries n1 =
      chiT1.divided_by_r().scaled(cd(-2.0 * mu_)).plus(gam, cd(-4.0 * mu_));
  LogSeries n2 = chiT2.plus(chiT1.divided_by_r(), cd(-1.0))
                     .scaled(cd(-mu_))
                     .plus(bet, cd(-4.0 * mu_));
  LogSeries n4 = alf.scaled(cd(-4.0 * mu_));
  // The 1/r^2 singular part of n5 comes from the derivative terms only; the
  // chi_L term keeps its log with it, so the remainder picks up the extra
  // -lam * aratio * k_L^2 * ln(r)/(2 pi) that the base expansion removed.
  LogSeries n5 = chiL.scaled(cd(lam_ * aratio_ * kL_ * kL_))
                     .plus(chiL1.divided_by_r(), cd(-4.0 * mu_ * aratio_))
                     .plus(gam, cd(-4.0 * mu_));
  n5.add_term(0, cd(0.0), cd(-lam_ * aratio_ * kL_ * kL_ / (2.0 * kPi)));
  LogSeries n7 = chiL2.plus(chiL1.divided_by_r(), cd(-1.0))
                     .scaled(cd(-2.0 * mu_ * aratio_))
                     .plus(bet, cd(-4.0 * mu_));

  series_ = {gpsi, gchi, d1, d2, d3, n1, n2, n4, n5, n7};
  for (LogSeries& s : series_) {
    s.prune();
    if (s.min_power() < 0)
      throw std::logic_error(
          "KernelScalars: remainder series kept a negative power");
    max_pow_ = std::max(max_pow_, s.max_power());
  }
}

ScalarSet KernelScalars::full(double r) const {
  // Below the series radius the direct formulas cancel catastrophically
  // (the same magnitudes the static split exists to absorb), so the
  // well-conditioned static-plus-series route is used there instead.
  if (r < series_radius_) {
    ScalarSet s = remainder(r);
    const StaticScalarSet s0 = static_part(r);
    s.gpsi += s0.gpsi;
    s.gchi += s0.gchi;
    s.d1 += s0.d1;
    s.d2 += s0.d2;
    s.d3 += s0.d3;
    s.n1 += s0.n1;
    s.n2 += s0.n2;
    s.n4 += s0.n4;
    s.n5 += s0.n5;
    s.n7 += s0.n7;
    return s;
  }
  const double zT = kT_ * r;
  const double zL = kL_ * r;
  cd h0T, h1T, h0L, h1L;
  hankel1_01(zT, h0T, h1T);
  hankel1_01(zL, h0L, h1L);

  // chi_a = (i/4) H0(k_a r) and its radial derivatives.
  const cd i4(0.0, 0.25);
  const cd chiT = i4 * h0T;
  const cd chiL = i4 * h0L;
  const cd chiT1 = -i4 * kT_ * h1T;
  const cd chiL1 = -i4 * kL_ * h1L;
  const cd chiT2 = -i4 * kT_ * kT_ * (h0T - h1T / zT);
  const cd chiL2 = -i4 * kL_ * kL_ * (h0L - h1L / zL);
  const cd chiT3 =
      -i4 * kT_ * kT_ * kT_ * (-h1T - h0T / zT + 2.0 * h1T / (zT * zT));
  const cd chiL3 =
      -i4 * kL_ * kL_ * kL_ * (-h1L - h0L / zL + 2.0 * h1L / (zL * zL));
  const cd chiT4 = -i4 * kT_ * kT_ * kT_ * kT_ *
                   (-h0T + 2.0 * h1T / zT + 3.0 * h0T / (zT * zT) -
                    6.0 * h1T / (zT * zT * zT));
  const cd chiL4 = -i4 * kL_ * kL_ * kL_ * kL_ *
                   (-h0L + 2.0 * h1L / zL + 3.0 * h0L / (zL * zL) -
                    6.0 * h1L / (zL * zL * zL));

  const double ikT2 = 1.0 / (kT_ * kT_);
  const cd psi1 = (chiT1 - chiL1) * ikT2;
  const cd psi2 = (chiT2 - chiL2) * ikT2;
  const cd psi3 = (chiT3 - chiL3) * ikT2;
  const cd psi4 = (chiT4 - chiL4) * ikT2;

  ScalarSet s;
  s.gpsi = chiT + psi1 / r;
  s.gchi = psi2 - psi1 / r;
  const cd w = s.gchi / r;
  const cd gam = s.gchi / (r * r);
  const cd bet = (psi3 - 3.0 * w) / r;
  const cd alf = psi4 - 6.0 * psi3 / r + 15.0 * gam;
  s.d1 = aratio_ * chiL1 + 2.0 * w;
  s.d2 = chiT1 + 2.0 * w;
  s.d3 = 2.0 * (psi3 - 3.0 * w);
  s.n1 = -2.0 * mu_ * chiT1 / r - 4.0 * mu_ * gam;
  s.n2 = -mu_ * (chiT2 - chiT1 / r) - 4.0 * mu_ * bet;
  s.n4 = -4.0 * mu_ * alf;
  s.n5 = lam_ * aratio_ * kL_ * kL_ * chiL - 4.0 * mu_ * aratio_ * chiL1 / r -
         4.0 * mu_ * gam;
  s.n7 = -2.0 * mu_ * aratio_ * (chiL2 - chiL1 / r) - 4.0 * mu_ * bet;
  return s;
}

StaticScalarSet KernelScalars::static_part(double r) const {
  const double logr = std::log(r);
  const double lp2m = lam_ + 2.0 * mu_;
  StaticScalarSet s;
  s.gpsi = -logr / (2.0 * kPi) + cconst_ * (2.0 * logr + 1.0);
  s.gchi = 2.0 * cconst_;
  s.d1 = mu_ / (2.0 * kPi * lp2m * r);
  s.d2 = -s.d1;
  s.d3 = -8.0 * cconst_ / r;
  const double r2 = r * r;
  s.n1 = mu_ * mu_ / (kPi * lp2m * r2);
  s.n2 = mu_ * lam_ / (kPi * lp2m * r2);
  s.n4 = -8.0 * q_factor_ / r2;
  s.n5 = mu_ * (lam_ - mu_) / (kPi * lp2m * r2);
  s.n7 = 2.0 * mu_ * mu_ / (kPi * lp2m * r2);
  return s;
}

void KernelScalars::split(double r, ScalarSet* full_out,
                          ScalarSet* rem_out) const {
  const StaticScalarSet s0 = static_part(r);
  if (r < series_radius_) {
    *rem_out = remainder(r);
    *full_out = *rem_out;
    full_out->gpsi += s0.gpsi;
    full_out->gchi += s0.gchi;
    full_out->d1 += s0.d1;
    full_out->d2 += s0.d2;
    full_out->d3 += s0.d3;
    full_out->n1 += s0.n1;
    full_out->n2 += s0.n2;
    full_out->n4 += s0.n4;
    full_out->n5 += s0.n5;
    full_out->n7 += s0.n7;
    return;
  }
  *full_out = full(r);
  *rem_out = *full_out;
  rem_out->gpsi -= s0.gpsi;
  rem_out->gchi -= s0.gchi;
  rem_out->d1 -= s0.d1;
  rem_out->d2 -= s0.d2;
  rem_out->d3 -= s0.d3;
  rem_out->n1 -= s0.n1;
  rem_out->n2 -= s0.n2;
  rem_out->n4 -= s0.n4;
  rem_out->n5 -= s0.n5;
  rem_out->n7 -= s0.n7;
}

std::array<cd, 10> KernelScalars::integrated_remainder(double scale,
                                                       int upow) const {
  if (!(kT_ * scale < 2.5))
    throw std::domain_error(
        "KernelScalars: element too long for this frequency (needs several "
        "elements per wavelength)");
  const double logc = std::log(scale);
  std::array<cd, 10> out;
  for (int k = 0; k < 10; ++k)
    out[k] = series_[k].integrate_scaled(scale, logc, upow);
  return out;
}

ScalarSet KernelScalars::remainder(double r) const {
  if (r < series_radius_) {
    const double logr = std::log(r);
    // Power table r^0..r^{max_pow_}, shared by all ten series.
    double rpow[64];
    rpow[0] = 1.0;
    for (int q = 1; q <= max_pow_; ++q) rpow[q] = rpow[q - 1] * r;
    ScalarSet s;
    s.gpsi = series_[0].eval(r, logr, rpow);
    s.gchi = series_[1].eval(r, logr, rpow);
    s.d1 = series_[2].eval(r, logr, rpow);
    s.d2 = series_[3].eval(r, logr, rpow);
    s.d3 = series_[4].eval(r, logr, rpow);
    s.n1 = series_[5].eval(r, logr, rpow);
    s.n2 = series_[6].eval(r, logr, rpow);
    s.n4 = series_[7].eval(r, logr, rpow);
    s.n5 = series_[8].eval(r, logr, rpow);
    s.n7 = series_[9].eval(r, logr, rpow);
    return s;
  }
  ScalarSet s = full(r);
  const StaticScalarSet s0 = static_part(r);
  s.gpsi -= s0.gpsi;
  s.gchi -= s0.gchi;
  s.d1 -= s0.d1;
  s.d2 -= s0.d2;
  s.d3 -= s0.d3;
  s.n1 -= s0.n1;
  s.n2 -= s0.n2;
  s.n4 -= s0.n4;
  s.n5 -= s0.n5;
  s.n7 -= s0.n7;
  return s;
}

}  // namespace ebem
