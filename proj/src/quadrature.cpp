#include "ebem/quadrature.hpp"

#include <array>
#include <cmath>
#include <mutex>
#include <stdexcept>

#include "ebem/types.hpp"

namespace ebem {

namespace {

constexpr int kMaxOrder = 64;

GaussRule make_rule(int n) {
  // Nodes are the roots of the Legendre polynomial P_n, found by Newton
  // iteration from the Chebyshev-based initial guess; weights follow from
  // the derivative.  Computed on [-1, 1], then mapped to [0, 1].
  GaussRule rule;
  rule.x.resize(n);
  rule.w.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.x[i] = 0.5 * (1.0 - x);  // descending root -> ascending node
    rule.w[i] = 0.5 * w;
    rule.x[n - 1 - i] = 0.5 * (1.0 + x);
    rule.w[n - 1 - i] = 0.5 * w;
  }
  return rule;
}

}  // namespace

const GaussRule& gauss_rule(int n) {
  if (n < 1 || n > kMaxOrder)
    throw std::invalid_argument("gauss_rule: order out of range");
  static std::array<GaussRule, kMaxOrder + 1> cache;
  static std::array<std::once_flag, kMaxOrder + 1> flags;
  std::call_once(flags[n], [n] { cache[n] = make_rule(n); });
  return cache[n];
}

}  // namespace ebem
