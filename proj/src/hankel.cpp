#include "ebem/hankel.hpp"

#include <cassert>
#include <cmath>

#include "ebem/hankel_coeffs.hpp"

namespace ebem {
namespace {

constexpr double kEulerGamma = 0.57721566490153286061;
constexpr double kTwoOverPi = 0.63661977236758134308;
// pi/4 split into a leading part and a correction so that the phase
// x - pi/4 keeps full precision for large x.
constexpr double kPio4Hi = 0.78539816339744827900;
constexpr double kPio4Lo = 3.06161699786838301793e-17;

template <int N>
inline double clenshaw(const double (&c)[N], double u) {
  // Chebyshev series on [0,1]
  const double y = 2.0 * u - 1.0;
  const double y2 = 2.0 * y;
  double b1 = 0.0, b2 = 0.0;
  for (int j = N - 1; j >= 1; --j) {
    const double t = y2 * b1 - b2 + c[j];
    b2 = b1;
    b1 = t;
  }
  return y * b1 - b2 + c[0];
}

}  // namespace

void hankel1_01(double x, cd& h0, cd& h1) {
  assert(x > 0.0);
  using namespace detail;
  if (x <= kHankelSplit) {
    const double t = (x / kHankelSplit) * (x / kHankelSplit);
    const double j0 = clenshaw(kJ0Small, t);
    const double j1 = clenshaw(kJ1Small, t) * x;
    const double lg = kTwoOverPi * (std::log(0.5 * x) + kEulerGamma);
    const double y0 = clenshaw(kV0Small, t) + lg * j0;
    const double y1 = clenshaw(kV1Small, t) * x + lg * j1 - kTwoOverPi / x;
    h0 = cd(j0, y0);
    h1 = cd(j1, y1);
    return;
  }
  const double v = (kHankelSplit / x) * (kHankelSplit / x);
  const double p0 = clenshaw(kP0Large, v);
  const double q0 = clenshaw(kQ0Large, v) / x;
  const double p1 = clenshaw(kP1Large, v);
  const double q1 = clenshaw(kQ1Large, v) / x;
  const double amp = std::sqrt(kTwoOverPi / x);
  // chi0 = x - pi/4.  The subtraction is done with an exact two-sum so the
  // rounding residual can be folded back in to first order; otherwise the
  // phase loses ~ulp(x) and the values drift for large arguments.
  const double chi0 = x - kPio4Hi;
  const double resid = (x - chi0) - kPio4Hi;  // exact, |kPio4Hi| < x here
  const double corr = resid - kPio4Lo;
  double s0, c0;
  sincos(chi0, &s0, &c0);
  const double s0c = s0 + corr * c0;
  const double c0c = c0 - corr * s0;
  s0 = s0c;
  c0 = c0c;
  // chi1 = chi0 - pi/2: cos -> sin, sin -> -cos
  const double c1 = s0;
  const double s1 = -c0;
  h0 = cd(amp * (p0 * c0 - q0 * s0), amp * (p0 * s0 + q0 * c0));
  h1 = cd(amp * (p1 * c1 - q1 * s1), amp * (p1 * s1 + q1 * c1));
}

}  // namespace ebem
