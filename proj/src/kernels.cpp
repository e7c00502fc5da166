#include "ebem/kernels.hpp"

#include <cmath>

namespace ebem {

ScalarSet to_complex(const StaticScalarSet& s) {
  return {cd(s.gpsi), cd(s.gchi), cd(s.d1), cd(s.d2), cd(s.d3),
          cd(s.n1),   cd(s.n2),   cd(s.n4), cd(s.n5), cd(s.n7)};
}

CMat2 combine_G(const ScalarSet& s, double mu, const Vec2& zh) {
  const double imu = 1.0 / mu;
  CMat2 m;
  m.a11 = imu * (s.gpsi + s.gchi * (zh.x * zh.x));
  m.a12 = imu * (s.gchi * (zh.x * zh.y));
  m.a21 = m.a12;
  m.a22 = imu * (s.gpsi + s.gchi * (zh.y * zh.y));
  return m;
}

CMat2 combine_D(const ScalarSet& s, const Vec2& zh, const Vec2& ny) {
  const double nz = ny.dot(zh);
  CMat2 m;
  // D_ij = -(d1 n_j zh_i + d2 ((n.zh) d_ij + n_i zh_j) + d3 (n.zh) zh_i zh_j)
  m.a11 = -(s.d1 * (ny.x * zh.x) + s.d2 * (nz + ny.x * zh.x) +
            s.d3 * (nz * zh.x * zh.x));
  m.a12 = -(s.d1 * (ny.y * zh.x) + s.d2 * (ny.x * zh.y) +
            s.d3 * (nz * zh.x * zh.y));
  m.a21 = -(s.d1 * (ny.x * zh.y) + s.d2 * (ny.y * zh.x) +
            s.d3 * (nz * zh.y * zh.x));
  m.a22 = -(s.d1 * (ny.y * zh.y) + s.d2 * (nz + ny.y * zh.y) +
            s.d3 * (nz * zh.y * zh.y));
  return m;
}

CMat2 combine_N(const ScalarSet& s, const Vec2& zh, const Vec2& nx,
                const Vec2& ny) {
  const double mn = nx.dot(ny);
  const double mz = nx.dot(zh);
  const double nz = ny.dot(zh);
  CMat2 m;
  for (int i = 0; i < 2; ++i) {
    const double mi = (i == 0) ? nx.x : nx.y;
    const double ni = (i == 0) ? ny.x : ny.y;
    const double zi = (i == 0) ? zh.x : zh.y;
    for (int j = 0; j < 2; ++j) {
      const double mj = (j == 0) ? nx.x : nx.y;
      const double nj = (j == 0) ? ny.x : ny.y;
      const double zj = (j == 0) ? zh.x : zh.y;
      const double dij = (i == j) ? 1.0 : 0.0;
      const cd v = s.n1 * (mn * dij + ni * mj) +
                   s.n2 * (mn * zi * zj + mz * nz * dij + mz * ni * zj +
                           nz * zi * mj) +
                   s.n4 * (mz * nz * zi * zj) + s.n5 * (mi * nj) +
                   s.n7 * (mz * zi * nj + nz * mi * zj);
      if (i == 0 && j == 0)
        m.a11 = v;
      else if (i == 0)
        m.a12 = v;
      else if (j == 0)
        m.a21 = v;
      else
        m.a22 = v;
    }
  }
  return m;
}

CMat2 q0_kernel(double qfactor, double r, const Vec2& zh) {
  const double lr = qfactor * std::log(r);
  CMat2 m;
  m.a11 = lr - qfactor * (zh.x * zh.x);
  m.a12 = -qfactor * (zh.x * zh.y);
  m.a21 = m.a12;
  m.a22 = lr - qfactor * (zh.y * zh.y);
  return m;
}

CMat2 KernelEvaluator::G(const Vec2& x, const Vec2& y) const {
  const Vec2 z = x - y;
  const double r = z.norm();
  return combine_G(scalars_.full(r), mu_, (1.0 / r) * z);
}

CMat2 KernelEvaluator::D(const Vec2& x, const Vec2& y, const Vec2& ny) const {
  const Vec2 z = x - y;
  const double r = z.norm();
  return combine_D(scalars_.full(r), (1.0 / r) * z, ny);
}

CMat2 KernelEvaluator::N(const Vec2& x, const Vec2& y, const Vec2& nx,
                         const Vec2& ny) const {
  const Vec2 z = x - y;
  const double r = z.norm();
  return combine_N(scalars_.full(r), (1.0 / r) * z, nx, ny);
}

PlanePWave::PlanePWave(const Medium& medium, double amplitude,
                       double angle_rad)
    : kL_(medium.k_L()),
      lam_(medium.lambda()),
      mu_(medium.mu()),
      amp_(amplitude),
      dir_{std::cos(angle_rad), std::sin(angle_rad)} {}

CVec2 PlanePWave::displacement(const Vec2& x) const {
  const cd phase = amp_ * std::exp(cd(0.0, -kL_ * dir_.dot(x)));
  return {phase * dir_.x, phase * dir_.y};
}

CVec2 PlanePWave::traction(const Vec2& x, const Vec2& n) const {
  const cd f =
      cd(0.0, -kL_) * amp_ * std::exp(cd(0.0, -kL_ * dir_.dot(x)));
  const double nd = n.dot(dir_);
  return {f * (lam_ * n.x + 2.0 * mu_ * nd * dir_.x),
          f * (lam_ * n.y + 2.0 * mu_ * nd * dir_.y)};
}

}  // namespace ebem
