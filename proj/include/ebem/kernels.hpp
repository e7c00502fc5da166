#pragma once

#include "ebem/geometry.hpp"
#include "ebem/medium.hpp"
#include "ebem/scalars.hpp"
#include "ebem/types.hpp"

namespace ebem {

// Complex 2-vector and 2x2 matrix used for kernel values and field samples.
struct CVec2 {
  cd x{0.0}, y{0.0};
};

struct CMat2 {
  cd a11{0.0}, a12{0.0}, a21{0.0}, a22{0.0};

  CMat2& operator+=(const CMat2& o) {
    a11 += o.a11;
    a12 += o.a12;
    a21 += o.a21;
    a22 += o.a22;
    return *this;
  }
  CMat2& operator*=(cd f) {
    a11 *= f;
    a12 *= f;
    a21 *= f;
    a22 *= f;
    return *this;
  }
  CVec2 apply(const CVec2& v) const {
    return {a11 * v.x + a12 * v.y, a21 * v.x + a22 * v.y};
  }
};

inline CMat2 operator*(cd f, const CMat2& m) {
  return {f * m.a11, f * m.a12, f * m.a21, f * m.a22};
}

// Promote the static scalars so the same combiners serve both paths.
ScalarSet to_complex(const StaticScalarSet& s);

// Kernel combiners.  zh = (x - y)/|x - y| points from source to observer,
// ny is the source-point normal and nx the observation-point normal.
CMat2 combine_G(const ScalarSet& s, double mu, const Vec2& zh);
CMat2 combine_D(const ScalarSet& s, const Vec2& zh, const Vec2& ny);
CMat2 combine_N(const ScalarSet& s, const Vec2& zh, const Vec2& nx,
                const Vec2& ny);

// Integrated-by-parts form of the static hypersingular kernel.  Pairing
// arc-length derivatives of test and trial densities with this matrix
// reproduces the static N contribution exactly (the boundary terms cancel
// around the closed curve).
CMat2 q0_kernel(double qfactor, double r, const Vec2& zh);

// Point evaluation of the full kernels for a given medium.
class KernelEvaluator {
 public:
  explicit KernelEvaluator(const Medium& medium)
      : scalars_(medium), mu_(medium.mu()) {}

  const KernelScalars& scalars() const { return scalars_; }

  CMat2 G(const Vec2& x, const Vec2& y) const;
  CMat2 D(const Vec2& x, const Vec2& y, const Vec2& ny) const;
  CMat2 N(const Vec2& x, const Vec2& y, const Vec2& nx, const Vec2& ny) const;

 private:
  KernelScalars scalars_;
  double mu_;
};

// Incident plane compressional wave with unit propagation direction d:
//   u(x) = A d exp(-i k_L d.x).
// Its traction on a surface with normal n is
//   t(x) = -i k_L A exp(-i k_L d.x) (lambda n + 2 mu (n.d) d).
class PlanePWave {
 public:
  PlanePWave(const Medium& medium, double amplitude, double angle_rad);

  CVec2 displacement(const Vec2& x) const;
  CVec2 traction(const Vec2& x, const Vec2& n) const;
  const Vec2& direction() const { return dir_; }

 private:
  double kL_, lam_, mu_, amp_;
  Vec2 dir_;
};

}  // namespace ebem
