#pragma once

#include <array>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <string>

namespace ebem {

using cd = std::complex<double>;

inline constexpr cd kImag{0.0, 1.0};
inline constexpr double kPi = 3.14159265358979323846;

// Small fixed-size 2D vector; enough for boundary geometry work.
struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  double dot(const Vec2& o) const { return x * o.x + y * o.y; }
  double norm() const { return std::hypot(x, y); }
  double squaredNorm() const { return x * x + y * y; }
  double operator[](int i) const { return i == 0 ? x : y; }
};

inline Vec2 operator*(double s, const Vec2& v) { return {s * v.x, s * v.y}; }

// Wall-clock stopwatch used for the per-phase timings in run reports.
class Stopwatch {
 public:
  Stopwatch() : start_(clock::now()) {}
  void reset() { start_ = clock::now(); }
  double seconds() const {
    return std::chrono::duration<double>(clock::now() - start_).count();
  }

 private:
  using clock = std::chrono::steady_clock;
  clock::time_point start_;
};

// Peak resident set size in MiB (VmHWM on Linux); 0 if unavailable.
double peak_memory_mib();

}  // namespace ebem
