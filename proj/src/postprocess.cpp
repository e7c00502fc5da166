#include "ebem/postprocess.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "ebem/quadrature.hpp"

namespace ebem {

namespace {

double segment_distance(const Vec2& a, const Vec2& b, const Vec2& x) {
  const Vec2 ab = b - a;
  const double len2 = ab.squaredNorm();
  double t = len2 > 0.0 ? (x - a).dot(ab) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return (x - (a + t * ab)).norm();
}

}  // namespace

double boundary_distance(const Mesh& mesh, const Vec2& x) {
  double best = std::numeric_limits<double>::infinity();
  for (int e = 0; e < mesh.size(); ++e)
    best = std::min(best,
                    segment_distance(mesh.node(e), mesh.node(mesh.next(e)), x));
  return best;
}

int nearest_node(const Mesh& mesh, const Vec2& x) {
  int best = 0;
  double best_d = (mesh.node(0) - x).squaredNorm();
  for (int g = 1; g < mesh.size(); ++g) {
    const double d = (mesh.node(g) - x).squaredNorm();
    if (d < best_d) {
      best_d = d;
      best = g;
    }
  }
  return best;
}

std::vector<Vec2> circle_probes(double radius, int count, const Vec2& center) {
  if (radius <= 0.0 || count <= 0)
    throw std::invalid_argument("circle_probes: radius and count must be positive");
  std::vector<Vec2> pts(count);
  for (int j = 0; j < count; ++j) {
    const double phi = 2.0 * kPi * j / count;
    pts[j] = center + radius * Vec2{std::cos(phi), std::sin(phi)};
  }
  return pts;
}

std::vector<CVec2> evaluate_scattered(const Mesh& mesh, const Medium& medium,
                                      const Eigen::VectorXcd& boundary_u,
                                      const std::vector<Vec2>& points,
                                      int n_gauss) {
  const int n = mesh.size();
  if (boundary_u.size() != 2 * n)
    throw std::invalid_argument("evaluate_scattered: boundary data size");
  const double h = mesh.max_length();
  for (const Vec2& x : points) {
    const double d = boundary_distance(mesh, x);
    if (d <= h)
      throw std::invalid_argument(
          "evaluate_scattered: point (" + std::to_string(x.x) + ", " +
          std::to_string(x.y) + ") is " + std::to_string(d) +
          " from the boundary; offset it beyond one element length (" +
          std::to_string(h) + ")");
  }

  const KernelEvaluator eval(medium);
  const GaussRule& rule = gauss_rule(n_gauss);
  std::vector<CVec2> out(points.size());

#pragma omp parallel for schedule(static)
  for (std::size_t p = 0; p < points.size(); ++p) {
    const Vec2 x = points[p];
    CVec2 acc;
    for (int e = 0; e < n; ++e) {
      const Vec2 a = mesh.node(e);
      const Vec2 b = mesh.node(mesh.next(e));
      const Vec2 ny = mesh.normal(e);
      const double len = mesh.length(e);
      const CVec2 ua{boundary_u[e], boundary_u[n + e]};
      const CVec2 ub{boundary_u[mesh.next(e)], boundary_u[n + mesh.next(e)]};
      for (std::size_t q = 0; q < rule.x.size(); ++q) {
        const double t = rule.x[q];
        const Vec2 y = a + t * (b - a);
        const CVec2 uy{(1.0 - t) * ua.x + t * ub.x,
                       (1.0 - t) * ua.y + t * ub.y};
        const CVec2 dv = eval.D(x, y, ny).apply(uy);
        const double w = rule.w[q] * len;
        acc.x += w * dv.x;
        acc.y += w * dv.y;
      }
    }
    out[p] = CVec2{-acc.x, -acc.y};
  }
  return out;
}

std::vector<FieldSample> evaluate_field(const Mesh& mesh, const Medium& medium,
                                        const PlanePWave& wave,
                                        const Eigen::VectorXcd& boundary_u,
                                        const std::vector<Vec2>& points,
                                        int n_gauss) {
  const std::vector<CVec2> scattered =
      evaluate_scattered(mesh, medium, boundary_u, points, n_gauss);
  std::vector<FieldSample> out(points.size());
  for (std::size_t p = 0; p < points.size(); ++p) {
    const CVec2 inc = wave.displacement(points[p]);
    FieldSample& s = out[p];
    s.location = points[p];
    s.displacement = CVec2{inc.x + scattered[p].x, inc.y + scattered[p].y};
    s.intensity = wave_intensity(s.displacement);
  }
  return out;
}

FieldSample boundary_sample(const Mesh& mesh,
                            const Eigen::VectorXcd& boundary_u, const Vec2& x) {
  const int n = mesh.size();
  if (boundary_u.size() != 2 * n)
    throw std::invalid_argument("boundary_sample: boundary data size");
  const int g = nearest_node(mesh, x);
  FieldSample s;
  s.location = mesh.node(g);
  s.displacement = CVec2{boundary_u[g], boundary_u[n + g]};
  s.intensity = wave_intensity(s.displacement);
  return s;
}

}  // namespace ebem
