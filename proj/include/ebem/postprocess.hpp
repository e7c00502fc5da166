#pragma once

#include <Eigen/Dense>
#include <vector>

#include "ebem/geometry.hpp"
#include "ebem/kernels.hpp"
#include "ebem/medium.hpp"
#include "ebem/types.hpp"

namespace ebem {

// One field evaluation: total displacement and wave intensity at a point.
struct FieldSample {
  Vec2 location;
  CVec2 displacement;
  double intensity = 0.0;  // |u_1|^2 + |u_2|^2
};

inline double wave_intensity(const CVec2& u) {
  return std::norm(u.x) + std::norm(u.y);
}

// Shortest distance from a point to the boundary curve.
double boundary_distance(const Mesh& mesh, const Vec2& x);

// Index of the boundary node closest to a point.
int nearest_node(const Mesh& mesh, const Vec2& x);

// Evenly spaced points on a circle, the standard interior probe set.
std::vector<Vec2> circle_probes(double radius, int count,
                                const Vec2& center = {});

// Scattered displacement at points off the boundary, by direct quadrature
// of the double-layer representation with the nodal boundary solution
// (component-major, length 2 n) interpolated linearly along each element.
// Cost is O(n) per point.  Throws std::invalid_argument when a point lies
// within one element length of the curve, where the representation
// integral turns near-singular; the message suggests the minimum offset.
std::vector<CVec2> evaluate_scattered(const Mesh& mesh, const Medium& medium,
                                      const Eigen::VectorXcd& boundary_u,
                                      const std::vector<Vec2>& points,
                                      int n_gauss = 8);

// Total field: incident wave plus the scattered part, intensities filled.
std::vector<FieldSample> evaluate_field(const Mesh& mesh, const Medium& medium,
                                        const PlanePWave& wave,
                                        const Eigen::VectorXcd& boundary_u,
                                        const std::vector<Vec2>& points,
                                        int n_gauss = 8);

// Boundary observable at the node nearest to the request point.  Field
// evaluation right on the curve is singular; the nodal solution value is
// the meaningful quantity there.
FieldSample boundary_sample(const Mesh& mesh,
                            const Eigen::VectorXcd& boundary_u, const Vec2& x);

}  // namespace ebem
