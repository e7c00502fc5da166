// Field evaluation through the integral representation: incident-only
// reduction, linearity, interior null field, far-field decay, and the
// boundary observable helpers.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "doctest.h"
#include "ebem/assembly.hpp"
#include "ebem/compression.hpp"
#include "ebem/fds.hpp"
#include "ebem/geometry.hpp"
#include "ebem/kernels.hpp"
#include "ebem/medium.hpp"
#include "ebem/postprocess.hpp"
#include "ebem/types.hpp"

using namespace ebem;

namespace {

Medium test_medium() { return Medium::from_lame(1.0, 1.0, 1.0, 2.0); }

Mesh star_mesh(int n) { return Mesh::star(n, StarShape{}); }

double cnorm(const CVec2& v) {
  return std::sqrt(std::norm(v.x) + std::norm(v.y));
}

// Solve the scattering problem with the hierarchical solver.
Eigen::VectorXcd solve_star(const Mesh& mesh, const Medium& med,
                            const PlanePWave& wave, double eps) {
  const BlockAssembler assembler(mesh, med, med.default_coupling());
  const AssemblerSource source(assembler);
  const ClusterTree tree(mesh.size(), ClusterTree::depth_for(mesh.size(), 100));
  const FdsSolver fds(source, tree, FdsConfig{eps, 1});
  return fds.solve(assembler.rhs(wave));
}

}  // namespace

TEST_CASE("geometry helpers: distances, nearest node, probe circles") {
  const Mesh mesh = star_mesh(256);
  // theta = 0 maps exactly to (1, 0), which is node 0.
  CHECK(nearest_node(mesh, Vec2{1.0, 0.0}) == 0);
  CHECK(nearest_node(mesh, mesh.node(100)) == 100);
  CHECK(boundary_distance(mesh, mesh.node(5)) == 0.0);
  CHECK(boundary_distance(mesh, Vec2{0.0, 0.0}) ==
        doctest::Approx(0.7 / 1.3).epsilon(1e-3));

  const std::vector<Vec2> probes = circle_probes(0.3, 16);
  REQUIRE(probes.size() == 16);
  for (const Vec2& p : probes) CHECK(p.norm() == doctest::Approx(0.3));
  CHECK_THROWS_AS(circle_probes(-1.0, 4), std::invalid_argument);
  CHECK_THROWS_AS(circle_probes(1.0, 0), std::invalid_argument);
}

TEST_CASE("zero boundary data reproduces the incident wave exactly") {
  const Medium med = test_medium();
  const Mesh mesh = star_mesh(128);
  const PlanePWave wave(med, 1.0, 0.4);
  const Eigen::VectorXcd zero = Eigen::VectorXcd::Zero(2 * mesh.size());
  const std::vector<Vec2> pts = {{3.0, 1.0}, {-2.5, 0.5}, {0.0, -4.0}};

  const std::vector<FieldSample> field =
      evaluate_field(mesh, med, wave, zero, pts);
  for (std::size_t p = 0; p < pts.size(); ++p) {
    const CVec2 inc = wave.displacement(pts[p]);
    CHECK(field[p].displacement.x == inc.x);
    CHECK(field[p].displacement.y == inc.y);
    CHECK(field[p].intensity ==
          doctest::Approx(wave_intensity(inc)).epsilon(1e-15));
  }
}

TEST_CASE("scattered field is linear in the boundary data") {
  const Medium med = test_medium();
  const Mesh mesh = star_mesh(128);
  const int n = mesh.size();
  Eigen::VectorXcd g1(2 * n), g2(2 * n);
  for (int i = 0; i < 2 * n; ++i) {
    g1[i] = cd(std::sin(0.1 * i), std::cos(0.2 * i));
    g2[i] = cd(std::cos(0.35 * i), std::sin(0.15 * i + 0.4));
  }
  const cd a(2.0, -1.0), b(-0.5, 3.0);
  const std::vector<Vec2> pts = {{2.0, 2.0}, {-3.0, 0.2}, {0.1, 0.05}};

  const auto s1 = evaluate_scattered(mesh, med, g1, pts);
  const auto s2 = evaluate_scattered(mesh, med, g2, pts);
  const auto s12 = evaluate_scattered(mesh, med, a * g1 + b * g2, pts);
  for (std::size_t p = 0; p < pts.size(); ++p) {
    const CVec2 want{a * s1[p].x + b * s2[p].x, a * s1[p].y + b * s2[p].y};
    const double scale = cnorm(want) + 1.0;
    CHECK(std::abs(s12[p].x - want.x) <= 1e-14 * scale);
    CHECK(std::abs(s12[p].y - want.y) <= 1e-14 * scale);
  }
}

TEST_CASE("points too close to the boundary are rejected with an offset hint") {
  const Medium med = test_medium();
  const Mesh mesh = star_mesh(128);
  const Eigen::VectorXcd zero = Eigen::VectorXcd::Zero(2 * mesh.size());
  const std::vector<Vec2> on_curve = {mesh.node(7)};
  CHECK_THROWS_WITH_AS(evaluate_scattered(mesh, med, zero, on_curve),
                       doctest::Contains("offset"), std::invalid_argument);
  CHECK_THROWS_AS(
      evaluate_scattered(mesh, med, Eigen::VectorXcd::Zero(7), {{5.0, 5.0}}),
      std::invalid_argument);
}

TEST_CASE("interior null field holds and sharpens under refinement") {
  const Medium med = test_medium();
  const PlanePWave wave(med, 1.0, 0.0);
  const std::vector<Vec2> probes = circle_probes(0.3, 16);

  double max_inc = 0.0;
  for (const Vec2& p : probes)
    max_inc = std::max(max_inc, cnorm(wave.displacement(p)));

  double prev = 0.0;
  bool first = true;
  double final_residual = 0.0;
  for (int n : {400, 800, 1600}) {
    const Mesh mesh = star_mesh(n);
    const Eigen::VectorXcd u = solve_star(mesh, med, wave, 1e-10);
    const std::vector<FieldSample> field =
        evaluate_field(mesh, med, wave, u, probes);
    double max_res = 0.0;
    for (const FieldSample& s : field)
      max_res = std::max(max_res, cnorm(s.displacement));
    MESSAGE("n = ", n, ": max interior residual ", max_res);
    if (!first) CHECK(max_res * 1.5 <= prev);
    prev = max_res;
    final_residual = max_res;
    first = false;
  }
  CHECK(final_residual <= 1e-3 * max_inc);
}

TEST_CASE("scattered energy decays like a cylindrical wave") {
  const Medium med = test_medium();
  const Mesh mesh = star_mesh(800);
  const PlanePWave wave(med, 1.0, 0.0);
  const Eigen::VectorXcd u = solve_star(mesh, med, wave, 1e-8);

  // Intensity of the scattered part, maximized over directions, at two
  // radii; the r^{-1} energy law allows 30% slack on the 10/50 ratio.
  auto ring_max = [&](double radius) {
    const std::vector<Vec2> pts = circle_probes(radius, 8);
    const std::vector<CVec2> s = evaluate_scattered(mesh, med, u, pts);
    double best = 0.0;
    for (const CVec2& v : s) best = std::max(best, wave_intensity(v));
    return best;
  };
  const double near = ring_max(10.0);
  const double far = ring_max(50.0);
  MESSAGE("scattered intensity: |x|=10 -> ", near, ", |x|=50 -> ", far);
  CHECK(far <= 0.25 * near);
  CHECK(far > 0.0);
}

TEST_CASE("boundary observable: nodal extraction and intensity identity") {
  const Mesh mesh = star_mesh(64);
  const int n = mesh.size();
  Eigen::VectorXcd u(2 * n);
  for (int i = 0; i < 2 * n; ++i) u[i] = cd(0.01 * i, -0.02 * i);

  const FieldSample s = boundary_sample(mesh, u, Vec2{1.0, 0.0});
  CHECK(s.location.x == mesh.node(0).x);
  CHECK(s.displacement.x == u[0]);
  CHECK(s.displacement.y == u[n]);
  CHECK(s.intensity == doctest::Approx(std::norm(u[0]) + std::norm(u[n])));
  CHECK(s.intensity >= 0.0);
  CHECK_THROWS_AS(boundary_sample(mesh, Eigen::VectorXcd::Zero(3), Vec2{}),
                  std::invalid_argument);
}
