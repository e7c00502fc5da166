// LAPACK wrappers (LU, pivoted QR interpolation) and the dense reference
// solver: residuals, determinism, batching, and error paths.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "doctest.h"
#include "ebem/dense_solver.hpp"
#include "ebem/geometry.hpp"
#include "ebem/lapack.hpp"
#include "ebem/medium.hpp"
#include "ebem/types.hpp"

using namespace ebem;

namespace {

Medium test_medium() { return Medium::from_lame(1.0, 1.0, 1.0, 2.0); }

Mesh circle_mesh(int n) {
  StarShape s;
  s.a = 0.0;
  return Mesh::star(n, s);
}

Eigen::MatrixXcd random_matrix(int rows, int cols, unsigned seed) {
  std::mt19937 gen(seed);
  std::normal_distribution<double> dist(0.0, 1.0);
  Eigen::MatrixXcd m(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) m(i, j) = cd(dist(gen), dist(gen));
  return m;
}

// Matrix with prescribed singular values, for rank-revealing tests.
Eigen::MatrixXcd with_spectrum(int rows, int cols,
                               const Eigen::VectorXd& sigma, unsigned seed) {
  const Eigen::MatrixXcd a = random_matrix(rows, cols, seed);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(
      a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  Eigen::VectorXd s = Eigen::VectorXd::Zero(svd.singularValues().size());
  s.head(sigma.size()) = sigma;
  return svd.matrixU() * s.asDiagonal() * svd.matrixV().adjoint();
}

}  // namespace

TEST_CASE("LU: identity and random systems solve to machine accuracy") {
  {
    const Eigen::MatrixXcd eye = Eigen::MatrixXcd::Identity(7, 7);
    const LuFactor lu(eye);
    const Eigen::VectorXcd f = random_matrix(7, 1, 11).col(0);
    CHECK((lu.solve(f) - f).norm() == 0.0);
  }
  const int n = 50;
  Eigen::MatrixXcd a = random_matrix(n, n, 23);
  a += 2.0 * std::sqrt(double(n)) * Eigen::MatrixXcd::Identity(n, n);
  const LuFactor lu(a);
  const Eigen::MatrixXcd f = random_matrix(n, 3, 29);
  const Eigen::MatrixXcd x = lu.solve(f);
  CHECK((a * x - f).norm() / f.norm() <= 1e-12);
  CHECK(lu.size() == n);
  CHECK(lu.min_pivot() > 0.0);
  CHECK(lu.rcond() > 1e-6);
  // Inverse route agrees with the solve route.
  CHECK((lu.inverse() * f - x).norm() / x.norm() <= 1e-11);
}

TEST_CASE("LU: degenerate sizes and failure modes") {
  const LuFactor empty;
  CHECK(empty.empty());
  const LuFactor zero_dim{Eigen::MatrixXcd(0, 0)};
  CHECK(zero_dim.size() == 0);
  CHECK(zero_dim.solve(Eigen::MatrixXcd(0, 4)).cols() == 4);
  CHECK(zero_dim.rcond() == 1.0);

  Eigen::MatrixXcd singular = Eigen::MatrixXcd::Zero(4, 4);
  singular(0, 0) = 1.0;
  singular(1, 1) = 1.0;
  singular(2, 2) = 1.0;  // last row/column identically zero
  CHECK_THROWS_AS(LuFactor{singular}, std::runtime_error);

  const LuFactor lu(Eigen::MatrixXcd::Identity(3, 3));
  CHECK_THROWS_AS(lu.solve(Eigen::MatrixXcd(4, 1)), std::invalid_argument);

  // Nearly singular: factorization succeeds but the condition estimate
  // collapses, which is what the resonance diagnostics key off.
  Eigen::MatrixXcd near = Eigen::MatrixXcd::Identity(5, 5);
  near(4, 4) = 1e-15;
  const LuFactor lu_near(near);
  CHECK(lu_near.rcond() < 1e-12);
}

TEST_CASE("pivoted QR: exact ranks on rank-one and zero matrices") {
  Eigen::MatrixXcd u = random_matrix(40, 1, 5);
  Eigen::MatrixXcd v = random_matrix(1, 30, 7);
  const Eigen::MatrixXcd m = u * v;
  const Cpqr qr(m);
  const int k = qr.eps_rank(1e-8);
  CHECK(k == 1);
  const Interpolation id = qr.interpolation(k);
  REQUIRE(id.rank == 1);
  Eigen::MatrixXcd skel(m.rows(), 1);
  skel.col(0) = m.col(id.skeleton[0]);
  CHECK((m - skel * id.coeff).norm() <= 1e-13 * m.norm());

  const Cpqr qz(Eigen::MatrixXcd::Zero(12, 9));
  CHECK(qz.eps_rank(1e-8) == 0);
  const Interpolation empty = qz.interpolation(0);
  CHECK(empty.rank == 0);
  CHECK(empty.skeleton.empty());
  CHECK(empty.coeff.rows() == 0);
  CHECK_THROWS_AS(qz.eps_rank(0.0), std::invalid_argument);
  CHECK_THROWS_AS(qz.eps_rank(-1.0), std::invalid_argument);
}

TEST_CASE("pivoted QR: interpolation error tracks the singular values") {
  const int rows = 100, cols = 60;
  Eigen::VectorXd sigma(40);
  for (int j = 0; j < sigma.size(); ++j) sigma[j] = std::pow(10.0, -0.5 * j);
  const Eigen::MatrixXcd m = with_spectrum(rows, cols, sigma, 31);

  // Truncated-SVD oracle: best possible rank-k error.
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const Eigen::VectorXd sv = svd.singularValues();

  const double eps = 1e-8;
  const Cpqr qr(m);
  const int k = qr.eps_rank(eps);
  CHECK(k >= 1);
  CHECK(k <= std::min(rows, cols));
  const Interpolation id = qr.interpolation(k);
  Eigen::MatrixXcd skel(rows, k);
  for (int j = 0; j < k; ++j) skel.col(j) = m.col(id.skeleton[j]);
  const double err = (m - skel * id.coeff).norm();
  CHECK(err <= 10.0 * eps * m.norm());
  // Not wildly worse than the optimal rank-k approximation.
  const double best = (k < sv.size()) ? sv[k] : 0.0;
  CHECK(err <= 100.0 * (best + 1e-16) + 10.0 * eps * m.norm());

  // The coefficient matrix restricted to the skeleton columns is the
  // identity: skeleton columns are reproduced verbatim.
  for (int j = 0; j < k; ++j) {
    Eigen::VectorXcd e = id.coeff.col(id.skeleton[j]);
    e[j] -= 1.0;
    CHECK(e.norm() <= 1e-13);
  }
}

TEST_CASE("pivoted QR: determinism and skeleton subset structure") {
  const Eigen::MatrixXcd m = random_matrix(37, 22, 77);
  const Cpqr a(m), b(m);
  const int k = a.eps_rank(1e-6);
  CHECK(k == b.eps_rank(1e-6));
  const Interpolation ia = a.interpolation(k), ib = b.interpolation(k);
  CHECK(ia.skeleton == ib.skeleton);
  CHECK((ia.coeff - ib.coeff).norm() == 0.0);
  for (int idx : ia.skeleton) {
    CHECK(idx >= 0);
    CHECK(idx < 22);
  }
  // Pivot magnitudes are non-increasing.
  for (int j = 1; j < a.max_rank(); ++j)
    CHECK(a.pivot_magnitude(j) <= a.pivot_magnitude(j - 1) * (1 + 1e-12));
}

TEST_CASE("dense solver: residual, determinism, and batched right-hand sides") {
  const Medium med = test_medium();
  const Mesh mesh = circle_mesh(200);
  const ConvSolver solver(mesh, med, med.default_coupling());
  CHECK(solver.size() == 400);
  CHECK(solver.stats().rcond > 1e-10);
  CHECK_FALSE(solver.stats().condition_warning);
  CHECK(solver.stats().assemble_seconds > 0.0);
  CHECK(solver.stats().factor_seconds > 0.0);

  const PlanePWave wave(med, 1.0, 0.0);
  const Eigen::VectorXcd f = solver.assembler().rhs(wave);
  const Eigen::VectorXcd x = solver.solve(f);
  const Eigen::MatrixXcd a = solver.assembler().dense();
  CHECK((a * x - f).norm() / f.norm() <= 1e-11);

  // Same data in, bit-identical solution out.
  const ConvSolver again(mesh, med, med.default_coupling());
  CHECK((again.solve(f) - x).norm() == 0.0);

  // A batch solve matches column-by-column solves to near machine accuracy.
  const std::vector<double> angles = {0.0, 0.7, 2.1};
  const Eigen::MatrixXcd batch = solver.assembler().rhs_batch(med, angles, 1.0);
  const Eigen::MatrixXcd xs = solver.solve(batch);
  for (int j = 0; j < 3; ++j) {
    const Eigen::VectorXcd one = solver.solve(Eigen::VectorXcd(batch.col(j)));
    CHECK((xs.col(j) - one).norm() <= 1e-14 * one.norm());
  }
}

TEST_CASE("dense solver: system matrix is affine in the coupling parameter") {
  const Medium med = test_medium();
  const Mesh mesh = circle_mesh(64);
  const BlockAssembler a0(mesh, med, cd(0.0, 0.0));
  const BlockAssembler a1(mesh, med, cd(1.0, 0.0));
  const cd alpha(0.3, 0.7);
  const BlockAssembler ax(mesh, med, alpha);
  const Eigen::MatrixXcd m0 = a0.dense();
  const Eigen::MatrixXcd slope = a1.dense() - m0;
  const Eigen::MatrixXcd predicted = m0 + alpha * slope;
  CHECK((ax.dense() - predicted).norm() <= 1e-13 * ax.dense().norm());

  // With coupling switched off the right-hand side carries no traction term:
  // a synthetic field with zero displacement must produce a zero load.
  struct TractionOnly {
    CVec2 displacement(const Vec2&) const { return {}; }
    CVec2 traction(const Vec2&, const Vec2& n) const {
      return CVec2{cd(n.x), cd(n.y)};
    }
  };
  CHECK(a0.rhs(TractionOnly{}).norm() == 0.0);
  CHECK(ax.rhs(TractionOnly{}).norm() > 0.0);
}
