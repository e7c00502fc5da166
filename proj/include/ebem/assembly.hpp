#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstddef>
#include <vector>

#include "ebem/geometry.hpp"
#include "ebem/kernels.hpp"
#include "ebem/medium.hpp"
#include "ebem/quadrature.hpp"
#include "ebem/scalars.hpp"
#include "ebem/types.hpp"

namespace ebem {

// Quadrature knobs.  Coincident pairs integrate in closed form; adjacent
// pairs need Gauss only across the corner direction; separated pairs use a
// distance-tiered tensor rule.  `refine` scales every node count up, which
// the convergence tests use to estimate quadrature error.
struct AssemblyConfig {
  int corner_nodes = 10;
  int far_nodes = 4;  // base tensor order for well-separated pairs
  int rhs_nodes = 8;
  double refine = 1.0;
  // Refuse to allocate a dense matrix bigger than this.
  std::size_t max_dense_bytes = std::size_t(4) << 30;

  int scaled(int n) const { return int(n * refine + 0.5); }
};

// Galerkin integrals of one (test element, trial element) pair against the
// four combinations of the two linear shape functions on each element.
// Indexing: [test local][trial local][row component][column component].
// D holds the traction-kernel part, N the regularized hypersingular part
// (already containing its integrated-by-parts static piece), M the overlap
// of the shape functions themselves (nonzero only for coincident pairs).
struct PairBundle {
  cd D[2][2][2][2];
  cd N[2][2][2][2];
  double M[2][2];
};

// Integrates kernel pairs on one mesh.  Thread-safe (const methods keep no
// mutable state).
class PairIntegrator {
 public:
  PairIntegrator(const Mesh& mesh, const Medium& medium,
                 const AssemblyConfig& config = {});

  PairBundle bundle(int ea, int eb) const;
  const KernelScalars& scalars() const { return scalars_; }
  const Mesh& mesh() const { return mesh_; }

 private:
  void coincident(int e, PairBundle& out) const;
  // Shared corner between the two elements; `tx`/`ty` point away from it.
  void adjacent(int ea, int eb, PairBundle& out) const;
  void separated(int ea, int eb, PairBundle& out) const;

  const Mesh& mesh_;
  KernelScalars scalars_;
  AssemblyConfig config_;
  double kappa_;  // r * d1_static
  double ccon_;   // r * d3_static / (-8)
};

// Assembles the Galerkin matrix of the combined boundary integral operator
//   A = D + I/2 + alpha N
// over piecewise-linear densities on the closed curve, in component-major
// ordering (all first components, then all second components).
class BlockAssembler {
 public:
  BlockAssembler(const Mesh& mesh, const Medium& medium, cd alpha,
                 const AssemblyConfig& config = {});

  int n_nodes() const { return mesh_.size(); }
  cd alpha() const { return alpha_; }
  const PairIntegrator& integrator() const { return integrator_; }
  const Mesh& mesh() const { return mesh_; }

  // Full matrix.  Bundles are computed in parallel but accumulated in a
  // fixed serial order, so the result is bitwise independent of the thread
  // count and sub-blocks match true_block() exactly.
  Eigen::MatrixXcd dense() const;

  // Sub-block for the given row/column node lists, one list per component.
  // Row order in the result: rows[0] then rows[1]; same for columns.
  Eigen::MatrixXcd true_block(const std::array<std::vector<int>, 2>& rows,
                              const std::array<std::vector<int>, 2>& cols) const;

  // Right-hand side u^inc + alpha t^inc tested against the basis.  Any wave
  // type exposing displacement(x) and traction(x, n) works.
  template <class Wave>
  Eigen::VectorXcd rhs(const Wave& wave) const {
    const int n = mesh_.size();
    Eigen::VectorXcd b = Eigen::VectorXcd::Zero(2 * n);
    const GaussRule& rule = gauss_rule(config_.scaled(config_.rhs_nodes));
    for (int e = 0; e < n; ++e) {
      const double h = mesh_.length(e);
      const Vec2& nrm = mesh_.normal(e);
      for (std::size_t k = 0; k < rule.x.size(); ++k) {
        const double s = rule.x[k];
        const Vec2 x = mesh_.point_on(e, s);
        const CVec2 u = wave.displacement(x);
        const CVec2 t = wave.traction(x, nrm);
        const cd v1 = u.x + alpha_ * t.x;
        const cd v2 = u.y + alpha_ * t.y;
        const double wh = rule.w[k] * h;
        const double p[2] = {(1.0 - s) * wh, s * wh};
        for (int a = 0; a < 2; ++a) {
          const int ga = (e + a) % n;
          b(ga) += p[a] * v1;
          b(n + ga) += p[a] * v2;
        }
      }
    }
    return b;
  }

  // Same for a batch of incidence angles (column per angle).
  Eigen::MatrixXcd rhs_batch(const Medium& medium,
                             const std::vector<double>& angles_rad,
                             double amplitude) const;

 private:
  void scatter_bundle(int ea, int eb, const PairBundle& b,
                      Eigen::MatrixXcd& a) const;

  const Mesh& mesh_;
  PairIntegrator integrator_;
  cd alpha_;
  AssemblyConfig config_;
};

// Galerkin cross-interaction between dofs of two disjoint curves with the
// plain pointwise kernel D + alpha N (no identity, no integration by parts;
// the curves never touch, so nothing is singular).  Rows: test dofs on
// `test_mesh` restricted to `rows`; columns likewise on `src_mesh`.
Eigen::MatrixXcd kernel_cross_block(
    const Mesh& test_mesh, const std::array<std::vector<int>, 2>& rows,
    const Mesh& src_mesh, const std::array<std::vector<int>, 2>& cols,
    const KernelScalars& scalars, cd alpha, int n_gauss);

// Shape-function overlap (mass) matrix in component-major layout: the
// scalar mass block repeated for both components, zero across components.
Eigen::MatrixXd mass_dense(const Mesh& mesh);

// Zero-frequency operator matrices.  These back the classical identities
// the test suite checks (jump relation of the traction operator on constant
// fields, rigid-motion annihilation and symmetry of the hypersingular
// operator); they are not used by the production solver path.
Eigen::MatrixXd static_double_layer_dense(const Mesh& mesh,
                                          const Medium& medium,
                                          const AssemblyConfig& config = {});
Eigen::MatrixXd static_hypersingular_dense(const Mesh& mesh,
                                           const Medium& medium,
                                           const AssemblyConfig& config = {});

}  // namespace ebem
