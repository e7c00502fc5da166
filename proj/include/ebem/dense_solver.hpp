#pragma once

#include <Eigen/Dense>

#include "ebem/assembly.hpp"
#include "ebem/lapack.hpp"

namespace ebem {

struct ConvStats {
  double assemble_seconds = 0.0;
  double factor_seconds = 0.0;
  double rcond = 1.0;
  double min_pivot = 0.0;
  // Set when the factored matrix is close to singular; the solution is
  // still returned but may be inaccurate (this happens for the plain
  // double-layer variant near the interior resonance frequencies).
  bool condition_warning = false;
};

// Reference solver: assembles the full Galerkin matrix and factors it once
// with partial-pivoted LU; solves share the factorization, so a batch of
// right-hand sides costs one factorization plus cheap triangular solves.
class ConvSolver {
 public:
  // alpha is the coupling of the combined equation; pass
  // Medium::default_coupling() for the standard choice or 0 for the plain
  // double-layer variant.
  ConvSolver(const Mesh& mesh, const Medium& medium, cd alpha,
             const AssemblyConfig& config = {});

  const BlockAssembler& assembler() const { return assembler_; }
  const ConvStats& stats() const { return stats_; }
  int size() const { return 2 * assembler_.n_nodes(); }

  // Columns are independent right-hand sides.
  Eigen::MatrixXcd solve(const Eigen::MatrixXcd& rhs) const;
  Eigen::VectorXcd solve(const Eigen::VectorXcd& rhs) const;

 private:
  BlockAssembler assembler_;
  LuFactor lu_;
  ConvStats stats_;
};

}  // namespace ebem
