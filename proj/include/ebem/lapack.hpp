#pragma once

#include <Eigen/Dense>
#include <vector>

#include "ebem/types.hpp"

namespace ebem {

// Scoped override of the BLAS worker count (OpenBLAS).  The hierarchical
// solver pins BLAS to one thread and parallelizes over cells instead, which
// keeps its results bitwise independent of the machine's thread count.
class BlasThreadGuard {
 public:
  explicit BlasThreadGuard(int n_threads);
  ~BlasThreadGuard();
  BlasThreadGuard(const BlasThreadGuard&) = delete;
  BlasThreadGuard& operator=(const BlasThreadGuard&) = delete;

 private:
  int previous_;
};

// Partial-pivoted LU of a square complex matrix with reusable solves.
// Throws std::runtime_error when a pivot is exactly zero (singular matrix),
// naming the pivot index.
class LuFactor {
 public:
  LuFactor() = default;
  explicit LuFactor(Eigen::MatrixXcd a);

  int size() const { return static_cast<int>(lu_.rows()); }
  bool empty() const { return lu_.rows() == 0; }
  // Smallest |U_ii| of the factored matrix.
  double min_pivot() const;
  // Reciprocal condition number estimate in the 1-norm.
  double rcond() const;

  // Solves A x = b against the stored factors; columns are independent
  // right-hand sides.
  Eigen::MatrixXcd solve(Eigen::MatrixXcd rhs) const;
  Eigen::VectorXcd solve(Eigen::VectorXcd rhs) const;
  Eigen::MatrixXcd inverse() const;

 private:
  Eigen::MatrixXcd lu_;
  std::vector<int> ipiv_;
  double norm1_ = 0.0;  // 1-norm of the original matrix, for rcond()
};

// Skeleton form of a low-rank approximation: `coeff` reconstructs every
// column (or row) of the decomposed matrix from the `rank` columns listed
// in `skeleton`, and restricted to those columns it is the identity.
struct Interpolation {
  int rank = 0;
  std::vector<int> skeleton;
  Eigen::MatrixXcd coeff;  // rank x n_cols of the decomposed matrix
};

// Column-pivoted QR factorization of a complex matrix, kept around so that
// several truncation ranks can be realized from one factorization.
class Cpqr {
 public:
  explicit Cpqr(Eigen::MatrixXcd m);

  int max_rank() const;
  // |R_kk| of the pivoted triangular factor, k < max_rank().
  double pivot_magnitude(int k) const;
  // Smallest k such that |R_kk| <= epsilon * |R_00| (so the discarded tail
  // is below epsilon relative to the largest pivot), capped at max_rank().
  // Throws std::invalid_argument for epsilon <= 0.
  int eps_rank(double epsilon) const;
  // Skeleton + coefficient form at rank k.  coeff solves the leading
  // triangle against the remaining columns, so k must not exceed the last
  // nonzero pivot.
  Interpolation interpolation(int k) const;

 private:
  Eigen::MatrixXcd qr_;
  std::vector<int> jpvt_;  // zero-based pivot order
};

}  // namespace ebem
