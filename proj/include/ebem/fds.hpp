#pragma once

#include <Eigen/Dense>
#include <array>
#include <vector>

#include "ebem/compression.hpp"
#include "ebem/geometry.hpp"
#include "ebem/lapack.hpp"

namespace ebem {

struct FdsConfig {
  // Truncation tolerance of the low-rank bases.
  double epsilon = 1e-8;
  // Level whose compressed system is solved densely (0, 1, or 2 in
  // practice; any value below the tree depth works).
  int ell0 = 1;
};

struct FdsStats {
  // Largest rank per tree level (index = level; entries at and above the
  // dense level stay 0).
  std::vector<int> max_rank;
  // Dimension of the dense compressed system at the top level.
  int top_dim = 0;
  // Some cell reached full rank, i.e. its block was not compressed.
  bool saturated = false;
  // Wall time of the recursive reduction (bases, diagonal factorizations,
  // reduced blocks) and of the dense factorization at the top.
  double upward_seconds = 0.0;
  double top_factor_seconds = 0.0;
  // CPU time summed over cells spent building bases; a subset of
  // upward_seconds on one worker, possibly larger under parallelism.
  double basis_cpu_seconds = 0.0;
};

struct FdsSolveTiming {
  double upward_seconds = 0.0;
  double top_seconds = 0.0;
  double downward_seconds = 0.0;
};

// Hierarchical direct solver.  Construction runs the right-hand-side
// independent part once: per-cell bases, diagonal factorizations, the
// recursive reduction, and the dense factorization of the top-level
// system.  Each solve() then only pushes right-hand sides up the tree,
// solves the small top system, and expands back down, so batches of
// right-hand sides amortize the construction.
//
// Every matrix entry is obtained through the BlockSource; the inverse of
// the full system is never formed.  All internal linear algebra is pinned
// to one BLAS thread and cells are processed independently, which makes
// solutions bitwise independent of the worker count.
class FdsSolver {
 public:
  FdsSolver(const BlockSource& source, const ClusterTree& tree,
            const FdsConfig& config = {});

  Eigen::MatrixXcd solve(const Eigen::MatrixXcd& rhs,
                         FdsSolveTiming* timing = nullptr) const;
  Eigen::VectorXcd solve(const Eigen::VectorXcd& rhs,
                         FdsSolveTiming* timing = nullptr) const;

  const FdsStats& stats() const { return stats_; }
  const ClusterTree& tree() const { return tree_; }
  int rank_of(int cell) const { return cells_[cell].k; }

 private:
  struct CellData {
    std::array<std::vector<int>, 2> jrow, jcol;  // current node sequences
    std::array<std::vector<int>, 2> srow, scol;  // skeleton subsequences
    int nloc = 0;  // per-component sequence length
    int k = 0;
    std::array<Eigen::MatrixXcd, 2> v;  // k x nloc each
    LuFactor lu;                        // diagonal block, 2 nloc square
    Eigen::MatrixXcd ainv_u;            // 2 nloc x 2k
    Eigen::MatrixXcd atilde;            // 2k x 2k
  };

  // Diagonal block of a non-leaf cell: children's reduced blocks on the
  // same-child positions, exact skeleton cross blocks elsewhere.
  Eigen::MatrixXcd reduced_diagonal(int cell) const;
  void build();

  const BlockSource& source_;
  ClusterTree tree_;
  FdsConfig config_;
  std::vector<CellData> cells_;
  std::vector<int> top_cells_;
  std::vector<int> top_offset_;
  LuFactor top_lu_;
  FdsStats stats_;
};

}  // namespace ebem
