#pragma once

#include <Eigen/Dense>
#include <array>
#include <vector>

#include "ebem/assembly.hpp"
#include "ebem/geometry.hpp"
#include "ebem/lapack.hpp"

namespace ebem {

// Knobs of the virtual-boundary construction used to build cell bases.
struct ProxyConfig {
  // Circle radius as a multiple of the half diagonal of the cell's
  // bounding box; must stay above 1 so the circle encloses the cell.
  double radius_factor = 1.5;
  // Element count of the polygon that discretizes the circle.
  int m_prime = 64;
  // Tensor Gauss order for polygon-to-curve interaction integrals (all
  // such pairs are well separated by construction).
  int n_gauss = 6;
};

// Virtual boundary of one cell: a circle (discretized as a closed polygon)
// that encloses the cell's piece of the curve, plus the curve nodes that
// fall strictly inside the circle without belonging to the cell itself.
struct ProxySurface {
  Vec2 center;
  double radius;
  Mesh polygon;
  std::vector<int> enclosed;
};

// Builds the virtual boundary for the cell owning nodes [node_begin,
// node_end).  The bounding box covers the supports of the cell's basis
// functions (one element beyond the node range on each side).  Throws
// std::invalid_argument when radius_factor <= 1.
ProxySurface build_proxy(const Mesh& mesh, int node_begin, int node_end,
                         const ProxyConfig& config = {});

// Same geometry (center, radius, polygon) without the mesh scan for
// enclosed nodes; `enclosed` is left empty.  Callers that know which nodes
// are still active filter those themselves, which keeps the per-cell cost
// independent of the mesh size.
ProxySurface build_proxy_shell(const Mesh& mesh, int node_begin,
                               int node_end, const ProxyConfig& config = {});

// Shared-rank row and column bases of one cell.  Indexing convention used
// throughout the hierarchy: a cell carries per-component node sequences;
// its local vectors are component-major (all first components over the
// column sequence, then all second components).  The basis reconstructs
//   block(rows, cols) ~= (u[0] (+) u[1]) * block(row_skeleton,
//   col_skeleton) * (v[0] (+) v[1])
// where (+) is the block-diagonal pairing of the two components.
struct CellBasis {
  int k = 0;
  // Set when k reached the block size, i.e. nothing was compressed.
  bool saturated = false;
  std::array<std::vector<int>, 2> row_skeleton;
  std::array<std::vector<int>, 2> col_skeleton;
  std::array<Eigen::MatrixXcd, 2> u;  // each |rows[p]| x k
  std::array<Eigen::MatrixXcd, 2> v;  // each k x |cols[q]|
};

// Entry provider for the hierarchical solver: exact sub-blocks of a
// 2 n_nodes x 2 n_nodes system in component-major layout, plus per-cell
// bases.  Implementations must be thread-safe for concurrent const calls.
class BlockSource {
 public:
  virtual ~BlockSource() = default;

  virtual int n_nodes() const = 0;

  // Exact sub-block for per-component row/column node lists, laid out
  // rows[0] then rows[1] by cols[0] then cols[1].
  virtual Eigen::MatrixXcd block(
      const std::array<std::vector<int>, 2>& rows,
      const std::array<std::vector<int>, 2>& cols) const = 0;

  // Shared-rank bases for the cell owning nodes [node_begin, node_end)
  // whose current row/column sequences are given.
  virtual CellBasis cell_basis(const std::array<std::vector<int>, 2>& rows,
                               const std::array<std::vector<int>, 2>& cols,
                               int node_begin, int node_end,
                               double epsilon) const = 0;
};

// Distills the four interpolative decompositions of a cell from its two
// interaction matrices and unifies their ranks.
//   mv: interactions of outside tests against the cell's trial functions;
//       columns ordered cols[0] then cols[1].
//   mu: interactions of the cell's test functions against outside trial
//       functions; rows ordered rows[0] then rows[1].
// The column halves of mv yield v[0], v[1] and the column skeletons; the
// row halves of mu (via their conjugate transposes) yield u[0], u[1] and
// the row skeletons.  All four share k = max of the four epsilon-ranks.
CellBasis basis_from_interactions(const Eigen::MatrixXcd& mv,
                                  const Eigen::MatrixXcd& mu,
                                  const std::array<std::vector<int>, 2>& rows,
                                  const std::array<std::vector<int>, 2>& cols,
                                  double epsilon);

// Production source: entries come from the Galerkin assembler, bases from
// the virtual-boundary construction (interactions against the proxy
// polygon plus the exactly computed rows/columns of the enclosed nodes).
class AssemblerSource : public BlockSource {
 public:
  explicit AssemblerSource(const BlockAssembler& assembler,
                           const ProxyConfig& proxy = {});

  int n_nodes() const override;
  Eigen::MatrixXcd block(
      const std::array<std::vector<int>, 2>& rows,
      const std::array<std::vector<int>, 2>& cols) const override;
  CellBasis cell_basis(const std::array<std::vector<int>, 2>& rows,
                       const std::array<std::vector<int>, 2>& cols,
                       int node_begin, int node_end,
                       double epsilon) const override;

 private:
  const BlockAssembler& assembler_;
  ProxyConfig proxy_;
};

// Reference source for tests: same entries as the wrapped source, but the
// bases come from the full far field (every node outside the cell enters
// the interaction matrices explicitly).  Quadratic cost; small cases only.
class DirectSource : public BlockSource {
 public:
  explicit DirectSource(const BlockSource& entries) : entries_(entries) {}

  int n_nodes() const override { return entries_.n_nodes(); }
  Eigen::MatrixXcd block(
      const std::array<std::vector<int>, 2>& rows,
      const std::array<std::vector<int>, 2>& cols) const override {
    return entries_.block(rows, cols);
  }
  CellBasis cell_basis(const std::array<std::vector<int>, 2>& rows,
                       const std::array<std::vector<int>, 2>& cols,
                       int node_begin, int node_end,
                       double epsilon) const override;

 private:
  const BlockSource& entries_;
};

}  // namespace ebem
