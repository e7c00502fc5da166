#include "ebem/fds.hpp"

#include <stdexcept>
#include <string>

namespace ebem {

namespace {

std::vector<int> iota_nodes(int begin, int end) {
  std::vector<int> v(static_cast<std::size_t>(end - begin));
  for (int i = begin; i < end; ++i) v[static_cast<std::size_t>(i - begin)] = i;
  return v;
}

}  // namespace

FdsSolver::FdsSolver(const BlockSource& source, const ClusterTree& tree,
                     const FdsConfig& config)
    : source_(source), tree_(tree), config_(config) {
  if (tree_.n_nodes() != source_.n_nodes()) {
    throw std::invalid_argument("FdsSolver: tree and source node counts differ");
  }
  if (config_.ell0 < 0 || config_.ell0 >= tree_.depth()) {
    throw std::invalid_argument(
        "FdsSolver: dense level must lie strictly above the leaves (got " +
        std::to_string(config_.ell0) + " with depth " +
        std::to_string(tree_.depth()) + ")");
  }
  build();
}

Eigen::MatrixXcd FdsSolver::reduced_diagonal(int cell) const {
  const CellData& c1 = cells_[static_cast<std::size_t>(ClusterTree::child1(cell))];
  const CellData& c2 = cells_[static_cast<std::size_t>(ClusterTree::child2(cell))];
  const int k1 = c1.k;
  const int k2 = c2.k;
  const int np = k1 + k2;
  const Eigen::MatrixXcd cross12 = source_.block(c1.srow, c2.scol);
  const Eigen::MatrixXcd cross21 = source_.block(c2.srow, c1.scol);
  Eigen::MatrixXcd a(2 * np, 2 * np);
  for (int p = 0; p < 2; ++p) {
    for (int q = 0; q < 2; ++q) {
      a.block(p * np, q * np, k1, k1) = c1.atilde.block(p * k1, q * k1, k1, k1);
      a.block(p * np + k1, q * np + k1, k2, k2) =
          c2.atilde.block(p * k2, q * k2, k2, k2);
      a.block(p * np, q * np + k1, k1, k2) =
          cross12.block(p * k1, q * k2, k1, k2);
      a.block(p * np + k1, q * np, k2, k1) =
          cross21.block(p * k2, q * k1, k2, k1);
    }
  }
  return a;
}

void FdsSolver::build() {
  const BlasThreadGuard blas_guard(1);
  const int depth = tree_.depth();
  cells_.resize(static_cast<std::size_t>(tree_.n_cells()));
  stats_.max_rank.assign(static_cast<std::size_t>(depth + 1), 0);

  for (int cell = ClusterTree::first_cell(depth); cell <= ClusterTree::last_cell(depth);
       ++cell) {
    CellData& c = cells_[static_cast<std::size_t>(cell)];
    const std::vector<int> range =
        iota_nodes(tree_.leaf_begin(cell), tree_.leaf_end(cell));
    c.jrow = {range, range};
    c.jcol = {range, range};
    c.nloc = static_cast<int>(range.size());
  }

  Stopwatch watch;
  for (int level = depth; level > config_.ell0; --level) {
    const int first = ClusterTree::first_cell(level);
    const int last = ClusterTree::last_cell(level);
#pragma omp parallel for schedule(dynamic)
    for (int cell = first; cell <= last; ++cell) {
      CellData& c = cells_[static_cast<std::size_t>(cell)];
      Stopwatch basis_watch;
      const CellBasis basis = source_.cell_basis(
          c.jrow, c.jcol, tree_.cell_begin(cell), tree_.cell_end(cell),
          config_.epsilon);
      const double basis_sec = basis_watch.seconds();
      c.k = basis.k;
      c.srow = basis.row_skeleton;
      c.scol = basis.col_skeleton;
      c.v = basis.v;

      Eigen::MatrixXcd diag = level == depth ? source_.block(c.jrow, c.jcol)
                                             : reduced_diagonal(cell);
      c.lu = LuFactor(std::move(diag));

      Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(2 * c.nloc, 2 * c.k);
      u.topLeftCorner(c.nloc, c.k) = basis.u[0];
      u.bottomRightCorner(c.nloc, c.k) = basis.u[1];
      c.ainv_u = c.lu.solve(std::move(u));

      Eigen::MatrixXcd w(2 * c.k, 2 * c.k);
      w.topRows(c.k) = c.v[0] * c.ainv_u.topRows(c.nloc);
      w.bottomRows(c.k) = c.v[1] * c.ainv_u.bottomRows(c.nloc);
      c.atilde = LuFactor(std::move(w)).inverse();

#pragma omp critical
      {
        stats_.max_rank[static_cast<std::size_t>(level)] =
            std::max(stats_.max_rank[static_cast<std::size_t>(level)], c.k);
        stats_.saturated = stats_.saturated || basis.saturated;
        stats_.basis_cpu_seconds += basis_sec;
      }
    }
    // Parent sequences: concatenated child skeletons, component by
    // component.
    for (int cell = ClusterTree::first_cell(level - 1);
         cell <= ClusterTree::last_cell(level - 1); ++cell) {
      CellData& p = cells_[static_cast<std::size_t>(cell)];
      const CellData& c1 = cells_[static_cast<std::size_t>(ClusterTree::child1(cell))];
      const CellData& c2 = cells_[static_cast<std::size_t>(ClusterTree::child2(cell))];
      for (int comp = 0; comp < 2; ++comp) {
        p.jrow[comp] = c1.srow[comp];
        p.jrow[comp].insert(p.jrow[comp].end(), c2.srow[comp].begin(),
                            c2.srow[comp].end());
        p.jcol[comp] = c1.scol[comp];
        p.jcol[comp].insert(p.jcol[comp].end(), c2.scol[comp].begin(),
                            c2.scol[comp].end());
      }
      p.nloc = c1.k + c2.k;
    }
  }
  stats_.upward_seconds = watch.seconds();

  // Dense system over the cells of the target level.
  watch.reset();
  top_cells_ = iota_nodes(ClusterTree::first_cell(config_.ell0),
                          ClusterTree::last_cell(config_.ell0) + 1);
  top_offset_.assign(top_cells_.size() + 1, 0);
  for (std::size_t i = 0; i < top_cells_.size(); ++i) {
    top_offset_[i + 1] =
        top_offset_[i] + 2 * cells_[static_cast<std::size_t>(top_cells_[i])].nloc;
  }
  const int dim = top_offset_.back();
  stats_.top_dim = dim;
  Eigen::MatrixXcd top = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::size_t i = 0; i < top_cells_.size(); ++i) {
    const CellData& ci = cells_[static_cast<std::size_t>(top_cells_[i])];
    for (std::size_t j = 0; j < top_cells_.size(); ++j) {
      const CellData& cj = cells_[static_cast<std::size_t>(top_cells_[j])];
      top.block(top_offset_[i], top_offset_[j], 2 * ci.nloc, 2 * cj.nloc) =
          i == j ? reduced_diagonal(top_cells_[i])
                 : source_.block(ci.jrow, cj.jcol);
    }
  }
  top_lu_ = LuFactor(std::move(top));
  stats_.top_factor_seconds = watch.seconds();
}

Eigen::MatrixXcd FdsSolver::solve(const Eigen::MatrixXcd& rhs,
                                  FdsSolveTiming* timing) const {
  const BlasThreadGuard blas_guard(1);
  const int n = tree_.n_nodes();
  if (rhs.rows() != 2 * n) {
    throw std::invalid_argument("FdsSolver: right-hand side has " +
                                std::to_string(rhs.rows()) + " rows, need " +
                                std::to_string(2 * n));
  }
  const int m = static_cast<int>(rhs.cols());
  const int depth = tree_.depth();
  const std::size_t n_cells = static_cast<std::size_t>(tree_.n_cells());
  std::vector<Eigen::MatrixXcd> f(n_cells), ftilde(n_cells), ainvf(n_cells),
      x(n_cells);

  Stopwatch watch;
  // Upward: per-cell reduced right-hand sides, children interleaved into
  // parents component-major.
  for (int cell = ClusterTree::first_cell(depth);
       cell <= ClusterTree::last_cell(depth); ++cell) {
    const int a = tree_.leaf_begin(cell);
    const int size = tree_.leaf_size();
    Eigen::MatrixXcd& fi = f[static_cast<std::size_t>(cell)];
    fi.resize(2 * size, m);
    fi.topRows(size) = rhs.middleRows(a, size);
    fi.bottomRows(size) = rhs.middleRows(n + a, size);
  }
  for (int level = depth; level > config_.ell0; --level) {
    const int first = ClusterTree::first_cell(level);
    const int last = ClusterTree::last_cell(level);
#pragma omp parallel for schedule(dynamic)
    for (int cell = first; cell <= last; ++cell) {
      const CellData& c = cells_[static_cast<std::size_t>(cell)];
      const std::size_t ci = static_cast<std::size_t>(cell);
      ainvf[ci] = c.lu.solve(f[ci]);
      Eigen::MatrixXcd vf(2 * c.k, m);
      vf.topRows(c.k) = c.v[0] * ainvf[ci].topRows(c.nloc);
      vf.bottomRows(c.k) = c.v[1] * ainvf[ci].bottomRows(c.nloc);
      ftilde[ci] = c.atilde * vf;
    }
    for (int cell = ClusterTree::first_cell(level - 1);
         cell <= ClusterTree::last_cell(level - 1); ++cell) {
      const std::size_t c1 = static_cast<std::size_t>(ClusterTree::child1(cell));
      const std::size_t c2 = static_cast<std::size_t>(ClusterTree::child2(cell));
      const int k1 = cells_[c1].k;
      const int k2 = cells_[c2].k;
      Eigen::MatrixXcd& fp = f[static_cast<std::size_t>(cell)];
      fp.resize(2 * (k1 + k2), m);
      fp.middleRows(0, k1) = ftilde[c1].topRows(k1);
      fp.middleRows(k1, k2) = ftilde[c2].topRows(k2);
      fp.middleRows(k1 + k2, k1) = ftilde[c1].bottomRows(k1);
      fp.middleRows(2 * k1 + k2, k2) = ftilde[c2].bottomRows(k2);
    }
  }
  if (timing) timing->upward_seconds = watch.seconds();

  // Dense solve at the top.
  watch.reset();
  Eigen::MatrixXcd ftop(top_offset_.back(), m);
  for (std::size_t i = 0; i < top_cells_.size(); ++i) {
    const std::size_t ci = static_cast<std::size_t>(top_cells_[i]);
    ftop.middleRows(top_offset_[i], f[ci].rows()) = f[ci];
  }
  const Eigen::MatrixXcd xtop = top_lu_.solve(std::move(ftop));
  for (std::size_t i = 0; i < top_cells_.size(); ++i) {
    const std::size_t ci = static_cast<std::size_t>(top_cells_[i]);
    x[ci] = xtop.middleRows(top_offset_[i],
                            2 * cells_[ci].nloc);
  }
  if (timing) timing->top_seconds = watch.seconds();

  // Downward: split the parent solution into child reduced solutions, then
  // expand each child.
  watch.reset();
  for (int level = config_.ell0; level < depth; ++level) {
    const int first = ClusterTree::first_cell(level);
    const int last = ClusterTree::last_cell(level);
#pragma omp parallel for schedule(dynamic)
    for (int cell = first; cell <= last; ++cell) {
      const std::size_t ci = static_cast<std::size_t>(cell);
      for (int side = 0; side < 2; ++side) {
        const int child = side == 0 ? ClusterTree::child1(cell)
                                    : ClusterTree::child2(cell);
        const std::size_t cc = static_cast<std::size_t>(child);
        const CellData& c = cells_[cc];
        const int k1 = cells_[static_cast<std::size_t>(ClusterTree::child1(cell))].k;
        const int k2 = cells_[static_cast<std::size_t>(ClusterTree::child2(cell))].k;
        Eigen::MatrixXcd y(2 * c.k, m);
        const int row0 = side == 0 ? 0 : k1;
        y.topRows(c.k) = x[ci].middleRows(row0, c.k);
        y.bottomRows(c.k) = x[ci].middleRows(k1 + k2 + row0, c.k);
        x[cc] = ainvf[cc] + c.ainv_u * (c.atilde * y - ftilde[cc]);
      }
    }
  }
  if (timing) timing->downward_seconds = watch.seconds();

  Eigen::MatrixXcd out(2 * n, m);
  for (int cell = ClusterTree::first_cell(depth);
       cell <= ClusterTree::last_cell(depth); ++cell) {
    const int a = tree_.leaf_begin(cell);
    const int size = tree_.leaf_size();
    const Eigen::MatrixXcd& xi = x[static_cast<std::size_t>(cell)];
    out.middleRows(a, size) = xi.topRows(size);
    out.middleRows(n + a, size) = xi.bottomRows(size);
  }
  return out;
}

Eigen::VectorXcd FdsSolver::solve(const Eigen::VectorXcd& rhs,
                                  FdsSolveTiming* timing) const {
  return Eigen::VectorXcd(solve(Eigen::MatrixXcd(rhs), timing));
}

}  // namespace ebem
