#include "ebem/compression.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ebem {

namespace {

// Pivot magnitudes below this fraction of the leading pivot are treated as
// numerical noise: rank unification never pushes an interpolation past this
// floor, because the triangular solve behind the coefficients would blow up.
constexpr double kPivotFloor = 1e-14;

std::vector<int> iota_nodes(int begin, int end) {
  std::vector<int> v(static_cast<std::size_t>(end - begin));
  for (int i = begin; i < end; ++i) v[static_cast<std::size_t>(i - begin)] = i;
  return v;
}

}  // namespace

ProxySurface build_proxy(const Mesh& mesh, int node_begin, int node_end,
                         const ProxyConfig& config) {
  if (config.radius_factor <= 1.0) {
    throw std::invalid_argument(
        "build_proxy: radius_factor must exceed 1 so the circle encloses "
        "the cell");
  }
  if (config.m_prime < 3) {
    throw std::invalid_argument("build_proxy: polygon needs >= 3 nodes");
  }
  const int n = mesh.size();
  if (node_begin < 0 || node_end > n || node_begin >= node_end) {
    throw std::invalid_argument("build_proxy: bad node range");
  }
  // Bounding box of the cell's basis supports: the hat of node g lives on
  // elements g-1 and g, so the supports of nodes [begin, end) span the
  // polyline through nodes begin-1 .. end (inclusive), modulo wrap.
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  for (int g = node_begin - 1; g <= node_end; ++g) {
    const Vec2& p = mesh.node((g % n + n) % n);
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  const Vec2 center{0.5 * (xmin + xmax), 0.5 * (ymin + ymax)};
  const double half_diag = 0.5 * std::hypot(xmax - xmin, ymax - ymin);
  const double radius = config.radius_factor * std::max(half_diag, 1e-300);

  std::vector<Vec2> pts(static_cast<std::size_t>(config.m_prime));
  for (int j = 0; j < config.m_prime; ++j) {
    const double t = 2.0 * kPi * j / config.m_prime;
    pts[static_cast<std::size_t>(j)] =
        Vec2{center.x + radius * std::cos(t), center.y + radius * std::sin(t)};
  }

  std::vector<int> enclosed;
  for (int g = 0; g < n; ++g) {
    if (g >= node_begin && g < node_end) continue;
    if ((mesh.node(g) - center).norm() < radius) enclosed.push_back(g);
  }
  return ProxySurface{center, radius, Mesh(std::move(pts)),
                      std::move(enclosed)};
}

CellBasis basis_from_interactions(const Eigen::MatrixXcd& mv,
                                  const Eigen::MatrixXcd& mu,
                                  const std::array<std::vector<int>, 2>& rows,
                                  const std::array<std::vector<int>, 2>& cols,
                                  double epsilon) {
  const int nr0 = static_cast<int>(rows[0].size());
  const int nr1 = static_cast<int>(rows[1].size());
  const int nc0 = static_cast<int>(cols[0].size());
  const int nc1 = static_cast<int>(cols[1].size());
  if (mv.cols() != nc0 + nc1) {
    throw std::invalid_argument("basis_from_interactions: mv column count");
  }
  if (mu.rows() != nr0 + nr1) {
    throw std::invalid_argument("basis_from_interactions: mu row count");
  }

  const Cpqr qv0(mv.leftCols(nc0));
  const Cpqr qv1(mv.rightCols(nc1));
  const Cpqr qu0(mu.topRows(nr0).adjoint());
  const Cpqr qu1(mu.bottomRows(nr1).adjoint());
  const Cpqr* all[4] = {&qv0, &qv1, &qu0, &qu1};

  int k = 0;
  for (const Cpqr* q : all) k = std::max(k, q->eps_rank(epsilon));
  // Rank unification may not push an interpolation past numerically zero
  // pivots (nor past the block size).
  int cap = std::numeric_limits<int>::max();
  for (const Cpqr* q : all) cap = std::min(cap, q->eps_rank(kPivotFloor));
  k = std::min(k, cap);

  CellBasis out;
  out.k = k;
  out.saturated = k >= std::min(std::min(nc0, nc1), std::min(nr0, nr1));
  const Interpolation iv0 = qv0.interpolation(k);
  const Interpolation iv1 = qv1.interpolation(k);
  const Interpolation iu0 = qu0.interpolation(k);
  const Interpolation iu1 = qu1.interpolation(k);
  out.v[0] = iv0.coeff;
  out.v[1] = iv1.coeff;
  out.u[0] = iu0.coeff.adjoint();
  out.u[1] = iu1.coeff.adjoint();
  out.col_skeleton[0].reserve(static_cast<std::size_t>(k));
  for (int s : iv0.skeleton) out.col_skeleton[0].push_back(cols[0][s]);
  for (int s : iv1.skeleton) out.col_skeleton[1].push_back(cols[1][s]);
  for (int s : iu0.skeleton) out.row_skeleton[0].push_back(rows[0][s]);
  for (int s : iu1.skeleton) out.row_skeleton[1].push_back(rows[1][s]);
  return out;
}

AssemblerSource::AssemblerSource(const BlockAssembler& assembler,
                                 const ProxyConfig& proxy)
    : assembler_(assembler), proxy_(proxy) {}

int AssemblerSource::n_nodes() const { return assembler_.n_nodes(); }

Eigen::MatrixXcd AssemblerSource::block(
    const std::array<std::vector<int>, 2>& rows,
    const std::array<std::vector<int>, 2>& cols) const {
  return assembler_.true_block(rows, cols);
}

CellBasis AssemblerSource::cell_basis(
    const std::array<std::vector<int>, 2>& rows,
    const std::array<std::vector<int>, 2>& cols, int node_begin, int node_end,
    double epsilon) const {
  const Mesh& mesh = assembler_.mesh();
  const ProxySurface proxy = build_proxy(mesh, node_begin, node_end, proxy_);
  const std::array<std::vector<int>, 2> poly_nodes{
      iota_nodes(0, proxy.polygon.size()), iota_nodes(0, proxy.polygon.size())};
  const std::array<std::vector<int>, 2> enclosed{proxy.enclosed,
                                                 proxy.enclosed};
  const KernelScalars& scalars = assembler_.integrator().scalars();
  const cd alpha = assembler_.alpha();

  // Tests outside the cell against the cell's trial functions: the proxy
  // polygon stands in for everything outside the circle; nodes inside the
  // circle enter with their exact rows (including the overlap identity).
  const Eigen::MatrixXcd mv_poly = kernel_cross_block(
      proxy.polygon, poly_nodes, mesh, cols, scalars, alpha, proxy_.n_gauss);
  Eigen::MatrixXcd mv = mv_poly;
  if (!proxy.enclosed.empty()) {
    const Eigen::MatrixXcd mv_near = assembler_.true_block(enclosed, cols);
    mv.conservativeResize(mv_poly.rows() + mv_near.rows(), Eigen::NoChange);
    mv.bottomRows(mv_near.rows()) = mv_near;
  }

  // The transposed side: the cell's test functions against trial functions
  // outside the cell.
  const Eigen::MatrixXcd mu_poly = kernel_cross_block(
      mesh, rows, proxy.polygon, poly_nodes, scalars, alpha, proxy_.n_gauss);
  Eigen::MatrixXcd mu = mu_poly;
  if (!proxy.enclosed.empty()) {
    const Eigen::MatrixXcd mu_near = assembler_.true_block(rows, enclosed);
    mu.conservativeResize(Eigen::NoChange, mu_poly.cols() + mu_near.cols());
    mu.rightCols(mu_near.cols()) = mu_near;
  }

  return basis_from_interactions(mv, mu, rows, cols, epsilon);
}

CellBasis DirectSource::cell_basis(
    const std::array<std::vector<int>, 2>& rows,
    const std::array<std::vector<int>, 2>& cols, int node_begin, int node_end,
    double epsilon) const {
  std::vector<int> others;
  others.reserve(static_cast<std::size_t>(n_nodes()));
  for (int g = 0; g < n_nodes(); ++g) {
    if (g < node_begin || g >= node_end) others.push_back(g);
  }
  const std::array<std::vector<int>, 2> far{others, others};
  const Eigen::MatrixXcd mv = entries_.block(far, cols);
  const Eigen::MatrixXcd mu = entries_.block(rows, far);
  return basis_from_interactions(mv, mu, rows, cols, epsilon);
}

}  // namespace ebem
