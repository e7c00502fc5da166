#include "ebem/assembly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ebem/quadrature.hpp"

namespace ebem {

namespace {

// dP/ds of the two local shape functions (constant on each element).
constexpr double kShapeSlope[2] = {-1.0, 1.0};

inline void add_scaled(cd (&slot)[2][2], const CMat2& m, cd f) {
  slot[0][0] += f * m.a11;
  slot[0][1] += f * m.a12;
  slot[1][0] += f * m.a21;
  slot[1][1] += f * m.a22;
}

inline ScalarSet from_array(const std::array<cd, 10>& v) {
  return {v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7], v[8], v[9]};
}

int tier_nodes(double dist_over_h, const AssemblyConfig& c) {
  int n = c.far_nodes;
  if (dist_over_h >= 8.0) {
  } else if (dist_over_h >= 4.0) {
    n += 2;
  } else if (dist_over_h >= 2.0) {
    n += 5;
  } else {
    n += 9;
  }
  return c.scaled(n);
}

}  // namespace

PairIntegrator::PairIntegrator(const Mesh& mesh, const Medium& medium,
                               const AssemblyConfig& config)
    : mesh_(mesh), scalars_(medium), config_(config) {
  const double mu = medium.mu();
  const double lam = medium.lambda();
  kappa_ = mu / (2.0 * kPi * (lam + 2.0 * mu));
  ccon_ = (lam + mu) / (8.0 * kPi * (lam + 2.0 * mu));
  if (mesh_.size() < 8)
    throw std::invalid_argument("PairIntegrator: mesh too coarse");
}

PairBundle PairIntegrator::bundle(int ea, int eb) const {
  PairBundle out{};
  switch (classify_pair(mesh_, ea, eb)) {
    case PairRelation::kCoincident:
      coincident(ea, out);
      break;
    case PairRelation::kAdjacentEndStart:
    case PairRelation::kAdjacentStartEnd:
      adjacent(ea, eb, out);
      break;
    case PairRelation::kSeparated:
      separated(ea, eb, out);
      break;
  }
  return out;
}

void PairIntegrator::coincident(int e, PairBundle& out) const {
  const double h = mesh_.length(e);
  const Vec2 tau = mesh_.tangent(e);
  const Vec2 nrm = mesh_.normal(e);
  const double logh = std::log(h);
  const double qfac = scalars_.qfactor();

  out.M[0][0] = out.M[1][1] = h / 3.0;
  out.M[0][1] = out.M[1][0] = h / 6.0;

  // ---- traction kernel, static part.  On a straight element the normal is
  // orthogonal to the direction vector, leaving the antisymmetric
  //   -d1(r) (zh_i n_j - n_i zh_j),   zh = sign(s - t) tau,
  // whose Galerkin principal values are  pv int int P_a P_b/(s-t) = -+ 1/2
  // for (a,b) = (0,1)/(1,0) and 0 on the diagonal.  The frame factor
  // tau_i n_j - n_i tau_j is the rotation [[0,1],[-1,0]] for any element.
  const double dcoef = 0.5 * kappa_ * h;  // -kappa*h*Ipv_01
  out.D[0][1][0][1] += dcoef;
  out.D[0][1][1][0] += -dcoef;
  out.D[1][0][0][1] += -dcoef;
  out.D[1][0][1][0] += dcoef;

  // ---- traction kernel, remainder.  Odd in sign(s - t); reduction to
  // u = s - t gives the weight O_01(u) = u^2 - u (and -O_01 for (1,0)).
  const std::array<cd, 10> f1 = scalars_.integrated_remainder(h, 1);
  const std::array<cd, 10> f2 = scalars_.integrated_remainder(h, 2);
  const cd i1 = f2[2] - f1[2];  // d1 against O_01
  const cd i2 = f2[3] - f1[3];  // d2 against O_01
  const double h2 = h * h;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const double ti = (i == 0) ? tau.x : tau.y;
      const double tj = (j == 0) ? tau.x : tau.y;
      const double ni = (i == 0) ? nrm.x : nrm.y;
      const double nj = (j == 0) ? nrm.x : nrm.y;
      const cd val = -h2 * (i1 * (ti * nj) + i2 * (ni * tj));
      out.D[0][1][i][j] += val;
      out.D[1][0][i][j] -= val;
    }
  }

  // ---- hypersingular kernel, static part via integration by parts.  The
  // shape-function derivatives cancel the Jacobians, leaving
  //   s_a s_b qfac [ (ln h + int int ln|s-t|) d_ij - tau_i tau_j ],
  // with int int ln|s-t| ds dt = -3/2.
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      const double sgn = kShapeSlope[a] * kShapeSlope[b];
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
          const double ti = (i == 0) ? tau.x : tau.y;
          const double tj = (j == 0) ? tau.x : tau.y;
          const double dij = (i == j) ? 1.0 : 0.0;
          out.N[a][b][i][j] += sgn * qfac * ((logh - 1.5) * dij - ti * tj);
        }
      }
    }
  }

  // ---- hypersingular kernel, remainder.  Even in sign(s - t), so only the
  // even reduction weights enter: E_00 = E_11 = u^3/3 - u + 2/3 and
  // E_01 = E_10 = (1 - u^3)/3.  All direction factors are even in zh, so
  // zh = tau is exact.
  const std::array<cd, 10> f0 = scalars_.integrated_remainder(h, 0);
  const std::array<cd, 10> f3 = scalars_.integrated_remainder(h, 3);
  std::array<cd, 10> sdiag, soff;
  for (int k = 0; k < 10; ++k) {
    sdiag[k] = f3[k] / 3.0 - f1[k] + 2.0 * f0[k] / 3.0;
    soff[k] = (f0[k] - f3[k]) / 3.0;
  }
  const CMat2 ndiag = combine_N(from_array(sdiag), tau, nrm, nrm);
  const CMat2 noff = combine_N(from_array(soff), tau, nrm, nrm);
  add_scaled(out.N[0][0], ndiag, h2);
  add_scaled(out.N[1][1], ndiag, h2);
  add_scaled(out.N[0][1], noff, h2);
  add_scaled(out.N[1][0], noff, h2);
}

void PairIntegrator::adjacent(int ea, int eb, PairBundle& out) const {
  // Orient both legs away from the shared corner; p (resp. q) is the
  // distance parameter along the test (resp. trial) element divided by its
  // length.  The original shape functions become linear polynomials in the
  // leg coordinate, possibly reversed.
  const bool end_start = (mesh_.next(ea) == eb);
  const double hx = mesh_.length(ea);
  const double hy = mesh_.length(eb);
  Vec2 tx, ty;
  double bx0[2], bx1[2], by0[2], by1[2];  // shape = b0 + b1 * coordinate
  if (end_start) {
    tx = -1.0 * mesh_.tangent(ea);  // P(s), s = 1 - p
    bx0[0] = 0.0;
    bx1[0] = 1.0;
    bx0[1] = 1.0;
    bx1[1] = -1.0;
    ty = mesh_.tangent(eb);  // Q(t), t = q
    by0[0] = 1.0;
    by1[0] = -1.0;
    by0[1] = 0.0;
    by1[1] = 1.0;
  } else {
    tx = mesh_.tangent(ea);  // s = p
    bx0[0] = 1.0;
    bx1[0] = -1.0;
    bx0[1] = 0.0;
    bx1[1] = 1.0;
    ty = -1.0 * mesh_.tangent(eb);  // t = 1 - q
    by0[0] = 0.0;
    by1[0] = 1.0;
    by0[1] = 1.0;
    by1[1] = -1.0;
  }
  const Vec2 nx = mesh_.normal(ea);
  const Vec2 ny = mesh_.normal(eb);
  const double qfac = scalars_.qfactor();
  const double hxy = hx * hy;

  // Static traction scalars multiplied by r (they all scale like 1/r).
  ScalarSet dhat{};
  dhat.d1 = kappa_;
  dhat.d2 = -kappa_;
  dhat.d3 = -8.0 * ccon_;

  const GaussRule& gw = gauss_rule(config_.scaled(config_.corner_nodes));
  for (int tri = 0; tri < 2; ++tri) {
    for (std::size_t wi = 0; wi < gw.x.size(); ++wi) {
      const double w = gw.x[wi];
      const double wt = gw.w[wi];
      // Triangle 0: (p, q) = (xi, xi w); triangle 1: (p, q) = (xi w, xi).
      const Vec2 zv = (tri == 0) ? (hx * tx - (w * hy) * ty)
                                 : ((w * hx) * tx - (1.0 * hy) * ty);
      const double g = zv.norm();
      const Vec2 zh = (1.0 / g) * zv;
      const double logg = std::log(g);

      // Per-scalar integrals against xi^{j+1} (the +1 is the Duffy
      // Jacobian); the shape-function product has degree 2 in xi.
      CMat2 dmat[3], nmat[3];
      for (int j = 0; j < 3; ++j) {
        const ScalarSet s =
            from_array(scalars_.integrated_remainder(g, j + 1));
        dmat[j] = combine_D(s, zh, ny);
        nmat[j] = combine_N(s, zh, nx, ny);
      }
      const CMat2 dstat = combine_D(dhat, zh, ny);

      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          // Shape product coefficients in xi on this triangle.
          const double t0 = bx0[a], u0 = by0[b];
          const double t1 = (tri == 0) ? bx1[a] : bx1[a] * w;
          const double u1 = (tri == 0) ? by1[b] * w : by1[b];
          const double c[3] = {t0 * u0, t0 * u1 + t1 * u0, t1 * u1};

          // Static traction part: kernel ~ 1/(xi g), so each power of xi
          // integrates to c_j/(j+1).
          const double cint = c[0] / 1.0 + c[1] / 2.0 + c[2] / 3.0;
          add_scaled(out.D[a][b], dstat, wt * hxy * cint / g);

          for (int j = 0; j < 3; ++j) {
            add_scaled(out.D[a][b], dmat[j], wt * hxy * c[j]);
            add_scaled(out.N[a][b], nmat[j], wt * hxy * c[j]);
          }

          // Integrated-by-parts static part: constant shape derivatives,
          // Jacobians cancel; int xi ln xi = -1/4, int xi = 1/2.
          const double sgn = kShapeSlope[a] * kShapeSlope[b];
          const double ql = qfac * (logg * 0.5 - 0.25);
          const double qz = qfac * 0.5;
          out.N[a][b][0][0] += wt * sgn * (ql - qz * zh.x * zh.x);
          out.N[a][b][0][1] += wt * sgn * (-qz * zh.x * zh.y);
          out.N[a][b][1][0] += wt * sgn * (-qz * zh.y * zh.x);
          out.N[a][b][1][1] += wt * sgn * (ql - qz * zh.y * zh.y);
        }
      }
    }
  }
}

void PairIntegrator::separated(int ea, int eb, PairBundle& out) const {
  const double hx = mesh_.length(ea);
  const double hy = mesh_.length(eb);
  const double dist = mesh_.element_distance(ea, eb);
  const int n = tier_nodes(dist / std::max(hx, hy), config_);
  const GaussRule& rule = gauss_rule(n);
  const Vec2 nx = mesh_.normal(ea);
  const Vec2 ny = mesh_.normal(eb);
  const double qfac = scalars_.qfactor();

  for (std::size_t is = 0; is < rule.x.size(); ++is) {
    const double s = rule.x[is];
    const Vec2 x = mesh_.point_on(ea, s);
    const double ps[2] = {1.0 - s, s};
    for (std::size_t it = 0; it < rule.x.size(); ++it) {
      const double t = rule.x[it];
      const Vec2 y = mesh_.point_on(eb, t);
      const Vec2 z = x - y;
      const double r = z.norm();
      const Vec2 zh = (1.0 / r) * z;
      ScalarSet fs, rs;
      scalars_.split(r, &fs, &rs);
      const CMat2 dm = combine_D(fs, zh, ny);
      const CMat2 nm = combine_N(rs, zh, nx, ny);
      const CMat2 qm = q0_kernel(qfac, r, zh);
      const double ww = rule.w[is] * rule.w[it];
      const double wgt = ww * hx * hy;
      const double pt[2] = {1.0 - t, t};
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          add_scaled(out.D[a][b], dm, wgt * ps[a] * pt[b]);
          add_scaled(out.N[a][b], nm, wgt * ps[a] * pt[b]);
          add_scaled(out.N[a][b], qm,
                     ww * kShapeSlope[a] * kShapeSlope[b]);
        }
      }
    }
  }
}

BlockAssembler::BlockAssembler(const Mesh& mesh, const Medium& medium,
                               cd alpha, const AssemblyConfig& config)
    : mesh_(mesh), integrator_(mesh, medium, config), alpha_(alpha),
      config_(config) {}

void BlockAssembler::scatter_bundle(int ea, int eb, const PairBundle& b,
                                    Eigen::MatrixXcd& a) const {
  const int n = mesh_.size();
  for (int la = 0; la < 2; ++la) {
    const int ga = (ea + la) % n;
    for (int lb = 0; lb < 2; ++lb) {
      const int gb = (eb + lb) % n;
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
          cd v = b.D[la][lb][i][j] + alpha_ * b.N[la][lb][i][j];
          if (ea == eb && i == j) v += 0.5 * b.M[la][lb];
          a(i * n + ga, j * n + gb) += v;
        }
      }
    }
  }
}

Eigen::MatrixXcd BlockAssembler::dense() const {
  const int n = mesh_.size();
  const std::size_t bytes = std::size_t(2 * n) * std::size_t(2 * n) * sizeof(cd);
  if (bytes > config_.max_dense_bytes)
    throw std::length_error("BlockAssembler::dense: matrix exceeds the "
                            "configured memory budget");
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
  // One test-element row strip at a time: its bundles in parallel, the
  // scatter serially in ascending trial order.  Every matrix entry thus
  // accumulates its contributions in ascending (test element, trial
  // element) order no matter how many threads run, which makes the result
  // bitwise reproducible and sub-blocks identical to true_block().
  std::vector<PairBundle> strip(n);
  for (int ea = 0; ea < n; ++ea) {
#pragma omp parallel for schedule(static)
    for (int eb = 0; eb < n; ++eb) strip[eb] = integrator_.bundle(ea, eb);
    for (int eb = 0; eb < n; ++eb) scatter_bundle(ea, eb, strip[eb], a);
  }
  return a;
}

Eigen::MatrixXcd BlockAssembler::true_block(
    const std::array<std::vector<int>, 2>& rows,
    const std::array<std::vector<int>, 2>& cols) const {
  const int n = mesh_.size();
  const int nr = int(rows[0].size() + rows[1].size());
  const int nc = int(cols[0].size() + cols[1].size());
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(nr, nc);

  // Positions of each node in the requested lists (-1 when absent) and the
  // element sets supporting them.
  std::array<std::vector<int>, 2> rpos{std::vector<int>(n, -1),
                                       std::vector<int>(n, -1)};
  std::array<std::vector<int>, 2> cpos{std::vector<int>(n, -1),
                                       std::vector<int>(n, -1)};
  std::vector<char> relem(n, 0), celem(n, 0);
  int off = 0;
  for (int p = 0; p < 2; ++p) {
    for (std::size_t k = 0; k < rows[p].size(); ++k) {
      const int v = rows[p][k];
      rpos[p][v] = off + int(k);
      relem[v] = 1;
      relem[(v + n - 1) % n] = 1;
    }
    off += int(rows[p].size());
  }
  off = 0;
  for (int q = 0; q < 2; ++q) {
    for (std::size_t k = 0; k < cols[q].size(); ++k) {
      const int v = cols[q][k];
      cpos[q][v] = off + int(k);
      celem[v] = 1;
      celem[(v + n - 1) % n] = 1;
    }
    off += int(cols[q].size());
  }
  std::vector<int> res, ces;
  for (int e = 0; e < n; ++e) {
    if (relem[e]) res.push_back(e);
    if (celem[e]) ces.push_back(e);
  }

  // Compute the needed bundles in parallel, scatter serially in ascending
  // (test element, trial element) order; the result does not depend on the
  // thread count and matches the corresponding dense() sub-block exactly.
  const std::size_t npair = res.size() * ces.size();
  constexpr std::size_t kSlab = 1 << 14;  // bounds the bundle buffer
  std::vector<PairBundle> bundles(std::min(npair, kSlab));
  for (std::size_t slab = 0; slab < npair; slab += kSlab) {
    const std::size_t hi = std::min(npair, slab + kSlab);
#pragma omp parallel for schedule(static) if (hi - slab > 64)
    for (std::size_t k = slab; k < hi; ++k) {
      const int ea = res[k / ces.size()];
      const int eb = ces[k % ces.size()];
      bundles[k - slab] = integrator_.bundle(ea, eb);
    }
    for (std::size_t k = slab; k < hi; ++k) {
      const int ea = res[k / ces.size()];
      const int eb = ces[k % ces.size()];
      const PairBundle& b = bundles[k - slab];
      for (int la = 0; la < 2; ++la) {
        const int ga = (ea + la) % n;
        for (int lb = 0; lb < 2; ++lb) {
          const int gb = (eb + lb) % n;
          for (int i = 0; i < 2; ++i) {
            if (rpos[i][ga] < 0) continue;
            for (int j = 0; j < 2; ++j) {
              if (cpos[j][gb] < 0) continue;
              cd v = b.D[la][lb][i][j] + alpha_ * b.N[la][lb][i][j];
              if (ea == eb && i == j) v += 0.5 * b.M[la][lb];
              a(rpos[i][ga], cpos[j][gb]) += v;
            }
          }
        }
      }
    }
  }
  return a;
}

Eigen::MatrixXcd BlockAssembler::rhs_batch(const Medium& medium,
                                           const std::vector<double>& angles_rad,
                                           double amplitude) const {
  const int n = mesh_.size();
  Eigen::MatrixXcd b(2 * n, angles_rad.size());
#pragma omp parallel for schedule(static)
  for (std::size_t k = 0; k < angles_rad.size(); ++k) {
    const PlanePWave wave(medium, amplitude, angles_rad[k]);
    b.col(k) = rhs(wave);
  }
  return b;
}

Eigen::MatrixXcd kernel_cross_block(
    const Mesh& test_mesh, const std::array<std::vector<int>, 2>& rows,
    const Mesh& src_mesh, const std::array<std::vector<int>, 2>& cols,
    const KernelScalars& scalars, cd alpha, int n_gauss) {
  const int nx = test_mesh.size();
  const int ny = src_mesh.size();
  const int nr = int(rows[0].size() + rows[1].size());
  const int nc = int(cols[0].size() + cols[1].size());
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(nr, nc);

  std::array<std::vector<int>, 2> rpos{std::vector<int>(nx, -1),
                                       std::vector<int>(nx, -1)};
  std::array<std::vector<int>, 2> cpos{std::vector<int>(ny, -1),
                                       std::vector<int>(ny, -1)};
  std::vector<char> relem(nx, 0), celem(ny, 0);
  int off = 0;
  for (int p = 0; p < 2; ++p) {
    for (std::size_t k = 0; k < rows[p].size(); ++k) {
      const int v = rows[p][k];
      rpos[p][v] = off + int(k);
      relem[v] = 1;
      relem[(v + nx - 1) % nx] = 1;
    }
    off += int(rows[p].size());
  }
  off = 0;
  for (int q = 0; q < 2; ++q) {
    for (std::size_t k = 0; k < cols[q].size(); ++k) {
      const int v = cols[q][k];
      cpos[q][v] = off + int(k);
      celem[v] = 1;
      celem[(v + ny - 1) % ny] = 1;
    }
    off += int(cols[q].size());
  }

  const GaussRule& rule = gauss_rule(n_gauss);
  const std::size_t nk = rule.x.size();
  for (int ea = 0; ea < nx; ++ea) {
    if (!relem[ea]) continue;
    const double hx = test_mesh.length(ea);
    const Vec2 nxv = test_mesh.normal(ea);
    for (int eb = 0; eb < ny; ++eb) {
      if (!celem[eb]) continue;
      const double hy = src_mesh.length(eb);
      const Vec2 nyv = src_mesh.normal(eb);
      cd acc[2][2][2][2] = {};
      for (std::size_t is = 0; is < nk; ++is) {
        const double s = rule.x[is];
        const Vec2 x = test_mesh.point_on(ea, s);
        const double psa[2] = {1.0 - s, s};
        for (std::size_t it = 0; it < nk; ++it) {
          const double t = rule.x[it];
          const Vec2 y = src_mesh.point_on(eb, t);
          const Vec2 z = x - y;
          const double r = z.norm();
          const Vec2 zh = (1.0 / r) * z;
          const ScalarSet fs = scalars.full(r);
          const CMat2 dm = combine_D(fs, zh, nyv);
          const CMat2 nm = combine_N(fs, zh, nxv, nyv);
          const double wgt = rule.w[is] * rule.w[it] * hx * hy;
          const double pt[2] = {1.0 - t, t};
          CMat2 km = dm;
          km += alpha * nm;
          for (int la = 0; la < 2; ++la)
            for (int lb = 0; lb < 2; ++lb)
              add_scaled(acc[la][lb], km, wgt * psa[la] * pt[lb]);
        }
      }
      for (int la = 0; la < 2; ++la) {
        const int ga = (ea + la) % nx;
        for (int lb = 0; lb < 2; ++lb) {
          const int gb = (eb + lb) % ny;
          for (int i = 0; i < 2; ++i) {
            if (rpos[i][ga] < 0) continue;
            for (int j = 0; j < 2; ++j) {
              if (cpos[j][gb] < 0) continue;
              a(rpos[i][ga], cpos[j][gb]) += acc[la][lb][i][j];
            }
          }
        }
      }
    }
  }
  return a;
}

Eigen::MatrixXd mass_dense(const Mesh& mesh) {
  const int n = mesh.size();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  for (int e = 0; e < n; ++e) {
    const double h = mesh.length(e);
    const int g0 = e;
    const int g1 = mesh.next(e);
    for (int i = 0; i < 2; ++i) {
      m(i * n + g0, i * n + g0) += h / 3.0;
      m(i * n + g0, i * n + g1) += h / 6.0;
      m(i * n + g1, i * n + g0) += h / 6.0;
      m(i * n + g1, i * n + g1) += h / 3.0;
    }
  }
  return m;
}

namespace {

// Zero-frequency counterpart of PairIntegrator::bundle: the same pair
// splitting, but with only the singular static parts of the kernels (which
// the dynamic path integrates analytically as well, so the formulas below
// mirror the ones above with the remainder terms dropped).
void static_pair(const Mesh& mesh, const KernelScalars& sc,
                 const AssemblyConfig& config, int ea, int eb,
                 cd dout[2][2][2][2], cd nout[2][2][2][2]) {
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) dout[a][b][i][j] = nout[a][b][i][j] = 0.0;
  const double mu = sc.mu();
  const double lam = sc.lambda();
  const double kappa = mu / (2.0 * kPi * (lam + 2.0 * mu));
  const double ccon = (lam + mu) / (8.0 * kPi * (lam + 2.0 * mu));
  const double qfac = sc.qfactor();

  switch (classify_pair(mesh, ea, eb)) {
    case PairRelation::kCoincident: {
      const int e = ea;
      const double h = mesh.length(e);
      const Vec2 tau = mesh.tangent(e);
      const double logh = std::log(h);
      const double dcoef = 0.5 * kappa * h;
      dout[0][1][0][1] += dcoef;
      dout[0][1][1][0] += -dcoef;
      dout[1][0][0][1] += -dcoef;
      dout[1][0][1][0] += dcoef;
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          const double sgn = kShapeSlope[a] * kShapeSlope[b];
          for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
              const double ti = (i == 0) ? tau.x : tau.y;
              const double tj = (j == 0) ? tau.x : tau.y;
              const double dij = (i == j) ? 1.0 : 0.0;
              nout[a][b][i][j] +=
                  sgn * qfac * ((logh - 1.5) * dij - ti * tj);
            }
          }
        }
      }
      break;
    }
    case PairRelation::kAdjacentEndStart:
    case PairRelation::kAdjacentStartEnd: {
      const bool end_start = (mesh.next(ea) == eb);
      const double hx = mesh.length(ea);
      const double hy = mesh.length(eb);
      Vec2 tx, ty;
      double bx0[2], bx1[2], by0[2], by1[2];
      if (end_start) {
        tx = -1.0 * mesh.tangent(ea);
        bx0[0] = 0.0;
        bx1[0] = 1.0;
        bx0[1] = 1.0;
        bx1[1] = -1.0;
        ty = mesh.tangent(eb);
        by0[0] = 1.0;
        by1[0] = -1.0;
        by0[1] = 0.0;
        by1[1] = 1.0;
      } else {
        tx = mesh.tangent(ea);
        bx0[0] = 1.0;
        bx1[0] = -1.0;
        bx0[1] = 0.0;
        bx1[1] = 1.0;
        ty = -1.0 * mesh.tangent(eb);
        by0[0] = 0.0;
        by1[0] = 1.0;
        by0[1] = 1.0;
        by1[1] = -1.0;
      }
      const Vec2 ny = mesh.normal(eb);
      const double hxy = hx * hy;
      ScalarSet dhat{};
      dhat.d1 = kappa;
      dhat.d2 = -kappa;
      dhat.d3 = -8.0 * ccon;
      const GaussRule& gw = gauss_rule(config.scaled(config.corner_nodes));
      for (int tri = 0; tri < 2; ++tri) {
        for (std::size_t wi = 0; wi < gw.x.size(); ++wi) {
          const double w = gw.x[wi];
          const double wt = gw.w[wi];
          const Vec2 zv = (tri == 0) ? (hx * tx - (w * hy) * ty)
                                     : ((w * hx) * tx - (1.0 * hy) * ty);
          const double g = zv.norm();
          const Vec2 zh = (1.0 / g) * zv;
          const double logg = std::log(g);
          const CMat2 dstat = combine_D(dhat, zh, ny);
          for (int a = 0; a < 2; ++a) {
            for (int b = 0; b < 2; ++b) {
              const double t0 = bx0[a], u0 = by0[b];
              const double t1 = (tri == 0) ? bx1[a] : bx1[a] * w;
              const double u1 = (tri == 0) ? by1[b] * w : by1[b];
              const double cint =
                  t0 * u0 + (t0 * u1 + t1 * u0) / 2.0 + t1 * u1 / 3.0;
              add_scaled(dout[a][b], dstat, wt * hxy * cint / g);
              const double sgn = kShapeSlope[a] * kShapeSlope[b];
              const double ql = qfac * (logg * 0.5 - 0.25);
              const double qz = qfac * 0.5;
              nout[a][b][0][0] += wt * sgn * (ql - qz * zh.x * zh.x);
              nout[a][b][0][1] += wt * sgn * (-qz * zh.x * zh.y);
              nout[a][b][1][0] += wt * sgn * (-qz * zh.y * zh.x);
              nout[a][b][1][1] += wt * sgn * (ql - qz * zh.y * zh.y);
            }
          }
        }
      }
      break;
    }
    case PairRelation::kSeparated: {
      const double hx = mesh.length(ea);
      const double hy = mesh.length(eb);
      const double dist = mesh.element_distance(ea, eb);
      const int nq = tier_nodes(dist / std::max(hx, hy), config);
      const GaussRule& rule = gauss_rule(nq);
      const Vec2 ny = mesh.normal(eb);
      for (std::size_t is = 0; is < rule.x.size(); ++is) {
        const double s = rule.x[is];
        const Vec2 x = mesh.point_on(ea, s);
        const double ps[2] = {1.0 - s, s};
        for (std::size_t it = 0; it < rule.x.size(); ++it) {
          const double t = rule.x[it];
          const Vec2 y = mesh.point_on(eb, t);
          const Vec2 z = x - y;
          const double r = z.norm();
          const Vec2 zh = (1.0 / r) * z;
          const CMat2 dm = combine_D(to_complex(sc.static_part(r)), zh, ny);
          const CMat2 qm = q0_kernel(qfac, r, zh);
          const double ww = rule.w[is] * rule.w[it];
          const double wgt = ww * hx * hy;
          const double pt[2] = {1.0 - t, t};
          for (int a = 0; a < 2; ++a) {
            for (int b = 0; b < 2; ++b) {
              add_scaled(dout[a][b], dm, wgt * ps[a] * pt[b]);
              add_scaled(nout[a][b], qm,
                         ww * kShapeSlope[a] * kShapeSlope[b]);
            }
          }
        }
      }
      break;
    }
  }
}

Eigen::MatrixXd static_dense(const Mesh& mesh, const Medium& medium,
                             const AssemblyConfig& config, bool want_n) {
  const KernelScalars sc(medium);
  const int n = mesh.size();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  cd dout[2][2][2][2], nout[2][2][2][2];
  for (int ea = 0; ea < n; ++ea) {
    for (int eb = 0; eb < n; ++eb) {
      static_pair(mesh, sc, config, ea, eb, dout, nout);
      for (int la = 0; la < 2; ++la) {
        const int ga = (ea + la) % n;
        for (int lb = 0; lb < 2; ++lb) {
          const int gb = (eb + lb) % n;
          for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
              a(i * n + ga, j * n + gb) +=
                  want_n ? nout[la][lb][i][j].real()
                         : dout[la][lb][i][j].real();
        }
      }
    }
  }
  return a;
}

}  // namespace

Eigen::MatrixXd static_double_layer_dense(const Mesh& mesh,
                                          const Medium& medium,
                                          const AssemblyConfig& config) {
  return static_dense(mesh, medium, config, /*want_n=*/false);
}

Eigen::MatrixXd static_hypersingular_dense(const Mesh& mesh,
                                           const Medium& medium,
                                           const AssemblyConfig& config) {
  return static_dense(mesh, medium, config, /*want_n=*/true);
}

}  // namespace ebem
