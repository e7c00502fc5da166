#include "ebem/lapack.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include <complex>
#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#define lapack_complex_float_real(z) ((z).real())
#define lapack_complex_float_imag(z) ((z).imag())
#define lapack_complex_double_real(z) ((z).real())
#define lapack_complex_double_imag(z) ((z).imag())
#include <lapacke.h>

extern "C" {
void openblas_set_num_threads(int);
int openblas_get_num_threads(void);
}

namespace ebem {

BlasThreadGuard::BlasThreadGuard(int n_threads)
    : previous_(openblas_get_num_threads()) {
  openblas_set_num_threads(n_threads > 0 ? n_threads : 1);
}

BlasThreadGuard::~BlasThreadGuard() { openblas_set_num_threads(previous_); }

LuFactor::LuFactor(Eigen::MatrixXcd a) : lu_(std::move(a)) {
  if (lu_.rows() != lu_.cols()) {
    throw std::invalid_argument("LuFactor: matrix must be square");
  }
  const lapack_int n = static_cast<lapack_int>(lu_.rows());
  norm1_ = 0.0;
  for (lapack_int j = 0; j < n; ++j) {
    norm1_ = std::max(norm1_, lu_.col(j).cwiseAbs().sum());
  }
  ipiv_.resize(static_cast<std::size_t>(std::max<lapack_int>(n, 1)));
  const lapack_int info = LAPACKE_zgetrf(LAPACK_COL_MAJOR, n, n, lu_.data(),
                                         std::max<lapack_int>(n, 1),
                                         ipiv_.data());
  if (info < 0) {
    throw std::runtime_error("LuFactor: illegal argument " +
                             std::to_string(-info));
  }
  if (info > 0) {
    throw std::runtime_error(
        "LuFactor: matrix is singular, zero pivot at index " +
        std::to_string(info - 1) + " of " + std::to_string(n));
  }
}

double LuFactor::min_pivot() const {
  double p = std::numeric_limits<double>::infinity();
  for (int i = 0; i < size(); ++i) p = std::min(p, std::abs(lu_(i, i)));
  return size() == 0 ? 0.0 : p;
}

double LuFactor::rcond() const {
  const lapack_int n = static_cast<lapack_int>(size());
  if (n == 0) return 1.0;
  double rc = 0.0;
  const lapack_int info =
      LAPACKE_zgecon(LAPACK_COL_MAJOR, '1', n, lu_.data(), n, norm1_, &rc);
  if (info != 0) {
    throw std::runtime_error("LuFactor: condition estimate failed");
  }
  return rc;
}

Eigen::MatrixXcd LuFactor::solve(Eigen::MatrixXcd rhs) const {
  if (rhs.rows() != lu_.rows()) {
    throw std::invalid_argument("LuFactor: right-hand side has " +
                                std::to_string(rhs.rows()) + " rows, need " +
                                std::to_string(lu_.rows()));
  }
  const lapack_int n = static_cast<lapack_int>(size());
  const lapack_int m = static_cast<lapack_int>(rhs.cols());
  if (n == 0 || m == 0) return rhs;
  const lapack_int info =
      LAPACKE_zgetrs(LAPACK_COL_MAJOR, 'N', n, m, lu_.data(), n, ipiv_.data(),
                     rhs.data(), n);
  if (info != 0) {
    throw std::runtime_error("LuFactor: solve failed");
  }
  return rhs;
}

Eigen::VectorXcd LuFactor::solve(Eigen::VectorXcd rhs) const {
  Eigen::MatrixXcd x = solve(Eigen::MatrixXcd(std::move(rhs)));
  return Eigen::VectorXcd(std::move(x));
}

Eigen::MatrixXcd LuFactor::inverse() const {
  return solve(Eigen::MatrixXcd(
      Eigen::MatrixXcd::Identity(lu_.rows(), lu_.rows())));
}

Cpqr::Cpqr(Eigen::MatrixXcd m) : qr_(std::move(m)) {
  const lapack_int rows = static_cast<lapack_int>(qr_.rows());
  const lapack_int cols = static_cast<lapack_int>(qr_.cols());
  if (rows == 0 || cols == 0) {
    throw std::invalid_argument("Cpqr: empty matrix");
  }
  std::vector<lapack_int> jpvt(static_cast<std::size_t>(cols), 0);
  std::vector<cd> tau(static_cast<std::size_t>(std::min(rows, cols)));
  const lapack_int info = LAPACKE_zgeqp3(LAPACK_COL_MAJOR, rows, cols,
                                         qr_.data(), rows, jpvt.data(),
                                         tau.data());
  if (info != 0) {
    throw std::runtime_error("Cpqr: factorization failed");
  }
  jpvt_.resize(jpvt.size());
  for (std::size_t j = 0; j < jpvt.size(); ++j) {
    jpvt_[j] = static_cast<int>(jpvt[j]) - 1;  // LAPACK pivots are one-based
  }
}

int Cpqr::max_rank() const {
  return static_cast<int>(std::min(qr_.rows(), qr_.cols()));
}

double Cpqr::pivot_magnitude(int k) const { return std::abs(qr_(k, k)); }

int Cpqr::eps_rank(double epsilon) const {
  if (epsilon <= 0.0) {
    throw std::invalid_argument("Cpqr: truncation epsilon must be positive");
  }
  const double head = pivot_magnitude(0);
  if (head == 0.0) return 0;
  const int kmax = max_rank();
  for (int k = 0; k < kmax; ++k) {
    if (pivot_magnitude(k) <= epsilon * head) return k;
  }
  return kmax;
}

Interpolation Cpqr::interpolation(int k) const {
  const int n = static_cast<int>(qr_.cols());
  if (k < 0 || k > max_rank()) {
    throw std::invalid_argument("Cpqr: rank out of range");
  }
  Interpolation out;
  out.rank = k;
  out.coeff = Eigen::MatrixXcd::Zero(k, n);
  out.skeleton.assign(jpvt_.begin(), jpvt_.begin() + k);
  if (k == 0) return out;
  // Coefficients in pivot order: identity block, then R1^{-1} R2.
  Eigen::MatrixXcd t = qr_.block(0, k, k, n - k);
  qr_.topLeftCorner(k, k)
      .triangularView<Eigen::Upper>()
      .solveInPlace(t);
  for (int j = 0; j < k; ++j) out.coeff(j, jpvt_[j]) = 1.0;
  for (int j = k; j < n; ++j) out.coeff.col(jpvt_[j]) = t.col(j - k);
  return out;
}

}  // namespace ebem
