#include "ebem/dense_solver.hpp"

namespace ebem {

namespace {
constexpr double kConditionWarningThreshold = 1e-12;
}

ConvSolver::ConvSolver(const Mesh& mesh, const Medium& medium, cd alpha,
                       const AssemblyConfig& config)
    : assembler_(mesh, medium, alpha, config) {
  Stopwatch watch;
  Eigen::MatrixXcd a = assembler_.dense();
  stats_.assemble_seconds = watch.seconds();
  watch.reset();
  lu_ = LuFactor(std::move(a));
  stats_.factor_seconds = watch.seconds();
  stats_.min_pivot = lu_.min_pivot();
  stats_.rcond = lu_.rcond();
  stats_.condition_warning = stats_.rcond < kConditionWarningThreshold;
}

Eigen::MatrixXcd ConvSolver::solve(const Eigen::MatrixXcd& rhs) const {
  return lu_.solve(rhs);
}

Eigen::VectorXcd ConvSolver::solve(const Eigen::VectorXcd& rhs) const {
  return lu_.solve(rhs);
}

}  // namespace ebem
