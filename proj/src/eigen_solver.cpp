#include "sdsc/eigen_solver.hpp"

#include <cmath>
#include <string>

#include "sdsc/errors.hpp"

namespace sdsc {

EigenPairs symmetric_eigen(const Eigen::Ref<const Eigen::MatrixXd>& matrix,
                           int k) {
  const Eigen::Index n = matrix.rows();
  if (n == 0 || matrix.cols() != n) {
    throw ValidationError("symmetric_eigen requires a nonempty square matrix");
  }
  if (!matrix.allFinite()) {
    throw ValidationError("symmetric_eigen: matrix has non-finite entries");
  }
  const double scale = matrix.cwiseAbs().maxCoeff();
  const double asymmetry = (matrix - matrix.transpose()).cwiseAbs().maxCoeff();
  if (asymmetry > 1e-9 * std::max(scale, 1e-300)) {
    throw ValidationError(
        "symmetric_eigen: matrix is not symmetric (max deviation " +
        std::to_string(asymmetry) + ")");
  }
  if (k < 1 || k > n) {
    throw ValidationError("symmetric_eigen: k must be in [1, N]");
  }

  // Symmetrize exactly so the solver sees the matrix the residual contract
  // is checked against.
  const Eigen::MatrixXd sym = 0.5 * (matrix + matrix.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw InternalError("symmetric_eigen: eigensolver failed to converge");
  }

  EigenPairs out;
  out.values = solver.eigenvalues().head(k);
  out.vectors = solver.eigenvectors().leftCols(k);
  return out;
}

}  // namespace sdsc
