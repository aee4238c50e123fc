#pragma once

#include <Eigen/Dense>

namespace sdsc {

struct EigenPairs {
  Eigen::VectorXd values;   // k algebraically smallest, ascending
  Eigen::MatrixXd vectors;  // N x k, orthonormal columns
};

/// Full symmetric eigendecomposition truncated to the k smallest pairs.
/// Dense Householder tridiagonalization + implicit-shift iteration, O(N^3);
/// deterministic for a given input. The matrix must be symmetric within
/// 1e-9 of its largest absolute entry and fully finite.
EigenPairs symmetric_eigen(const Eigen::Ref<const Eigen::MatrixXd>& matrix,
                           int k);

}  // namespace sdsc
