#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

namespace sdsc {

/// N data points in ambient dimension D, one column per point, with optional
/// ground-truth labels.
struct DataMatrix {
  Eigen::MatrixXd points;  // D x N
  std::optional<std::vector<int>> labels;

  int dim() const { return static_cast<int>(points.rows()); }
  int count() const { return static_cast<int>(points.cols()); }

  /// Scales every column to unit l2 norm. A zero column cannot be normalized
  /// and raises ValidationError naming its index.
  void normalize_columns();

  /// True when every column norm is within `tol` of 1.
  bool columns_unit_norm(double tol = 1e-9) const;
};

}  // namespace sdsc
