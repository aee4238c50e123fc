#include "sdsc/data_matrix.hpp"

#include <cmath>
#include <string>

#include "sdsc/errors.hpp"

namespace sdsc {

void DataMatrix::normalize_columns() {
  for (int j = 0; j < count(); ++j) {
    const double norm = points.col(j).norm();
    if (norm == 0.0 || !std::isfinite(norm)) {
      throw ValidationError("column " + std::to_string(j) +
                            " cannot be unit-normalized (norm " +
                            std::to_string(norm) + ")");
    }
    points.col(j) /= norm;
  }
}

bool DataMatrix::columns_unit_norm(double tol) const {
  for (int j = 0; j < count(); ++j) {
    if (std::abs(points.col(j).norm() - 1.0) > tol) return false;
  }
  return true;
}

}  // namespace sdsc
