#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <optional>
#include <span>
#include <vector>

#include "sdsc/affinity.hpp"
#include "sdsc/data_matrix.hpp"
#include "sdsc/errors.hpp"

namespace sdsc {

/// Sample standard deviations at or below this are treated as zero variance,
/// making the correlation undefined.
inline constexpr double kVarianceFloor = 1e-12;

/// Pearson correlation of two vectors of equal length >= 2. Returns nullopt
/// when either vector is constant (zero variance); callers treat that as 0.
/// The result is clamped to [-1, 1] against rounding overshoot.
template <typename DerivedA, typename DerivedB>
std::optional<double> pearson(const Eigen::MatrixBase<DerivedA>& x,
                              const Eigen::MatrixBase<DerivedB>& y) {
  if (x.size() != y.size()) {
    throw ValidationError("pearson: vectors differ in length");
  }
  if (x.size() < 2) {
    throw ValidationError("pearson: vectors must have length >= 2");
  }
  if (!x.allFinite() || !y.allFinite()) {
    throw ValidationError("pearson: vectors must be finite");
  }
  const auto xc = (x.array() - x.mean()).eval();
  const auto yc = (y.array() - y.mean()).eval();
  const double sx = std::sqrt(xc.square().sum());
  const double sy = std::sqrt(yc.square().sum());
  if (sx <= kVarianceFloor || sy <= kVarianceFloor) return std::nullopt;
  const double rho = (xc * yc).sum() / (sx * sy);
  return std::clamp(rho, -1.0, 1.0);
}

/// Sparse self-expressive coefficients: column i holds the per-point entries
/// (selected index, |correlation|) chosen while processing point i. Zero
/// diagonal; at most `budget` entries per column; values in [0, 1].
class CoefficientMatrix {
 public:
  struct Entry {
    int index;
    double value;
  };

  CoefficientMatrix(int size, int budget,
                    std::vector<std::vector<Entry>> columns,
                    int truncated_columns = 0);

  int size() const { return size_; }
  int budget() const { return budget_; }

  std::span<const Entry> column(int i) const;

  /// Coefficient recorded for (point, atom), 0 when absent.
  double coefficient(int point, int atom) const;

  std::size_t nonzeros() const;

  /// Columns that ended with fewer than `budget` entries because every
  /// remaining candidate correlation was undefined.
  int truncated_columns() const { return truncated_columns_; }

 private:
  int size_;
  int budget_;
  int truncated_columns_;
  std::vector<std::vector<Entry>> columns_;  // each sorted by index
};

/// Greedy per-point pursuit: for each point, `budget` rounds select the
/// not-yet-chosen column most (absolutely) Pearson-correlated with the
/// running residual, record |rho| as the coefficient, and subtract the
/// residual's projection on the chosen unit-norm column. Columns must be
/// unit-normalized. Points are processed independently and in parallel;
/// output does not depend on the thread count.
CoefficientMatrix imc_coefficients(const DataMatrix& data, int budget,
                                   int threads = 0);

/// w_ij = max(|c_ij|, |c_ji|); entries stay in [0, 1].
AffinityMatrix affinity_max(const CoefficientMatrix& coefficients);

/// w_ij = |c_ij| + |c_ji|; entries may reach 2, so downstream stages that
/// require [0, 1] inputs reject such graphs.
AffinityMatrix affinity_sum(const CoefficientMatrix& coefficients);

}  // namespace sdsc
