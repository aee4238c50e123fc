#include "sdsc/imc.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "sdsc/parallel.hpp"

namespace sdsc {

CoefficientMatrix::CoefficientMatrix(int size, int budget,
                                     std::vector<std::vector<Entry>> columns,
                                     int truncated_columns)
    : size_(size),
      budget_(budget),
      truncated_columns_(truncated_columns),
      columns_(std::move(columns)) {
  if (size < 0 || budget < 1) {
    throw ValidationError("coefficient matrix needs size >= 0, budget >= 1");
  }
  if (static_cast<int>(columns_.size()) != size_) {
    throw ValidationError("coefficient matrix column count mismatch");
  }
  for (int i = 0; i < size_; ++i) {
    auto& col = columns_[i];
    if (static_cast<int>(col.size()) > budget_) {
      throw ValidationError("column " + std::to_string(i) +
                            " exceeds the nonzero budget");
    }
    std::sort(col.begin(), col.end(),
              [](const Entry& a, const Entry& b) { return a.index < b.index; });
    int prev = -1;
    for (const Entry& e : col) {
      if (e.index < 0 || e.index >= size_ || e.index == i || e.index == prev ||
          !(e.value >= 0.0 && e.value <= 1.0)) {
        throw ValidationError("invalid coefficient entry in column " +
                              std::to_string(i));
      }
      prev = e.index;
    }
  }
}

std::span<const CoefficientMatrix::Entry> CoefficientMatrix::column(
    int i) const {
  if (i < 0 || i >= size_) {
    throw ValidationError("coefficient column index out of range");
  }
  return columns_[i];
}

double CoefficientMatrix::coefficient(int point, int atom) const {
  const auto col = column(point);
  auto it = std::lower_bound(
      col.begin(), col.end(), atom,
      [](const Entry& e, int idx) { return e.index < idx; });
  if (it != col.end() && it->index == atom) return it->value;
  return 0.0;
}

std::size_t CoefficientMatrix::nonzeros() const {
  std::size_t total = 0;
  for (const auto& col : columns_) total += col.size();
  return total;
}

CoefficientMatrix imc_coefficients(const DataMatrix& data, int budget,
                                   int threads) {
  const Eigen::MatrixXd& points = data.points;
  const int dim = data.dim();
  const int count = data.count();
  if (count < 2) throw ValidationError("imc needs at least 2 points");
  if (dim < 2) {
    throw ValidationError("imc needs ambient dimension >= 2 for correlations");
  }
  if (budget < 1) throw ValidationError("imc budget must be >= 1");
  if (budget >= count) {
    throw ValidationError("imc budget (" + std::to_string(budget) +
                          ") must be smaller than the point count (" +
                          std::to_string(count) + ")");
  }
  if (!data.columns_unit_norm(1e-6)) {
    throw ValidationError("imc requires unit-normalized data columns");
  }

  // Column-centered copy and centered norms: the correlation of the centered
  // residual against column j is (Xc^T psi_c)_j / (|psi_c| * |xc_j|).
  Eigen::MatrixXd centered = points;
  centered.array().rowwise() -= points.colwise().mean().array();
  Eigen::VectorXd centered_norm = centered.colwise().norm();

  std::vector<std::vector<CoefficientMatrix::Entry>> columns(count);
  std::vector<int> truncated_per_point(count, 0);

  parallel_blocks(count, threads, [&](int begin, int end) {
    Eigen::VectorXd residual(dim);
    Eigen::VectorXd residual_centered(dim);
    Eigen::VectorXd scores(count);
    std::vector<int> selected;
    selected.reserve(budget);

    for (int i = begin; i < end; ++i) {
      residual = points.col(i);
      selected.clear();
      auto& out = columns[i];
      out.reserve(budget);

      for (int round = 0; round < budget; ++round) {
        residual_centered = residual.array() - residual.mean();
        const double residual_norm = residual_centered.norm();
        if (residual_norm <= kVarianceFloor) break;  // all correlations undefined

        scores.noalias() = centered.transpose() * residual_centered;

        int best = -1;
        double best_score = -1.0;
        for (int j = 0; j < count; ++j) {
          if (j == i || centered_norm[j] <= kVarianceFloor) continue;
          if (std::find(selected.begin(), selected.end(), j) !=
              selected.end()) {
            continue;
          }
          const double score =
              std::abs(scores[j]) / (residual_norm * centered_norm[j]);
          if (score > best_score) {  // ties keep the lowest index
            best_score = score;
            best = j;
          }
        }
        if (best < 0) break;

        out.push_back({best, std::clamp(best_score, 0.0, 1.0)});
        selected.push_back(best);
        residual -= residual.dot(points.col(best)) * points.col(best);
      }
      if (static_cast<int>(out.size()) < budget) truncated_per_point[i] = 1;
    }
  });

  int truncated = 0;
  for (int t : truncated_per_point) truncated += t;
  return CoefficientMatrix(count, budget, std::move(columns), truncated);
}

AffinityMatrix affinity_max(const CoefficientMatrix& coefficients) {
  SymmetricSparseBuilder builder(coefficients.size());
  for (int i = 0; i < coefficients.size(); ++i) {
    for (const auto& e : coefficients.column(i)) {
      builder.merge_max(i, e.index, std::abs(e.value));
    }
  }
  return AffinityMatrix(builder.build(), 1.0);
}

AffinityMatrix affinity_sum(const CoefficientMatrix& coefficients) {
  SymmetricSparseBuilder builder(coefficients.size());
  for (int i = 0; i < coefficients.size(); ++i) {
    for (const auto& e : coefficients.column(i)) {
      builder.merge_add(i, e.index, std::abs(e.value));
    }
  }
  return AffinityMatrix(builder.build(), 2.0);
}

}  // namespace sdsc
