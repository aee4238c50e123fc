#include "sdsc/affinity.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "sdsc/errors.hpp"

namespace sdsc {

AffinityMatrix::AffinityMatrix(SymmetricSparse graph, double limit)
    : graph_(std::move(graph)), limit_(limit) {
  if (limit_ <= 0.0 || !std::isfinite(limit_)) {
    throw ValidationError("affinity limit must be positive and finite");
  }
  if (graph_.allows_diagonal()) {
    throw ValidationError("affinity matrix must have a zero diagonal");
  }
  for (const auto& e : graph_.entries()) {
    if (!std::isfinite(e.value) || e.value < 0.0 || e.value > limit_) {
      throw ValidationError("affinity value " + std::to_string(e.value) +
                            " at (" + std::to_string(e.row) + ", " +
                            std::to_string(e.col) + ") outside [0, " +
                            std::to_string(limit_) + "]");
    }
  }
}

double AffinityMatrix::max_entry() const {
  double m = 0.0;
  for (const auto& e : graph_.entries()) m = std::max(m, e.value);
  return m;
}

}  // namespace sdsc
