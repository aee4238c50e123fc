#pragma once

#include <cstddef>

#include "sdsc/symmetric_sparse.hpp"

namespace sdsc {

/// Symmetric nonnegative similarity graph with zero diagonal. Entries lie in
/// [0, limit]; limit is 1 for max-symmetrized affinities and 2 for
/// sum-symmetrized ones (|c_ij| + |c_ji| can reach 2).
class AffinityMatrix {
 public:
  AffinityMatrix() = default;
  explicit AffinityMatrix(SymmetricSparse graph, double limit = 1.0);

  int size() const { return graph_.size(); }
  double limit() const { return limit_; }

  /// Similarity between i and j; 0 when no edge is stored.
  double value(int i, int j) const { return graph_.value_or(i, j, 0.0); }

  std::size_t nonzero_pairs() const { return graph_.entry_count(); }
  std::size_t nonzero_elements() const { return graph_.element_count(); }
  double max_entry() const;

  const SymmetricSparse& graph() const { return graph_; }

 private:
  SymmetricSparse graph_;
  double limit_ = 1.0;
};

}  // namespace sdsc
