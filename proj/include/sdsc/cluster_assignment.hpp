#pragma once

#include <vector>

namespace sdsc {

/// Per-point cluster labels over `num_clusters` clusters; labels lie in
/// [0, num_clusters).
struct ClusterAssignment {
  std::vector<int> labels;
  int num_clusters = 0;

  int size() const { return static_cast<int>(labels.size()); }
  void validate() const;  // throws ValidationError on out-of-range labels
};

}  // namespace sdsc
