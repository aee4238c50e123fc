#include "sdsc/cluster_assignment.hpp"

#include <string>

#include "sdsc/errors.hpp"

namespace sdsc {

void ClusterAssignment::validate() const {
  if (num_clusters < 1) {
    throw ValidationError("cluster assignment needs at least one cluster");
  }
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] < 0 || labels[i] >= num_clusters) {
      throw ValidationError("label " + std::to_string(labels[i]) +
                            " at point " + std::to_string(i) +
                            " outside [0, " + std::to_string(num_clusters) +
                            ")");
    }
  }
}

}  // namespace sdsc
