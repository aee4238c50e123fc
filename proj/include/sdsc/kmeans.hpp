#pragma once

#include <Eigen/Dense>
#include <vector>

#include "sdsc/cluster_assignment.hpp"
#include "sdsc/rng.hpp"

namespace sdsc {

struct KMeansResult {
  ClusterAssignment assignment;
  double inertia = 0.0;  // within-cluster sum of squares of the best restart
  /// Objective after each assignment step of the winning restart;
  /// non-increasing by construction.
  std::vector<double> objective_history;
};

/// Lloyd's algorithm with k-means++ seeding. Rows of `points` are samples.
/// Runs `restarts` independent initializations on substreams of `rng` and
/// keeps the lowest-inertia result; deterministic given the seed. Ties in
/// distance go to the lowest center index.
KMeansResult kmeans(const Eigen::Ref<const Eigen::MatrixXd>& points,
                    int clusters, SeededRng rng, int restarts = 20,
                    int max_iters = 300);

}  // namespace sdsc
