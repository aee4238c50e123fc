#include "sdsc/kmeans.hpp"

#include <limits>
#include <string>

#include "sdsc/errors.hpp"

namespace sdsc {

namespace {

Eigen::MatrixXd kmeanspp_centers(const Eigen::Ref<const Eigen::MatrixXd>& points,
                                 int k, SeededRng& rng) {
  const Eigen::Index m = points.rows();
  Eigen::MatrixXd centers(k, points.cols());
  std::vector<char> chosen(m, 0);

  Eigen::Index first = static_cast<Eigen::Index>(rng.uniform_index(m));
  centers.row(0) = points.row(first);
  chosen[first] = 1;

  Eigen::VectorXd min_sq =
      (points.rowwise() - centers.row(0)).rowwise().squaredNorm();
  for (int c = 1; c < k; ++c) {
    const double total = min_sq.sum();
    Eigen::Index pick = -1;
    if (total > 0.0) {
      const double target = rng.uniform01() * total;
      double prefix = 0.0;
      for (Eigen::Index i = 0; i < m; ++i) {
        prefix += min_sq[i];
        if (prefix >= target) {
          pick = i;
          break;
        }
      }
      if (pick < 0) pick = m - 1;  // guard against rounding in the prefix sum
    } else {
      // All points coincide with chosen centers; take the lowest free index.
      for (Eigen::Index i = 0; i < m; ++i) {
        if (!chosen[i]) {
          pick = i;
          break;
        }
      }
      if (pick < 0) pick = 0;
    }
    centers.row(c) = points.row(pick);
    chosen[pick] = 1;
    min_sq = min_sq.cwiseMin(
        (points.rowwise() - centers.row(c)).rowwise().squaredNorm());
  }
  return centers;
}

// Nearest-center assignment; returns the objective and whether labels moved.
std::pair<double, bool> assign(const Eigen::Ref<const Eigen::MatrixXd>& points,
                               const Eigen::MatrixXd& centers,
                               std::vector<int>& labels) {
  const Eigen::Index m = points.rows();
  const int k = static_cast<int>(centers.rows());
  double objective = 0.0;
  bool changed = false;
  for (Eigen::Index i = 0; i < m; ++i) {
    int best = 0;
    double best_sq = (points.row(i) - centers.row(0)).squaredNorm();
    for (int c = 1; c < k; ++c) {
      const double sq = (points.row(i) - centers.row(c)).squaredNorm();
      if (sq < best_sq) {
        best_sq = sq;
        best = c;
      }
    }
    objective += best_sq;
    if (labels[i] != best) {
      labels[i] = best;
      changed = true;
    }
  }
  return {objective, changed};
}

}  // namespace

KMeansResult kmeans(const Eigen::Ref<const Eigen::MatrixXd>& points,
                    int clusters, SeededRng rng, int restarts, int max_iters) {
  const Eigen::Index m = points.rows();
  if (clusters < 1) throw ValidationError("kmeans: clusters must be >= 1");
  if (clusters > m) {
    throw ValidationError("kmeans: clusters (" + std::to_string(clusters) +
                          ") exceeds point count (" + std::to_string(m) + ")");
  }
  if (!points.allFinite()) {
    throw ValidationError("kmeans: points contain non-finite values");
  }
  if (restarts < 1 || max_iters < 1) {
    throw ValidationError("kmeans: restarts and max_iters must be >= 1");
  }

  KMeansResult best;
  best.inertia = std::numeric_limits<double>::infinity();
  for (int r = 0; r < restarts; ++r) {
    SeededRng stream = rng.substream(static_cast<std::uint64_t>(r));
    Eigen::MatrixXd centers = kmeanspp_centers(points, clusters, stream);
    std::vector<int> labels(m, -1);
    std::vector<double> history;
    double objective = std::numeric_limits<double>::infinity();
    for (int iter = 0; iter < max_iters; ++iter) {
      auto [obj, changed] = assign(points, centers, labels);
      objective = obj;
      history.push_back(obj);
      if (!changed && iter > 0) break;

      Eigen::MatrixXd sums = Eigen::MatrixXd::Zero(clusters, points.cols());
      std::vector<int> counts(clusters, 0);
      for (Eigen::Index i = 0; i < m; ++i) {
        sums.row(labels[i]) += points.row(i);
        ++counts[labels[i]];
      }
      for (int c = 0; c < clusters; ++c) {
        if (counts[c] > 0) centers.row(c) = sums.row(c) / counts[c];
        // An empty cluster keeps its previous center.
      }
    }
    if (objective < best.inertia) {
      best.inertia = objective;
      best.assignment = ClusterAssignment{std::move(labels), clusters};
      best.objective_history = std::move(history);
    }
  }
  return best;
}

}  // namespace sdsc
