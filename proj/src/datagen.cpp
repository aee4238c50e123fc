#include "sdsc/datagen.hpp"

#include <Eigen/QR>
#include <string>

#include "sdsc/errors.hpp"
#include "sdsc/rng.hpp"

namespace sdsc {

namespace {

// Fills column by column so the draw order is part of the format.
Eigen::MatrixXd gaussian_matrix(Eigen::Index rows, Eigen::Index cols,
                                SeededRng& rng) {
  Eigen::MatrixXd m(rows, cols);
  for (Eigen::Index c = 0; c < cols; ++c) {
    for (Eigen::Index r = 0; r < rows; ++r) {
      m(r, c) = rng.normal();
    }
  }
  return m;
}

}  // namespace

int SubspaceSpec::total_points() const {
  int total = 0;
  for (int n : points_per) total += n;
  return total;
}

void SubspaceSpec::validate() const {
  if (subspaces < 1) throw ValidationError("subspace count must be >= 1");
  if (ambient_dim < 1) throw ValidationError("ambient dimension must be >= 1");
  if (static_cast<int>(sub_dims.size()) != subspaces ||
      static_cast<int>(points_per.size()) != subspaces) {
    throw ValidationError(
        "sub_dims and points_per must list one value per subspace");
  }
  for (int d : sub_dims) {
    if (d < 1) throw ValidationError("subspace dimension must be >= 1");
    if (d > ambient_dim) {
      throw ValidationError("subspace dimension " + std::to_string(d) +
                            " exceeds ambient dimension " +
                            std::to_string(ambient_dim));
    }
  }
  for (int n : points_per) {
    if (n < 1) throw ValidationError("points per subspace must be >= 1");
  }
  if (noise_sigma < 0.0) throw ValidationError("noise sigma must be >= 0");
}

DataMatrix generate(const SubspaceSpec& spec) {
  spec.validate();
  const int dim = spec.ambient_dim;
  const int total = spec.total_points();

  DataMatrix out;
  out.points.resize(dim, total);
  std::vector<int> labels(total);

  const SeededRng base(spec.seed);
  int offset = 0;
  for (int s = 0; s < spec.subspaces; ++s) {
    SeededRng rng = base.substream(static_cast<std::uint64_t>(s));
    const int sub_dim = spec.sub_dims[s];

    const Eigen::MatrixXd raw = gaussian_matrix(dim, sub_dim, rng);
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(raw);
    const Eigen::MatrixXd basis =
        qr.householderQ() * Eigen::MatrixXd::Identity(dim, sub_dim);

    for (int p = 0; p < spec.points_per[s]; ++p) {
      Eigen::VectorXd point(dim);
      double norm = 0.0;
      do {
        const Eigen::VectorXd coeffs = gaussian_matrix(sub_dim, 1, rng);
        point = basis * coeffs;
        if (spec.noise_sigma > 0.0) {
          point += spec.noise_sigma * gaussian_matrix(dim, 1, rng);
        }
        norm = point.norm();
      } while (norm == 0.0);  // zero draw has probability zero; redraw keeps
                              // the stream deterministic
      out.points.col(offset) = point / norm;
      labels[offset] = s;
      ++offset;
    }
  }
  out.labels = std::move(labels);
  return out;
}

}  // namespace sdsc
