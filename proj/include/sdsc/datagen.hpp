#pragma once

#include <cstdint>
#include <vector>

#include "sdsc/data_matrix.hpp"

namespace sdsc {

/// Parameters for a synthetic union-of-subspaces sample: `subspaces` linear
/// subspaces of R^ambient_dim with dimensions `sub_dims`, each populated with
/// `points_per` points.
struct SubspaceSpec {
  int subspaces = 1;
  int ambient_dim = 1;
  std::vector<int> sub_dims;    // one per subspace, each in [1, ambient_dim]
  std::vector<int> points_per;  // one per subspace, each >= 1
  double noise_sigma = 0.0;     // std of additive isotropic noise
  std::uint64_t seed = 0;

  int total_points() const;
  void validate() const;
};

/// Draws a Haar-random orthonormal basis per subspace (QR of an iid Gaussian
/// matrix), samples points as basis * N(0, I) coefficients, adds isotropic
/// noise, unit-normalizes every point, and labels it with its subspace.
/// Deterministic given the seed; each subspace uses an independent substream.
DataMatrix generate(const SubspaceSpec& spec);

}  // namespace sdsc
