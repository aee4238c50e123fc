#pragma once

#include <optional>

#include "sdsc/affinity.hpp"

namespace sdsc {

/// Similarity-level cutpoints; classification requires
/// 0 <= theta3 < theta2 < theta1 <= 1.
struct Thresholds {
  double theta1 = 0.8;  // extremely-strong boundary (exclusive lower end)
  double theta2 = 0.6;  // strong boundary
  double theta3 = 0.3;  // medium boundary; unused by the revision rules

  void validate() const;
};

enum class CorrelationLevel { ExtremelyStrong, Strong, Medium, Weak };

/// Level of a similarity value: (theta1, 1] extremely strong,
/// (theta2, theta1] strong, (theta3, theta2] medium, [0, theta3] weak.
CorrelationLevel classify(double w, const Thresholds& t);

/// Ternary-unstable test for a pair (i, j) seen through intermediate k.
/// Returns the first matching case, or nullopt:
///   1: both legs extremely strong while w_ij is not;
///   2: one leg extremely strong, the other strong, w_ij at most theta2;
///   3: both legs strong while w_ij is exactly zero.
std::optional<int> tur_case(double w_ij, double w_ik, double w_kj,
                            const Thresholds& t);

/// Revised similarity suggested by a matching case.
double tur_value(int tur, double w_ik, double w_kj);

/// Revises every pair through every intermediate: the result entry is the
/// maximum of the original w_ij and all case values over intermediates k,
/// with every read taken from the original matrix. Never decreases an entry;
/// output stays symmetric with zero diagonal and values in [0, 1].
AffinityMatrix pce_densify(const AffinityMatrix& affinity, const Thresholds& t,
                           int threads = 0);

}  // namespace sdsc
