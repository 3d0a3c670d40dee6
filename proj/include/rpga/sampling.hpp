#pragma once

#include "rpga/core.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <random>

namespace rpga {

class Objective;

struct LevelSetSample {
  /// Point strictly along the ray, uniformly placed between 0 and the boundary.
  Vector interior;
  /// Last point of the ray that is still inside the level set.
  Vector boundary;
  /// The ray never left the level set before the growth cap.
  bool unbounded = false;
};

/// Draws points of the level set {x : E(x) <= E(0)} along random rays from
/// the origin. The set is convex and contains 0, so every point between the
/// origin and the ray's exit point belongs to it. Deterministic per seed.
///
/// Rays that do not exit before 2^40 are reported as unbounded and clamped
/// to unit length.
class LevelSetSampler {
 public:
  LevelSetSampler(const Objective& obj, std::uint64_t seed);

  LevelSetSample next();
  Eigen::VectorXd random_unit_direction();

 private:
  const Objective& obj_;
  double origin_value_;
  std::mt19937_64 rng_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

}  // namespace rpga
