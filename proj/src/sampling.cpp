#include "rpga/sampling.hpp"

#include "rpga/objectives.hpp"

#include <cmath>

namespace rpga {

namespace {

constexpr double kRayCap = 1099511627776.0;  // 2^40
constexpr int kBisections = 60;

}  // namespace

LevelSetSampler::LevelSetSampler(const Objective& obj, std::uint64_t seed)
    : obj_(obj), origin_value_(obj.value(Vector::zeros(obj.dimension()))), rng_(seed) {}

Eigen::VectorXd LevelSetSampler::random_unit_direction() {
  Eigen::VectorXd v(static_cast<Eigen::Index>(obj_.dimension()));
  double len = 0.0;
  while (!(len > 0.0)) {
    for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = normal_(rng_);
    len = v.norm();
  }
  return v / len;
}

LevelSetSample LevelSetSampler::next() {
  const Eigen::VectorXd dir = random_unit_direction();
  const double placement = uniform_(rng_);
  auto inside = [&](double t) {
    const double v = obj_.value(Vector(Eigen::VectorXd(t * dir)));
    return std::isfinite(v) && v <= origin_value_;
  };

  double lo = 0.0;
  double hi = 1.0;
  while (inside(hi)) {
    lo = hi;
    hi *= 2.0;
    if (hi > kRayCap) {
      return LevelSetSample{Vector(Eigen::VectorXd(placement * dir)), Vector(dir), true};
    }
  }
  for (int i = 0; i < kBisections; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (inside(mid)) lo = mid;
    else hi = mid;
  }
  return LevelSetSample{Vector(Eigen::VectorXd(placement * lo * dir)), Vector(Eigen::VectorXd(lo * dir)), false};
}

}  // namespace rpga
