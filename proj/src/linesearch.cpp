#include "rpga/linesearch.hpp"

#include <fmt/format.h>

#include <cmath>
#include <map>

namespace rpga {

namespace {

constexpr double kExpansionCap = 1152921504606846976.0;  // 2^60

class RayFunction {
 public:
  RayFunction(const Objective& obj, const Vector& direction) : obj_(obj), direction_(direction) {}

  double derivative(double t) {
    ++evaluations_;
    const Vector g = obj_.gradient(scale(t, direction_));
    const double d = dot(g, direction_);
    if (!std::isfinite(d)) throw LineSearchError(fmt::format("line search: non-finite derivative at t = {}", t));
    gradient_norms_[t] = norm(g);
    return d;
  }

  /// ||E'(t d)|| from an earlier derivative evaluation at t.
  double gradient_norm(double t) const { return gradient_norms_.at(t); }

  double value(double t) {
    ++evaluations_;
    const double v = obj_.value(scale(t, direction_));
    if (!std::isfinite(v)) throw LineSearchError(fmt::format("line search: non-finite value at t = {}", t));
    return v;
  }

  std::size_t evaluations() const { return evaluations_; }

 private:
  const Objective& obj_;
  const Vector& direction_;
  std::size_t evaluations_ = 0;
  std::map<double, double> gradient_norms_;
};

}  // namespace

LineSearchResult minimize_ray(const Objective& obj, const Vector& direction, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("minimize_ray: tolerance must be positive");
  if (norm(direction) == 0.0) throw LineSearchError("line search: zero direction");

  RayFunction ray(obj, direction);
  const double d0 = ray.derivative(0.0);
  const double d1 = ray.derivative(1.0);
  const double threshold_scale = std::abs(d0);
  const double direction_norm = norm(direction);
  // Both the derivative tolerance and the first-order condition at x = t d:
  //   |<E'(x), x>| = |t g'(t)| <= tol (1 + ||x|| ||E'(x)||).
  auto certified = [&](double t, double d) {
    const double at = std::abs(t);
    return std::abs(d) <= tol * (1.0 + at * threshold_scale) &&
           at * std::abs(d) <= tol * (1.0 + at * direction_norm * ray.gradient_norm(t));
  };

  // Bracket [lo, hi] with g'(lo) <= 0 <= g'(hi).
  double lo = 0.0;
  double hi = 1.0;
  double dlo = d0;
  double dhi = d1;
  if (d1 < 0.0) {
    while (dhi < 0.0) {
      lo = hi;
      dlo = dhi;
      hi *= 2.0;
      if (hi > kExpansionCap) throw LineSearchError("line search: objective decreases along the whole ray");
      dhi = ray.derivative(hi);
    }
  } else if (d0 > 0.0) {
    hi = 0.0;
    dhi = d0;
    lo = -1.0;
    dlo = ray.derivative(lo);
    while (dlo > 0.0) {
      hi = lo;
      dhi = dlo;
      lo *= 2.0;
      if (-lo > kExpansionCap) throw LineSearchError("line search: objective decreases along the whole ray");
      dlo = ray.derivative(lo);
    }
  }

  double t = std::abs(dlo) <= std::abs(dhi) ? lo : hi;
  double dt = std::abs(dlo) <= std::abs(dhi) ? dlo : dhi;
  while (!certified(t, dt)) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double dmid = ray.derivative(mid);
    if (dmid < 0.0) {
      lo = mid;
      dlo = dmid;
    } else {
      hi = mid;
      dhi = dmid;
    }
    t = mid;
    dt = dmid;
    if (std::abs(dlo) < std::abs(dt)) {
      t = lo;
      dt = dlo;
    }
    if (std::abs(dhi) < std::abs(dt)) {
      t = hi;
      dt = dhi;
    }
  }

  LineSearchResult result{t, ray.value(t), dt, 0};
  // Never return something worse than the un-rescaled point or the origin.
  for (double candidate : {1.0, 0.0}) {
    if (candidate == t) continue;
    const double v = ray.value(candidate);
    if (v < result.value_at_t) result = LineSearchResult{candidate, v, ray.derivative(candidate), 0};
  }
  result.evaluations = ray.evaluations();
  return result;
}

}  // namespace rpga
