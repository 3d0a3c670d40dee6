#pragma once

#include "rpga/core.hpp"
#include "rpga/objectives.hpp"

#include <stdexcept>

namespace rpga {

class LineSearchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LineSearchResult {
  double t_star = 0.0;
  double value_at_t = 0.0;
  /// g'(t_star) where g(t) = E(t * direction).
  double derivative_at_t = 0.0;
  std::size_t evaluations = 0;
};

/// Minimizes g(t) = E(t * direction) over all real t.
///
/// g is convex, so g' is monotone: a sign change of g' is bracketed by
/// doubling outward from [0, 1] (up to |t| = 2^60) and then bisected until
///   |g'(t)| <= tol * (1 + |t| * |g'(0)|)  and
///   |<E'(x), x>| <= tol * (1 + ||x|| * ||E'(x)||),  x = t * direction,
/// or the bracket can no longer be split in double precision. The returned
/// point is never worse than t = 1 or t = 0.
///
/// Throws LineSearchError for a zero direction, non-finite values, or when
/// g' keeps one sign over the whole expansion range (no minimizer on the line).
LineSearchResult minimize_ray(const Objective& obj, const Vector& direction, double tol);

}  // namespace rpga
