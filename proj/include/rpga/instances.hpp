#pragma once

#include "rpga/objectives.hpp"

#include <cstdint>

namespace rpga {

/// ||A x - b||^2 in R^n with A = U diag(s) V^T, singular values spaced
/// geometrically from 1 down to 1/condition, and b = A x_bar for a Gaussian
/// x_bar. ||A||_op = 1, E(x_bar) = 0.
QuadraticObjective make_conditioned_quadratic(std::size_t n, double condition, std::uint64_t seed);

/// ||A x - b||^2 with a Gaussian n x n matrix scaled by 1/sqrt(n) and
/// b = A x_bar for a Gaussian x_bar.
QuadraticObjective make_gaussian_quadratic(std::size_t n, std::uint64_t seed);

/// Logistic loss on m Gaussian feature rows in R^n; labels follow a random
/// linear rule with 10% of them flipped so the data are not separable.
LogisticObjective make_logistic(std::size_t m, std::size_t n, std::uint64_t seed);

/// <c, x> with Gaussian c.
LinearObjective make_linear(std::size_t n, std::uint64_t seed);

/// sum |x_i - c_i|^p with Gaussian c.
PowerObjective make_power(std::size_t n, double p, std::uint64_t seed);

}  // namespace rpga
