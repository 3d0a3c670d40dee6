#pragma once

#include <Eigen/Core>

namespace rpga {

struct L1Representation {
  Eigen::VectorXd coefficients;
  double l1_norm = 0.0;
};

/// Minimum-l1 solution of atoms * c = x via the split LP
///   min 1'(u + v)  s.t.  atoms (u - v) = x,  u, v >= 0,
/// solved with a dense two-phase tableau simplex (Bland's rule).
///
/// Sized for small problems (tens of rows, a few hundred columns). Throws
/// std::domain_error when the system is infeasible.
L1Representation min_l1_representation(const Eigen::MatrixXd& atoms, const Eigen::VectorXd& x);

}  // namespace rpga
