#include "rpga/simplex.hpp"

#include <fmt/format.h>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace rpga {

namespace {

constexpr double kPivotEps = 1e-11;
constexpr std::size_t kMaxPivots = 100000;

class Tableau {
 public:
  // rows: constraints 0..m-1, row m is the reduced-cost row; last column is the rhs.
  Tableau(Eigen::Index m, Eigen::Index cols) : t_(Eigen::MatrixXd::Zero(m + 1, cols + 1)), basis_(m) {}

  Eigen::MatrixXd& t() { return t_; }
  std::vector<Eigen::Index>& basis() { return basis_; }
  Eigen::Index rows() const { return t_.rows() - 1; }
  Eigen::Index rhs() const { return t_.cols() - 1; }

  void pivot(Eigen::Index row, Eigen::Index col) {
    t_.row(row) /= t_(row, col);
    for (Eigen::Index i = 0; i < t_.rows(); ++i) {
      if (i == row) continue;
      const double f = t_(i, col);
      if (f != 0.0) t_.row(i) -= f * t_.row(row);
    }
    basis_[static_cast<std::size_t>(row)] = col;
  }

  // Bland's rule over columns [0, allowed). Returns false if the pivot limit is hit.
  bool optimize(Eigen::Index allowed) {
    const Eigen::Index m = rows();
    for (std::size_t iter = 0; iter < kMaxPivots; ++iter) {
      Eigen::Index entering = -1;
      for (Eigen::Index j = 0; j < allowed; ++j) {
        if (t_(m, j) < -kPivotEps) {
          entering = j;
          break;
        }
      }
      if (entering < 0) return true;

      Eigen::Index leaving = -1;
      double best = std::numeric_limits<double>::infinity();
      for (Eigen::Index i = 0; i < m; ++i) {
        const double a = t_(i, entering);
        if (a <= kPivotEps) continue;
        const double ratio = t_(i, rhs()) / a;
        if (ratio < best - 1e-14 ||
            (std::abs(ratio - best) <= 1e-14 && basis_[static_cast<std::size_t>(i)] <
                                                    basis_[static_cast<std::size_t>(leaving)])) {
          best = ratio;
          leaving = i;
        }
      }
      // The l1 objective is bounded below by zero, so an unbounded ray cannot occur.
      if (leaving < 0) throw std::logic_error("simplex: unbounded direction in a bounded LP");
      pivot(leaving, entering);
    }
    return false;
  }

 private:
  Eigen::MatrixXd t_;
  std::vector<Eigen::Index> basis_;
};

}  // namespace

L1Representation min_l1_representation(const Eigen::MatrixXd& atoms, const Eigen::VectorXd& x) {
  if (atoms.rows() != x.size())
    throw std::invalid_argument(fmt::format("min_l1_representation: {} rows vs {} entries", atoms.rows(), x.size()));

  const Eigen::Index m = atoms.rows();
  const Eigen::Index count = atoms.cols();
  const Eigen::Index structural = 2 * count;
  Tableau tab(m, structural + m);
  Eigen::MatrixXd& t = tab.t();

  for (Eigen::Index i = 0; i < m; ++i) {
    const double sign = x[i] < 0.0 ? -1.0 : 1.0;
    t.row(i).head(count) = sign * atoms.row(i);
    t.row(i).segment(count, count) = -sign * atoms.row(i);
    t(i, structural + i) = 1.0;
    t(i, tab.rhs()) = sign * x[i];
    tab.basis()[static_cast<std::size_t>(i)] = structural + i;
  }

  // Phase 1: minimize the artificial sum.
  for (Eigen::Index i = 0; i < m; ++i) t.row(m) -= t.row(i);
  for (Eigen::Index i = 0; i < m; ++i) t(m, structural + i) = 0.0;
  if (!tab.optimize(structural + m)) throw std::runtime_error("simplex: pivot limit reached in phase 1");

  const double infeasibility = -t(m, tab.rhs());
  if (infeasibility > 1e-9 * (1.0 + x.lpNorm<1>()))
    throw std::domain_error(fmt::format("point is not in the span of the atoms (residual {:.3g})", infeasibility));

  // Drive remaining artificials out of the basis where possible.
  for (Eigen::Index i = 0; i < m; ++i) {
    if (tab.basis()[static_cast<std::size_t>(i)] < structural) continue;
    for (Eigen::Index j = 0; j < structural; ++j) {
      if (std::abs(t(i, j)) > 1e-9) {
        tab.pivot(i, j);
        break;
      }
    }
  }

  // Phase 2: unit cost on every structural column.
  t.row(m).setZero();
  t.row(m).head(structural).setOnes();
  for (Eigen::Index i = 0; i < m; ++i) {
    if (tab.basis()[static_cast<std::size_t>(i)] < structural) t.row(m) -= t.row(i);
  }
  if (!tab.optimize(structural)) throw std::runtime_error("simplex: pivot limit reached in phase 2");

  Eigen::VectorXd split = Eigen::VectorXd::Zero(structural);
  for (Eigen::Index i = 0; i < m; ++i) {
    const Eigen::Index b = tab.basis()[static_cast<std::size_t>(i)];
    if (b < structural) split[b] = std::max(0.0, t(i, tab.rhs()));
  }
  L1Representation result;
  result.coefficients = split.head(count) - split.tail(count);
  result.l1_norm = result.coefficients.lpNorm<1>();
  return result;
}

}  // namespace rpga
