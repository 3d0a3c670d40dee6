#include "rpga/instances.hpp"

#include <Eigen/QR>

#include <cmath>
#include <random>

namespace rpga {

namespace {

class Gaussian {
 public:
  explicit Gaussian(std::uint64_t seed) : rng_(seed) {}

  Eigen::MatrixXd matrix(std::size_t rows, std::size_t cols) {
    Eigen::MatrixXd m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      for (Eigen::Index i = 0; i < m.rows(); ++i) m(i, j) = normal_(rng_);
    return m;
  }
  Eigen::VectorXd vector(std::size_t n) { return matrix(n, 1).col(0); }
  double uniform() { return uniform_(rng_); }

 private:
  std::mt19937_64 rng_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

Eigen::MatrixXd orthogonal(Gaussian& g, std::size_t n) {
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g.matrix(n, n));
  return qr.householderQ() * Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
}

}  // namespace

QuadraticObjective make_conditioned_quadratic(std::size_t n, double condition, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("make_conditioned_quadratic: n must be positive");
  if (!(condition >= 1.0)) throw std::invalid_argument("make_conditioned_quadratic: condition must be >= 1");
  Gaussian g(seed);
  const Eigen::MatrixXd u = orthogonal(g, n);
  const Eigen::MatrixXd v = orthogonal(g, n);
  Eigen::VectorXd s(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const double frac = n == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(n - 1);
    s[static_cast<Eigen::Index>(i)] = std::pow(condition, -frac);
  }
  Eigen::MatrixXd a = u * s.asDiagonal() * v.transpose();
  const Eigen::VectorXd xbar = g.vector(n);
  Eigen::VectorXd b = a * xbar;
  return QuadraticObjective(std::move(a), std::move(b));
}

QuadraticObjective make_gaussian_quadratic(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("make_gaussian_quadratic: n must be positive");
  Gaussian g(seed);
  Eigen::MatrixXd a = g.matrix(n, n) / std::sqrt(static_cast<double>(n));
  const Eigen::VectorXd xbar = g.vector(n);
  Eigen::VectorXd b = a * xbar;
  return QuadraticObjective(std::move(a), std::move(b));
}

LogisticObjective make_logistic(std::size_t m, std::size_t n, std::uint64_t seed) {
  if (m == 0 || n == 0) throw std::invalid_argument("make_logistic: m and n must be positive");
  Gaussian g(seed);
  Eigen::MatrixXd x = g.matrix(m, n);
  const Eigen::VectorXd w = g.vector(n);
  Eigen::VectorXd labels(static_cast<Eigen::Index>(m));
  for (Eigen::Index i = 0; i < labels.size(); ++i) {
    const double sign = x.row(i).dot(w) >= 0.0 ? 1.0 : -1.0;
    labels[i] = g.uniform() < 0.1 ? -sign : sign;
  }
  return LogisticObjective(std::move(x), std::move(labels));
}

LinearObjective make_linear(std::size_t n, std::uint64_t seed) {
  Gaussian g(seed);
  return LinearObjective(g.vector(n));
}

PowerObjective make_power(std::size_t n, double p, std::uint64_t seed) {
  Gaussian g(seed);
  return PowerObjective(g.vector(n), p);
}

}  // namespace rpga
