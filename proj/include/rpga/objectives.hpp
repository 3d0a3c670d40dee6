#pragma once

#include "rpga/core.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>

namespace rpga {

/// Constants of the uniform smoothness condition
///   E(x') - E(x) - <E'(x), x' - x> <= alpha ||x' - x||^q,  ||x' - x|| <= M,
/// together with the gradient bound M0 on the level set {E <= E(0)}.
struct SmoothnessConstants {
  double alpha = 0.0;
  double q = 2.0;
  /// nullopt: the inequality holds for every pair.
  std::optional<double> radius;
  /// nullopt: no analytic bound available.
  std::optional<double> m_zero;
};

struct MinimumInfo {
  Vector point;
  double value = 0.0;
};

/// Convex, differentiable objective on R^n.
///
/// `value` and `gradient` check the argument dimension and forward to the
/// implementation hooks; implementations may assume matching dimensions.
class Objective {
 public:
  virtual ~Objective() = default;

  virtual std::size_t dimension() const = 0;
  virtual std::string name() const = 0;

  double value(const Vector& x) const;
  Vector gradient(const Vector& x) const;

  virtual std::optional<SmoothnessConstants> analytic_constants() const { return std::nullopt; }
  virtual std::optional<MinimumInfo> minimum() const { return std::nullopt; }
  /// Closed-form modulus of smoothness rho(E, u) on the level set, when known.
  virtual std::optional<double> analytic_modulus(double /*u*/) const { return std::nullopt; }

 protected:
  virtual double do_value(const Eigen::VectorXd& x) const = 0;
  virtual Eigen::VectorXd do_gradient(const Eigen::VectorXd& x) const = 0;
};

/// Spectral norm of a dense matrix (largest singular value).
double operator_norm(const Eigen::MatrixXd& a);

/// E(x) = ||A x - b||^2. Smoothness: q = 2, alpha = ||A||_op^2, M infinite.
class QuadraticObjective final : public Objective {
 public:
  QuadraticObjective(Eigen::MatrixXd design, Eigen::VectorXd target);

  std::size_t dimension() const override { return static_cast<std::size_t>(design_.cols()); }
  std::string name() const override { return "quadratic"; }
  std::optional<SmoothnessConstants> analytic_constants() const override;
  std::optional<MinimumInfo> minimum() const override { return minimum_; }
  std::optional<double> analytic_modulus(double u) const override;

  const Eigen::MatrixXd& design() const { return design_; }
  const Eigen::VectorXd& target() const { return target_; }

 protected:
  double do_value(const Eigen::VectorXd& x) const override;
  Eigen::VectorXd do_gradient(const Eigen::VectorXd& x) const override;

 private:
  Eigen::MatrixXd design_;
  Eigen::VectorXd target_;
  double op_norm_ = 0.0;
  MinimumInfo minimum_;
};

/// E(x) = sum_i log(1 + exp(-y_i <X_i, x>)) with labels y_i in {-1, +1}.
/// Smoothness: q = 2, alpha = ||X||_op^2 / 8, M infinite.
class LogisticObjective final : public Objective {
 public:
  LogisticObjective(Eigen::MatrixXd features, Eigen::VectorXd labels);

  std::size_t dimension() const override { return static_cast<std::size_t>(features_.cols()); }
  std::string name() const override { return "logistic"; }
  std::optional<SmoothnessConstants> analytic_constants() const override;

  const Eigen::MatrixXd& features() const { return features_; }
  const Eigen::VectorXd& labels() const { return labels_; }

 protected:
  double do_value(const Eigen::VectorXd& x) const override;
  Eigen::VectorXd do_gradient(const Eigen::VectorXd& x) const override;

 private:
  Eigen::MatrixXd features_;
  Eigen::VectorXd labels_;
  double op_norm_ = 0.0;
};

/// E(x) = <c, x>. Convex with zero curvature; the level set is unbounded
/// unless c = 0, so it fails the boundedness requirement on purpose.
class LinearObjective final : public Objective {
 public:
  explicit LinearObjective(Eigen::VectorXd coefficients);

  std::size_t dimension() const override { return static_cast<std::size_t>(c_.size()); }
  std::string name() const override { return "linear"; }
  std::optional<SmoothnessConstants> analytic_constants() const override;
  std::optional<double> analytic_modulus(double) const override { return 0.0; }

 protected:
  double do_value(const Eigen::VectorXd& x) const override { return c_.dot(x); }
  Eigen::VectorXd do_gradient(const Eigen::VectorXd&) const override { return c_; }

 private:
  Eigen::VectorXd c_;
};

/// E(x) = sum_i |x_i - c_i|^p, p in (1, 2].
///
/// Uniformly smooth with exponent q = p on all of R^n; used to exercise the
/// engine with q < 2. alpha = C_p * n^(1 - p/2), where C_p is the sup over s
/// of |s+1|^p - |s|^p - p|s|^(p-1) sgn(s), located numerically at construction.
class PowerObjective final : public Objective {
 public:
  PowerObjective(Eigen::VectorXd center, double p);

  std::size_t dimension() const override { return static_cast<std::size_t>(center_.size()); }
  std::string name() const override { return "power"; }
  std::optional<SmoothnessConstants> analytic_constants() const override;
  std::optional<MinimumInfo> minimum() const override;

  double exponent() const { return p_; }
  /// The scalar constant C_p.
  double scalar_constant() const { return scalar_constant_; }

 protected:
  double do_value(const Eigen::VectorXd& x) const override;
  Eigen::VectorXd do_gradient(const Eigen::VectorXd& x) const override;

 private:
  Eigen::VectorXd center_;
  double p_;
  double scalar_constant_ = 1.0;
};

/// Maximum relative discrepancy between gradient(x) and central differences
/// with step h, per coordinate: |g_i - fd_i| / max(1, |g_i|, |fd_i|).
double finite_difference_check(const Objective& obj, const Vector& x, double h);

/// Sampled lower estimate of alpha for exponent q: the maximum of
///   (E(x') - E(x) - <E'(x), x' - x>) / ||x' - x||^q
/// over x in the level set and ||x' - x|| <= radius. Extra probe directions,
/// when given, are tried at every sampled base point.
double estimate_alpha(const Objective& obj, double q, std::size_t sample_pairs, double radius, std::uint64_t seed,
                      std::span<const Vector> extra_directions = {});

/// Sampled estimate of sup ||E'(x)|| over the level set {E(x) <= E(0)}.
/// nullopt when the level set is detected as unbounded.
std::optional<double> estimate_m_zero(const Objective& obj, std::size_t sample_count, std::uint64_t seed);

/// Plain-text instance loaders. Header `m n`, then m rows of n entries, then
/// one line of m targets (quadratic) or +/-1 labels (logistic).
QuadraticObjective load_quadratic(std::istream& in);
LogisticObjective load_logistic(std::istream& in);
void save_quadratic(std::ostream& out, const QuadraticObjective& obj);
void save_logistic(std::ostream& out, const LogisticObjective& obj);

}  // namespace rpga
