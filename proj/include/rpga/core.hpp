#pragma once

#include <Eigen/Core>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rpga {

/// Raised when two operands do not live in the same space.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a run configuration violates its admissibility constraints.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense coordinate vector in R^n.
///
/// Every instance has dimension >= 1 and only finite entries. Values are
/// immutable once built; arithmetic returns new vectors.
class Vector {
 public:
  explicit Vector(Eigen::VectorXd values);
  Vector(std::initializer_list<double> values);
  explicit Vector(std::span<const double> values);

  static Vector zeros(std::size_t n);
  static Vector basis(std::size_t n, std::size_t i);

  std::size_t size() const { return static_cast<std::size_t>(values_.size()); }
  double operator[](std::size_t i) const { return values_[static_cast<Eigen::Index>(i)]; }
  const Eigen::VectorXd& values() const { return values_; }
  std::span<const double> entries() const { return {values_.data(), size()}; }

  friend bool operator==(const Vector& a, const Vector& b);

 private:
  Eigen::VectorXd values_;
};

double dot(const Vector& a, const Vector& b);
/// s*a + b.
Vector axpy(double s, const Vector& a, const Vector& b);
double norm(const Vector& a);
Vector scale(double s, const Vector& a);

void require_same_dimension(std::size_t a, std::size_t b, std::string_view what);

enum class Variant { rescaled, weak_rescaled, no_rescale_baseline };

std::string_view to_string(Variant v);
Variant parse_variant(std::string_view name);

/// All parameters of a greedy run.
///
/// Sequences shorter than the run are cycled: step k (1-based) uses entry
/// (k-1) mod size. The rescaled and baseline variants use the first mu and
/// a weakness of exactly 1.
struct RunConfig {
  double q = 2.0;
  double alpha = 1.0;
  /// Gradient bound on the level set; nullopt means unknown.
  std::optional<double> m_zero;
  /// Radius on which the smoothness inequality holds; nullopt means infinite.
  std::optional<double> us_radius;
  std::vector<double> mu_sequence{2.0};
  std::vector<double> weakness_sequence{1.0};
  std::size_t max_iterations = 200;
  /// nullopt selects 1e-10 * (1 + M0) (M0 taken as 0 when unknown).
  std::optional<double> gradient_tolerance;
  double linesearch_tolerance = 1e-12;
  Variant variant = Variant::rescaled;

  /// Strict lower bound every mu must exceed: max{1, M0 * M^(1-q) / alpha}.
  double mu_lower_bound() const;
  double mu_at(std::size_t k) const;
  double weakness_at(std::size_t k) const;
  double effective_gradient_tolerance() const;

  /// Throws ConfigError describing the first violated constraint.
  void validate() const;
};

enum class Termination { gradient_zero, max_iterations, degenerate_selection, line_search_failure };

std::string_view to_string(Termination t);

struct IterationRecord {
  std::size_t k = 0;
  std::size_t atom_index = 0;
  /// <E'(x_{k-1}), phi_{j_k}>, signed.
  double inner_product = 0.0;
  /// max over atoms of |<E'(x_{k-1}), phi>| at selection time.
  double sup_inner = 0.0;
  double mu = 0.0;
  double weakness = 1.0;
  double lambda_k = 0.0;
  double t_k = 1.0;
  /// E(x_hat_k), the value before rescaling.
  double intermediate_value = 0.0;
  /// E(x_k).
  double objective_value = 0.0;
  /// E(x_k) - E(x_bar), when the minimum value is known.
  std::optional<double> error_k;
  /// <E'(x_k), x_k>; zero up to the line-search tolerance after rescaling.
  double orthogonality = 0.0;
  double point_norm = 0.0;
  double gradient_norm = 0.0;
};

struct RunTrace {
  std::vector<IterationRecord> records;
  Termination termination = Termination::max_iterations;
  Vector final_point = Vector::zeros(1);
  /// E(x_0) = E(0).
  double initial_value = 0.0;
  std::optional<double> minimum_value;
  Variant variant = Variant::rescaled;
  /// Diagnostic for error terminations; empty otherwise.
  std::string message;
};

}  // namespace rpga
