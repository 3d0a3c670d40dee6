#include "rpga/core.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>

namespace rpga {

namespace {

void require_valid(const Eigen::VectorXd& v) {
  if (v.size() < 1) throw std::invalid_argument("vector dimension must be at least 1");
  if (!v.allFinite()) throw std::invalid_argument("vector entries must be finite");
}

}  // namespace

Vector::Vector(Eigen::VectorXd values) : values_(std::move(values)) { require_valid(values_); }

Vector::Vector(std::initializer_list<double> values)
    : values_(Eigen::Map<const Eigen::VectorXd>(values.begin(), static_cast<Eigen::Index>(values.size()))) {
  require_valid(values_);
}

Vector::Vector(std::span<const double> values)
    : values_(Eigen::Map<const Eigen::VectorXd>(values.data(), static_cast<Eigen::Index>(values.size()))) {
  require_valid(values_);
}

Vector Vector::zeros(std::size_t n) { return Vector(Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n))); }

Vector Vector::basis(std::size_t n, std::size_t i) {
  if (i >= n) throw std::out_of_range("basis index out of range");
  Eigen::VectorXd v = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
  v[static_cast<Eigen::Index>(i)] = 1.0;
  return Vector(std::move(v));
}

bool operator==(const Vector& a, const Vector& b) {
  return a.size() == b.size() && a.values_ == b.values_;
}

void require_same_dimension(std::size_t a, std::size_t b, std::string_view what) {
  if (a != b) throw DimensionMismatch(fmt::format("{}: dimension mismatch ({} vs {})", what, a, b));
}

double dot(const Vector& a, const Vector& b) {
  require_same_dimension(a.size(), b.size(), "dot");
  return a.values().dot(b.values());
}

Vector axpy(double s, const Vector& a, const Vector& b) {
  require_same_dimension(a.size(), b.size(), "axpy");
  if (!std::isfinite(s)) throw std::invalid_argument("axpy: scale must be finite");
  return Vector(Eigen::VectorXd(s * a.values() + b.values()));
}

double norm(const Vector& a) { return a.values().norm(); }

Vector scale(double s, const Vector& a) {
  if (!std::isfinite(s)) throw std::invalid_argument("scale: factor must be finite");
  return Vector(Eigen::VectorXd(s * a.values()));
}

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::rescaled: return "rescaled";
    case Variant::weak_rescaled: return "weak_rescaled";
    case Variant::no_rescale_baseline: return "no_rescale_baseline";
  }
  return "unknown";
}

Variant parse_variant(std::string_view name) {
  if (name == "rescaled") return Variant::rescaled;
  if (name == "weak_rescaled") return Variant::weak_rescaled;
  if (name == "no_rescale_baseline") return Variant::no_rescale_baseline;
  throw std::invalid_argument(fmt::format("unknown variant '{}'", name));
}

std::string_view to_string(Termination t) {
  switch (t) {
    case Termination::gradient_zero: return "gradient_zero";
    case Termination::max_iterations: return "max_iterations";
    case Termination::degenerate_selection: return "degenerate_selection";
    case Termination::line_search_failure: return "line_search_failure";
  }
  return "unknown";
}

double RunConfig::mu_lower_bound() const {
  if (!m_zero || !us_radius) return 1.0;
  return std::max(1.0, *m_zero * std::pow(*us_radius, 1.0 - q) / alpha);
}

double RunConfig::mu_at(std::size_t k) const {
  if (variant != Variant::weak_rescaled || k == 0) return mu_sequence.front();
  return mu_sequence[(k - 1) % mu_sequence.size()];
}

double RunConfig::weakness_at(std::size_t k) const {
  if (variant != Variant::weak_rescaled || k == 0) return 1.0;
  return weakness_sequence[(k - 1) % weakness_sequence.size()];
}

double RunConfig::effective_gradient_tolerance() const {
  if (gradient_tolerance) return *gradient_tolerance;
  return 1e-10 * (1.0 + m_zero.value_or(0.0));
}

void RunConfig::validate() const {
  if (!(q > 1.0 && q <= 2.0)) throw ConfigError(fmt::format("q must lie in (1, 2], got {}", q));
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw ConfigError(fmt::format("alpha must be positive, got {}", alpha));
  if (m_zero && !(*m_zero >= 0.0 && std::isfinite(*m_zero)))
    throw ConfigError(fmt::format("m_zero must be a nonnegative real, got {}", *m_zero));
  if (us_radius && !(*us_radius > 0.0 && std::isfinite(*us_radius)))
    throw ConfigError(fmt::format("us_radius must be positive, got {}", *us_radius));
  if (mu_sequence.empty()) throw ConfigError("mu sequence is empty");
  if (weakness_sequence.empty()) throw ConfigError("weakness sequence is empty");

  const double mu_min = mu_lower_bound();
  const std::size_t mu_used = variant == Variant::weak_rescaled ? mu_sequence.size() : 1;
  for (std::size_t i = 0; i < mu_used; ++i) {
    const double mu = mu_sequence[i];
    if (!std::isfinite(mu) || !(mu > mu_min))
      throw ConfigError(fmt::format("mu = {} violates mu > {}", mu, mu_min));
  }
  for (double w : weakness_sequence) {
    if (!(w > 0.0 && w <= 1.0)) throw ConfigError(fmt::format("weakness {} outside (0, 1]", w));
  }
  if (gradient_tolerance && !(*gradient_tolerance > 0.0))
    throw ConfigError("gradient_tolerance must be positive");
  if (!(linesearch_tolerance > 0.0)) throw ConfigError("linesearch_tolerance must be positive");
}

}  // namespace rpga
