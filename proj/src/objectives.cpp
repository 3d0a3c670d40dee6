#include "rpga/objectives.hpp"

#include "rpga/sampling.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <random>
#include <string>

namespace rpga {

double Objective::value(const Vector& x) const {
  require_same_dimension(dimension(), x.size(), name() + " value");
  return do_value(x.values());
}

Vector Objective::gradient(const Vector& x) const {
  require_same_dimension(dimension(), x.size(), name() + " gradient");
  return Vector(do_gradient(x.values()));
}

double operator_norm(const Eigen::MatrixXd& a) {
  if (a.size() == 0) return 0.0;
  // Largest eigenvalue of the smaller Gram matrix.
  const Eigen::MatrixXd gram = a.rows() < a.cols() ? Eigen::MatrixXd(a * a.transpose())
                                                   : Eigen::MatrixXd(a.transpose() * a);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(gram, Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(0.0, eig.eigenvalues().maxCoeff()));
}

// ---------------------------------------------------------------- quadratic

QuadraticObjective::QuadraticObjective(Eigen::MatrixXd design, Eigen::VectorXd target)
    : design_(std::move(design)), target_(std::move(target)), minimum_{Vector::zeros(1), 0.0} {
  if (design_.rows() < 1 || design_.cols() < 1) throw std::invalid_argument("quadratic: empty design matrix");
  if (design_.rows() != target_.size())
    throw DimensionMismatch(fmt::format("quadratic: {} rows vs {} targets", design_.rows(), target_.size()));
  if (!design_.allFinite() || !target_.allFinite()) throw std::invalid_argument("quadratic: non-finite data");
  op_norm_ = operator_norm(design_);
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(design_);
  Vector xbar(Eigen::VectorXd(cod.solve(target_)));
  const double v = do_value(xbar.values());
  minimum_ = MinimumInfo{std::move(xbar), v};
}

double QuadraticObjective::do_value(const Eigen::VectorXd& x) const {
  return (design_ * x - target_).squaredNorm();
}

Eigen::VectorXd QuadraticObjective::do_gradient(const Eigen::VectorXd& x) const {
  return 2.0 * (design_.transpose() * (design_ * x - target_));
}

std::optional<SmoothnessConstants> QuadraticObjective::analytic_constants() const {
  // sup ||2 A^T r|| over the level set is 2 ||A|| ||P b||, P the projector onto range(A).
  const double projected = (design_ * minimum_.point.values()).norm();
  return SmoothnessConstants{op_norm_ * op_norm_, 2.0, std::nullopt, 2.0 * op_norm_ * projected};
}

std::optional<double> QuadraticObjective::analytic_modulus(double u) const { return u * u * op_norm_ * op_norm_; }

// ----------------------------------------------------------------- logistic

namespace {

// log(1 + exp(z)) without overflow.
double softplus(double z) { return z > 0.0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z)); }

// 1 / (1 + exp(-z)).
double sigmoid(double z) {
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

}  // namespace

LogisticObjective::LogisticObjective(Eigen::MatrixXd features, Eigen::VectorXd labels)
    : features_(std::move(features)), labels_(std::move(labels)) {
  if (features_.rows() < 1 || features_.cols() < 1) throw std::invalid_argument("logistic: empty feature matrix");
  if (features_.rows() != labels_.size())
    throw DimensionMismatch(fmt::format("logistic: {} rows vs {} labels", features_.rows(), labels_.size()));
  if (!features_.allFinite()) throw std::invalid_argument("logistic: non-finite features");
  for (Eigen::Index i = 0; i < labels_.size(); ++i) {
    if (labels_[i] != 1.0 && labels_[i] != -1.0)
      throw std::invalid_argument(fmt::format("logistic: label {} is {}, expected +1 or -1", i, labels_[i]));
  }
  op_norm_ = operator_norm(features_);
}

double LogisticObjective::do_value(const Eigen::VectorXd& x) const {
  const Eigen::VectorXd margins = labels_.cwiseProduct(features_ * x);
  double total = 0.0;
  for (Eigen::Index i = 0; i < margins.size(); ++i) total += softplus(-margins[i]);
  return total;
}

Eigen::VectorXd LogisticObjective::do_gradient(const Eigen::VectorXd& x) const {
  const Eigen::VectorXd margins = labels_.cwiseProduct(features_ * x);
  Eigen::VectorXd weights(margins.size());
  for (Eigen::Index i = 0; i < margins.size(); ++i) weights[i] = -labels_[i] * sigmoid(-margins[i]);
  return features_.transpose() * weights;
}

std::optional<SmoothnessConstants> LogisticObjective::analytic_constants() const {
  // Hessian <= X^T X / 4, so the Taylor remainder is at most ||X||^2/8 ||h||^2.
  const double m0 = op_norm_ * std::sqrt(static_cast<double>(features_.rows()));
  return SmoothnessConstants{op_norm_ * op_norm_ / 8.0, 2.0, std::nullopt, m0};
}

// ------------------------------------------------------------------- linear

LinearObjective::LinearObjective(Eigen::VectorXd coefficients) : c_(std::move(coefficients)) {
  if (c_.size() < 1) throw std::invalid_argument("linear: empty coefficient vector");
  if (!c_.allFinite()) throw std::invalid_argument("linear: non-finite coefficients");
}

std::optional<SmoothnessConstants> LinearObjective::analytic_constants() const {
  return SmoothnessConstants{0.0, 2.0, std::nullopt, std::nullopt};
}

// -------------------------------------------------------------------- power

namespace {

double power_remainder(double s, double p) {
  const double sign = s > 0.0 ? 1.0 : (s < 0.0 ? -1.0 : 0.0);
  return std::pow(std::abs(s + 1.0), p) - std::pow(std::abs(s), p) - p * std::pow(std::abs(s), p - 1.0) * sign;
}

// sup_s |s+1|^p - |s|^p - p|s|^(p-1)sgn(s); the maximizer lies in (-1, 0].
double power_constant(double p) {
  constexpr int kGrid = 20000;
  double best_s = 0.0;
  double best = power_remainder(0.0, p);
  for (int i = 0; i <= kGrid; ++i) {
    const double s = -2.0 + 3.0 * i / kGrid;
    const double v = power_remainder(s, p);
    if (v > best) {
      best = v;
      best_s = s;
    }
  }
  // Golden-section refinement around the grid maximizer.
  double lo = best_s - 3.0 / kGrid;
  double hi = best_s + 3.0 / kGrid;
  const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
  for (int it = 0; it < 80; ++it) {
    const double a = hi - ratio * (hi - lo);
    const double b = lo + ratio * (hi - lo);
    if (power_remainder(a, p) > power_remainder(b, p)) hi = b;
    else lo = a;
  }
  best = std::max(best, power_remainder(0.5 * (lo + hi), p));
  return best * (1.0 + 1e-9);
}

}  // namespace

PowerObjective::PowerObjective(Eigen::VectorXd center, double p) : center_(std::move(center)), p_(p) {
  if (center_.size() < 1) throw std::invalid_argument("power: empty center");
  if (!center_.allFinite()) throw std::invalid_argument("power: non-finite center");
  if (!(p_ > 1.0 && p_ <= 2.0)) throw std::invalid_argument(fmt::format("power: exponent {} outside (1, 2]", p_));
  scalar_constant_ = p_ == 2.0 ? 1.0 : power_constant(p_);
}

double PowerObjective::do_value(const Eigen::VectorXd& x) const {
  double total = 0.0;
  for (Eigen::Index i = 0; i < x.size(); ++i) total += std::pow(std::abs(x[i] - center_[i]), p_);
  return total;
}

Eigen::VectorXd PowerObjective::do_gradient(const Eigen::VectorXd& x) const {
  Eigen::VectorXd g(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const double d = x[i] - center_[i];
    g[i] = d == 0.0 ? 0.0 : p_ * std::pow(std::abs(d), p_ - 1.0) * (d > 0.0 ? 1.0 : -1.0);
  }
  return g;
}

std::optional<SmoothnessConstants> PowerObjective::analytic_constants() const {
  const double n = static_cast<double>(center_.size());
  const double alpha = scalar_constant_ * std::pow(n, 1.0 - p_ / 2.0);
  // Level-set radius R with R^p = E(0); the gradient norm peaks with the mass spread evenly.
  const double r = std::pow(do_value(Eigen::VectorXd::Zero(center_.size())), 1.0 / p_);
  const double m0 = p_ * std::pow(n, (2.0 - p_) / (2.0 * p_)) * std::pow(r, p_ - 1.0);
  return SmoothnessConstants{alpha, p_, std::nullopt, m0};
}

std::optional<MinimumInfo> PowerObjective::minimum() const { return MinimumInfo{Vector(center_), 0.0}; }

// ------------------------------------------------------------ numeric checks

double finite_difference_check(const Objective& obj, const Vector& x, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("finite_difference_check: h must be positive");
  const Eigen::VectorXd g = obj.gradient(x).values();
  double worst = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    Eigen::VectorXd plus = x.values();
    Eigen::VectorXd minus = x.values();
    plus[static_cast<Eigen::Index>(i)] += h;
    minus[static_cast<Eigen::Index>(i)] -= h;
    const double fd = (obj.value(Vector(plus)) - obj.value(Vector(minus))) / (2.0 * h);
    const double gi = g[static_cast<Eigen::Index>(i)];
    const double denom = std::max({1.0, std::abs(gi), std::abs(fd)});
    worst = std::max(worst, std::abs(gi - fd) / denom);
  }
  return worst;
}

double estimate_alpha(const Objective& obj, double q, std::size_t sample_pairs, double radius, std::uint64_t seed,
                      std::span<const Vector> extra_directions) {
  if (!(q > 1.0 && q <= 2.0)) throw std::invalid_argument("estimate_alpha: q must lie in (1, 2]");
  if (!(radius > 0.0)) throw std::invalid_argument("estimate_alpha: radius must be positive");
  for (const Vector& d : extra_directions) require_same_dimension(obj.dimension(), d.size(), "estimate_alpha");

  LevelSetSampler sampler(obj, seed);
  std::mt19937_64 rng(seed ^ 0xA5A5A5A5DEADBEEFULL);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  double best = 0.0;
  auto probe = [&](const Vector& x, double ex, const Vector& gx, const Eigen::VectorXd& dir, double step) {
    const Eigen::VectorXd delta = step * dir;
    const double ey = obj.value(Vector(Eigen::VectorXd(x.values() + delta)));
    const double remainder = (ey - ex) - gx.values().dot(delta);
    best = std::max(best, remainder / std::pow(delta.norm(), q));
  };

  for (std::size_t i = 0; i < sample_pairs; ++i) {
    const Vector x = sampler.next().interior;
    const double ex = obj.value(x);
    const Vector gx = obj.gradient(x);
    // Steps in [radius/2, radius] keep the quotient clear of cancellation noise.
    const double step = radius * (0.5 + 0.5 * unit(rng));
    probe(x, ex, gx, sampler.random_unit_direction(), step);
    for (const Vector& d : extra_directions) probe(x, ex, gx, d.values() / d.values().norm(), step);
  }
  return best;
}

std::optional<double> estimate_m_zero(const Objective& obj, std::size_t sample_count, std::uint64_t seed) {
  LevelSetSampler sampler(obj, seed);
  double best = norm(obj.gradient(Vector::zeros(obj.dimension())));
  for (std::size_t i = 0; i < sample_count; ++i) {
    const LevelSetSample s = sampler.next();
    if (s.unbounded) return std::nullopt;
    best = std::max({best, norm(obj.gradient(s.boundary)), norm(obj.gradient(s.interior))});
  }
  return best;
}

// ----------------------------------------------------------------------- io

namespace {

struct MatrixWithTail {
  Eigen::MatrixXd matrix;
  Eigen::VectorXd tail;
};

MatrixWithTail read_instance(std::istream& in, std::string_view what) {
  long m = 0;
  long n = 0;
  if (!(in >> m >> n) || m < 1 || n < 1) throw std::runtime_error(fmt::format("{} file: header must be 'm n'", what));
  MatrixWithTail out{Eigen::MatrixXd(m, n), Eigen::VectorXd(m)};
  for (long i = 0; i < m; ++i)
    for (long j = 0; j < n; ++j)
      if (!(in >> out.matrix(i, j))) throw std::runtime_error(fmt::format("{} file: matrix row {} is truncated", what, i));
  for (long i = 0; i < m; ++i)
    if (!(in >> out.tail[i])) throw std::runtime_error(fmt::format("{} file: last line has fewer than {} entries", what, m));
  return out;
}

void write_instance(std::ostream& out, const Eigen::MatrixXd& a, const Eigen::VectorXd& tail) {
  out << a.rows() << ' ' << a.cols() << '\n';
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) out << (j ? " " : "") << fmt::format("{:.17g}", a(i, j));
    out << '\n';
  }
  for (Eigen::Index i = 0; i < tail.size(); ++i) out << (i ? " " : "") << fmt::format("{:.17g}", tail[i]);
  out << '\n';
}

}  // namespace

QuadraticObjective load_quadratic(std::istream& in) {
  auto data = read_instance(in, "quadratic");
  return QuadraticObjective(std::move(data.matrix), std::move(data.tail));
}

LogisticObjective load_logistic(std::istream& in) {
  auto data = read_instance(in, "logistic");
  return LogisticObjective(std::move(data.matrix), std::move(data.tail));
}

void save_quadratic(std::ostream& out, const QuadraticObjective& obj) { write_instance(out, obj.design(), obj.target()); }

void save_logistic(std::ostream& out, const LogisticObjective& obj) {
  write_instance(out, obj.features(), obj.labels());
}

}  // namespace rpga
