#include "rpga/analysis.hpp"

#include "rpga/sampling.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace rpga {

void BoundInputs::validate() const {
  if (!(q > 1.0 && q <= 2.0)) throw std::invalid_argument(fmt::format("bound inputs: q = {} outside (1, 2]", q));
  if (!(alpha > 0.0)) throw std::invalid_argument("bound inputs: alpha must be positive");
  if (!(xbar_l1 > 0.0)) throw std::invalid_argument("bound inputs: ||x_bar||_1 must be positive");
  if (!(initial_gap > 0.0)) throw std::invalid_argument("bound inputs: initial gap must be positive");
  if (mu.empty() || weakness.empty()) throw std::invalid_argument("bound inputs: empty parameter sequence");
  for (double m : mu)
    if (!(m > 1.0)) throw std::invalid_argument(fmt::format("bound inputs: mu = {} must exceed 1", m));
  for (double w : weakness)
    if (!(w > 0.0 && w <= 1.0)) throw std::invalid_argument(fmt::format("bound inputs: weakness {} outside (0, 1]", w));
}

BoundInputs bound_inputs_for(const RunConfig& cfg, double xbar_l1, double initial_gap) {
  BoundInputs in;
  in.alpha = cfg.alpha;
  in.q = cfg.q;
  if (cfg.variant == Variant::weak_rescaled) {
    in.mu = cfg.mu_sequence;
    in.weakness = cfg.weakness_sequence;
  } else {
    in.mu = {cfg.mu_sequence.front()};
    in.weakness = {1.0};
  }
  in.xbar_l1 = xbar_l1;
  in.initial_gap = initial_gap;
  return in;
}

double recurrence_bound(double b, double r, double ell, std::span<const double> r_seq, std::size_t m) {
  if (m < 2) throw std::invalid_argument("recurrence_bound: m must be at least 2");
  if (!(b > 0.0 && r > 0.0 && ell > 0.0)) throw std::invalid_argument("recurrence_bound: B, r, ell must be positive");
  if (r_seq.size() < m - 1)
    throw std::invalid_argument(fmt::format("recurrence_bound: need {} sequence terms, got {}", m - 1, r_seq.size()));
  double sum = 0.0;
  for (std::size_t i = 0; i + 2 <= m; ++i) {
    if (!(r_seq[i] >= 0.0)) throw std::invalid_argument("recurrence_bound: sequence terms must be nonnegative");
    sum += r_seq[i];
  }
  const double lead = std::max(1.0, std::pow(ell, -1.0 / ell));
  return lead * std::pow(r, 1.0 / ell) * std::pow(r * std::pow(b, -ell) + sum, -1.0 / ell);
}

double theoretical_bound_rpga(const BoundInputs& inputs, std::size_t k) {
  if (k < 2) throw std::invalid_argument("theoretical_bound_rpga: k must be at least 2");
  inputs.validate();
  const double mu = inputs.mu.front();
  if (std::any_of(inputs.mu.begin(), inputs.mu.end(), [mu](double m) { return m != mu; }))
    throw std::invalid_argument("theoretical_bound_rpga: requires a constant mu");
  const double q = inputs.q;
  const double scale = inputs.alpha * mu * std::pow(inputs.xbar_l1, q);
  const double base =
      std::pow(scale / inputs.initial_gap, 1.0 / (q - 1.0)) + (mu - 1.0) / mu * static_cast<double>(k - 1);
  return scale * std::pow(base, 1.0 - q);
}

namespace {

double wrpga_summand(const BoundInputs& in, std::size_t j) {
  const double mu = in.mu_at(j);
  return (mu - 1.0) * std::pow(in.weakness_at(j) / mu, in.q / (in.q - 1.0));
}

}  // namespace

std::vector<double> theoretical_bound_wrpga_series(const BoundInputs& inputs, std::size_t k_max) {
  inputs.validate();
  const double q = inputs.q;
  const double scale = inputs.alpha * std::pow(inputs.xbar_l1, q);
  const double c1 = std::pow(scale / inputs.initial_gap, 1.0 / (q - 1.0));
  std::vector<double> out;
  double sum = 0.0;
  for (std::size_t k = 2; k <= k_max; ++k) {
    sum += wrpga_summand(inputs, k);
    out.push_back(scale * std::pow(c1 + sum, 1.0 - q));
  }
  return out;
}

double theoretical_bound_wrpga(const BoundInputs& inputs, std::size_t k) {
  if (k < 2) throw std::invalid_argument("theoretical_bound_wrpga: k must be at least 2");
  return theoretical_bound_wrpga_series(inputs, k).back();
}

bool StepCheck::passed() const {
  auto ok = [](const std::optional<bool>& b) { return !b || *b; };
  return monotone && descent && weak_admissible && ok(inner_lower_bound) && ok(certificate) && ok(within_bound);
}

TraceReport verify_trace(const RunTrace& trace, const BoundInputs& inputs, const RunConfig& cfg, double e_min,
                         const VerifyOptions& options) {
  TraceReport report;
  const auto& recs = trace.records;
  const bool rescaled = trace.variant != Variant::no_rescale_baseline;
  const double rel = options.relative_slack;
  const double eps = std::numeric_limits<double>::epsilon();

  bool bounds_available = rescaled && inputs.xbar_l1 > 0.0 && inputs.initial_gap > 0.0;
  std::vector<double> bounds;
  if (bounds_available && recs.size() >= 2) {
    if (trace.variant == Variant::weak_rescaled) {
      bounds = theoretical_bound_wrpga_series(inputs, recs.size());
    } else {
      for (std::size_t k = 2; k <= recs.size(); ++k) bounds.push_back(theoretical_bound_rpga(inputs, k));
    }
  }

  double prev_value = trace.initial_value;
  double prev_orthogonality = 0.0;  // x_0 = 0
  for (std::size_t i = 0; i < recs.size(); ++i) {
    const IterationRecord& r = recs[i];
    StepCheck c;
    c.k = r.k;
    // Relative slack on the objective scale, floored at roundoff of E(0).
    const double slack = rel * std::abs(prev_value) + 16.0 * eps * std::max(std::abs(trace.initial_value), 1.0);

    c.monotone = r.objective_value <= prev_value + slack;
    const double q = cfg.q;
    const double decrease = (r.mu - 1.0) / r.mu * std::pow(cfg.alpha * r.mu, -1.0 / (q - 1.0)) *
                            std::pow(std::abs(r.inner_product), q / (q - 1.0));
    c.descent = r.objective_value <= prev_value - decrease + slack;
    c.weak_admissible = std::abs(r.inner_product) >= r.weakness * r.sup_inner;

    if (rescaled) {
      c.certificate = std::abs(r.orthogonality) <=
                      options.certificate_tolerance * (1.0 + r.point_norm * r.gradient_norm);
      if (inputs.xbar_l1 > 0.0) {
        const double prev_error = prev_value - e_min;
        const double rhs = inputs.xbar_l1 * std::abs(r.inner_product) + r.weakness * std::abs(prev_orthogonality);
        c.inner_lower_bound = r.weakness * prev_error <= rhs * (1.0 + rel) + slack;
      }
      if (r.k >= 2 && r.k - 2 < bounds.size()) {
        c.bound = bounds[r.k - 2];
        c.within_bound = r.objective_value - e_min <= *c.bound * (1.0 + rel);
      }
    }

    if (!c.passed() && report.passed) {
      report.passed = false;
      std::string what;
      if (!c.monotone) what = "monotonicity";
      else if (!c.descent) what = "per-step descent";
      else if (!c.weak_admissible) what = "weak admissibility";
      else if (c.inner_lower_bound && !*c.inner_lower_bound) what = "inner-product lower bound";
      else if (c.certificate && !*c.certificate) what = "line-search certificate";
      else what = "convergence bound";
      report.first_failure = fmt::format("step {}: {} check failed", r.k, what);
    }
    report.steps.push_back(c);
    prev_value = r.objective_value;
    prev_orthogonality = r.orthogonality;
  }
  return report;
}

Vector dominant_curvature_direction(const Objective& obj, const Vector& x, std::size_t iterations,
                                    std::uint64_t seed) {
  require_same_dimension(obj.dimension(), x.size(), "dominant_curvature_direction");
  LevelSetSampler rng_source(obj, seed);
  Eigen::VectorXd v = rng_source.random_unit_direction();
  const double h = 1e-5 * (1.0 + norm(x));
  for (std::size_t it = 0; it < iterations; ++it) {
    const Eigen::VectorXd gp = obj.gradient(Vector(Eigen::VectorXd(x.values() + h * v))).values();
    const Eigen::VectorXd gm = obj.gradient(Vector(Eigen::VectorXd(x.values() - h * v))).values();
    const Eigen::VectorXd hv = (gp - gm) / (2.0 * h);
    const double len = hv.norm();
    if (!(len > 0.0)) break;  // zero curvature: every direction is dominant
    v = hv / len;
  }
  return Vector(v);
}

namespace {

constexpr double kLambdaGuard = 1e-3;

template <typename Term>
double sampled_sup(const Objective& obj, std::size_t samples, std::uint64_t seed,
                   std::span<const Vector> extra_directions, Term term) {
  for (const Vector& d : extra_directions) require_same_dimension(obj.dimension(), d.size(), "modulus estimate");
  LevelSetSampler sampler(obj, seed);
  std::mt19937_64 lambda_rng(seed ^ 0x5DEECE66DULL);
  std::uniform_real_distribution<double> lambda_dist(kLambdaGuard, 1.0 - kLambdaGuard);
  double best = 0.0;
  for (std::size_t i = 0; i < samples; ++i) {
    const Vector x = sampler.next().interior;
    const Eigen::VectorXd y = sampler.random_unit_direction();
    const double lambda = lambda_dist(lambda_rng);
    const double ex = obj.value(x);
    best = std::max(best, term(x, ex, y, lambda));
    for (const Vector& d : extra_directions) best = std::max(best, term(x, ex, d.values() / norm(d), lambda));
  }
  return best;
}

}  // namespace

double modulus_estimate(const Objective& obj, double u, std::size_t samples, std::uint64_t seed,
                        std::span<const Vector> extra_directions) {
  if (!(u > 0.0)) throw std::invalid_argument("modulus_estimate: u must be positive");
  return sampled_sup(obj, samples, seed, extra_directions,
                     [&](const Vector& x, double ex, const Eigen::VectorXd& y, double) {
                       const double plus = obj.value(Vector(Eigen::VectorXd(x.values() + u * y)));
                       const double minus = obj.value(Vector(Eigen::VectorXd(x.values() - u * y)));
                       return 0.5 * (plus + minus - 2.0 * ex);
                     });
}

double uniform_modulus_estimate(const Objective& obj, double u, std::size_t samples, std::uint64_t seed,
                                std::span<const Vector> extra_directions) {
  if (!(u > 0.0)) throw std::invalid_argument("uniform_modulus_estimate: u must be positive");
  return sampled_sup(obj, samples, seed, extra_directions,
                     [&](const Vector& x, double ex, const Eigen::VectorXd& y, double l) {
                       const double back = obj.value(Vector(Eigen::VectorXd(x.values() - l * u * y)));
                       const double fwd = obj.value(Vector(Eigen::VectorXd(x.values() + (1.0 - l) * u * y)));
                       return ((1.0 - l) * back + l * fwd - ex) / (l * (1.0 - l));
                     });
}

ModulusSandwich check_modulus_sandwich(const Objective& obj, double u, std::size_t samples, std::uint64_t seed,
                                       std::span<const Vector> extra_directions, double eps) {
  ModulusSandwich s;
  s.u = u;
  s.rho_half = modulus_estimate(obj, 0.5 * u, samples, seed, extra_directions);
  s.rho = modulus_estimate(obj, u, samples, seed, extra_directions);
  s.rho_uniform = uniform_modulus_estimate(obj, u, samples, seed, extra_directions);
  s.rho_analytic = obj.analytic_modulus(u);
  s.lower_holds = 4.0 * s.rho_half <= s.rho_uniform * (1.0 + eps);
  if (s.rho_analytic) s.upper_holds = s.rho_uniform <= 2.0 * *s.rho_analytic * (1.0 + eps);
  return s;
}

double fit_rate(std::span<const double> errors, std::size_t k_min, std::size_t k_max) {
  if (k_min < 2) throw std::invalid_argument("fit_rate: k_min must be at least 2");
  if (k_max <= k_min) throw std::invalid_argument("fit_rate: need k_max > k_min");
  if (k_max > errors.size())
    throw std::invalid_argument(fmt::format("fit_rate: k_max = {} beyond {} recorded errors", k_max, errors.size()));
  std::vector<double> lx;
  std::vector<double> ly;
  for (std::size_t k = k_min; k <= k_max; ++k) {
    const double e = errors[k - 1];
    if (!(e > 0.0)) throw RateFitError(fmt::format("exact convergence before k_max (e_{} = {})", k, e));
    lx.push_back(std::log(static_cast<double>(k)));
    ly.push_back(std::log(e));
  }
  const double count = static_cast<double>(lx.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= count;
  my /= count;
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  return sxy / sxx;
}

double fit_rate(const RunTrace& trace, std::size_t k_min, std::size_t k_max) {
  std::vector<double> errors;
  errors.reserve(trace.records.size());
  for (const auto& r : trace.records) {
    if (!r.error_k) throw std::invalid_argument("fit_rate: trace has no error values (minimum unknown)");
    errors.push_back(*r.error_k);
  }
  return fit_rate(errors, k_min, k_max);
}

}  // namespace rpga
