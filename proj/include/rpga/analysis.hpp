#pragma once

#include "rpga/core.hpp"
#include "rpga/objectives.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rpga {

/// Inputs shared by the convergence bounds.
struct BoundInputs {
  double alpha = 1.0;
  double q = 2.0;
  /// mu_j for j = 1, 2, ...; cycled. The constant-mu bound uses the first entry.
  std::vector<double> mu{2.0};
  /// ell_j for j = 1, 2, ...; cycled.
  std::vector<double> weakness{1.0};
  /// Upper bound on the dictionary l1 semi-norm of the minimizer.
  double xbar_l1 = 1.0;
  /// E(0) - E(x_bar).
  double initial_gap = 1.0;

  /// Throws std::invalid_argument unless all quantities are positive and q in (1, 2].
  void validate() const;
  double mu_at(std::size_t j) const { return mu[(j - 1) % mu.size()]; }
  double weakness_at(std::size_t j) const { return weakness[(j - 1) % weakness.size()]; }
};

/// Bound inputs matching a run configuration (weakness 1 unless the variant is weak).
BoundInputs bound_inputs_for(const RunConfig& cfg, double xbar_l1, double initial_gap);

/// Closed-form bound on sequences with a_1 <= B and a_{m+1} <= a_m (1 - r_{m+1}/r a_m^ell):
///   a_m <= max{1, ell^(-1/ell)} r^(1/ell) (r B^(-ell) + sum_{k=2}^m r_k)^(-1/ell).
/// `r_seq[i]` holds r_{i+2}; at least m - 1 entries are required.
double recurrence_bound(double b, double r, double ell, std::span<const double> r_seq, std::size_t m);

/// Constant-mu bound
///   e_k <= alpha mu X^q ((alpha mu X^q / gap)^(1/(q-1)) + (mu-1)/mu (k-1))^(1-q),  X = ||x_bar||_1.
double theoretical_bound_rpga(const BoundInputs& inputs, std::size_t k);

/// Weak-variant bound
///   e_k <= alpha X^q (C1 + sum_{j=2}^k (mu_j - 1)(ell_j/mu_j)^(q/(q-1)))^(1-q),
///   C1 = (alpha X^q / gap)^(1/(q-1)).
double theoretical_bound_wrpga(const BoundInputs& inputs, std::size_t k);

/// Weak-variant bound for k = 2..k_max (entry i is k = i + 2), in linear time.
std::vector<double> theoretical_bound_wrpga_series(const BoundInputs& inputs, std::size_t k_max);

struct VerifyOptions {
  /// Relative slack on the per-step inequalities and on the bound comparison.
  double relative_slack = 1e-9;
  /// Line-search certificate: |<E'(x_k), x_k>| <= tol (1 + ||x_k|| ||E'(x_k)||).
  double certificate_tolerance = 1e-8;
};

struct StepCheck {
  std::size_t k = 0;
  bool monotone = true;
  /// Per-step descent by at least (mu-1)/mu (alpha mu)^(-1/(q-1)) |inner|^(q/(q-1)).
  bool descent = true;
  bool weak_admissible = true;
  /// ell_k e_{k-1} <= ||x_bar||_1 |inner_k|; absent for the baseline.
  std::optional<bool> inner_lower_bound;
  std::optional<bool> certificate;
  std::optional<double> bound;
  std::optional<bool> within_bound;

  bool passed() const;
};

struct TraceReport {
  std::vector<StepCheck> steps;
  bool passed = true;
  /// Human-readable description of the first failing check, if any.
  std::string first_failure;
};

/// Mechanized convergence checks for a finished trace. The baseline
/// variant is checked for monotonicity and descent only.
TraceReport verify_trace(const RunTrace& trace, const BoundInputs& inputs, const RunConfig& cfg, double e_min,
                         const VerifyOptions& options = {});

/// Power iteration on finite-difference Hessian-vector products at x.
/// Returns a unit vector approximating the direction of largest curvature.
Vector dominant_curvature_direction(const Objective& obj, const Vector& x, std::size_t iterations, std::uint64_t seed);

/// Sampled lower estimate of rho(E, u) = 1/2 sup {E(x+uy) + E(x-uy) - 2E(x)}
/// over x in the level set and unit y. Extra directions are probed at every
/// sampled x. Non-decreasing in `samples` for a fixed seed.
double modulus_estimate(const Objective& obj, double u, std::size_t samples, std::uint64_t seed,
                        std::span<const Vector> extra_directions = {});

/// Sampled lower estimate of
///   rho_1(E, u) = sup {((1-l)E(x - l u y) + l E(x + (1-l) u y) - E(x)) / (l (1-l))}
/// with l drawn from [1e-3, 1 - 1e-3]. Uses the same (x, y) stream as
/// modulus_estimate for equal seeds.
double uniform_modulus_estimate(const Objective& obj, double u, std::size_t samples, std::uint64_t seed,
                                std::span<const Vector> extra_directions = {});

struct ModulusSandwich {
  double u = 0.0;
  double rho_half = 0.0;  ///< sampled rho(E, u/2)
  double rho = 0.0;       ///< sampled rho(E, u)
  double rho_uniform = 0.0;
  std::optional<double> rho_analytic;
  /// 4 rho(E, u/2) <= rho_1(E, u) (1 + eps).
  bool lower_holds = false;
  /// rho_1(E, u) <= 2 rho_analytic(E, u) (1 + eps), when the analytic value exists.
  std::optional<bool> upper_holds;
};

ModulusSandwich check_modulus_sandwich(const Objective& obj, double u, std::size_t samples, std::uint64_t seed,
                                       std::span<const Vector> extra_directions = {}, double eps = 1e-6);

/// Raised when the errors in a fit window are not all positive.
class RateFitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Least-squares slope of log e_k against log k for k in [k_min, k_max].
/// `errors[i]` holds e_{i+1}.
double fit_rate(std::span<const double> errors, std::size_t k_min, std::size_t k_max);
double fit_rate(const RunTrace& trace, std::size_t k_min, std::size_t k_max);

}  // namespace rpga
