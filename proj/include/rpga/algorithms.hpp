#pragma once

#include "rpga/core.hpp"
#include "rpga/dictionaries.hpp"
#include "rpga/objectives.hpp"

#include <Eigen/Core>

#include <functional>
#include <stdexcept>

namespace rpga {

/// The gradient is nonzero but orthogonal to every atom of the dictionary.
class DegenerateSelection : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Picks an atom index given the signed inner products <grad, phi_i> and the
/// admissibility threshold weakness * max_i |<grad, phi_i>|.
using Selector = std::function<std::size_t(const Eigen::VectorXd& inners, double threshold)>;

/// Exact maximizer of |inner|, lowest index on ties.
Selector argmax_selector();
/// Lowest index whose |inner| reaches the threshold.
Selector first_admissible_selector();

struct Selection {
  std::size_t index = 0;
  double inner = 0.0;
  double sup = 0.0;
};

/// Chooses phi_j with |<grad, phi_j>| >= weakness * sup_phi |<grad, phi>|.
/// The default selector returns the exact maximizer. A selector choosing an
/// inadmissible atom is a logic error and throws std::logic_error.
Selection select_direction(const Vector& grad, const Dictionary& d, double weakness,
                           const Selector& selector = argmax_selector());

/// sgn(inner) * (alpha mu)^(-1/(q-1)) * |inner|^(1/(q-1)).
double step_lambda(double inner, double alpha, double mu, double q);

struct AlgorithmState {
  std::size_t k = 0;
  Vector x;
  Vector grad;
  RunTrace trace;
};

AlgorithmState initial_state(const Objective& obj, const RunConfig& cfg);

/// One greedy step: select phi_j, form x_hat = x - lambda phi_j, rescale by
/// the line search (skipped for the baseline variant). Throws
/// DegenerateSelection or LineSearchError; the input state is left untouched.
AlgorithmState rpga_step(const AlgorithmState& state, const Objective& obj, const Dictionary& d, const RunConfig& cfg,
                         const Selector& selector = argmax_selector());

/// Runs from x_0 = 0 until the largest atom inner product drops to the
/// gradient tolerance, the iteration cap is hit, or a step fails. Errors
/// terminate the run with the partial trace and a termination marker.
RunTrace run(const Objective& obj, const Dictionary& d, const RunConfig& cfg,
             const Selector& selector = argmax_selector());

}  // namespace rpga
