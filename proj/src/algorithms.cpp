#include "rpga/algorithms.hpp"

#include "rpga/linesearch.hpp"

#include <fmt/format.h>

#include <cmath>

namespace rpga {

Selector argmax_selector() {
  return [](const Eigen::VectorXd& inners, double) {
    Eigen::Index best = 0;
    inners.cwiseAbs().maxCoeff(&best);  // first maximal index
    return static_cast<std::size_t>(best);
  };
}

Selector first_admissible_selector() {
  return [](const Eigen::VectorXd& inners, double threshold) {
    for (Eigen::Index i = 0; i < inners.size(); ++i) {
      if (std::abs(inners[i]) >= threshold) return static_cast<std::size_t>(i);
    }
    return static_cast<std::size_t>(inners.size());
  };
}

Selection select_direction(const Vector& grad, const Dictionary& d, double weakness, const Selector& selector) {
  if (!(weakness > 0.0 && weakness <= 1.0))
    throw std::invalid_argument(fmt::format("select_direction: weakness {} outside (0, 1]", weakness));
  const Eigen::VectorXd inners = d.inner_products(grad);
  const double sup = inners.cwiseAbs().maxCoeff();
  if (sup == 0.0) {
    if (norm(grad) > 0.0)
      throw DegenerateSelection("gradient is nonzero but orthogonal to every dictionary atom");
    throw std::invalid_argument("select_direction: gradient is zero");
  }
  const double threshold = weakness * sup;
  const std::size_t index = selector(inners, threshold);
  if (index >= d.size() || std::abs(inners[static_cast<Eigen::Index>(index)]) < threshold)
    throw std::logic_error(fmt::format("selector returned inadmissible atom {}", index));
  return Selection{index, inners[static_cast<Eigen::Index>(index)], sup};
}

double step_lambda(double inner, double alpha, double mu, double q) {
  if (inner == 0.0) throw std::invalid_argument("step_lambda: inner product is zero");
  if (!(alpha > 0.0)) throw std::invalid_argument("step_lambda: alpha must be positive");
  if (!(mu > 0.0)) throw std::invalid_argument("step_lambda: mu must be positive");
  if (!(q > 1.0 && q <= 2.0)) throw std::invalid_argument("step_lambda: q must lie in (1, 2]");
  const double magnitude = q == 2.0 ? std::abs(inner) / (alpha * mu)
                                    : std::pow(std::abs(inner) / (alpha * mu), 1.0 / (q - 1.0));
  return std::copysign(magnitude, inner);
}

AlgorithmState initial_state(const Objective& obj, const RunConfig& cfg) {
  const Vector x0 = Vector::zeros(obj.dimension());
  AlgorithmState state{0, x0, obj.gradient(x0), RunTrace{}};
  state.trace.final_point = x0;
  state.trace.initial_value = obj.value(x0);
  state.trace.variant = cfg.variant;
  if (const auto min = obj.minimum()) state.trace.minimum_value = min->value;
  return state;
}

namespace {

void advance(AlgorithmState& state, const Objective& obj, const Dictionary& d, const RunConfig& cfg,
             const Selector& selector) {
  const std::size_t k = state.k + 1;
  const double mu = cfg.mu_at(k);
  const double weakness = cfg.weakness_at(k);
  const Selection sel = select_direction(state.grad, d, weakness, selector);
  const double lambda = step_lambda(sel.inner, cfg.alpha, mu, cfg.q);
  const Vector x_hat = axpy(-lambda, d.atom(sel.index), state.x);
  const double hat_value = obj.value(x_hat);

  double t = 1.0;
  if (cfg.variant != Variant::no_rescale_baseline) {
    t = minimize_ray(obj, x_hat, cfg.linesearch_tolerance).t_star;
  }
  Vector x_next = t == 1.0 ? x_hat : scale(t, x_hat);
  Vector g_next = obj.gradient(x_next);

  IterationRecord rec;
  rec.k = k;
  rec.atom_index = sel.index;
  rec.inner_product = sel.inner;
  rec.sup_inner = sel.sup;
  rec.mu = mu;
  rec.weakness = weakness;
  rec.lambda_k = lambda;
  rec.t_k = t;
  rec.intermediate_value = hat_value;
  rec.objective_value = obj.value(x_next);
  if (state.trace.minimum_value) rec.error_k = rec.objective_value - *state.trace.minimum_value;
  rec.orthogonality = dot(g_next, x_next);
  rec.point_norm = norm(x_next);
  rec.gradient_norm = norm(g_next);

  state.trace.records.push_back(rec);
  state.trace.final_point = x_next;
  state.k = k;
  state.x = std::move(x_next);
  state.grad = std::move(g_next);
}

}  // namespace

AlgorithmState rpga_step(const AlgorithmState& state, const Objective& obj, const Dictionary& d, const RunConfig& cfg,
                         const Selector& selector) {
  require_same_dimension(obj.dimension(), d.dimension(), "rpga_step");
  AlgorithmState next = state;
  advance(next, obj, d, cfg, selector);
  return next;
}

RunTrace run(const Objective& obj, const Dictionary& d, const RunConfig& cfg, const Selector& selector) {
  cfg.validate();
  require_same_dimension(obj.dimension(), d.dimension(), "run");
  AlgorithmState state = initial_state(obj, cfg);
  const double tol = cfg.effective_gradient_tolerance();

  while (true) {
    const double sup = d.inner_products(state.grad).cwiseAbs().maxCoeff();
    if (sup <= tol) {
      if (d.spans() || norm(state.grad) <= tol) {
        state.trace.termination = Termination::gradient_zero;
      } else {
        state.trace.termination = Termination::degenerate_selection;
        state.trace.message = fmt::format("gradient norm {:.3g} but largest atom inner product {:.3g}",
                                          norm(state.grad), sup);
      }
      break;
    }
    if (state.k >= cfg.max_iterations) {
      state.trace.termination = Termination::max_iterations;
      break;
    }
    try {
      advance(state, obj, d, cfg, selector);
    } catch (const DegenerateSelection& e) {
      state.trace.termination = Termination::degenerate_selection;
      state.trace.message = e.what();
      break;
    } catch (const LineSearchError& e) {
      state.trace.termination = Termination::line_search_failure;
      state.trace.message = e.what();
      break;
    }
  }
  return std::move(state.trace);
}

}  // namespace rpga
