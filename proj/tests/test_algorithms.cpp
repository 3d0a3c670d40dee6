#include "rpga/algorithms.hpp"
#include "rpga/instances.hpp"

#include <doctest.h>

#include <cmath>

using namespace rpga;

namespace {

QuadraticObjective quad1d() {
  return QuadraticObjective(Eigen::MatrixXd::Identity(1, 1), Eigen::VectorXd::Ones(1));
}

RunConfig config_for(const Objective& obj, Variant variant = Variant::rescaled) {
  RunConfig cfg;
  cfg.alpha = obj.analytic_constants()->alpha;
  cfg.q = obj.analytic_constants()->q;
  cfg.m_zero = obj.analytic_constants()->m_zero;
  cfg.variant = variant;
  return cfg;
}

}  // namespace

TEST_CASE("direction selection") {
  const Dictionary e = canonical_basis(2);
  const Vector g{3.0, -5.0};

  const Selection exact = select_direction(g, e, 1.0);
  CHECK(exact.index == 1);
  CHECK(exact.inner == -5.0);
  CHECK(exact.sup == 5.0);

  // e_1 is admissible at weakness 0.5, but the default still returns the maximizer.
  const Selection weak = select_direction(g, e, 0.5);
  CHECK(weak.index == 1);
  const Selection scan = select_direction(g, e, 0.5, first_admissible_selector());
  CHECK(scan.index == 0);
  CHECK(scan.inner == 3.0);
  const Selection strict_scan = select_direction(g, e, 0.7, first_admissible_selector());
  CHECK(strict_scan.index == 1);

  // Ties go to the lowest index.
  CHECK(select_direction(Vector{2.0, -2.0}, e, 1.0).index == 0);

  CHECK_THROWS(select_direction(g, e, 0.0));
  CHECK_THROWS(select_direction(g, e, 1.5));

  const Dictionary blind({Vector{1.0, 0.0}}, DictionaryKind::custom);
  CHECK_THROWS_AS(select_direction(Vector{0.0, 2.0}, blind, 1.0), DegenerateSelection);

  const Selector rogue = [](const Eigen::VectorXd&, double) { return std::size_t{0}; };
  CHECK_THROWS_AS(select_direction(Vector{0.1, 5.0}, e, 1.0, rogue), std::logic_error);
}

TEST_CASE("step size") {
  CHECK(step_lambda(0.5, 1.0, 2.0, 2.0) == doctest::Approx(0.25));
  CHECK(step_lambda(-0.5, 1.0, 2.0, 2.0) == doctest::Approx(-0.25));
  // (alpha mu)^(-1/(q-1)) |inner|^(1/(q-1)) with 1/(q-1) = 2: 8^-2 * 0.64.
  CHECK(step_lambda(0.8, 2.0, 4.0, 1.5) == doctest::Approx(0.01).epsilon(1e-14));
  CHECK_THROWS(step_lambda(0.0, 1.0, 2.0, 2.0));
}

TEST_CASE("one-dimensional exact step") {
  // E(x) = (x - 1)^2, E'(0) = -2, and the smoothness inequality holds for any alpha >= 1.
  const QuadraticObjective obj = quad1d();
  RunConfig cfg = config_for(obj);
  REQUIRE(cfg.alpha == doctest::Approx(1.0).epsilon(1e-15));
  const AlgorithmState s0 = initial_state(obj, cfg);
  CHECK(s0.grad[0] == -2.0);

  SUBCASE("sharp constant alpha = 1: the greedy step itself lands on the minimizer") {
    const AlgorithmState s1 = rpga_step(s0, obj, canonical_basis(1), cfg);
    REQUIRE(s1.trace.records.size() == 1);
    const IterationRecord& r = s1.trace.records[0];
    CHECK(r.inner_product == -2.0);
    CHECK(r.lambda_k == -1.0);  // -2 / (1 * 2)
    CHECK(std::abs(r.intermediate_value) <= 1e-24);
    CHECK(std::abs(r.t_k - 1.0) <= 1e-12);
    CHECK(std::abs(s1.x[0] - 1.0) <= 1e-12);
    CHECK(std::abs(r.objective_value) <= 1e-24);
    // The input state is not modified.
    CHECK(s0.trace.records.empty());
    CHECK(s0.x[0] == 0.0);
  }
  SUBCASE("alpha = 2: half step, then the line search doubles it") {
    cfg.alpha = 2.0;
    const AlgorithmState s1 = rpga_step(s0, obj, canonical_basis(1), cfg);
    const IterationRecord& r = s1.trace.records.at(0);
    CHECK(r.lambda_k == -0.5);
    CHECK(r.intermediate_value == 0.25);
    CHECK(std::abs(r.t_k - 2.0) <= 1e-12);
    CHECK(std::abs(s1.x[0] - 1.0) <= 1e-12);
    CHECK(std::abs(r.objective_value) <= 1e-24);
  }

  const RunTrace trace = run(obj, canonical_basis(1), cfg);
  CHECK(trace.records.size() == 1);
  CHECK(trace.termination == Termination::gradient_zero);
}

TEST_CASE("starting at the minimizer stops before the first step") {
  // E(x) = ||x||^2 has its minimizer at the origin.
  const QuadraticObjective obj(Eigen::MatrixXd::Identity(3, 3), Eigen::VectorXd::Zero(3));
  const RunTrace trace = run(obj, canonical_basis(3), config_for(obj));
  CHECK(trace.records.empty());
  CHECK(trace.termination == Termination::gradient_zero);
}

TEST_CASE("iteration cap") {
  const QuadraticObjective obj = make_gaussian_quadratic(4, 3);
  RunConfig cfg = config_for(obj);
  cfg.max_iterations = 0;
  const RunTrace none = run(obj, canonical_basis(4), cfg);
  CHECK(none.records.empty());
  CHECK(none.termination == Termination::max_iterations);

  cfg.max_iterations = 7;
  CHECK(run(obj, canonical_basis(4), cfg).records.size() == 7);
}

TEST_CASE("invalid configuration is rejected before running") {
  const QuadraticObjective obj = make_gaussian_quadratic(3, 3);
  RunConfig cfg = config_for(obj);
  cfg.mu_sequence = {1.0};
  CHECK_THROWS_AS(run(obj, canonical_basis(3), cfg), ConfigError);
  cfg = config_for(obj);
  CHECK_THROWS_AS(run(obj, canonical_basis(2), cfg), DimensionMismatch);
}

TEST_CASE("per-step properties on random quadratics") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const QuadraticObjective obj = make_conditioned_quadratic(8, 10.0, seed);
    for (Variant v : {Variant::rescaled, Variant::weak_rescaled, Variant::no_rescale_baseline}) {
      CAPTURE(seed);
      CAPTURE(to_string(v));
      RunConfig cfg = config_for(obj, v);
      cfg.mu_sequence = {2.0, 3.0};
      cfg.weakness_sequence = {0.5, 0.8};
      cfg.max_iterations = 60;
      const Dictionary d = seed % 2 ? canonical_basis(8) : random_unit(8, 16, seed);
      const RunTrace trace = run(obj, d, cfg, v == Variant::weak_rescaled ? first_admissible_selector() : argmax_selector());
      REQUIRE(trace.records.size() == 60);

      const double e0 = trace.initial_value;
      double prev = e0;
      for (const IterationRecord& r : trace.records) {
        const double slack = 1e-9 * std::abs(prev) + 1e-14;
        const double decrease = (r.mu - 1.0) / r.mu / (cfg.alpha * r.mu) * r.inner_product * r.inner_product;
        CHECK(r.objective_value <= prev - decrease + slack);
        CHECK(r.objective_value <= e0 + slack);
        CHECK(std::abs(r.inner_product) >= r.weakness * r.sup_inner);
        if (v == Variant::no_rescale_baseline) {
          CHECK(r.t_k == 1.0);
          CHECK(r.objective_value == r.intermediate_value);
        } else {
          CHECK(r.objective_value <= r.intermediate_value);
          CHECK(std::abs(r.orthogonality) <= 1e-8 * (1.0 + r.point_norm * r.gradient_norm));
        }
        prev = r.objective_value;
      }
      if (v == Variant::weak_rescaled) {
        CHECK(trace.records[0].mu == 2.0);
        CHECK(trace.records[1].mu == 3.0);
        CHECK(trace.records[0].weakness == 0.5);
        CHECK(trace.records[1].weakness == 0.8);
      }
    }
  }
}

TEST_CASE("inner product dominates the error through the minimizer") {
  // <E'(x_{k-1}), x_{k-1} - x_bar> <= |inner_k| ||x_bar||_1 + |<E'(x_{k-1}), x_{k-1}>|.
  const QuadraticObjective obj = make_conditioned_quadratic(6, 10.0, 4);
  const Vector xbar = obj.minimum()->point;
  const double xbar_l1 = xbar.values().lpNorm<1>();
  RunConfig cfg = config_for(obj);
  const Dictionary d = canonical_basis(6);
  AlgorithmState state = initial_state(obj, cfg);
  for (int k = 0; k < 40; ++k) {
    const AlgorithmState next = rpga_step(state, obj, d, cfg);
    const IterationRecord& r = next.trace.records.back();
    const double lhs = dot(state.grad, axpy(-1.0, xbar, state.x));
    CHECK(lhs <= std::abs(r.inner_product) * xbar_l1 + std::abs(dot(state.grad, state.x)) + 1e-12);
    state = next;
  }
}

TEST_CASE("degenerate dictionaries terminate the run") {
  const QuadraticObjective obj(Eigen::MatrixXd::Identity(2, 2), Eigen::Vector2d(0.0, 1.0));
  RunConfig cfg = config_for(obj);
  const Dictionary blind({Vector{1.0, 0.0}}, DictionaryKind::custom);
  const RunTrace trace = run(obj, blind, cfg);
  CHECK(trace.records.empty());
  CHECK(trace.termination == Termination::degenerate_selection);
  CHECK_FALSE(trace.message.empty());
}

TEST_CASE("rays without a minimizer end the run with the partial trace") {
  const LinearObjective lin(Eigen::Vector2d(1.0, -2.0));
  RunConfig cfg;
  cfg.alpha = 1.0;
  const RunTrace trace = run(lin, canonical_basis(2), cfg);
  CHECK(trace.termination == Termination::line_search_failure);
  CHECK_FALSE(trace.message.empty());

  // The baseline never line-searches, so it runs to the cap.
  cfg.variant = Variant::no_rescale_baseline;
  cfg.max_iterations = 5;
  const RunTrace baseline = run(lin, canonical_basis(2), cfg);
  CHECK(baseline.records.size() == 5);
  CHECK(baseline.termination == Termination::max_iterations);
}

TEST_CASE("runs are bit-for-bit deterministic") {
  const LogisticObjective obj = make_logistic(50, 6, 8);
  RunConfig cfg = config_for(obj, Variant::weak_rescaled);
  cfg.weakness_sequence = {0.6};
  cfg.max_iterations = 80;
  const Dictionary d = random_unit(6, 15, 2);
  const RunTrace a = run(obj, d, cfg, first_admissible_selector());
  const RunTrace b = run(obj, d, cfg, first_admissible_selector());
  REQUIRE(a.records.size() == b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    CHECK(a.records[i].atom_index == b.records[i].atom_index);
    CHECK(a.records[i].objective_value == b.records[i].objective_value);
    CHECK(a.records[i].t_k == b.records[i].t_k);
  }
  CHECK(a.final_point == b.final_point);
}

TEST_CASE("q below 2 on the power objective") {
  const PowerObjective obj = make_power(5, 1.5, 3);
  RunConfig cfg = config_for(obj);
  cfg.max_iterations = 100;
  const RunTrace trace = run(obj, canonical_basis(5), cfg);
  REQUIRE_FALSE(trace.records.empty());
  double prev = trace.initial_value;
  for (const IterationRecord& r : trace.records) {
    const double decrease = (r.mu - 1.0) / r.mu * std::pow(cfg.alpha * r.mu, -2.0) * std::pow(std::abs(r.inner_product), 3.0);
    CHECK(r.objective_value <= prev - decrease + 1e-9 * std::abs(prev) + 1e-14);
    prev = r.objective_value;
  }
  CHECK(trace.records.back().objective_value < 0.5 * trace.initial_value);
}
