#include "oracles.hpp"
#include "rpga/core.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

using namespace rpga;

namespace {

std::vector<double> gaussian(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> nd;
  std::vector<double> v(n);
  for (double& e : v) e = nd(rng);
  return v;
}

}  // namespace

TEST_CASE("vectors reject empty and non-finite values") {
  CHECK_THROWS_AS(Vector(Eigen::VectorXd()), std::invalid_argument);
  CHECK_THROWS_AS((Vector{1.0, std::numeric_limits<double>::quiet_NaN()}), std::invalid_argument);
  CHECK_THROWS_AS((Vector{std::numeric_limits<double>::infinity()}), std::invalid_argument);
  CHECK_THROWS_AS(Vector::basis(2, 2), std::out_of_range);
  CHECK(Vector::basis(3, 1) == (Vector{0.0, 1.0, 0.0}));
}

TEST_CASE("dot") {
  CHECK(dot(Vector{1.0, 2.0}, Vector{3.0, 4.0}) == 11.0);
  CHECK(dot(Vector{1.5, -2.0, 7.0}, Vector::zeros(3)) == 0.0);
  CHECK_THROWS_AS(dot(Vector{1.0}, Vector{1.0, 2.0}), DimensionMismatch);

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = gaussian(rng, 5);
    const auto b = gaussian(rng, 5);
    CHECK(dot(Vector(std::span<const double>(a)), Vector(std::span<const double>(b))) ==
          doctest::Approx(oracle::dot(a, b)).epsilon(1e-12));
  }
}

TEST_CASE("dot is symmetric and bilinear") {
  std::mt19937_64 rng(12);
  std::normal_distribution<double> nd;
  for (int trial = 0; trial < 100; ++trial) {
    const Vector a(std::span<const double>(gaussian(rng, 6)));
    const Vector b(std::span<const double>(gaussian(rng, 6)));
    const Vector c(std::span<const double>(gaussian(rng, 6)));
    const double s = nd(rng);
    CHECK(dot(a, b) == dot(b, a));
    const double lhs = dot(axpy(s, a, c), b);
    const double rhs = s * dot(a, b) + dot(c, b);
    const double scale = std::abs(s) * norm(a) * norm(b) + norm(c) * norm(b);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * scale);
  }
}

TEST_CASE("axpy") {
  const Vector a{1.0, -2.0, 0.5};
  const Vector b{4.0, 0.0, -1.0};
  CHECK(axpy(0.0, a, b) == b);
  CHECK(axpy(-1.0, a, a) == Vector::zeros(3));
  CHECK(axpy(2.0, Vector{1.0, 0.0}, Vector{0.0, 1.0}) == (Vector{2.0, 1.0}));
  CHECK(a == (Vector{1.0, -2.0, 0.5}));  // inputs untouched
  CHECK_THROWS_AS(axpy(1.0, Vector{1.0}, Vector{1.0, 2.0}), DimensionMismatch);
  CHECK_THROWS_AS(axpy(std::numeric_limits<double>::infinity(), a, b), std::invalid_argument);
  CHECK_THROWS_AS(axpy(std::nan(""), a, b), std::invalid_argument);
}

TEST_CASE("norm") {
  CHECK(norm(Vector{3.0, 4.0}) == 5.0);
  CHECK(norm(Vector::zeros(4)) == 0.0);
  for (std::size_t i = 0; i < 4; ++i) CHECK(norm(Vector::basis(4, i)) == 1.0);

  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const Vector a(std::span<const double>(gaussian(rng, 7)));
    CHECK(norm(axpy(-1.0, a, a)) == 0.0);
  }
}

TEST_CASE("variant names round-trip") {
  for (Variant v : {Variant::rescaled, Variant::weak_rescaled, Variant::no_rescale_baseline})
    CHECK(parse_variant(to_string(v)) == v);
  CHECK_THROWS(parse_variant("chebyshev"));
}

TEST_CASE("run configuration validation") {
  RunConfig cfg;
  CHECK_NOTHROW(cfg.validate());

  SUBCASE("q outside (1, 2]") {
    cfg.q = 1.0;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg.q = 2.5;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
  }
  SUBCASE("alpha must be positive") {
    cfg.alpha = 0.0;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
  }
  SUBCASE("mu must exceed 1") {
    cfg.mu_sequence = {1.0};
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
  }
  SUBCASE("mu must exceed M0 M^(1-q) / alpha") {
    cfg.m_zero = 6.0;
    cfg.us_radius = 2.0;
    cfg.alpha = 1.0;
    CHECK(cfg.mu_lower_bound() == doctest::Approx(3.0));
    cfg.mu_sequence = {3.0};
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg.mu_sequence = {3.0001};
    CHECK_NOTHROW(cfg.validate());
  }
  SUBCASE("infinite radius leaves only mu > 1") {
    cfg.m_zero = 100.0;
    CHECK(cfg.mu_lower_bound() == 1.0);
  }
  SUBCASE("weakness in (0, 1]") {
    cfg.weakness_sequence = {0.0};
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg.weakness_sequence = {1.2};
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
  }
  SUBCASE("only the used mu entries are checked for the constant variants") {
    cfg.mu_sequence = {2.0, 0.5};
    CHECK_NOTHROW(cfg.validate());
    cfg.variant = Variant::weak_rescaled;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
  }
}

TEST_CASE("sequences are cycled for the weak variant only") {
  RunConfig cfg;
  cfg.mu_sequence = {2.0, 3.0, 5.0};
  cfg.weakness_sequence = {0.5, 1.0};
  CHECK(cfg.mu_at(2) == 2.0);
  CHECK(cfg.weakness_at(1) == 1.0);

  cfg.variant = Variant::weak_rescaled;
  CHECK(cfg.mu_at(1) == 2.0);
  CHECK(cfg.mu_at(3) == 5.0);
  CHECK(cfg.mu_at(4) == 2.0);
  CHECK(cfg.weakness_at(1) == 0.5);
  CHECK(cfg.weakness_at(2) == 1.0);
  CHECK(cfg.weakness_at(3) == 0.5);
}

TEST_CASE("default gradient tolerance scales with M0") {
  RunConfig cfg;
  CHECK(cfg.effective_gradient_tolerance() == doctest::Approx(1e-10));
  cfg.m_zero = 9.0;
  CHECK(cfg.effective_gradient_tolerance() == doctest::Approx(1e-9));
  cfg.gradient_tolerance = 1e-6;
  CHECK(cfg.effective_gradient_tolerance() == 1e-6);
}
