#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "rmrac/projection.hpp"

using namespace rmrac;

namespace {
// theta_max_prime = 1, theta_max = 2
const ProjectionConfig kCfg = ProjectionConfig::make(1.0, 1.0, 0.5, 1.0);
}

TEST_CASE("config invariants") {
  CHECK(kCfg.theta_max == doctest::Approx(2.0));
  CHECK(kCfg.xi0 == doctest::Approx(0.5));
  CHECK_THROWS_AS(ProjectionConfig::make(1.0, 1.0, 1.0, 1.0), std::invalid_argument);   // c = 1
  CHECK_THROWS_AS(ProjectionConfig::make(1.0, -0.1, 0.5, 1.0), std::invalid_argument);  // eps0 < 0
  CHECK_THROWS_AS(ProjectionConfig::make(1.0, 1.0, 0.5, 0.0), std::invalid_argument);   // gamma = 0
}

TEST_CASE("pass-through inside the inner set") {
  CHECK(proj(0.5, 7.0, kCfg) == doctest::Approx(7.0));
}

TEST_CASE("zero at the bound") {
  CHECK(proj(2.0, 5.0, kCfg) == doctest::Approx(0.0));
}

TEST_CASE("scaled outward update in the annulus") {
  // theta = -1.5, y = -3, y*theta > 0: (4 - 2.25)/(4 - 1) * (-3) = -1.75
  CHECK(proj(-1.5, -3.0, kCfg) == doctest::Approx(-1.75));
}

TEST_CASE("inward updates pass through even in the annulus") {
  CHECK(proj(-1.5, 3.0, kCfg) == doctest::Approx(3.0));
  CHECK(proj(1.5, -3.0, kCfg) == doctest::Approx(-3.0));
}

TEST_CASE("invariant violation") {
  CHECK_THROWS_AS(proj(2.1, 1.0, kCfg), std::invalid_argument);
  CHECK_NOTHROW(proj(2.0 + 0.5e-9, 1.0, kCfg));  // inside the tolerance band
}

TEST_CASE("regions") {
  CHECK(region_of(0.0, kCfg) == ThetaRegion::A);
  CHECK(region_of(1.0, kCfg) == ThetaRegion::A);    // closed inner set
  CHECK(region_of(-1.0, kCfg) == ThetaRegion::A);
  CHECK(region_of(1.5, kCfg) == ThetaRegion::BUpper);
  CHECK(region_of(2.0, kCfg) == ThetaRegion::BUpper);
  CHECK(region_of(-1.2, kCfg) == ThetaRegion::BU);
  CHECK(region_of(-1.6, kCfg) == ThetaRegion::BL);
  CHECK(region_of(-2.0, kCfg) == ThetaRegion::BL);
  CHECK(region_of(2.3, kCfg) == ThetaRegion::Outside);
  // boundary tie at -theta_max + xi0 belongs to the closed strip
  CHECK(region_of(-1.5, kCfg) == ThetaRegion::BL);

  const ProjectionConfig tight = ProjectionConfig::make(1.0, 1.0, 0.05, 1.0);
  CHECK(region_of(-1.97, tight) == ThetaRegion::BL);
  CHECK(region_of(-1.5, tight) == ThetaRegion::BU);
}

TEST_CASE("adaptation law wrapper") {
  CHECK(theta_dot(0.3, 0.0, 5.0, kCfg) == doctest::Approx(0.0));
  CHECK(theta_dot(0.5, 1.0, 2.0, kCfg) == doctest::Approx(-2.0));
  // at the lower bound with an outward push the update dies
  CHECK(theta_dot(-2.0, -1.0, 1.0, kCfg) == doctest::Approx(0.0));
}

TEST_CASE("lower bound on the scaled magnitude over the B_U strip") {
  // |Proj(theta, y)| > c |y| everywhere in B_U, both signs of y
  for (int i = 0; i <= 2000; ++i) {
    const double lo = -kCfg.theta_max + kCfg.xi0;
    const double hi = -kCfg.theta_max_prime;
    const double theta = lo + (hi - lo) * i / 2000.0;
    if (region_of(theta, kCfg) != ThetaRegion::BU) continue;
    for (double y : {-3.7, -1.0, 1.0, 3.7}) {
      CAPTURE(theta);
      CAPTURE(y);
      CHECK(std::abs(proj(theta, y, kCfg)) > kCfg.c * std::abs(y));
    }
  }
}

TEST_CASE("continuity across the inner boundary and at y = 0") {
  const double eps = 1e-9;
  for (double y : {2.5, -2.5}) {
    const double inside = proj(std::copysign(kCfg.theta_max_prime - eps, y), y, kCfg);
    const double outside = proj(std::copysign(kCfg.theta_max_prime + eps, y), y, kCfg);
    CHECK(std::abs(inside - outside) < 1e-6);
  }
  CHECK(proj(-1.5, -1e-12, kCfg) == doctest::Approx(0.0).epsilon(1e-6));
  CHECK(proj(-1.5, 1e-12, kCfg) == doctest::Approx(0.0).epsilon(1e-6));
}

TEST_CASE("odd symmetry") {
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> th(-2.0, 2.0);
  std::uniform_real_distribution<double> ys(-5.0, 5.0);
  for (int i = 0; i < 1000; ++i) {
    const double theta = th(rng), y = ys(rng);
    CHECK(proj(-theta, -y, kCfg) == doctest::Approx(-proj(theta, y, kCfg)));
  }
}

TEST_CASE("discrete-time parameter invariance under random bounded signals") {
  // Euler-integrate theta_dot against piecewise-constant random e, x_p and
  // confirm the excursion stays within the documented discrete slack.
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> sig(-4.0, 4.0);
  std::uniform_real_distribution<double> th0(-2.0, 2.0);
  std::uniform_real_distribution<double> gam(0.1, 10.0);
  for (int run = 0; run < 200; ++run) {
    const double gamma = gam(rng);
    const ProjectionConfig cfg = ProjectionConfig::make(1.0, 1.0, 0.5, gamma);
    const double dt = 1e-3;
    double theta = th0(rng);
    double max_exp = 0.0;
    double max_theta = std::abs(theta);
    for (int k = 0; k < 2000; ++k) {
      const double e = sig(rng), x_p = sig(rng);
      max_exp = std::max(max_exp, std::abs(e * x_p));
      const double clamped = std::clamp(theta, -cfg.theta_max, cfg.theta_max);
      theta += dt * theta_dot(clamped, e, x_p, cfg);
      max_theta = std::max(max_theta, std::abs(theta));
    }
    CHECK(max_theta <= cfg.theta_max + 10.0 * dt * gamma * max_exp);
  }
}
