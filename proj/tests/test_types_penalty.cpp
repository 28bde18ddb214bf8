#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>

#include "acoci/beams.hpp"
#include "acoci/penalty.hpp"
#include "acoci/types.hpp"

using acoci::Bounds;
using acoci::penalize;
using acoci::Problem;
using acoci::SolverConfig;
using acoci::ValidationError;
using Catch::Approx;

namespace {
const std::vector<double> kTablePoint{6.0082, 5.3229, 4.4879, 3.5039, 2.1509};
}

TEST_CASE("Bounds validation") {
  CHECK_THROWS_AS(Bounds({1.0}, {1.0}), ValidationError);
  CHECK_THROWS_AS(Bounds({2.0}, {1.0}), ValidationError);
  CHECK_THROWS_AS(Bounds({}, {}), ValidationError);
  CHECK_THROWS_AS(Bounds({0.0, 0.0}, {1.0}), ValidationError);

  const Bounds b({0.0, -1.0}, {1.0, 1.0});
  CHECK(b.dimension() == 2);
  CHECK(b.width(0) == 1.0);
  CHECK(b.contains({0.5, 0.0}));
  CHECK(b.contains({0.0, -1.0}));  // boundary included
  CHECK_FALSE(b.contains({1.5, 0.0}));
  CHECK_FALSE(b.contains({0.5}));
}

TEST_CASE("Problem validation") {
  CHECK_THROWS_AS(Problem("p", nullptr, {}, Bounds(1, 0.0, 1.0)), ValidationError);
  CHECK_THROWS_AS(
      Problem("p", [](const std::vector<double>&) { return 0.0; }, {nullptr},
              Bounds(1, 0.0, 1.0)),
      ValidationError);

  const Problem p("quad", [](const std::vector<double>& x) { return x[0] * x[0]; }, {},
                  Bounds(1, -1.0, 1.0), 0.0);
  CHECK(p.dimension() == 1);
  CHECK(p.objective({2.0}) == 4.0);
  CHECK(p.known_optimum() == 0.0);
}

TEST_CASE("SolverConfig validation") {
  SolverConfig config;
  CHECK_NOTHROW(config.validate());

  auto expect_invalid = [](auto setter) {
    SolverConfig c;
    setter(c);
    CHECK_THROWS_AS(c.validate(), ValidationError);
  };
  expect_invalid([](SolverConfig& c) { c.ants = 0; });
  expect_invalid([](SolverConfig& c) { c.elites = 0; });
  expect_invalid([](SolverConfig& c) { c.elites = c.ants + 1; });
  expect_invalid([](SolverConfig& c) { c.reduction_factor = 0.0; });
  expect_invalid([](SolverConfig& c) { c.reduction_factor = 1.0; });
  expect_invalid([](SolverConfig& c) { c.q_constant = -1.0; });
  expect_invalid([](SolverConfig& c) { c.evaporation = 1.0; });
  expect_invalid([](SolverConfig& c) { c.evaporation = -0.1; });
  expect_invalid([](SolverConfig& c) { c.tau_init = 0.0; });
  expect_invalid([](SolverConfig& c) { c.convergence_tol = 0.0; });
  expect_invalid([](SolverConfig& c) { c.max_iterations = 0; });
  expect_invalid([](SolverConfig& c) { c.penalty_coefficient = 0.0; });
}

TEST_CASE("Rng is deterministic and in range") {
  acoci::Rng a(123), b(123), c(124);
  bool identical = true, differs = false;
  for (int i = 0; i < 1000; ++i) {
    const double ua = a.next_unit();
    identical = identical && (ua == b.next_unit());
    differs = differs || (ua != c.next_unit());
    CHECK(ua >= 0.0);
    CHECK(ua < 1.0);
  }
  CHECK(identical);
  CHECK(differs);
}

TEST_CASE("penalize at the published cantilever solution") {
  const Problem cantilever = acoci::beams::cantilever_problem();
  const auto report = penalize(cantilever, kTablePoint, 1e6);

  CHECK(report.raw_value == Approx(1.33996512).margin(1e-8));
  REQUIRE(report.violations.size() == 1);
  // g = -3.4449e-06 at this point: active but feasible, so no penalty at all
  CHECK(report.violations[0] == 0.0);
  CHECK(report.penalized_value == report.raw_value);
  CHECK(report.feasible);
}

TEST_CASE("penalize on an unconstrained problem is the identity") {
  const Problem p("plain", [](const std::vector<double>& x) { return 3.0 * x[0]; }, {},
                  Bounds(1, -10.0, 10.0));
  const auto report = penalize(p, {2.5}, 1e6);
  CHECK(report.raw_value == 7.5);
  CHECK(report.penalized_value == 7.5);
  CHECK(report.feasible);
  CHECK(report.violations.empty());
}

TEST_CASE("penalize far inside the infeasible region") {
  const Problem cantilever = acoci::beams::cantilever_problem();
  const auto report = penalize(cantilever, {1.0, 1.0, 1.0, 1.0, 1.0}, 1e6);
  // g(1,...,1) = 61+37+19+7+1-1 = 124
  CHECK(report.raw_value == Approx(0.312).margin(1e-12));
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0] == Approx(124.0).margin(1e-9));
  CHECK(report.penalized_value == Approx(0.312 + 1e6 * 124.0 * 124.0).epsilon(1e-12));
  CHECK_FALSE(report.feasible);
}

TEST_CASE("penalize input validation") {
  const Problem cantilever = acoci::beams::cantilever_problem();
  CHECK_THROWS_AS(penalize(cantilever, kTablePoint, 0.0), ValidationError);
  CHECK_THROWS_AS(penalize(cantilever, kTablePoint, -1.0), ValidationError);
  CHECK_THROWS_AS(penalize(cantilever, {1.0, 1.0}, 1e6), ValidationError);
  CHECK_THROWS_AS(penalize(cantilever, {0.0, 1.0, 1.0, 1.0, 1.0}, 1e6), ValidationError);
}

TEST_CASE("penalize reports the offending function on non-finite values") {
  const Problem bad_objective(
      "bad-objective",
      [](const std::vector<double>&) { return std::numeric_limits<double>::quiet_NaN(); }, {},
      Bounds(1, 0.0, 1.0));
  CHECK_THROWS_WITH(penalize(bad_objective, {0.5}, 1.0),
                    Catch::Matchers::ContainsSubstring("objective"));

  const Problem bad_constraint(
      "bad-constraint", [](const std::vector<double>&) { return 0.0; },
      {[](const std::vector<double>&) { return std::numeric_limits<double>::infinity(); }},
      Bounds(1, 0.0, 1.0));
  CHECK_THROWS_WITH(penalize(bad_constraint, {0.5}, 1.0),
                    Catch::Matchers::ContainsSubstring("constraint 0"));
}

TEST_CASE("penalty monotonicity in a single violation") {
  // constant objective, one constraint g(x) = x; violation grows with x
  const Problem p("ramp", [](const std::vector<double>&) { return 1.0; },
                  {[](const std::vector<double>& x) { return x[0]; }}, Bounds(1, -1.0, 1.0));
  double previous = penalize(p, {0.1}, 100.0).penalized_value;
  for (double v : {0.2, 0.4, 0.7, 1.0}) {
    const double current = penalize(p, {v}, 100.0).penalized_value;
    CHECK(current > previous);
    previous = current;
  }
}

TEST_CASE("penalized equals raw exactly on feasible points") {
  const Problem cantilever = acoci::beams::cantilever_problem();
  acoci::Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    std::vector<double> x(5);
    for (auto& v : x) v = rng.uniform(6.0, 100.0);  // g < 0 everywhere here
    const auto report = penalize(cantilever, x, 1e6);
    REQUIRE(report.feasible);
    CHECK(report.penalized_value == report.raw_value);
  }
}

TEST_CASE("penalty is affine in the coefficient for infeasible points") {
  const Problem cantilever = acoci::beams::cantilever_problem();
  const std::vector<double> x{1.0, 1.5, 2.0, 1.2, 0.8};
  const auto r1 = penalize(cantilever, x, 1e3);
  const auto r2 = penalize(cantilever, x, 2e3);
  const auto r3 = penalize(cantilever, x, 3e3);
  const double slope12 = (r2.penalized_value - r1.penalized_value) / 1e3;
  const double slope23 = (r3.penalized_value - r2.penalized_value) / 1e3;
  CHECK(slope12 == Approx(slope23).epsilon(1e-12));
  CHECK(r2.penalized_value > r1.penalized_value);
}
