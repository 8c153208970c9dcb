#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "recipwalk/closed_form.hpp"
#include "recipwalk/error.hpp"
#include "recipwalk/scaling.hpp"
#include "recipwalk/verify.hpp"

using namespace recipwalk;

TEST_CASE("least-squares slope") {
  const std::vector<double> x{1, 2, 3, 4};
  const std::vector<double> y{3, 5, 7, 9};
  CHECK(ols_slope(x, y) == doctest::Approx(2.0).epsilon(1e-15));
  const std::vector<double> y2{1, 2, 1, 2};
  CHECK(ols_slope(x, y2) == doctest::Approx(0.2));
  const std::vector<double> same{1, 1};
  CHECK_THROWS_AS(ols_slope(same, same), DomainError);
  const std::vector<double> one{1};
  CHECK_THROWS_AS(ols_slope(one, one), DomainError);
}

TEST_CASE("default fit window") {
  CHECK(default_fit_start(12) == 6);
  CHECK(default_fit_start(8) == 3);
  CHECK(default_fit_start(5) == 3);
}

TEST_CASE("fitted exponent approaches 1 + log4(theta + 1)") {
  for (double theta : {1.0, 3.0}) {
    const ScalingFit fit = run_scaling_fit(theta, 6, 12, MfptSource::closed);
    CHECK(fit.points.size() == 7);
    CHECK(fit.predicted_exponent == scaling_exponent(theta));
    CHECK(std::abs(fit.fitted_exponent - fit.predicted_exponent) <= 0.02 * fit.predicted_exponent);
    CHECK(std::abs(fit.ols_exponent - fit.predicted_exponent) <= 0.02 * fit.predicted_exponent);
  }
  const ScalingFit three = run_scaling_fit(3.0, 6, 12, MfptSource::closed);
  CHECK(three.fitted_exponent == doctest::Approx(2.0).epsilon(0.02));
}

TEST_CASE("successive slopes settle monotonically") {
  for (double theta : {0.5, 1.0, 3.0}) {
    const ScalingFit fit = run_scaling_fit(theta, 3, 12, MfptSource::closed);
    CHECK_FALSE(fit.points.front().log_slope.has_value());
    double prev_gap = INFINITY;
    for (std::size_t i = 1; i < fit.points.size(); ++i) {
      const double gap = std::abs(*fit.points[i].log_slope - fit.predicted_exponent);
      CHECK(gap <= prev_gap);
      prev_gap = gap;
    }
  }
}

TEST_CASE("solve and closed sources agree pointwise") {
  for (double theta : {0.5, 2.0}) {
    const ScalingFit a = run_scaling_fit(theta, 1, 3, MfptSource::closed);
    const ScalingFit b = run_scaling_fit(theta, 1, 3, MfptSource::solve);
    for (std::size_t i = 0; i < a.points.size(); ++i) {
      CHECK(std::abs(a.points[i].mfpt - b.points[i].mfpt) <= 1e-10 * a.points[i].mfpt);
      CHECK(a.points[i].size == b.points[i].size);
    }
  }
}

TEST_CASE("scaling fit domain errors") {
  CHECK_THROWS_AS(run_scaling_fit(1.0, 0, 4, MfptSource::closed), DomainError);
  CHECK_THROWS_AS(run_scaling_fit(1.0, 3, 4, MfptSource::closed), DomainError);
  CHECK_THROWS_AS(run_scaling_fit(1.0, 3, 7, MfptSource::solve), DomainError);
  CHECK_THROWS_AS(run_scaling_fit(0.0, 3, 6, MfptSource::closed), DomainError);
}

TEST_CASE("verify suite passes on the real model") {
  VerifyOptions opt;
  opt.g_cap = 3;
  opt.mc_walkers = 1000;
  const VerifyReport r = run_verify_suite(opt);
  CHECK_FALSE(r.checks.empty());
  for (const auto& c : r.checks) {
    INFO(c.name, " theta=", c.theta, " value=", c.value, " tol=", c.tolerance);
    CHECK(c.passed);
  }
  CHECK(r.passed());
}

TEST_CASE("verify suite catches an injected weight fault") {
  VerifyOptions opt;
  opt.g_cap = 3;
  opt.mc_walkers = 1000;
  opt.inject_fault = true;
  const VerifyReport r = run_verify_suite(opt);
  CHECK_FALSE(r.passed());
  bool mfpt_failed = false;
  for (const auto& c : r.checks) mfpt_failed |= c.name == "mfpt_solve_vs_closed" && !c.passed;
  CHECK(mfpt_failed);
}
