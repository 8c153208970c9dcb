#include <doctest.h>

#include <cmath>

#include "recipwalk/closed_form.hpp"
#include "recipwalk/error.hpp"
#include "recipwalk/network.hpp"

using namespace recipwalk;

namespace {

const std::vector<double> kThetaGrid{0.25, 0.5, 1.0, 2.0, 5.0};

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("growth factor") {
  CHECK(growth_factor(1.0) == 8.0);
  CHECK(growth_factor(0.5) == 6.0);
  CHECK(growth_factor(3.0) == 16.0);
  const GrowthSystem s = solve_growth_system(3.0);
  CHECK(s.a == doctest::Approx(16.0));
  CHECK(s.b == doctest::Approx(9.0));
  CHECK(s.c == doctest::Approx(17.0));
  // First equation of the system with (16, 9, 17) at theta = 3.
  CHECK(0.75 * (1.0 + s.c) + 0.25 * (1.0 + s.b) == doctest::Approx(s.a));
  CHECK_THROWS_AS(growth_factor(0.0), DomainError);
  CHECK_THROWS_AS(growth_factor(-1.0), DomainError);
}

TEST_CASE("external newborn sum") {
  CHECK(t_ext_closed(2, 1.0) == doctest::Approx(168.0).epsilon(1e-14));
  CHECK(t_ext_closed(2, 2.0) == doctest::Approx(392.0).epsilon(1e-14));
  CHECK(t_ext_closed(3, 1.0) == doctest::Approx(5280.0).epsilon(1e-14));
  for (double theta : kThetaGrid) CHECK(t_ext_recursive(2, theta) == 48.0 * theta * theta + 80.0 * theta + 40.0);
  CHECK_THROWS_AS(t_ext_closed(1, 1.0), DomainError);
  CHECK_THROWS_AS(t_ext_recursive(1, 1.0), DomainError);
}

TEST_CASE("total sum") {
  CHECK(t_tot_closed(1, 1.0) == doctest::Approx(14.0).epsilon(1e-14));
  CHECK(t_tot_closed(1, 2.0) == doctest::Approx(22.0).epsilon(1e-14));
  CHECK(t_tot_closed(2, 1.0) == doctest::Approx(364.0).epsilon(1e-14));
  for (double theta : kThetaGrid) CHECK(t_tot_recursive(1, theta) == 8.0 * theta + 6.0);
  CHECK_THROWS_AS(t_tot_closed(0, 1.0), DomainError);
}

TEST_CASE("closed MFPT values") {
  CHECK(mfpt_closed(1, 1.0) == doctest::Approx(3.5).epsilon(1e-14));
  CHECK(mfpt_closed(2, 1.0) == doctest::Approx(22.75).epsilon(1e-14));
  CHECK(mfpt_closed(1, 2.0) == doctest::Approx(5.5).epsilon(1e-14));
  CHECK(rel(mfpt_closed(1, 1.0), 18.0 / 7.0 + 5.0 / 4.0 - 9.0 / 28.0) <= 1e-15);
  CHECK_THROWS_AS(mfpt_closed(0, 1.0), DomainError);
  CHECK_THROWS_AS(mfpt_closed(2, 0.0), DomainError);
}

TEST_CASE("MFPT equals total sum over N - 1 bit for bit") {
  for (double theta : kThetaGrid) {
    for (int g = 1; g <= 12; ++g) {
      CHECK(mfpt_closed(g, theta) == t_tot_closed(g, theta) / static_cast<double>(edge_count(g)));
    }
  }
}

TEST_CASE("closed forms agree with their recursions") {
  for (double theta : kThetaGrid) {
    for (int g = 2; g <= 12; ++g) CHECK(rel(t_ext_closed(g, theta), t_ext_recursive(g, theta)) <= 1e-12);
    for (int g = 1; g <= 12; ++g) CHECK(rel(t_tot_closed(g, theta), t_tot_recursive(g, theta)) <= 1e-12);
  }
}

TEST_CASE("scaling exponent") {
  CHECK(scaling_exponent(1.0) == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(scaling_exponent(3.0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(scaling_exponent(0.5) == doctest::Approx(1.2924812503605781).epsilon(1e-14));
  CHECK_THROWS_AS(scaling_exponent(0.0), DomainError);
}

TEST_CASE("breakdown invariants") {
  for (double theta : kThetaGrid) {
    const ClosedFormBreakdown g1 = closed_form_breakdown(1, theta);
    CHECK_FALSE(g1.t_ext.has_value());
    CHECK(g1.mfpt == g1.t_tot / 4.0);
    for (int g = 2; g <= 10; ++g) {
      const ClosedFormBreakdown b = closed_form_breakdown(g, theta);
      REQUIRE(b.t_ext.has_value());
      CHECK(*b.t_ext == 2.0 * *b.t_int);
      CHECK(*b.t_tot_new == *b.t_ext + *b.t_int);
      CHECK(b.mfpt == b.t_tot / static_cast<double>(edge_count(g)));
      CHECK(b.growth_factor == 4.0 * (theta + 1.0));
      CHECK(b.exponent == scaling_exponent(theta));
    }
  }
}

TEST_CASE("leading-term ratio settles") {
  for (double theta : kThetaGrid) {
    const double denom = 8.0 * theta * (theta + 1.0) * (4.0 * theta + 3.0);
    const double leading = (12.0 * theta * theta * theta + 17.0 * theta * theta + 7.0 * theta) / denom;
    double prev_gap = INFINITY;
    for (int g = 8; g <= 12; ++g) {
      const double ratio = mfpt_closed(g, theta) / std::pow(4.0 * (theta + 1.0), g);
      const double gap = std::abs(ratio - leading);
      CHECK(gap <= prev_gap);
      prev_gap = gap;
      if (g == 12) {
        const double prev_ratio = mfpt_closed(11, theta) / std::pow(4.0 * (theta + 1.0), 11);
        CHECK(rel(ratio, prev_ratio) < 1e-3);
      }
    }
  }
}

TEST_CASE("closed-form report") {
  const MfptReport r = closed_form_report(3, 2.0);
  CHECK(r.method == MfptMethod::closed_form);
  CHECK(r.per_node.empty());
  CHECK(r.average == mfpt_closed(3, 2.0));
}
