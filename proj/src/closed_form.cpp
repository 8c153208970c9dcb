#include "recipwalk/closed_form.hpp"

#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "recipwalk/error.hpp"

namespace recipwalk {

namespace {

constexpr double kSelfCheckTol = 1e-12;

void require_theta(double theta) {
  if (!(theta > 0.0) || !std::isfinite(theta)) {
    throw DomainError("theta must be a positive finite real, got " + std::to_string(theta));
  }
}

void require_generation(int g, int min_g) {
  if (g < min_g) {
    throw DomainError("generation must be >= " + std::to_string(min_g) + ", got " + std::to_string(g));
  }
  // Magnitudes stay below 1e16 up to here.
  if (g > 15) throw DomainError("generation " + std::to_string(g) + " exceeds the supported maximum of 15");
}

void check_agreement(const char* what, double closed, double recursive) {
  if (std::abs(closed - recursive) > kSelfCheckTol * std::abs(closed)) {
    throw NumericalError(std::string(what) + ": closed form " + std::to_string(closed) +
                         " disagrees with recursion " + std::to_string(recursive));
  }
}

// Coefficients shared by the total-sum and MFPT closed forms, each already
// divided by theta (theta + 1) (4 theta + 3).
struct TotalCoefficients {
  double leading;
  double middle;
  double constant;
};

TotalCoefficients total_coefficients(double theta) {
  const double denom = theta * (theta + 1.0) * (4.0 * theta + 3.0);
  return {
      (((12.0 * theta + 17.0) * theta + 7.0) * theta) / denom,
      (((16.0 * theta + 28.0) * theta + 20.0) * theta + 6.0) / denom,
      3.0 * (theta + 1.0) * (2.0 * theta + 1.0) / denom,
  };
}

}  // namespace

GrowthSystem solve_growth_system(double theta) {
  require_theta(theta);
  const double p_ext = theta / (theta + 1.0);
  const double p_int = 1.0 / (theta + 1.0);
  // Unknowns (a, b, c):
  //   a = p_ext (1 + c) + p_int (1 + b)
  //   b = 1/2 + (1 + a)/2
  //   c = 1 + a
  Eigen::Matrix3d m;
  m << 1.0, -p_int, -p_ext,
      -0.5, 1.0, 0.0,
      -1.0, 0.0, 1.0;
  const Eigen::Vector3d rhs(p_ext + p_int, 1.0, 1.0);
  const Eigen::Vector3d x = m.partialPivLu().solve(rhs);
  return {x(0), x(1), x(2)};
}

double growth_factor(double theta) {
  require_theta(theta);
  const double a = 4.0 * (theta + 1.0);
  check_agreement("growth factor", a, solve_growth_system(theta).a);
  return a;
}

double t_ext_recursive(int g, double theta) {
  require_theta(theta);
  require_generation(g, 2);
  double t = (48.0 * theta + 80.0) * theta + 40.0;
  for (int n = 2; n < g; ++n) {
    t = 16.0 * (theta + 1.0) * t - (4.0 * theta + 2.0) * std::ldexp(1.0, 2 * n);
  }
  return t;
}

double t_ext_closed(int g, double theta) {
  require_theta(theta);
  require_generation(g, 2);
  const double lead = ((12.0 * theta + 17.0) * theta + 7.0) / ((theta + 1.0) * (4.0 * theta + 3.0));
  const double tail = (2.0 * theta + 1.0) / (4.0 * theta + 3.0);
  const double t = lead * std::ldexp(1.0, 4 * g - 4) * std::pow(theta + 1.0, g) + tail * std::ldexp(1.0, 2 * g - 1);
#ifdef RECIPWALK_SELF_CHECK
  check_agreement("external-node FPT sum", t, t_ext_recursive(g, theta));
#endif
  return t;
}

double t_tot_recursive(int g, double theta) {
  require_theta(theta);
  require_generation(g, 1);
  const double lead = ((36.0 * theta + 51.0) * theta + 21.0) / ((theta + 1.0) * (4.0 * theta + 3.0));
  const double tail = (6.0 * theta + 3.0) / (4.0 * theta + 3.0);
  double t = 8.0 * theta + 6.0;
  for (int n = 2; n <= g; ++n) {
    // Old nodes scale by 4(theta+1); newborns contribute their own sum.
    const double newborn = lead * std::ldexp(1.0, 4 * n - 5) * std::pow(theta + 1.0, n) + tail * std::ldexp(1.0, 2 * n - 2);
    t = (4.0 * theta + 4.0) * t + newborn;
  }
  return t;
}

double t_tot_closed(int g, double theta) {
  require_theta(theta);
  require_generation(g, 1);
  const auto c = total_coefficients(theta);
  const double q = std::pow(theta + 1.0, g);
  const double t = c.leading * std::ldexp(1.0, 4 * g - 3) * q + c.middle * std::ldexp(1.0, 2 * g - 3) * q -
                   c.constant * std::ldexp(1.0, 2 * g - 2);
#ifdef RECIPWALK_SELF_CHECK
  check_agreement("total FPT sum", t, t_tot_recursive(g, theta));
#endif
  return t;
}

double mfpt_closed(int g, double theta) {
  require_theta(theta);
  require_generation(g, 1);
  // Same operation order as t_tot_closed with every power of two shifted by
  // -2g, so the result equals t_tot_closed / 4^g bit for bit.
  const auto c = total_coefficients(theta);
  const double q = std::pow(theta + 1.0, g);
  return c.leading * std::ldexp(1.0, 2 * g - 3) * q + c.middle * std::ldexp(1.0, -3) * q -
         c.constant * std::ldexp(1.0, -2);
}

double scaling_exponent(double theta) {
  require_theta(theta);
  return 1.0 + std::log(theta + 1.0) / std::log(4.0);
}

ClosedFormBreakdown closed_form_breakdown(int g, double theta) {
  ClosedFormBreakdown b;
  b.generation = g;
  b.theta = theta;
  b.growth_factor = growth_factor(theta);
  b.t_tot = t_tot_closed(g, theta);
  b.mfpt = mfpt_closed(g, theta);
  b.exponent = scaling_exponent(theta);
  if (g >= 2) {
    b.t_ext = t_ext_closed(g, theta);
    b.t_int = *b.t_ext / 2.0;
    b.t_tot_new = *b.t_ext + *b.t_int;
  }
  return b;
}

MfptReport closed_form_report(int g, double theta) {
  MfptReport r;
  r.method = MfptMethod::closed_form;
  r.generation = g;
  r.theta = theta;
  r.average = mfpt_closed(g, theta);
  return r;
}

}  // namespace recipwalk
