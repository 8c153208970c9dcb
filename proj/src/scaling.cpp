#include "recipwalk/scaling.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "recipwalk/closed_form.hpp"
#include "recipwalk/error.hpp"
#include "recipwalk/network.hpp"
#include "recipwalk/walk_matrices.hpp"

namespace recipwalk {

std::string_view to_string(MfptSource source) { return source == MfptSource::closed ? "closed" : "solve"; }

double ols_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw DomainError("least squares needs two or more paired points");
  const auto n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) mx += x[i], my += y[i];
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  if (sxx == 0.0) throw DomainError("least squares needs distinct x values");
  return sxy / sxx;
}

int default_fit_start(int g_max) { return std::max(3, g_max - 6); }

ScalingFit run_scaling_fit(double theta, int g_min, int g_max, MfptSource source) {
  if (g_min < 1) throw DomainError("fit window must start at g >= 1");
  if (g_max - g_min < 2) throw DomainError("fit window needs at least three generations");
  if (source == MfptSource::solve && g_max > 6) {
    throw DomainError("the solve source is capped at g = 6, got g_max = " + std::to_string(g_max));
  }

  ScalingFit fit;
  fit.theta = theta;
  fit.source = source;
  fit.predicted_exponent = scaling_exponent(theta);

  std::vector<double> log_size, log_mfpt;
  for (int g = g_min; g <= g_max; ++g) {
    ScalingPoint p;
    p.generation = g;
    p.size = static_cast<double>(edge_count(g));
    p.mfpt = source == MfptSource::closed ? mfpt_closed(g, theta)
                                          : solve_trapping_times(assemble(build_weighted({g, theta}))).average;
    log_size.push_back(std::log(p.size));
    log_mfpt.push_back(std::log(p.mfpt));
    if (!fit.points.empty()) {
      const std::size_t i = log_size.size() - 1;
      p.log_slope = (log_mfpt[i] - log_mfpt[i - 1]) / (log_size[i] - log_size[i - 1]);
    }
    fit.points.push_back(p);
  }
  fit.fitted_exponent = *fit.points.back().log_slope;
  fit.ols_exponent = ols_slope(log_size, log_mfpt);
  return fit;
}

}  // namespace recipwalk
