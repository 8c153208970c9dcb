#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace recipwalk {

enum class MfptSource { closed, solve };

std::string_view to_string(MfptSource source);

struct ScalingPoint {
  int generation = 0;
  double size = 0.0;  // N_g - 1
  double mfpt = 0.0;
  /// Slope of log(mfpt) against log(size) from the previous point.
  std::optional<double> log_slope;
};

struct ScalingFit {
  double theta = 1.0;
  MfptSource source = MfptSource::closed;
  std::vector<ScalingPoint> points;
  /// Headline estimate: successive-pair slope at the largest g.
  double fitted_exponent = 0.0;
  /// Ordinary least squares slope over every point.
  double ols_exponent = 0.0;
  double predicted_exponent = 0.0;
};

/// Least-squares slope of y against x. Needs at least two points with
/// distinct x.
double ols_slope(std::span<const double> x, std::span<const double> y);

/// Default lower end of the fit window for a given upper end.
int default_fit_start(int g_max);

/// Requires g_max - g_min >= 2, g_min >= 1; the solve source is capped at g = 6.
ScalingFit run_scaling_fit(double theta, int g_min, int g_max, MfptSource source);

}  // namespace recipwalk
