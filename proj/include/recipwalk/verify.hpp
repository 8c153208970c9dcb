#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace recipwalk {

struct VerifyOptions {
  int g_cap = 4;  // <= 6
  std::vector<double> thetas{0.5, 1.0, 2.0};
  double mfpt_tol = 1e-10;
  double spectrum_tol = 1e-8;
  double block_tol = 1e-12;
  double strength_tol = 1e-12;
  double z_max = 4.0;
  int mc_g_cap = 2;
  std::uint64_t mc_walkers = 2000;
  std::uint64_t seed = 20240229;
  unsigned threads = 0;
  /// Scale one arc weight by (1 + 1e-3) in every network the suite builds.
  bool inject_fault = false;
};

struct CheckResult {
  std::string name;
  double theta = 0.0;
  /// Worst deviation seen over the generations covered by the check.
  double value = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct VerifyReport {
  VerifyOptions options;
  std::vector<CheckResult> checks;

  bool passed() const;
};

/// Runs the cross-method checks for every theta in the grid. Module errors
/// are rethrown as std::runtime_error prefixed with the failing check's name.
VerifyReport run_verify_suite(const VerifyOptions& options);

}  // namespace recipwalk
