// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.
//
// Usage: acceptance <path-to-recipwalk-cli>

#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "recipwalk/closed_form.hpp"
#include "recipwalk/monte_carlo.hpp"
#include "recipwalk/network.hpp"
#include "recipwalk/scaling.hpp"
#include "recipwalk/spectral.hpp"
#include "recipwalk/walk_matrices.hpp"

using namespace recipwalk;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      detail << " [" << what << "]";
    }
  }
};

Outcome closed_vs_solve() {
  Outcome o;
  double worst = 0.0;
  for (double theta : {0.25, 0.5, 1.0, 2.0, 5.0}) {
    for (int g = 1; g <= 5; ++g) {
      const double solved = solve_trapping_times(assemble(build_weighted({g, theta}))).average;
      const double d = rel(solved, mfpt_closed(g, theta));
      worst = std::max(worst, d);
      o.require(d <= 1e-10, "g=" + std::to_string(g) + " theta=" + std::to_string(theta));
    }
  }
  o.detail << " max rel dev " << worst << " (tol 1e-10)";
  return o;
}

Outcome pinned_values() {
  Outcome o;
  double worst = 0.0;
  for (double theta : {0.25, 0.5, 1.0, 2.0, 5.0}) {
    const double g1 = solve_trapping_times(assemble(build_weighted({1, theta}))).average;
    const double d1 = rel(g1, (8.0 * theta + 6.0) / 4.0);

    const auto net = build_weighted({2, theta});
    const MfptReport r = solve_trapping_times(assemble(net));
    double ext = 0.0;
    for (const auto& node : net.nodes()) {
      if (node.birth_generation == 2 && node.role == Role::external) ext += r.trapping_time(node.label);
    }
    const double d2 = rel(ext, 48.0 * theta * theta + 80.0 * theta + 40.0);
    worst = std::max({worst, d1, d2});
    o.require(d1 <= 1e-10, "g=1 mean theta=" + std::to_string(theta));
    o.require(d2 <= 1e-10, "g=2 external sum theta=" + std::to_string(theta));
  }
  o.detail << " max rel dev " << worst << " (tol 1e-10)";
  return o;
}

Outcome generation_scaling() {
  Outcome o;
  double worst = 0.0;
  for (double theta : {0.5, 1.0, 2.0}) {
    for (int g = 1; g <= 3; ++g) {
      const MfptReport now = solve_trapping_times(assemble(build_weighted({g, theta})));
      const MfptReport next = solve_trapping_times(assemble(build_weighted({g + 1, theta})));
      for (const auto& [label, t] : now.per_node) {
        worst = std::max(worst, rel(next.trapping_time(label) / t, 4.0 * (theta + 1.0)));
      }
    }
  }
  o.require(worst <= 1e-8, "ratio");
  o.detail << " max rel dev " << worst << " (tol 1e-8)";
  return o;
}

Outcome spectrum_oracle() {
  Outcome o;
  double worst = 0.0;
  for (double theta : {0.5, 1.0, 2.0}) {
    for (int g = 1; g <= 4; ++g) {
      const double d = spectrum_oracle_deviation(build_weighted({g, theta}));
      worst = std::max(worst, d);
      o.require(d <= 1e-8, "eigenvalues g=" + std::to_string(g));
      const SpectrumMultiset s = spectrum(g, theta);
      o.require(s.total_multiplicity() == (std::uint64_t{1} << (2 * g)), "count g=" + std::to_string(g));
      const std::uint64_t ones = g == 1 ? 0 : std::uint64_t{2} << (2 * (g - 1));
      o.require(s.multiplicity_of(1.0) == ones, "multiplicity of 1 at g=" + std::to_string(g));
    }
  }
  o.detail << " max abs dev " << worst << " (tol 1e-8)";
  return o;
}

Outcome block_identity() {
  Outcome o;
  double worst = 0.0, worst_diag = 0.0;
  for (double theta : {0.5, 1.0, 2.0}) {
    for (int g = 1; g <= 3; ++g) {
      const BlockIdentityReport r = verify_block_identity(g, theta);
      worst = std::max(worst, r.max_deviation);
      worst_diag = std::max(worst_diag, r.diagonal_deviation);
    }
  }
  o.require(worst <= 1e-12, "block product");
  o.require(worst_diag <= 1e-12, "diagonal");
  o.detail << " max dev " << worst << ", diagonal dev " << worst_diag << " (tol 1e-12)";
  return o;
}

Outcome exponent_recovery() {
  Outcome o;
  for (double theta : {0.5, 1.0, 3.0}) {
    const ScalingFit fit = run_scaling_fit(theta, 8, 12, MfptSource::closed);
    const double d = rel(fit.fitted_exponent, fit.predicted_exponent);
    o.require(d <= 0.02, "theta=" + std::to_string(theta));
    o.detail << " theta=" << theta << ": " << fit.fitted_exponent << " vs " << fit.predicted_exponent << " (rel " << d << ")";
  }
  o.require(scaling_exponent(1.0) == 1.5, "eta(1)");
  o.require(scaling_exponent(3.0) == 2.0, "eta(3)");
  return o;
}

Outcome eigen_mfpt_growth() {
  Outcome o;
  double worst = 0.0;
  for (double theta : {0.5, 1.0, 2.0}) {
    const auto rows = largest_eigenvalue_scaling(10, theta);
    const EigenScalingRow& last = rows.back();
    const double a = 4.0 * (theta + 1.0);
    worst = std::max({worst, rel(last.sigma_growth, a), rel(last.mfpt_growth, a)});
  }
  o.require(worst <= 5e-3, "growth at g=10");
  o.detail << " max rel dev at g=10 " << worst << " (tol 5e-3)";
  return o;
}

Outcome monte_carlo() {
  Outcome o;
  double worst_z = 0.0;
  for (double theta : {1.0, 2.0}) {
    for (int g = 1; g <= 3; ++g) {
      SimConfig cfg;
      cfg.walkers_per_node = 10000;
      cfg.seed = 20240229;
      const SimReport r = simulate(build_weighted({g, theta}), cfg);
      const double z = (r.average - mfpt_closed(g, theta)) / r.average_std_error;
      worst_z = std::max(worst_z, std::abs(z));
      o.require(std::abs(z) <= 4.0, "z g=" + std::to_string(g) + " theta=" + std::to_string(theta));
      o.require(r.truncated_walks == 0, "truncated walks");
    }
  }
  o.detail << " max |z| " << worst_z << " (limit 4)";
  return o;
}

std::string capture(const std::string& command) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  if (status != 0) out = "<exit status " + std::to_string(status) + ">";
  return out;
}

Outcome determinism(const std::string& cli) {
  Outcome o;
  if (cli.empty()) {
    o.require(false, "no CLI path given");
    return o;
  }
  const std::vector<std::string> commands{
      cli + " verify --json 2>/dev/null",
      cli + " mfpt --method mc --g 3 --theta 2 --walkers 2000 --seed 17 --json 2>/dev/null",
  };
  for (const auto& cmd : commands) {
    const std::string a = capture(cmd);
    const std::string b = capture(cmd);
    o.require(!a.empty() && a.front() == '{', "no JSON from: " + cmd);
    o.require(a == b, "output differs: " + cmd);
    o.detail << " " << a.size() << " bytes identical;";
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"closed form vs linear solve", closed_vs_solve},
      {"pinned exact values", pinned_values},
      {"per-node generation scaling", generation_scaling},
      {"spectrum vs dense eigensolve", spectrum_oracle},
      {"block identity", block_identity},
      {"exponent recovery", exponent_recovery},
      {"1/lambda_min and MFPT growth", eigen_mfpt_growth},
      {"Monte Carlo consistency", monte_carlo},
      {"CLI determinism", [&] { return determinism(cli); }},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail << " exception: " << e.what();
    }
    failures += !o.passed;
    std::cout << (o.passed ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].first << " --"
              << o.detail.str() << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
