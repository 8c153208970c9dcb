#include "recipwalk/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "recipwalk/closed_form.hpp"
#include "recipwalk/error.hpp"
#include "recipwalk/monte_carlo.hpp"
#include "recipwalk/network.hpp"
#include "recipwalk/spectral.hpp"
#include "recipwalk/walk_matrices.hpp"

namespace recipwalk {

namespace {

constexpr double kFaultFactor = 1.0 + 1e-3;

double relative(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

class Suite {
 public:
  explicit Suite(const VerifyOptions& opts) : opts_(opts) {}

  WeightedDigraph network(int g, double theta) const {
    WeightedDigraph net = build_weighted({g, theta});
    return opts_.inject_fault ? net.with_scaled_arc(0, kFaultFactor) : net;
  }

  // Runs `body` for g = g_lo..g_hi and records the worst deviation it returns.
  void check(const std::string& name, double theta, double tolerance, int g_lo, int g_hi,
             const std::function<double(int)>& body) {
    double worst = 0.0;
    for (int g = g_lo; g <= g_hi; ++g) {
      try {
        const double v = body(g);
        worst = std::isnan(v) ? v : std::max(worst, v);
      } catch (const std::exception& e) {
        throw std::runtime_error(name + " (g=" + std::to_string(g) + "): " + e.what());
      }
      if (std::isnan(worst)) break;
    }
    checks_.push_back({name, theta, worst, tolerance, worst <= tolerance});
  }

  std::vector<CheckResult> take() { return std::move(checks_); }

 private:
  const VerifyOptions& opts_;
  std::vector<CheckResult> checks_;
};

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

VerifyReport run_verify_suite(const VerifyOptions& opts) {
  if (opts.g_cap < 1 || opts.g_cap > 6) throw DomainError("verify needs 1 <= g_cap <= 6");
  if (opts.thetas.empty()) throw DomainError("verify needs at least one theta");
  for (double theta : opts.thetas) NetworkConfig{0, theta}.validate();

  Suite suite(opts);
  const int cap = opts.g_cap;
  for (double theta : opts.thetas) {
    suite.check("node_edge_counts", theta, 0.0, 0, cap, [&](int g) {
      const WeightedDigraph net = suite.network(g, theta);
      const bool ok = net.node_count() == node_count(g) && net.edges().size() == edge_count(g);
      return ok ? 0.0 : 1.0;
    });

    suite.check("out_strength_closed_form", theta, opts.strength_tol, 0, cap, [&](int g) {
      const WeightedDigraph net = suite.network(g, theta);
      double worst = 0.0;
      for (const NodeRecord& n : net.nodes()) {
        worst = std::max(worst, relative(net.out_strength(n.label), closed_form_out_strength(n, g, theta)));
      }
      return worst;
    });

    suite.check("mfpt_solve_vs_closed", theta, opts.mfpt_tol, 1, cap, [&](int g) {
      const MfptReport solved = solve_trapping_times(assemble(suite.network(g, theta)));
      return relative(solved.average, mfpt_closed(g, theta));
    });

    suite.check("mfpt_entry_sum_vs_solve", theta, opts.mfpt_tol, 1, std::min(cap, 5), [&](int g) {
      const TrapSystem sys = assemble(suite.network(g, theta));
      const MfptReport solved = solve_trapping_times(sys);
      const MfptReport summed = fundamental_entry_sum(sys);
      double worst = relative(summed.average, solved.average);
      for (std::size_t k = 0; k < solved.per_node.size(); ++k) {
        worst = std::max(worst, relative(summed.per_node[k].second, solved.per_node[k].second));
      }
      return worst;
    });

    suite.check("mfpt_monte_carlo_zscore", theta, opts.z_max, 1, std::min(cap, opts.mc_g_cap), [&](int g) {
      SimConfig cfg;
      cfg.walkers_per_node = opts.mc_walkers;
      cfg.seed = opts.seed;
      cfg.threads = opts.threads;
      const SimReport sim = simulate(suite.network(g, theta), cfg);
      if (!sim.valid()) return std::numeric_limits<double>::infinity();
      return std::abs(sim.average - mfpt_closed(g, theta)) / sim.average_std_error;
    });

    suite.check("spectrum_oracle", theta, opts.spectrum_tol, 1, std::min(cap, 4),
                [&](int g) { return spectrum_oracle_deviation(suite.network(g, theta)); });

    suite.check("spectrum_counts", theta, 0.0, 1, cap, [&](int g) {
      const SpectrumMultiset s = spectrum(g, theta);
      const auto total = static_cast<double>(s.total_multiplicity());
      const auto ones = static_cast<double>(s.multiplicity_of(1.0));
      const double want_ones = g == 1 ? 0.0 : 2.0 * static_cast<double>(edge_count(g - 1));
      return std::abs(total - static_cast<double>(edge_count(g))) + std::abs(ones - want_ones);
    });

    suite.check("block_identity", theta, opts.block_tol, 1, std::min(cap - 1, 3), [&](int g) {
      const BlockIdentityReport r = verify_block_identity(suite.network(g, theta), suite.network(g + 1, theta));
      return std::max({r.max_deviation, r.diagonal_deviation, r.identity_block_deviation});
    });
  }

  return {opts, suite.take()};
}

}  // namespace recipwalk
