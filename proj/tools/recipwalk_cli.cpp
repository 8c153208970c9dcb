// recipwalk: build the weighted fractal network, compute trapping times,
// spectra and scaling fits from the command line.
//
// Results go to standard output (or --out FILE); diagnostics go to standard
// error. Exit status is 0 only when every requested check passes.

#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "recipwalk/closed_form.hpp"
#include "recipwalk/error.hpp"
#include "recipwalk/io.hpp"
#include "recipwalk/monte_carlo.hpp"
#include "recipwalk/network.hpp"
#include "recipwalk/scaling.hpp"
#include "recipwalk/spectral.hpp"
#include "recipwalk/verify.hpp"
#include "recipwalk/walk_matrices.hpp"

namespace {

using namespace recipwalk;

struct CommonOptions {
  int g = 2;
  double theta = 1.0;
  std::string format = "csv";
  bool json = false;
  std::string out_path;

  bool want_json() const { return json || format == "json"; }
};

void add_common(CLI::App* cmd, CommonOptions& opts, const std::string& default_format, int default_g = 2) {
  opts.format = default_format;
  opts.g = default_g;
  cmd->add_option("--g", opts.g, "Generation g")->capture_default_str();
  cmd->add_option("--theta", opts.theta, "Weight parameter theta > 0")->capture_default_str();
  cmd->add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  cmd->add_flag("--json", opts.json, "Shorthand for --format json");
  cmd->add_option("--out", opts.out_path, "Write output to FILE instead of standard output");
}

// Output sink that writes to --out FILE when given.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw std::runtime_error("cannot open output file " + path);
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

void emit_json(const CommonOptions& opts, const io::json& doc) {
  Sink sink(opts.out_path);
  sink.stream() << doc.dump(2) << '\n';
}

int run_generate(const CommonOptions& opts, const std::string& table, bool binary) {
  const NetworkConfig cfg{opts.g, opts.theta};
  const WeightedDigraph net = binary ? build_binary(cfg) : build_weighted(cfg);
  if (opts.want_json()) {
    emit_json(opts, io::to_json(net));
    return 0;
  }
  Sink sink(opts.out_path);
  if (table == "nodes") {
    io::write_nodes_csv(sink.stream(), net);
  } else {
    io::write_arcs_csv(sink.stream(), net);
  }
  return 0;
}

int run_mfpt(const CommonOptions& opts, const std::string& method, const SimConfig& sim, double tol) {
  if (method == "closed") {
    // The breakdown is a single record, so it is always JSON.
    emit_json(opts, io::to_json(closed_form_breakdown(opts.g, opts.theta)));
    return 0;
  }
  const WeightedDigraph net = build_weighted({opts.g, opts.theta});
  if (method == "mc") {
    const SimReport report = simulate(net, sim);
    if (opts.want_json()) {
      emit_json(opts, io::to_json(report));
    } else {
      Sink sink(opts.out_path);
      io::write_mfpt_csv(sink.stream(), report.as_mfpt_report());
    }
    std::cerr << "monte carlo average " << report.average << " +/- " << report.average_std_error << " ("
              << report.truncated_walks << " truncated walks)\n";
    return report.valid() ? 0 : 1;
  }

  const TrapSystem sys = assemble(net);
  const MfptReport report = method == "entry-sum" ? fundamental_entry_sum(sys) : solve_trapping_times(sys);
  if (opts.want_json()) {
    emit_json(opts, io::to_json(report));
  } else {
    Sink sink(opts.out_path);
    io::write_mfpt_csv(sink.stream(), report);
  }
  const double closed = mfpt_closed(opts.g, opts.theta);
  const double rel = std::abs(report.average - closed) / closed;
  std::cerr << "average " << report.average << ", closed form " << closed << ", relative deviation " << rel << '\n';
  return rel <= tol ? 0 : 1;
}

int run_spectrum(const CommonOptions& opts, bool verify, double tol) {
  const SpectrumMultiset spec = spectrum(opts.g, opts.theta);
  int status = 0;
  io::json doc = io::to_json(spec);
  if (verify) {
    if (opts.g > 4) throw DomainError("--verify runs a dense eigensolve and supports g <= 4");
    const double dev = spectrum_oracle_deviation(build_weighted({opts.g, opts.theta}));
    std::cerr << "max deviation from dense eigensolve: " << dev << " (tolerance " << tol << ")\n";
    doc["oracle_max_deviation"] = dev;
    status = dev <= tol ? 0 : 1;
  }
  if (opts.want_json()) {
    emit_json(opts, doc);
  } else {
    Sink sink(opts.out_path);
    io::write_spectrum_csv(sink.stream(), spec);
  }
  return status;
}

int run_verify(const CommonOptions& opts, VerifyOptions vopts) {
  const VerifyReport report = run_verify_suite(vopts);
  if (opts.want_json()) {
    emit_json(opts, io::to_json(report));
  } else {
    Sink sink(opts.out_path);
    io::write_verify_table(sink.stream(), report);
  }
  return report.passed() ? 0 : 1;
}

int run_scaling(const CommonOptions& opts, const std::string& method, int g_min, int g_max) {
  if (g_min < 0) g_min = default_fit_start(g_max);
  const MfptSource source = method == "solve" ? MfptSource::solve : MfptSource::closed;
  const ScalingFit fit = run_scaling_fit(opts.theta, g_min, g_max, source);
  if (opts.want_json()) {
    emit_json(opts, io::to_json(fit));
  } else {
    Sink sink(opts.out_path);
    io::write_scaling_csv(sink.stream(), fit);
  }
  std::cerr << "fitted exponent " << fit.fitted_exponent << " (least squares " << fit.ols_exponent
            << "), predicted " << fit.predicted_exponent << '\n';
  return 0;
}

std::vector<double> parse_theta_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random walks with a hub trap on a reciprocity-weighted fractal network"};
  app.require_subcommand(1);

  CommonOptions gen_opts, mfpt_opts, spec_opts, verify_opts, scaling_opts;

  auto* gen = app.add_subcommand("generate", "Emit the network as CSV arc/node tables or JSON");
  add_common(gen, gen_opts, "csv");
  std::string table = "arcs";
  bool binary = false;
  gen->add_option("--table", table, "CSV table to emit")->check(CLI::IsMember({"arcs", "nodes"}))->capture_default_str();
  gen->add_flag("--binary", binary, "All arc weights 1 (theta ignored)");

  auto* mfpt = app.add_subcommand("mfpt", "Trapping times and MFPT to the hub trap");
  add_common(mfpt, mfpt_opts, "json");
  std::string method = "solve";
  SimConfig sim;
  double mfpt_tol = 1e-10;
  mfpt->add_option("--method", method, "solve | entry-sum | closed | mc")
      ->check(CLI::IsMember({"solve", "entry-sum", "closed", "mc"}))
      ->capture_default_str();
  mfpt->add_option("--walkers", sim.walkers_per_node, "Monte Carlo walkers per start node")->capture_default_str();
  mfpt->add_option("--seed", sim.seed, "Monte Carlo seed")->capture_default_str();
  mfpt->add_option("--max-steps", sim.max_steps, "Per-walker step cap")->capture_default_str();
  mfpt->add_option("--threads", sim.threads, "Worker threads (0 = all cores)")->capture_default_str();
  mfpt->add_option("--tol", mfpt_tol, "Relative tolerance against the closed form")->capture_default_str();

  auto* spec = app.add_subcommand("spectrum", "Eigenvalues of P_g by spectral decimation");
  add_common(spec, spec_opts, "csv");
  bool spec_verify = false;
  double spec_tol = 1e-8;
  spec->add_flag("--verify", spec_verify, "Compare against a dense eigensolve (g <= 4)");
  spec->add_option("--tol", spec_tol, "Absolute tolerance for --verify")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Run the cross-method verification suite");
  add_common(verify, verify_opts, "csv", 4);
  VerifyOptions vopts;
  std::string theta_list = "0.5,1,2";
  verify->add_option("--thetas", theta_list, "Comma-separated theta grid")->capture_default_str();
  verify->add_option("--tol", vopts.mfpt_tol, "Relative tolerance for MFPT agreement")->capture_default_str();
  verify->add_option("--walkers", vopts.mc_walkers, "Monte Carlo walkers per start node")->capture_default_str();
  verify->add_option("--seed", vopts.seed, "Monte Carlo seed")->capture_default_str();
  verify->add_option("--threads", vopts.threads, "Worker threads (0 = all cores)")->capture_default_str();
  verify->add_flag("--inject-fault", vopts.inject_fault, "Perturb one arc weight by 1e-3; the suite must fail");

  auto* scaling = app.add_subcommand("scaling", "Fit the MFPT-vs-size exponent");
  add_common(scaling, scaling_opts, "csv");
  std::string scaling_method = "closed";
  int g_min = -1;
  int g_max = 12;
  scaling->add_option("--method", scaling_method, "closed | solve")
      ->check(CLI::IsMember({"closed", "solve"}))
      ->capture_default_str();
  scaling->add_option("--g-min", g_min, "First generation of the fit window (default max(3, g_max - 6))");
  scaling->add_option("--g-max", g_max, "Last generation of the fit window")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return run_generate(gen_opts, table, binary);
    if (mfpt->parsed()) return run_mfpt(mfpt_opts, method, sim, mfpt_tol);
    if (spec->parsed()) return run_spectrum(spec_opts, spec_verify, spec_tol);
    if (verify->parsed()) {
      vopts.g_cap = verify_opts.g;
      vopts.thetas = parse_theta_list(theta_list);
      return run_verify(verify_opts, vopts);
    }
    if (scaling->parsed()) return run_scaling(scaling_opts, scaling_method, g_min, g_max);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
