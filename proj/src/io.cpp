#include "recipwalk/io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include "recipwalk/error.hpp"

namespace recipwalk::io {

std::string format_real(double value) {
  std::array<char, 32> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc{}) throw DomainError("cannot format real value");
  return {buf.data(), end};
}

void write_arcs_csv(std::ostream& out, const WeightedDigraph& net) {
  out << "src,dst,weight\n";
  for (const Arc& a : net.arcs()) out << a.src << ',' << a.dst << ',' << format_real(a.weight) << '\n';
}

void write_nodes_csv(std::ostream& out, const WeightedDigraph& net) {
  out << "label,birth_generation,role\n";
  for (const NodeRecord& n : net.nodes()) out << n.label << ',' << n.birth_generation << ',' << to_string(n.role) << '\n';
}

std::vector<Arc> read_arcs_csv(std::istream& in) {
  std::vector<Arc> arcs;
  std::string line;
  if (!std::getline(in, line) || line != "src,dst,weight") throw DomainError("missing arc CSV header");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto c1 = line.find(',');
    const auto c2 = line.find(',', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos) throw DomainError("malformed arc line: " + line);
    Arc a;
    const char* s = line.data();
    const auto r1 = std::from_chars(s, s + c1, a.src);
    const auto r2 = std::from_chars(s + c1 + 1, s + c2, a.dst);
    const auto r3 = std::from_chars(s + c2 + 1, s + line.size(), a.weight);
    if (r1.ec != std::errc{} || r2.ec != std::errc{} || r3.ec != std::errc{} || r3.ptr != s + line.size()) {
      throw DomainError("malformed arc line: " + line);
    }
    arcs.push_back(a);
  }
  return arcs;
}

json to_json(const WeightedDigraph& net) {
  json nodes = json::array();
  for (const NodeRecord& n : net.nodes()) {
    nodes.push_back({{"label", n.label}, {"birth_generation", n.birth_generation}, {"role", to_string(n.role)}});
  }
  json arcs = json::array();
  for (const Arc& a : net.arcs()) arcs.push_back({a.src, a.dst, a.weight});
  json edges = json::array();
  for (const Edge& e : net.edges()) edges.push_back({e.u, e.v});
  return {{"g", net.generation()}, {"theta", net.theta()}, {"nodes", nodes}, {"arcs", arcs}, {"undirected_edges", edges}};
}

void write_mfpt_csv(std::ostream& out, const MfptReport& report) {
  out << "label,T\n";
  for (const auto& [label, t] : report.per_node) out << label << ',' << format_real(t) << '\n';
}

json to_json(const MfptReport& report) {
  json per_node = json::array();
  for (const auto& [label, t] : report.per_node) per_node.push_back({label, t});
  return {{"method", to_string(report.method)},
          {"g", report.generation},
          {"theta", report.theta},
          {"average", report.average},
          {"per_node", per_node}};
}

json to_json(const ClosedFormBreakdown& b) {
  auto opt = [](const std::optional<double>& v) { return v ? json(*v) : json(nullptr); };
  return {{"method", "closed_form"},
          {"g", b.generation},
          {"theta", b.theta},
          {"growth_factor", b.growth_factor},
          {"t_ext", opt(b.t_ext)},
          {"t_int", opt(b.t_int)},
          {"t_tot_new", opt(b.t_tot_new)},
          {"t_tot", b.t_tot},
          {"mfpt", b.mfpt},
          {"exponent", b.exponent}};
}

json to_json(const SimReport& r) {
  json per_node = json::array();
  for (const auto& e : r.per_node) per_node.push_back({e.label, e.mean, e.std_error});
  return {{"method", "monte_carlo"},
          {"g", r.generation},
          {"theta", r.theta},
          {"walkers_per_node", r.config.walkers_per_node},
          {"seed", r.config.seed},
          {"max_steps", r.config.max_steps},
          {"average", r.average},
          {"average_std_error", r.average_std_error},
          {"truncated_walks", r.truncated_walks},
          {"per_node", per_node}};
}

void write_spectrum_csv(std::ostream& out, const SpectrumMultiset& spec) {
  out << "value,multiplicity,lineage\n";
  for (const auto& e : spec.entries()) {
    out << format_real(e.value) << ',' << e.multiplicity << ',' << lineage_string(e.lineage) << '\n';
  }
}

json to_json(const SpectrumMultiset& spec) {
  json entries = json::array();
  for (const auto& e : spec.entries()) {
    json lineage = json::array();
    for (Branch b : e.lineage) lineage.push_back(to_string(b));
    entries.push_back({{"value", e.value}, {"multiplicity", e.multiplicity}, {"lineage", lineage}});
  }
  return {{"g", spec.generation()},
          {"theta", spec.theta()},
          {"total_multiplicity", spec.total_multiplicity()},
          {"entries", entries}};
}

void write_scaling_csv(std::ostream& out, const ScalingFit& fit) {
  out << "g,N_minus_1,mfpt,log_slope\n";
  for (const auto& p : fit.points) {
    out << p.generation << ',' << format_real(p.size) << ',' << format_real(p.mfpt) << ','
        << (p.log_slope ? format_real(*p.log_slope) : std::string{}) << '\n';
  }
}

json to_json(const ScalingFit& fit) {
  json points = json::array();
  for (const auto& p : fit.points) {
    points.push_back({{"g", p.generation},
                      {"N_minus_1", p.size},
                      {"mfpt", p.mfpt},
                      {"log_slope", p.log_slope ? json(*p.log_slope) : json(nullptr)}});
  }
  return {{"theta", fit.theta},
          {"method", to_string(fit.source)},
          {"points", points},
          {"fitted_exponent", fit.fitted_exponent},
          {"ols_exponent", fit.ols_exponent},
          {"predicted_exponent", fit.predicted_exponent}};
}

json to_json(const VerifyReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    // Infinite deviations are not representable in JSON.
    const json value = std::isfinite(c.value) ? json(c.value) : json(nullptr);
    checks.push_back(
        {{"name", c.name}, {"theta", c.theta}, {"value", value}, {"tolerance", c.tolerance}, {"passed", c.passed}});
  }
  return {{"g_cap", report.options.g_cap},
          {"thetas", report.options.thetas},
          {"inject_fault", report.options.inject_fault},
          {"checks", checks},
          {"passed", report.passed()}};
}

void write_verify_table(std::ostream& out, const VerifyReport& report) {
  out << std::left << std::setw(28) << "check" << std::setw(8) << "theta" << std::setw(14) << "max_dev"
      << std::setw(10) << "tol" << "result\n";
  for (const auto& c : report.checks) {
    std::ostringstream dev;
    dev << std::scientific << std::setprecision(3) << c.value;
    std::ostringstream tol;
    tol << std::scientific << std::setprecision(0) << c.tolerance;
    out << std::setw(28) << c.name << std::setw(8) << format_real(c.theta) << std::setw(14) << dev.str()
        << std::setw(10) << tol.str() << (c.passed ? "PASS" : "FAIL") << '\n';
  }
  out << (report.passed() ? "all checks passed\n" : "one or more checks FAILED\n");
}

}  // namespace recipwalk::io
