#include "recipwalk/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "recipwalk/closed_form.hpp"
#include "recipwalk/error.hpp"
#include "recipwalk/walk_matrices.hpp"

namespace recipwalk {

namespace {

void require_theta(double theta) {
  if (!(theta > 0.0) || !std::isfinite(theta)) {
    throw DomainError("theta must be a positive finite real, got " + std::to_string(theta));
  }
}

void sort_entries(std::vector<SpectrumEntry>& entries) {
  std::stable_sort(entries.begin(), entries.end(),
                   [](const SpectrumEntry& a, const SpectrumEntry& b) { return a.value < b.value; });
}

}  // namespace

std::string_view to_string(Branch branch) {
  switch (branch) {
    case Branch::minus:
      return "minus";
    case Branch::plus:
      return "plus";
    case Branch::fresh_one:
      return "fresh_one";
  }
  return "unknown";
}

std::string lineage_string(std::span<const Branch> lineage) {
  std::string out;
  for (Branch b : lineage) {
    if (!out.empty()) out += '|';
    out += to_string(b);
  }
  return out;
}

SpectrumMultiset::SpectrumMultiset(int generation, double theta, std::vector<SpectrumEntry> entries)
    : generation_(generation), theta_(theta), entries_(std::move(entries)) {
  sort_entries(entries_);
}

std::uint64_t SpectrumMultiset::total_multiplicity() const {
  std::uint64_t total = 0;
  for (const auto& e : entries_) total += e.multiplicity;
  return total;
}

std::uint64_t SpectrumMultiset::multiplicity_of(double value) const {
  std::uint64_t total = 0;
  for (const auto& e : entries_) {
    if (e.value == value) total += e.multiplicity;
  }
  return total;
}

std::vector<double> SpectrumMultiset::expanded() const {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(total_multiplicity()));
  for (const auto& e : entries_) out.insert(out.end(), static_cast<std::size_t>(e.multiplicity), e.value);
  return out;
}

double decimation_child(double parent, double theta, Branch branch) {
  const double radicand = 1.0 - parent / (2.0 * theta + 2.0);
  if (!(radicand >= 0.0)) {
    throw NumericalError("negative decimation radicand for parent eigenvalue " + std::to_string(parent));
  }
  switch (branch) {
    case Branch::minus:
      // 1 - sqrt(r) rewritten as (1 - r) / (1 + sqrt(r)) to avoid cancellation
      // when the parent eigenvalue is tiny.
      return (parent / (2.0 * theta + 2.0)) / (1.0 + std::sqrt(radicand));
    case Branch::plus:
      return 1.0 + std::sqrt(radicand);
    case Branch::fresh_one:
      break;
  }
  throw DomainError("decimation children exist only on the minus and plus branches");
}

SpectrumMultiset base_spectrum(double theta) {
  require_theta(theta);
  const double root = std::sqrt(1.0 - 1.0 / (theta + 1.0));
  return SpectrumMultiset(1, theta,
                          {{1.0 - root, 2, {Branch::minus}}, {1.0 + root, 2, {Branch::plus}}});
}

SpectrumMultiset decimate(const SpectrumMultiset& spec) {
  const double theta = spec.theta();
  const int g = spec.generation();
  std::vector<SpectrumEntry> next;
  next.reserve(2 * spec.entries().size() + 1);
  for (const auto& parent : spec.entries()) {
    for (Branch branch : {Branch::minus, Branch::plus}) {
      SpectrumEntry child{decimation_child(parent.value, theta, branch), parent.multiplicity, parent.lineage};
      child.lineage.push_back(branch);
      next.push_back(std::move(child));
    }
  }
  next.push_back({1.0, std::uint64_t{2} << (2 * g), {Branch::fresh_one}});

  SpectrumMultiset out(g + 1, theta, std::move(next));
  const std::uint64_t expected = std::uint64_t{1} << (2 * (g + 1));
  if (out.total_multiplicity() != expected) {
    throw NumericalError("decimation multiplicity count " + std::to_string(out.total_multiplicity()) +
                         " != 4^" + std::to_string(g + 1));
  }
  return out;
}

SpectrumMultiset spectrum(int g, double theta) {
  if (g < 1) throw DomainError("spectrum needs g >= 1, got " + std::to_string(g));
  // 4^g must fit the 64-bit multiplicity counters with room to spare.
  if (g > 20) throw DomainError("spectrum supports g <= 20, got " + std::to_string(g));
  SpectrumMultiset s = base_spectrum(theta);
  for (int n = 1; n < g; ++n) s = decimate(s);
  return s;
}

std::vector<double> numerical_eigenvalues(const Eigen::MatrixXd& m, double imag_tol) {
  const Eigen::EigenSolver<Eigen::MatrixXd> solver(m, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) throw NumericalError("dense eigensolver did not converge");
  const Eigen::VectorXcd& ev = solver.eigenvalues();
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(ev.size()));
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (std::abs(ev(i).imag()) > imag_tol) {
      throw NumericalError("eigenvalue with imaginary part " + std::to_string(ev(i).imag()) +
                           " exceeds tolerance");
    }
    out.push_back(ev(i).real());
  }
  std::sort(out.begin(), out.end());
  return out;
}

double spectrum_oracle_deviation(const WeightedDigraph& net) {
  const TrapSystem sys = assemble(net);
  const std::vector<double> numeric = numerical_eigenvalues(sys.p_matrix());
  const std::vector<double> decimated = spectrum(net.generation(), net.theta()).expanded();
  if (numeric.size() != decimated.size()) {
    throw NumericalError("spectrum sizes differ: " + std::to_string(numeric.size()) + " vs " +
                         std::to_string(decimated.size()));
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < numeric.size(); ++i) worst = std::max(worst, std::abs(numeric[i] - decimated[i]));
  return worst;
}

BlockPartition partition_blocks(const WeightedDigraph& child) {
  if (child.generation() < 2) throw DomainError("block partition needs the child network at g >= 2");
  const TrapSystem sys = assemble(child);
  const Eigen::MatrixXd p = sys.p_matrix();
  // Labels 2..N_g come first in the reduced ordering, newborns follow.
  const auto n_alpha = static_cast<Eigen::Index>(edge_count(child.generation() - 1));
  const auto n_beta = p.rows() - n_alpha;

  BlockPartition part;
  part.generation = child.generation() - 1;
  for (Eigen::Index k = 0; k < p.rows(); ++k) {
    (k < n_alpha ? part.alpha : part.beta).push_back(TrapSystem::label_of(static_cast<std::size_t>(k)));
  }
  part.p_alpha_alpha = p.topLeftCorner(n_alpha, n_alpha);
  part.p_alpha_beta = p.topRightCorner(n_alpha, n_beta);
  part.p_beta_alpha = p.bottomLeftCorner(n_beta, n_alpha);
  part.p_beta_beta = p.bottomRightCorner(n_beta, n_beta);
  return part;
}

BlockIdentityReport verify_block_identity(const WeightedDigraph& parent, const WeightedDigraph& child) {
  if (child.generation() != parent.generation() + 1) {
    throw DomainError("block identity needs networks at consecutive generations");
  }
  const double theta = parent.theta();
  const Eigen::MatrixXd p_parent = assemble(parent).p_matrix();
  const BlockPartition part = partition_blocks(child);

  const Eigen::MatrixXd product = part.p_alpha_beta * part.p_beta_alpha;
  const Eigen::MatrixXd expected =
      Eigen::MatrixXd::Identity(p_parent.rows(), p_parent.cols()) - p_parent / (2.0 * theta + 2.0);

  BlockIdentityReport r;
  r.max_deviation = (product - expected).cwiseAbs().maxCoeff();
  r.diagonal_deviation = (product.diagonal().array() - (2.0 * theta + 1.0) / (2.0 * theta + 2.0)).abs().maxCoeff();
  const auto identity_dev = [](const Eigen::MatrixXd& m) {
    return (m - Eigen::MatrixXd::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff();
  };
  r.identity_block_deviation = std::max(identity_dev(part.p_alpha_alpha), identity_dev(part.p_beta_beta));
  return r;
}

BlockIdentityReport verify_block_identity(int g, double theta) {
  if (g < 1 || g > 5) {
    throw DomainError("block identity check needs 1 <= g <= 5 (P_{g+1} order <= 4096), got " + std::to_string(g));
  }
  return verify_block_identity(build_weighted({g, theta}), build_weighted({g + 1, theta}));
}

double lambda_min(int g, double theta, LambdaMode mode) {
  require_theta(theta);
  if (g < 1) throw DomainError("lambda_min needs g >= 1, got " + std::to_string(g));
  const double base = 1.0 - std::sqrt(1.0 - 1.0 / (theta + 1.0));
  if (mode == LambdaMode::taylor_approx) return base * std::pow(4.0 * theta + 4.0, 1 - g);
  double lambda = base;
  for (int n = 1; n < g; ++n) lambda = decimation_child(lambda, theta, Branch::minus);
  return lambda;
}

std::vector<EigenScalingRow> largest_eigenvalue_scaling(int g_max, double theta) {
  if (g_max < 2) throw DomainError("scaling table needs g_max >= 2");
  std::vector<EigenScalingRow> rows;
  for (int g = 1; g <= g_max; ++g) {
    const double lambda = lambda_min(g, theta, LambdaMode::exact_recursion);
    EigenScalingRow row;
    row.generation = g;
    row.sigma_max = 1.0 / lambda;
    row.mfpt = mfpt_closed(g, theta);
    row.ratio = row.mfpt * lambda;
    if (!rows.empty()) {
      row.sigma_growth = row.sigma_max / rows.back().sigma_max;
      row.mfpt_growth = row.mfpt / rows.back().mfpt;
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace recipwalk
