#include "recipwalk/walk_matrices.hpp"

#include <limits>
#include <string>

#include "recipwalk/error.hpp"

namespace recipwalk {

std::string_view to_string(MfptMethod method) {
  switch (method) {
    case MfptMethod::fundamental_solve:
      return "fundamental_solve";
    case MfptMethod::fundamental_entry_sum:
      return "fundamental_entry_sum";
    case MfptMethod::closed_form:
      return "closed_form";
    case MfptMethod::monte_carlo:
      return "monte_carlo";
  }
  return "unknown";
}

double MfptReport::trapping_time(Label label) const {
  // per_node is label-ordered and contiguous from 2 for every producer.
  const std::size_t idx = label >= 2 ? label - 2 : per_node.size();
  if (idx < per_node.size() && per_node[idx].first == label) return per_node[idx].second;
  throw DomainError("no trapping time recorded for label " + std::to_string(label));
}

MfptReport MfptReport::from_per_node(MfptMethod method, int generation, double theta,
                                     std::vector<std::pair<Label, double>> per_node) {
  MfptReport r;
  r.method = method;
  r.generation = generation;
  r.theta = theta;
  double sum = 0.0;
  for (const auto& [label, t] : per_node) sum += t;
  r.average = per_node.empty() ? 0.0 : sum / static_cast<double>(per_node.size());
  r.per_node = std::move(per_node);
  return r;
}

Eigen::MatrixXd TrapSystem::p_matrix() const {
  return Eigen::MatrixXd::Identity(reduced_.rows(), reduced_.cols()) - reduced_;
}

TrapSystem assemble(const WeightedDigraph& net) {
  if (!net.has_trap()) throw DomainError("g = 0 has no trap node; trapping needs g >= 1");
  const std::size_t n = net.node_count();
  if (n - 1 > kDenseOrderCap) {
    throw DomainError("reduced order " + std::to_string(n - 1) + " exceeds the dense cap of " +
                      std::to_string(kDenseOrderCap) + " (g <= 6)");
  }

  TrapSystem sys;
  sys.generation_ = net.generation();
  sys.theta_ = net.theta();

  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(net.arcs().size());
  sys.reduced_ = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n - 1), static_cast<Eigen::Index>(n - 1));
  for (const Arc& a : net.arcs()) {
    const double r = a.weight / net.out_strength(a.src);
    triplets.emplace_back(a.src - 1, a.dst - 1, r);
    if (a.src != kTrapLabel && a.dst != kTrapLabel) {
      sys.reduced_(TrapSystem::index_of(a.src), TrapSystem::index_of(a.dst)) = r;
    }
  }
  sys.transition_.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  sys.transition_.setFromTriplets(triplets.begin(), triplets.end());
  return sys;
}

namespace {

std::vector<std::pair<Label, double>> label_vector(const Eigen::VectorXd& t) {
  std::vector<std::pair<Label, double>> out;
  out.reserve(static_cast<std::size_t>(t.size()));
  for (Eigen::Index k = 0; k < t.size(); ++k) {
    out.emplace_back(TrapSystem::label_of(static_cast<std::size_t>(k)), t(k));
  }
  return out;
}

}  // namespace

MfptReport solve_trapping_times(const TrapSystem& sys) {
  const Eigen::PartialPivLU<Eigen::MatrixXd> lu(sys.p_matrix());
  if (!(lu.rcond() > std::numeric_limits<double>::epsilon())) {
    throw NumericalError("I - R̄ is numerically singular (rcond " + std::to_string(lu.rcond()) + ")");
  }
  const Eigen::VectorXd t = lu.solve(Eigen::VectorXd::Ones(static_cast<Eigen::Index>(sys.order())));
  return MfptReport::from_per_node(MfptMethod::fundamental_solve, sys.generation(), sys.theta(), label_vector(t));
}

Eigen::MatrixXd fundamental_matrix(const TrapSystem& sys, std::size_t max_order) {
  if (sys.order() > max_order) {
    throw DomainError("explicit fundamental matrix of order " + std::to_string(sys.order()) +
                      " exceeds cap " + std::to_string(max_order) + "; use solve_trapping_times");
  }
  return sys.p_matrix().inverse();
}

MfptReport fundamental_entry_sum(const TrapSystem& sys, std::size_t max_order) {
  const Eigen::MatrixXd k = fundamental_matrix(sys, max_order);
  const Eigen::VectorXd t = k.rowwise().sum();
  // The average is the grand sum of K (a sum of its row sums) over N_g - 1.
  return MfptReport::from_per_node(MfptMethod::fundamental_entry_sum, sys.generation(), sys.theta(),
                                   label_vector(t));
}

}  // namespace recipwalk
