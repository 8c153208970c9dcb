#pragma once

// Transition matrices of the biased walk and exact trapping times.
//
// Index convention for every reduced quantity: row/column k (0-based) is the
// node labelled k + 2, i.e. the trap row and column are dropped and the
// remaining labels keep their order.

#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "recipwalk/network.hpp"

namespace recipwalk {

/// Largest reduced order handled densely (g = 6).
inline constexpr std::size_t kDenseOrderCap = 4096;

enum class MfptMethod { fundamental_solve, fundamental_entry_sum, closed_form, monte_carlo };

std::string_view to_string(MfptMethod method);

struct MfptReport {
  MfptMethod method = MfptMethod::fundamental_solve;
  int generation = 0;
  double theta = 1.0;
  /// (label, T_i) for labels 2..N_g in ascending order. Empty for closed_form.
  std::vector<std::pair<Label, double>> per_node;
  double average = 0.0;

  /// T_i for a non-trap label; throws DomainError if absent.
  double trapping_time(Label label) const;

  /// Builds a report whose average is the plain mean of `per_node`.
  static MfptReport from_per_node(MfptMethod method, int generation, double theta,
                                  std::vector<std::pair<Label, double>> per_node);
};

class TrapSystem {
 public:
  int generation() const { return generation_; }
  double theta() const { return theta_; }
  /// Order of the reduced system, N_g - 1.
  std::size_t order() const { return static_cast<std::size_t>(reduced_.rows()); }

  static constexpr Label label_of(std::size_t index) { return static_cast<Label>(index + 2); }
  static constexpr std::size_t index_of(Label label) { return label - 2; }

  /// R_g, row-stochastic, indexed by label - 1.
  const Eigen::SparseMatrix<double, Eigen::RowMajor>& transition() const { return transition_; }
  Eigen::MatrixXd transition_dense() const { return Eigen::MatrixXd(transition_); }
  /// R_g with the trap row and column deleted.
  const Eigen::MatrixXd& reduced() const { return reduced_; }
  /// P_g = I - reduced(), the inverse of the fundamental matrix.
  Eigen::MatrixXd p_matrix() const;

 private:
  friend TrapSystem assemble(const WeightedDigraph& net);

  int generation_ = 0;
  double theta_ = 1.0;
  Eigen::SparseMatrix<double, Eigen::RowMajor> transition_;
  Eigen::MatrixXd reduced_;
};

/// Requires g in 1..6; throws DomainError otherwise.
TrapSystem assemble(const WeightedDigraph& net);

/// Solves (I - R̄) T = e with a partially pivoted LU factorization.
MfptReport solve_trapping_times(const TrapSystem& sys);

/// K = (I - R̄)^{-1} by explicit inversion. Throws DomainError above `max_order`.
Eigen::MatrixXd fundamental_matrix(const TrapSystem& sys, std::size_t max_order = kDenseOrderCap);

/// Trapping times as row sums of the explicit fundamental matrix.
MfptReport fundamental_entry_sum(const TrapSystem& sys, std::size_t max_order = kDenseOrderCap);

}  // namespace recipwalk
