#pragma once

// Eigenvalues of P_g = I - R̄_g (the inverse of the fundamental matrix) by
// spectral decimation: every eigenvalue of P_g spawns two of P_{g+1}, and each
// step adds a fresh block of eigenvalue 1.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "recipwalk/network.hpp"

namespace recipwalk {

enum class Branch : std::uint8_t { minus, plus, fresh_one };

std::string_view to_string(Branch branch);

struct SpectrumEntry {
  double value = 0.0;
  std::uint64_t multiplicity = 0;
  /// Root first: a base eigenvalue of P_1 (minus/plus) or a fresh 1, then one
  /// branch tag per decimation step.
  std::vector<Branch> lineage;
};

class SpectrumMultiset {
 public:
  SpectrumMultiset(int generation, double theta, std::vector<SpectrumEntry> entries);

  int generation() const { return generation_; }
  double theta() const { return theta_; }
  /// Sorted ascending by value.
  std::span<const SpectrumEntry> entries() const { return entries_; }

  std::uint64_t total_multiplicity() const;
  /// Summed multiplicity of entries whose value equals `value` exactly.
  std::uint64_t multiplicity_of(double value) const;
  /// Every eigenvalue repeated by multiplicity, ascending.
  std::vector<double> expanded() const;
  double smallest() const { return entries_.front().value; }

 private:
  int generation_;
  double theta_;
  std::vector<SpectrumEntry> entries_;
};

/// The eigenvalue of P_{g+1} produced from `parent` on the given branch
/// (minus or plus).
double decimation_child(double parent, double theta, Branch branch);

/// Spectrum of P_1: 1 -/+ sqrt(1 - 1/(theta+1)), each twice.
SpectrumMultiset base_spectrum(double theta);

/// One decimation step g -> g+1.
SpectrumMultiset decimate(const SpectrumMultiset& spec);

/// Full spectrum of P_g for g >= 1 (g <= 20).
SpectrumMultiset spectrum(int g, double theta);

/// Eigenvalues of a dense matrix by a general nonsymmetric eigensolver, real
/// parts sorted ascending. Throws NumericalError if any |imag| > imag_tol.
std::vector<double> numerical_eigenvalues(const Eigen::MatrixXd& m, double imag_tol = 1e-10);

/// Largest positional deviation between the decimation spectrum and a dense
/// eigensolve of P_g assembled from `net`.
double spectrum_oracle_deviation(const WeightedDigraph& net);

struct BlockPartition {
  int generation = 0;  // g; the blocks are cut out of P_{g+1}
  std::vector<Label> alpha;
  std::vector<Label> beta;
  Eigen::MatrixXd p_alpha_alpha;
  Eigen::MatrixXd p_alpha_beta;
  Eigen::MatrixXd p_beta_alpha;
  Eigen::MatrixXd p_beta_beta;
};

/// Splits P_{g+1} (assembled from `child`) into old-node (alpha) and
/// newborn (beta) blocks. Requires child.generation() >= 2.
BlockPartition partition_blocks(const WeightedDigraph& child);

struct BlockIdentityReport {
  /// max |P_ab P_ba - (I - P_g/(2 theta + 2))|
  double max_deviation = 0.0;
  /// max |diag(P_ab P_ba) - (2 theta + 1)/(2 theta + 2)|
  double diagonal_deviation = 0.0;
  /// max deviation of P_aa and P_bb from identity blocks
  double identity_block_deviation = 0.0;
};

/// Requires 1 <= g <= 5.
BlockIdentityReport verify_block_identity(int g, double theta);

/// Same check for explicit networks (parent at g, child at g + 1); theta is
/// taken from `parent`.
BlockIdentityReport verify_block_identity(const WeightedDigraph& parent, const WeightedDigraph& child);

enum class LambdaMode { exact_recursion, taylor_approx };

double lambda_min(int g, double theta, LambdaMode mode);

struct EigenScalingRow {
  int generation = 0;
  double sigma_max = 0.0;  // 1 / lambda_min, exact recursion
  double mfpt = 0.0;       // closed form
  double ratio = 0.0;      // mfpt * lambda_min
  // Growth from the previous row; 0 on the first row.
  double sigma_growth = 0.0;
  double mfpt_growth = 0.0;
};

/// Rows for g = 1..g_max (g_max >= 2).
std::vector<EigenScalingRow> largest_eigenvalue_scaling(int g_max, double theta);

std::string lineage_string(std::span<const Branch> lineage);

}  // namespace recipwalk
