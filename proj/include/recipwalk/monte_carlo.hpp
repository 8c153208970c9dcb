#pragma once

// Stochastic estimate of trapping times: independent biased walkers started
// from every non-trap node, stepped until they first hit the trap.

#include <cstdint>
#include <vector>

#include "recipwalk/network.hpp"
#include "recipwalk/walk_matrices.hpp"

namespace recipwalk {

struct SimConfig {
  std::uint64_t walkers_per_node = 10000;
  std::uint64_t seed = 1;
  std::uint64_t max_steps = 1'000'000'000;
  /// Worker threads; 0 picks std::thread::hardware_concurrency(). Does not
  /// affect results.
  unsigned threads = 0;

  void validate() const;
};

struct NodeEstimate {
  Label label = 0;
  double mean = 0.0;
  double std_error = 0.0;
};

struct SimReport {
  int generation = 0;
  double theta = 1.0;
  SimConfig config;
  std::vector<NodeEstimate> per_node;  // labels 2..N_g
  double average = 0.0;
  double average_std_error = 0.0;
  std::uint64_t truncated_walks = 0;

  bool valid() const { return truncated_walks == 0; }
  MfptReport as_mfpt_report() const;
};

/// SplitMix64 stream. Each walker gets its own stream keyed by
/// (seed, start label, walker index), so results never depend on scheduling.
class WalkerStream {
 public:
  WalkerStream(std::uint64_t seed, Label start, std::uint64_t walker);

  std::uint64_t next();
  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  static std::uint64_t mix(std::uint64_t z);

 private:
  std::uint64_t state_;
};

/// Per-node cumulative out-weight tables for inverse-CDF sampling of the next
/// node, in CSR layout indexed by label - min_label.
class TransitionSampler {
 public:
  explicit TransitionSampler(const WeightedDigraph& net);

  /// Next label after `from`, given u uniform in [0, 1).
  Label step(Label from, double u) const;

 private:
  Label label_offset_;
  std::vector<std::size_t> row_start_;
  std::vector<double> cumulative_;
  std::vector<Label> targets_;
};

SimReport simulate(const WeightedDigraph& net, const SimConfig& cfg);

}  // namespace recipwalk
