#include "recipwalk/monte_carlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <string>
#include <thread>

#include "recipwalk/error.hpp"

namespace recipwalk {

void SimConfig::validate() const {
  if (walkers_per_node < 2) throw DomainError("walkers_per_node must be at least 2 for a standard error");
  if (max_steps == 0) throw DomainError("max_steps must be positive");
}

MfptReport SimReport::as_mfpt_report() const {
  std::vector<std::pair<Label, double>> means;
  means.reserve(per_node.size());
  for (const auto& e : per_node) means.emplace_back(e.label, e.mean);
  return MfptReport::from_per_node(MfptMethod::monte_carlo, generation, theta, std::move(means));
}

std::uint64_t WalkerStream::mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

WalkerStream::WalkerStream(std::uint64_t seed, Label start, std::uint64_t walker)
    : state_(mix(seed ^ mix(0x9e3779b97f4a7c15ULL * (std::uint64_t{start} + 1) ^ mix(walker + 0x632be59bd9b4e019ULL)))) {}

std::uint64_t WalkerStream::next() {
  state_ += 0x9e3779b97f4a7c15ULL;
  return mix(state_);
}

TransitionSampler::TransitionSampler(const WeightedDigraph& net) : label_offset_(net.min_label()) {
  const std::size_t n = net.node_count();
  std::vector<std::size_t> degree(n, 0);
  for (const Arc& a : net.arcs()) ++degree[a.src - label_offset_];
  row_start_.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) row_start_[i + 1] = row_start_[i] + degree[i];

  cumulative_.resize(row_start_[n]);
  targets_.resize(row_start_[n]);
  std::vector<std::size_t> fill(row_start_.begin(), row_start_.end() - 1);
  for (const Arc& a : net.arcs()) {
    const std::size_t slot = fill[a.src - label_offset_]++;
    cumulative_[slot] = a.weight;
    targets_[slot] = a.dst;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = row_start_[i] + 1; k < row_start_[i + 1]; ++k) cumulative_[k] += cumulative_[k - 1];
  }
}

Label TransitionSampler::step(Label from, double u) const {
  const std::size_t i = from - label_offset_;
  const auto first = cumulative_.begin() + static_cast<std::ptrdiff_t>(row_start_[i]);
  const auto last = cumulative_.begin() + static_cast<std::ptrdiff_t>(row_start_[i + 1]);
  const double target = u * *(last - 1);
  auto it = std::upper_bound(first, last, target);
  if (it == last) --it;  // guards u * total rounding up to total
  return targets_[static_cast<std::size_t>(it - cumulative_.begin())];
}

namespace {

__extension__ using u128 = unsigned __int128;

struct NodeTally {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t truncated = 0;
};

NodeTally run_node(const TransitionSampler& sampler, Label start, const SimConfig& cfg) {
  // Integer step counts: the sums are exact and order-independent.
  u128 sum = 0;
  u128 sum_sq = 0;
  NodeTally tally;
  for (std::uint64_t w = 0; w < cfg.walkers_per_node; ++w) {
    WalkerStream rng(cfg.seed, start, w);
    Label at = start;
    std::uint64_t steps = 0;
    while (at != kTrapLabel && steps < cfg.max_steps) {
      at = sampler.step(at, rng.uniform());
      ++steps;
    }
    if (at != kTrapLabel) ++tally.truncated;
    sum += steps;
    sum_sq += static_cast<u128>(steps) * steps;
  }
  const auto n = static_cast<long double>(cfg.walkers_per_node);
  const long double mean = static_cast<long double>(sum) / n;
  tally.mean = static_cast<double>(mean);
  if (cfg.walkers_per_node >= 2) {
    const long double ss = static_cast<long double>(sum_sq) - n * mean * mean;
    const long double var = std::max(ss, 0.0L) / (n - 1.0L);
    tally.std_error = static_cast<double>(std::sqrt(var / n));
  }
  return tally;
}

}  // namespace

SimReport simulate(const WeightedDigraph& net, const SimConfig& cfg) {
  if (!net.has_trap()) throw DomainError("g = 0 has no trap node; simulation needs g >= 1");
  cfg.validate();

  const TransitionSampler sampler(net);
  const std::size_t n_start = net.node_count() - 1;
  std::vector<NodeTally> tallies(n_start);

  unsigned threads = cfg.threads != 0 ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n_start));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < n_start; k = next++) {
      tallies[k] = run_node(sampler, TrapSystem::label_of(k), cfg);
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  SimReport report;
  report.generation = net.generation();
  report.theta = net.theta();
  report.config = cfg;
  report.per_node.reserve(n_start);
  double sum_mean = 0.0;
  double sum_var = 0.0;
  for (std::size_t k = 0; k < n_start; ++k) {
    const NodeTally& t = tallies[k];
    report.per_node.push_back({TrapSystem::label_of(k), t.mean, t.std_error});
    report.truncated_walks += t.truncated;
    sum_mean += t.mean;
    sum_var += t.std_error * t.std_error;
  }
  report.average = sum_mean / static_cast<double>(n_start);
  report.average_std_error = std::sqrt(sum_var) / static_cast<double>(n_start);
  return report;
}

}  // namespace recipwalk
