#include "recipwalk/network.hpp"

#include <cmath>
#include <string>

#include "recipwalk/error.hpp"

namespace recipwalk {

std::string_view to_string(Role role) {
  switch (role) {
    case Role::original:
      return "original";
    case Role::internal:
      return "internal";
    case Role::external:
      return "external";
  }
  return "unknown";
}

void NetworkConfig::validate() const {
  if (generation < 0) {
    throw DomainError("generation must be non-negative, got " + std::to_string(generation));
  }
  // 4^g + 1 labels must fit in a 32-bit label.
  if (generation > 15) {
    throw DomainError("generation " + std::to_string(generation) + " exceeds the supported maximum of 15");
  }
  if (!(theta > 0.0) || !std::isfinite(theta)) {
    throw DomainError("theta must be a positive finite real, got " + std::to_string(theta));
  }
}

std::size_t node_count(int generation) { return (std::size_t{1} << (2 * generation)) + 1; }

std::size_t edge_count(int generation) { return std::size_t{1} << (2 * generation); }

double closed_form_out_strength(const NodeRecord& node, int generation, double theta) {
  const double growth = std::pow(theta + 1.0, generation - node.birth_generation);
  return node.role == Role::internal ? 2.0 * growth : growth;
}

bool WeightedDigraph::contains(Label label) const {
  return label >= label_offset_ && label - label_offset_ < nodes_.size();
}

std::size_t WeightedDigraph::index_of(Label label) const {
  if (!contains(label)) {
    throw DomainError("unknown node label " + std::to_string(label) + " (valid range " +
                      std::to_string(min_label()) + ".." + std::to_string(max_label()) + ")");
  }
  return label - label_offset_;
}

const NodeRecord& WeightedDigraph::node(Label label) const { return nodes_[index_of(label)]; }

double WeightedDigraph::out_strength(Label label) const { return out_strength_[index_of(label)]; }

double WeightedDigraph::in_strength(Label label) const { return in_strength_[index_of(label)]; }

void WeightedDigraph::finalize() {
  arcs_.clear();
  arcs_.reserve(2 * edges_.size());
  for (const Edge& e : edges_) {
    arcs_.push_back({e.u, e.v, e.forward});
    arcs_.push_back({e.v, e.u, e.backward});
  }
  out_strength_.assign(nodes_.size(), 0.0);
  in_strength_.assign(nodes_.size(), 0.0);
  for (const Arc& a : arcs_) {
    out_strength_[a.src - label_offset_] += a.weight;
    in_strength_[a.dst - label_offset_] += a.weight;
  }
}

WeightedDigraph WeightedDigraph::with_scaled_arc(std::size_t arc_index, double factor) const {
  if (arc_index >= arcs_.size()) {
    throw DomainError("arc index " + std::to_string(arc_index) + " out of range");
  }
  if (!(factor > 0.0)) throw DomainError("arc scale factor must be positive");
  WeightedDigraph out = *this;
  Edge& e = out.edges_[arc_index / 2];
  (arc_index % 2 == 0 ? e.forward : e.backward) *= factor;
  out.finalize();
  return out;
}

WeightedDigraph build_network(const NetworkConfig& config, double weight_theta) {
  config.validate();
  NetworkConfig{config.generation, weight_theta}.validate();

  WeightedDigraph net;
  net.config_ = {config.generation, weight_theta};
  net.label_offset_ = config.generation == 0 ? 2 : 1;

  const std::size_t n_nodes = node_count(config.generation);
  net.nodes_.resize(n_nodes);
  auto record = [&](Label label, int birth, Role role) {
    net.nodes_[label - net.label_offset_] = {label, birth, role};
  };
  record(2, 0, Role::original);
  record(3, 0, Role::original);

  std::vector<Edge> edges{{2, 3, 1.0, 1.0}};
  Label next_label = 6;  // first label of generation 2
  for (int gen = 1; gen <= config.generation; ++gen) {
    std::vector<Edge> grown;
    grown.reserve(4 * edges.size());
    for (const Edge& old : edges) {
      Label w, x, y;
      if (gen == 1) {
        w = 1, x = 4, y = 5;
      } else {
        w = next_label++, x = next_label++, y = next_label++;
      }
      record(w, gen, Role::internal);
      record(x, gen, Role::external);
      record(y, gen, Role::external);
      grown.push_back({old.u, w, old.forward, 1.0});
      grown.push_back({w, old.v, 1.0, old.backward});
      grown.push_back({old.u, x, weight_theta * old.forward, 1.0});
      grown.push_back({old.v, y, weight_theta * old.backward, 1.0});
    }
    edges = std::move(grown);
  }
  net.edges_ = std::move(edges);
  net.finalize();
  return net;
}

WeightedDigraph build_binary(const NetworkConfig& config) {
  config.validate();
  return build_network(config, 1.0);
}

WeightedDigraph build_weighted(const NetworkConfig& config) { return build_network(config, config.theta); }

double out_strength(const WeightedDigraph& net, Label label) { return net.out_strength(label); }

}  // namespace recipwalk
