#pragma once

// Construction of the treelike scale-free fractal network F_g and its
// weighted directed counterpart, where the weight parameter theta controls
// how strongly each hub-to-newcomer arc outweighs the reverse arc.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace recipwalk {

using Label = std::uint32_t;

/// The trap is always the internal node created at generation 1.
inline constexpr Label kTrapLabel = 1;

enum class Role : std::uint8_t { original, internal, external };

std::string_view to_string(Role role);

struct NetworkConfig {
  int generation = 0;
  double theta = 1.0;

  /// Throws DomainError unless generation >= 0 and theta > 0 (and finite).
  void validate() const;
};

struct NodeRecord {
  Label label = 0;
  int birth_generation = 0;
  Role role = Role::original;

  bool operator==(const NodeRecord&) const = default;
};

/// Undirected edge {u, v} of F_g together with the weights of its two arcs.
struct Edge {
  Label u = 0;
  Label v = 0;
  double forward = 1.0;   // W_uv
  double backward = 1.0;  // W_vu

  bool operator==(const Edge&) const = default;
};

struct Arc {
  Label src = 0;
  Label dst = 0;
  double weight = 1.0;

  bool operator==(const Arc&) const = default;
};

/// Number of nodes N_g = 4^g + 1.
std::size_t node_count(int generation);

/// Number of undirected edges E_g = 4^g.
std::size_t edge_count(int generation);

/// Closed-form out-strength of a node given its birth class.
double closed_form_out_strength(const NodeRecord& node, int generation, double theta);

/// Immutable weighted directed network. Nodes are stored sorted by label;
/// arcs come in pairs, arcs()[2k] = u->v and arcs()[2k+1] = v->u for edges()[k].
///
/// At g = 0 the two original nodes carry labels 2 and 3, the labels they
/// keep in every later generation; label 1 only exists from g = 1 on.
class WeightedDigraph {
 public:
  const NetworkConfig& config() const { return config_; }
  int generation() const { return config_.generation; }
  double theta() const { return config_.theta; }
  bool has_trap() const { return config_.generation >= 1; }

  std::size_t node_count() const { return nodes_.size(); }
  Label min_label() const { return label_offset_; }
  Label max_label() const { return static_cast<Label>(label_offset_ + nodes_.size() - 1); }
  bool contains(Label label) const;

  std::span<const NodeRecord> nodes() const { return nodes_; }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Arc> arcs() const { return arcs_; }

  /// Throws DomainError for unknown labels.
  const NodeRecord& node(Label label) const;
  double out_strength(Label label) const;
  double in_strength(Label label) const;

  /// Copy of this network with one arc weight multiplied by `factor`.
  /// Used for fault injection in the verification suite.
  WeightedDigraph with_scaled_arc(std::size_t arc_index, double factor) const;

 private:
  friend WeightedDigraph build_network(const NetworkConfig&, double);

  std::size_t index_of(Label label) const;
  void finalize();

  NetworkConfig config_;
  Label label_offset_ = 1;
  std::vector<NodeRecord> nodes_;
  std::vector<Edge> edges_;
  std::vector<Arc> arcs_;
  std::vector<double> out_strength_;
  std::vector<double> in_strength_;
};

/// Topology of F_g with every arc weight equal to 1. The returned network
/// reports theta = 1, since it coincides with the weighted network at theta = 1.
WeightedDigraph build_binary(const NetworkConfig& config);

/// Weighted directed network for (g, theta).
WeightedDigraph build_weighted(const NetworkConfig& config);

/// Shared builder: topology of `config.generation`, arc weights generated with
/// `weight_theta`. Stores `weight_theta` as the network's theta.
WeightedDigraph build_network(const NetworkConfig& config, double weight_theta);

/// Sum of weights of arcs leaving `label`. Throws DomainError for unknown labels.
double out_strength(const WeightedDigraph& net, Label label);

}  // namespace recipwalk
