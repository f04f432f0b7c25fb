#ifndef BCN_DEPGRAPH_HPP
#define BCN_DEPGRAPH_HPP

#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "bcn/model.hpp"

namespace bcn {

inline constexpr std::size_t kNoNode = std::numeric_limits<std::size_t>::max();

/// X_i |-> X_j whenever N_in(X_j) = {X_i} and i != j. Each target has at
/// most one sole feeder; a source may solely feed several targets.
class SoleFeederMap {
 public:
  SoleFeederMap() = default;
  explicit SoleFeederMap(std::vector<std::size_t> feeder_of);

  /// Source feeding `target`, or kNoNode.
  std::size_t feeder_of(std::size_t target) const { return feeder_of_[target]; }
  /// Targets solely fed by `source`, ascending.
  std::span<const std::size_t> targets_of(std::size_t source) const {
    return {targets_.data() + offsets_[source], targets_.data() + offsets_[source + 1]};
  }
  bool is_source(std::size_t state) const { return offsets_[state + 1] != offsets_[state]; }

  std::size_t state_count() const noexcept { return feeder_of_.size(); }
  std::size_t pair_count() const noexcept { return targets_.size(); }

 private:
  std::vector<std::size_t> feeder_of_;
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> targets_;
};

/// Dependency graph over states [0, n) and inputs [n, n + p). An edge
/// a -> X_j exists iff variable a occurs in f_j; on a reduced model that is
/// exactly the essential support.
class DepGraph {
 public:
  std::size_t state_count() const noexcept { return state_count_; }
  std::size_t input_count() const noexcept { return input_count_; }
  std::size_t node_count() const noexcept { return state_count_ + input_count_; }
  std::size_t edge_count() const noexcept { return in_targets_.size(); }

  bool is_state(std::size_t node) const noexcept { return node < state_count_; }
  std::size_t input_node(std::size_t input_index) const noexcept { return state_count_ + input_index; }

  /// Ascending node ids.
  std::span<const std::size_t> in_neighbors(std::size_t node) const {
    return {in_targets_.data() + in_offsets_[node], in_targets_.data() + in_offsets_[node + 1]};
  }
  std::span<const std::size_t> out_neighbors(std::size_t node) const {
    return {out_targets_.data() + out_offsets_[node], out_targets_.data() + out_offsets_[node + 1]};
  }

  bool directly_observable(std::size_t state) const { return observable_[state]; }
  const std::string& name(std::size_t node) const { return names_[node]; }
  const SoleFeederMap& sole_feeders() const noexcept { return sole_feeders_; }

  /// Builds a graph from explicit edges (source, target); used by the
  /// model builder and by reduced_graph.
  static DepGraph from_edges(std::size_t states, std::size_t inputs,
                             std::vector<std::pair<std::size_t, std::size_t>> edges, std::vector<bool> observable,
                             std::vector<std::string> names);

 private:
  std::size_t state_count_ = 0;
  std::size_t input_count_ = 0;
  std::vector<std::size_t> in_offsets_{0};
  std::vector<std::size_t> in_targets_;
  std::vector<std::size_t> out_offsets_{0};
  std::vector<std::size_t> out_targets_;
  std::vector<bool> observable_;
  std::vector<std::string> names_;
  SoleFeederMap sole_feeders_;
};

/// Linear in the total size of the update expressions. The model should be
/// reduced (see reduce_fictitious).
DepGraph build_dependency_graph(const Model& model);

/// G_s: input nodes and their edges dropped.
DepGraph reduced_graph(const DepGraph& g);

SoleFeederMap sole_feeder_map(const DepGraph& g);

/// Cycles of the |-> relation, each listed in |-> order starting from its
/// lowest index; cycles sorted by that first index. Cycles are vertex
/// disjoint because every node has at most one feeder.
std::vector<std::vector<std::size_t>> sole_feeder_cycles(const SoleFeederMap& map);

/// Deterministic Graphviz text.
std::string export_dot(const DepGraph& g);

}  // namespace bcn

#endif  // BCN_DEPGRAPH_HPP
