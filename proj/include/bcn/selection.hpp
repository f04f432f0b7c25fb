#ifndef BCN_SELECTION_HPP
#define BCN_SELECTION_HPP

#include <cstddef>
#include <vector>

#include "bcn/depgraph.hpp"
#include "bcn/model.hpp"

namespace bcn {

/// Result of output selection. The lists are kept so that callers can
/// assemble alternative solutions (any member of a surviving cycle may
/// stand in for its representative).
struct SelectionReport {
  /// Hidden nodes that solely feed no other node.
  std::vector<std::size_t> l1;
  /// Hidden nodes that solely feed at least one other node.
  std::vector<std::size_t> l2;
  /// |->-cycles made only of L2 nodes.
  std::vector<std::vector<std::size_t>> cycles_found;
  /// Cycles dropped because a member solely feeds a node outside them.
  std::vector<std::vector<std::size_t>> cycles_pruned;
  /// Lowest index of each surviving cycle.
  std::vector<std::size_t> representatives;
  /// L1 plus the representatives, ascending.
  std::vector<std::size_t> added_outputs;

  bool already_satisfied() const noexcept { return added_outputs.empty(); }
};

/// Chooses states to measure so that the augmented model passes the
/// sufficient condition. Linear in the size of the graph.
SelectionReport select_outputs(const DepGraph& g);
SelectionReport select_outputs(const Model& model);

/// Size of the selected set; an upper bound on the minimal number of
/// added measurements.
std::size_t upper_bound(const Model& model);

}  // namespace bcn

#endif  // BCN_SELECTION_HPP
