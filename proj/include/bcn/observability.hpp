#ifndef BCN_OBSERVABILITY_HPP
#define BCN_OBSERVABILITY_HPP

#include <cstddef>
#include <vector>

#include "bcn/depgraph.hpp"
#include "bcn/model.hpp"

namespace bcn {

/// Ordered state indices; the last one is directly observable and each
/// earlier node is the sole feeder of the next.
struct ObservedPath {
  std::vector<std::size_t> nodes;

  std::size_t length() const noexcept { return nodes.size(); }
  std::size_t observed() const { return nodes.back(); }
  friend bool operator==(const ObservedPath&, const ObservedPath&) = default;
};

struct Decomposition {
  std::vector<ObservedPath> paths;   // one per output, ascending output index
  std::vector<std::size_t> uncovered;

  bool covers_all() const noexcept { return uncovered.empty(); }
};

struct P1Result {
  bool holds = true;
  /// Non-directly-observable nodes that solely feed no other node.
  std::vector<std::size_t> violators;
};

struct P2Result {
  bool holds = true;
  /// |->-cycles of non-directly-observable nodes none of which solely
  /// feeds a node outside the cycle.
  std::vector<std::vector<std::size_t>> bad_cycles;
};

P1Result check_p1(const DepGraph& g);

/// Only cycles of the sole-feeder relation are examined; these are the
/// cycles that can keep a node out of every observed path.
P2Result check_p2_cycles(const DepGraph& g);

/// Greedy construction of disjoint observed paths: from each directly
/// observable node, walk back through sole state in-neighbours that are
/// not directly observable and not yet placed. O(n) overall.
Decomposition decompose(const DepGraph& g);

/// Checks both clauses of the observed-path definition against `g`.
bool is_observed_path(const DepGraph& g, const ObservedPath& path);

enum class Verdict { Observable, Unknown };

struct SufficiencyVerdict {
  Verdict status = Verdict::Unknown;
  P1Result p1;
  P2Result p2;
  Decomposition decomposition;

  bool observable() const noexcept { return status == Verdict::Observable; }
};

/// Observable when the decomposition covers every state; Unknown
/// otherwise. Unknown never means "not observable".
SufficiencyVerdict sufficiency_verdict(const DepGraph& g);
SufficiencyVerdict sufficiency_verdict(const Model& model);

}  // namespace bcn

#endif  // BCN_OBSERVABILITY_HPP
