#include "bcn/selection.hpp"

#include <algorithm>

namespace bcn {

SelectionReport select_outputs(const DepGraph& g) {
  SelectionReport r;
  const SoleFeederMap& map = g.sole_feeders();
  for (std::size_t i = 0; i < g.state_count(); ++i) {
    if (g.directly_observable(i)) continue;
    (map.is_source(i) ? r.l2 : r.l1).push_back(i);
  }

  std::vector<bool> in_cycle(g.state_count(), false);
  for (auto& cycle : sole_feeder_cycles(map)) {
    // a node on a |->-cycle feeds its successor, so "all in L2" is the
    // same as "none directly observable"
    if (std::any_of(cycle.begin(), cycle.end(), [&](std::size_t v) { return g.directly_observable(v); })) continue;
    r.cycles_found.push_back(cycle);
    for (std::size_t v : cycle) in_cycle[v] = true;
    bool escapes = false;
    for (std::size_t v : cycle)
      for (std::size_t t : map.targets_of(v)) escapes = escapes || !in_cycle[t];
    for (std::size_t v : cycle) in_cycle[v] = false;
    if (escapes) {
      r.cycles_pruned.push_back(std::move(cycle));
    } else {
      r.representatives.push_back(*std::min_element(cycle.begin(), cycle.end()));
    }
  }

  r.added_outputs = r.l1;
  r.added_outputs.insert(r.added_outputs.end(), r.representatives.begin(), r.representatives.end());
  std::sort(r.added_outputs.begin(), r.added_outputs.end());
  return r;
}

SelectionReport select_outputs(const Model& model) { return select_outputs(build_dependency_graph(model)); }

std::size_t upper_bound(const Model& model) { return select_outputs(model).added_outputs.size(); }

}  // namespace bcn
