#include "bcn/observability.hpp"

#include <algorithm>

namespace bcn {

P1Result check_p1(const DepGraph& g) {
  P1Result r;
  const SoleFeederMap& map = g.sole_feeders();
  for (std::size_t i = 0; i < g.state_count(); ++i)
    if (!g.directly_observable(i) && !map.is_source(i)) r.violators.push_back(i);
  r.holds = r.violators.empty();
  return r;
}

P2Result check_p2_cycles(const DepGraph& g) {
  P2Result r;
  const SoleFeederMap& map = g.sole_feeders();
  std::vector<bool> in_cycle(g.state_count(), false);
  for (const auto& cycle : sole_feeder_cycles(map)) {
    const bool all_hidden =
        std::none_of(cycle.begin(), cycle.end(), [&](std::size_t v) { return g.directly_observable(v); });
    if (!all_hidden) continue;
    for (std::size_t v : cycle) in_cycle[v] = true;
    bool escapes = false;
    for (std::size_t v : cycle)
      for (std::size_t t : map.targets_of(v)) escapes = escapes || !in_cycle[t];
    for (std::size_t v : cycle) in_cycle[v] = false;
    if (!escapes) r.bad_cycles.push_back(cycle);
  }
  r.holds = r.bad_cycles.empty();
  return r;
}

Decomposition decompose(const DepGraph& g) {
  Decomposition d;
  std::vector<bool> placed(g.state_count(), false);
  for (std::size_t i = 0; i < g.state_count(); ++i) {
    if (!g.directly_observable(i)) continue;
    std::vector<std::size_t> reversed{i};
    placed[i] = true;
    std::size_t node = i;
    while (true) {
      const auto in = g.in_neighbors(node);
      if (in.size() != 1) break;
      const std::size_t v = in[0];
      if (!g.is_state(v) || g.directly_observable(v) || placed[v]) break;
      reversed.push_back(v);
      placed[v] = true;
      node = v;
    }
    std::reverse(reversed.begin(), reversed.end());
    d.paths.push_back({std::move(reversed)});
  }
  for (std::size_t i = 0; i < g.state_count(); ++i)
    if (!placed[i]) d.uncovered.push_back(i);
  return d;
}

bool is_observed_path(const DepGraph& g, const ObservedPath& path) {
  if (path.nodes.empty()) return false;
  std::vector<bool> seen(g.state_count(), false);
  for (std::size_t v : path.nodes) {
    if (v >= g.state_count() || seen[v]) return false;
    seen[v] = true;
  }
  if (!g.directly_observable(path.nodes.back())) return false;
  for (std::size_t q = 0; q + 1 < path.nodes.size(); ++q) {
    if (g.directly_observable(path.nodes[q])) return false;
    const auto in = g.in_neighbors(path.nodes[q + 1]);
    if (in.size() != 1 || in[0] != path.nodes[q]) return false;
  }
  return true;
}

SufficiencyVerdict sufficiency_verdict(const DepGraph& g) {
  SufficiencyVerdict v;
  v.p1 = check_p1(g);
  v.p2 = check_p2_cycles(g);
  v.decomposition = decompose(g);
  v.status = v.decomposition.covers_all() ? Verdict::Observable : Verdict::Unknown;
  return v;
}

SufficiencyVerdict sufficiency_verdict(const Model& model) { return sufficiency_verdict(build_dependency_graph(model)); }

}  // namespace bcn
