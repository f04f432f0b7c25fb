#include "bcn/depgraph.hpp"

#include <algorithm>
#include <utility>

namespace bcn {

SoleFeederMap::SoleFeederMap(std::vector<std::size_t> feeder_of) : feeder_of_(std::move(feeder_of)) {
  const std::size_t n = feeder_of_.size();
  offsets_.assign(n + 1, 0);
  for (std::size_t source : feeder_of_)
    if (source != kNoNode) ++offsets_[source + 1];
  for (std::size_t i = 0; i < n; ++i) offsets_[i + 1] += offsets_[i];
  targets_.resize(offsets_[n]);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (std::size_t target = 0; target < n; ++target)
    if (feeder_of_[target] != kNoNode) targets_[fill[feeder_of_[target]]++] = target;
}

namespace {

// Counting-sort CSR; neighbours come out ascending because keys are
// scattered in order of the other endpoint.
void build_csr(std::size_t nodes, const std::vector<std::pair<std::size_t, std::size_t>>& edges, bool by_target,
               std::vector<std::size_t>& offsets, std::vector<std::size_t>& targets) {
  offsets.assign(nodes + 1, 0);
  for (const auto& [s, t] : edges) ++offsets[(by_target ? t : s) + 1];
  for (std::size_t i = 0; i < nodes; ++i) offsets[i + 1] += offsets[i];
  targets.resize(edges.size());
  std::vector<std::size_t> fill(offsets.begin(), offsets.end() - 1);
  for (const auto& [s, t] : edges) targets[fill[by_target ? t : s]++] = by_target ? s : t;
}

}  // namespace

DepGraph DepGraph::from_edges(std::size_t states, std::size_t inputs,
                              std::vector<std::pair<std::size_t, std::size_t>> edges, std::vector<bool> observable,
                              std::vector<std::string> names) {
  DepGraph g;
  g.state_count_ = states;
  g.input_count_ = inputs;
  const std::size_t nodes = states + inputs;
  // Radix pass so that both adjacency views are sorted without a comparison
  // sort: order edges by source, then stable-scatter by target.
  std::vector<std::pair<std::size_t, std::size_t>> by_source(edges.size());
  {
    std::vector<std::size_t> count(nodes + 1, 0);
    for (const auto& e : edges) ++count[e.first + 1];
    for (std::size_t i = 0; i < nodes; ++i) count[i + 1] += count[i];
    for (const auto& e : edges) by_source[count[e.first]++] = e;
  }
  build_csr(nodes, by_source, true, g.in_offsets_, g.in_targets_);
  std::vector<std::pair<std::size_t, std::size_t>> by_target(edges.size());
  {
    std::vector<std::size_t> count(nodes + 1, 0);
    for (const auto& e : edges) ++count[e.second + 1];
    for (std::size_t i = 0; i < nodes; ++i) count[i + 1] += count[i];
    for (const auto& e : by_source) by_target[count[e.second]++] = e;
  }
  build_csr(nodes, by_target, false, g.out_offsets_, g.out_targets_);
  g.observable_ = std::move(observable);
  g.names_ = std::move(names);
  g.sole_feeders_ = sole_feeder_map(g);
  return g;
}

DepGraph build_dependency_graph(const Model& model) {
  const std::size_t n = model.state_count();
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  edges.reserve(2 * n);
  std::vector<VarRef> vars;
  for (std::size_t j = 0; j < n; ++j) {
    variables(model.update(j), vars);
    for (const VarRef& v : vars)
      edges.emplace_back(v.kind == VarKind::State ? v.index : n + v.index, j);
  }

  std::vector<bool> observable(n, false);
  for (std::size_t j : model.outputs()) observable[j] = true;
  std::vector<std::string> names = model.state_names();
  names.insert(names.end(), model.input_names().begin(), model.input_names().end());
  return DepGraph::from_edges(n, model.input_count(), std::move(edges), std::move(observable), std::move(names));
}

DepGraph reduced_graph(const DepGraph& g) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<bool> observable(g.state_count());
  std::vector<std::string> names;
  for (std::size_t j = 0; j < g.state_count(); ++j) {
    observable[j] = g.directly_observable(j);
    names.push_back(g.name(j));
    for (std::size_t src : g.in_neighbors(j))
      if (g.is_state(src)) edges.emplace_back(src, j);
  }
  return DepGraph::from_edges(g.state_count(), 0, std::move(edges), std::move(observable), std::move(names));
}

SoleFeederMap sole_feeder_map(const DepGraph& g) {
  std::vector<std::size_t> feeder(g.state_count(), kNoNode);
  for (std::size_t j = 0; j < g.state_count(); ++j) {
    const auto in = g.in_neighbors(j);
    if (in.size() == 1 && g.is_state(in[0]) && in[0] != j) feeder[j] = in[0];
  }
  return SoleFeederMap(std::move(feeder));
}

std::vector<std::vector<std::size_t>> sole_feeder_cycles(const SoleFeederMap& map) {
  const std::size_t n = map.state_count();
  // 0 = unvisited, 1 = on the current feeder walk, 2 = finished
  std::vector<unsigned char> mark(n, 0);
  std::vector<std::vector<std::size_t>> cycles;
  std::vector<std::size_t> walk;
  for (std::size_t start = 0; start < n; ++start) {
    if (mark[start] != 0) continue;
    walk.clear();
    std::size_t v = start;
    while (v != kNoNode && mark[v] == 0) {
      mark[v] = 1;
      walk.push_back(v);
      v = map.feeder_of(v);
    }
    if (v != kNoNode && mark[v] == 1) {
      // walk follows feeders backwards; the cycle is the suffix from v
      const auto it = std::find(walk.begin(), walk.end(), v);
      std::vector<std::size_t> cycle(it, walk.end());
      std::reverse(cycle.begin(), cycle.end());
      std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
      cycles.push_back(std::move(cycle));
    }
    for (std::size_t w : walk) mark[w] = 2;
  }
  std::sort(cycles.begin(), cycles.end());
  return cycles;
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

}  // namespace

std::string export_dot(const DepGraph& g) {
  std::string out = "digraph dependency {\n";
  for (std::size_t v = 0; v < g.node_count(); ++v) {
    out += "  " + quoted(g.name(v));
    if (!g.is_state(v)) out += " [shape=box];\n";
    else if (g.directly_observable(v)) out += " [shape=doublecircle, style=filled, fillcolor=lightblue];\n";
    else out += " [shape=circle];\n";
  }
  for (std::size_t v = 0; v < g.node_count(); ++v)
    for (std::size_t w : g.out_neighbors(v)) out += "  " + quoted(g.name(v)) + " -> " + quoted(g.name(w)) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace bcn
