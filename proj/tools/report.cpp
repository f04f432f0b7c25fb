#include "report.hpp"

namespace bcn::report {

Json names(const Model& model, std::span<const std::size_t> states) {
  Json out = Json::array();
  for (std::size_t s : states) out.push_back(model.state_name(s));
  return out;
}

Json cycles(const Model& model, const std::vector<std::vector<std::size_t>>& list) {
  Json out = Json::array();
  for (const auto& c : list) out.push_back(names(model, c));
  return out;
}

Json model_summary(const Model& model) {
  Json j;
  j["states"] = model.state_names();
  j["inputs"] = model.input_names();
  j["outputs"] = names(model, model.outputs());
  return j;
}

Json graph_stats(const DepGraph& g) {
  Json j;
  j["nodes"] = g.node_count();
  j["edges"] = g.edge_count();
  std::size_t state_edges = 0;
  for (std::size_t v = 0; v < g.state_count(); ++v)
    for (std::size_t w : g.in_neighbors(v)) state_edges += g.is_state(w) ? 1 : 0;
  j["state_edges"] = state_edges;
  j["sole_feeder_pairs"] = g.sole_feeders().pair_count();
  Json in = Json::object();
  for (std::size_t v = 0; v < g.state_count(); ++v) {
    Json list = Json::array();
    for (std::size_t w : g.in_neighbors(v)) list.push_back(g.name(w));
    in[g.name(v)] = std::move(list);
  }
  j["in_neighbors"] = std::move(in);
  return j;
}

Json decomposition(const Model& model, const Decomposition& d) {
  Json j;
  Json paths = Json::array();
  for (const ObservedPath& p : d.paths) paths.push_back(names(model, p.nodes));
  j["paths"] = std::move(paths);
  j["uncovered"] = names(model, d.uncovered);
  return j;
}

Json verdict(const Model& model, const SufficiencyVerdict& v) {
  Json j;
  j["verdict"] = v.observable() ? "observable" : "unknown";
  j["p1"] = {{"holds", v.p1.holds}, {"violators", names(model, v.p1.violators)}};
  j["p2"] = {{"holds", v.p2.holds}, {"bad_cycles", cycles(model, v.p2.bad_cycles)}};
  j["decomposition"] = decomposition(model, v.decomposition);
  return j;
}

Json selection(const Model& model, const SelectionReport& r) {
  Json j;
  j["L1"] = names(model, r.l1);
  j["L2"] = names(model, r.l2);
  j["cycles_found"] = cycles(model, r.cycles_found);
  j["cycles_pruned"] = cycles(model, r.cycles_pruned);
  j["representatives"] = names(model, r.representatives);
  j["added_outputs"] = names(model, r.added_outputs);
  j["upper_bound"] = r.added_outputs.size();
  j["already_satisfied"] = r.already_satisfied();
  return j;
}

Json observer(const Model& model, const DisjointPathObserver& obs) {
  Json j;
  j["horizon"] = obs.horizon();
  Json decoders = Json::array();
  for (const PathDecoder& d : obs.decoders()) {
    Json polarities = Json::array();
    for (Polarity p : d.polarities()) polarities.push_back(p == Polarity::Identity ? "identity" : "negation");
    decoders.push_back({{"path", names(model, d.nodes())}, {"polarities", std::move(polarities)}});
  }
  j["decoders"] = std::move(decoders);
  return j;
}

Json witness(const IndistinguishableWitness& w) {
  auto bits = [](const std::vector<InputVector>& seq) {
    Json out = Json::array();
    for (const InputVector& u : seq) out.push_back(u.to_string());
    return out;
  };
  return {{"first", w.first.to_string()},
          {"second", w.second.to_string()},
          {"prefix", bits(w.prefix)},
          {"cycle", bits(w.cycle)}};
}

std::string path_list(const Model& model, const std::vector<ObservedPath>& paths) {
  std::string out;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    if (i > 0) out += ';';
    out += '(';
    for (std::size_t q = 0; q < paths[i].nodes.size(); ++q) {
      if (q > 0) out += ',';
      out += model.state_name(paths[i].nodes[q]);
    }
    out += ')';
  }
  return out;
}

std::string name_set(const Model& model, std::span<const std::size_t> states) {
  std::string out = "{";
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (i > 0) out += ',';
    out += model.state_name(states[i]);
  }
  return out + "}";
}

std::string cycle_list(const Model& model, const std::vector<std::vector<std::size_t>>& list) {
  if (list.empty()) return "none";
  std::vector<ObservedPath> as_paths;
  for (const auto& c : list) as_paths.push_back({c});
  return path_list(model, as_paths);
}

std::string model_line(const Model& model) {
  return "model: " + std::to_string(model.state_count()) + " states, " + std::to_string(model.input_count()) +
         " inputs, outputs " + name_set(model, model.outputs());
}

}  // namespace bcn::report
