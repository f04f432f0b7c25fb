#include "bcn/observer.hpp"

#include <algorithm>
#include <stdexcept>

namespace bcn {

PathDecoder::PathDecoder(std::vector<std::size_t> nodes, std::vector<Polarity> polarities,
                         std::size_t output_position)
    : nodes_(std::move(nodes)), polarities_(std::move(polarities)), output_position_(output_position) {
  if (nodes_.empty() || polarities_.size() + 1 != nodes_.size())
    throw std::invalid_argument("PathDecoder: need one polarity per path edge");
  parity_.assign(nodes_.size(), false);
  for (std::size_t q = nodes_.size() - 1; q-- > 0;)
    parity_[q] = parity_[q + 1] != (polarities_[q] == Polarity::Negation);
}

void PathDecoder::decode(std::span<const OutputVector> outputs, StateVector& x0) const {
  const std::size_t last = nodes_.size() - 1;
  for (std::size_t q = 0; q <= last; ++q) {
    const std::size_t delay = last - q;
    x0.set(nodes_[q], outputs[delay][output_position_] != parity_[q]);
  }
}

namespace {

std::string describe(const SufficiencyVerdict& v) {
  std::string msg = "sufficient condition not met: " + std::to_string(v.decomposition.uncovered.size()) +
                    " state(s) not on any observed path";
  if (!v.p1.holds) msg += ", " + std::to_string(v.p1.violators.size()) + " P1 violator(s)";
  if (!v.p2.holds) msg += ", " + std::to_string(v.p2.bad_cycles.size()) + " unbroken sole-feeder cycle(s)";
  return msg;
}

// Evaluates `e` with state `source` set to `value`; `foreign` is raised when
// any other variable occurs.
bool evaluate_at(const Expr& e, std::size_t source, bool value, bool& foreign) {
  switch (e.kind()) {
    case ExprKind::Const:
      return e.value();
    case ExprKind::State:
    case ExprKind::Input:
      foreign = foreign || e.var_ref() != VarRef::state(source);
      return value;
    case ExprKind::Not:
      return !evaluate_at(e.children()[0], source, value, foreign);
    case ExprKind::And: {
      bool acc = true;
      for (const Expr& c : e.children()) acc = evaluate_at(c, source, value, foreign) && acc;
      return acc;
    }
    case ExprKind::Or: {
      bool acc = false;
      for (const Expr& c : e.children()) acc = evaluate_at(c, source, value, foreign) || acc;
      return acc;
    }
    case ExprKind::Xor: {
      bool acc = false;
      for (const Expr& c : e.children()) acc = acc != evaluate_at(c, source, value, foreign);
      return acc;
    }
  }
  return false;
}

Polarity polarity_of(const Model& model, std::size_t target, std::size_t source) {
  const Expr& f = model.update(target);
  bool foreign = false;
  const bool at0 = evaluate_at(f, source, false, foreign);
  const bool at1 = evaluate_at(f, source, true, foreign);
  if (foreign)
    throw ModelError("update of " + model.state_name(target) + " is not a function of " + model.state_name(source) +
                     " alone");
  if (!at0 && at1) return Polarity::Identity;
  if (at0 && !at1) return Polarity::Negation;
  throw ModelError("update of " + model.state_name(target) + " is constant; reduce the model first");
}

}  // namespace

ObserverError::ObserverError(SufficiencyVerdict verdict) : Error(describe(verdict)), verdict_(std::move(verdict)) {}

DisjointPathObserver::DisjointPathObserver(std::size_t state_count, std::size_t output_count,
                                           std::vector<PathDecoder> decoders)
    : state_count_(state_count), output_count_(output_count), decoders_(std::move(decoders)) {
  std::vector<bool> covered(state_count_, false);
  std::size_t total = 0;
  for (const PathDecoder& d : decoders_) {
    if (d.output_position() >= output_count_) throw std::invalid_argument("decoder output position out of range");
    horizon_ = std::max(horizon_, d.length());
    for (std::size_t v : d.nodes()) {
      if (v >= state_count_ || covered[v]) throw std::invalid_argument("observer paths must partition the states");
      covered[v] = true;
      ++total;
    }
  }
  if (total != state_count_) throw std::invalid_argument("observer paths must partition the states");
}

StateVector DisjointPathObserver::reconstruct_initial(std::span<const OutputVector> outputs) const {
  if (outputs.size() < horizon_) throw HorizonError(horizon_, outputs.size());
  for (std::size_t k = 0; k < horizon_; ++k)
    if (outputs[k].size() != output_count_)
      throw ModelError("output sample " + std::to_string(k) + " has width " + std::to_string(outputs[k].size()) +
                       ", expected " + std::to_string(output_count_));
  StateVector x0(state_count_);
  for (const PathDecoder& d : decoders_) d.decode(outputs, x0);
  return x0;
}

DisjointPathObserver build_observer(const Model& model, const DepGraph& g) {
  SufficiencyVerdict verdict = sufficiency_verdict(g);
  if (!verdict.observable()) throw ObserverError(std::move(verdict));

  std::vector<std::size_t> output_position(model.state_count(), 0);
  for (std::size_t j = 0; j < model.output_count(); ++j) output_position[model.outputs()[j]] = j;

  std::vector<PathDecoder> decoders;
  decoders.reserve(verdict.decomposition.paths.size());
  for (ObservedPath& path : verdict.decomposition.paths) {
    std::vector<Polarity> polarities;
    polarities.reserve(path.nodes.size());
    for (std::size_t q = 0; q + 1 < path.nodes.size(); ++q)
      polarities.push_back(polarity_of(model, path.nodes[q + 1], path.nodes[q]));
    const std::size_t position = output_position[path.observed()];
    decoders.emplace_back(std::move(path.nodes), std::move(polarities), position);
  }
  return DisjointPathObserver(model.state_count(), model.output_count(), std::move(decoders));
}

DisjointPathObserver build_observer(const Model& model) { return build_observer(model, build_dependency_graph(model)); }

std::size_t required_horizon(const DisjointPathObserver& obs) { return obs.horizon(); }

StateVector reconstruct_state(const DisjointPathObserver& obs, const Model& model,
                              std::span<const OutputVector> outputs, std::span<const InputVector> inputs,
                              std::size_t k) {
  if (outputs.size() < obs.horizon()) throw HorizonError(obs.horizon(), outputs.size());
  if (inputs.size() < k)
    throw TraceError(inputs.size(), "state at k=" + std::to_string(k) + " needs " + std::to_string(k) +
                                        " inputs, trace has " + std::to_string(inputs.size()));
  StateVector x = obs.reconstruct_initial(outputs);
  for (std::size_t t = 0; t < k; ++t) x = step(model, x, inputs[t]);
  return x;
}

TraceCheck validate_trace(const DisjointPathObserver& obs, const Model& model, std::span<const OutputVector> outputs,
                          std::span<const InputVector> inputs) {
  StateVector x = obs.reconstruct_initial(outputs);
  if (!outputs.empty() && inputs.size() + 1 < outputs.size())
    throw TraceError(inputs.size(), "trace has " + std::to_string(outputs.size()) + " output samples but only " +
                                        std::to_string(inputs.size()) + " inputs");
  for (std::size_t k = 0; k < outputs.size(); ++k) {
    if (k > 0) x = step(model, x, inputs[k - 1]);
    if (output_of(model, x) != outputs[k]) return {false, k};
  }
  return {true, std::nullopt};
}

}  // namespace bcn
