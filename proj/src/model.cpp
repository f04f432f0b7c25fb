#include "bcn/model.hpp"

#include <algorithm>

#include "bcn/error.hpp"

namespace bcn {

namespace {

std::vector<std::string> default_names(char prefix, std::size_t count) {
  std::vector<std::string> names;
  names.reserve(count);
  for (std::size_t i = 0; i < count; ++i) names.push_back(prefix + std::to_string(i + 1));
  return names;
}

void check_references(const Expr& e, std::size_t fn, std::size_t n, std::size_t p) {
  if (e.kind() == ExprKind::State && e.index() >= n)
    throw ModelError("update " + std::to_string(fn + 1) + " references state " + std::to_string(e.index() + 1) +
                     " but n=" + std::to_string(n));
  if (e.kind() == ExprKind::Input && e.index() >= p)
    throw ModelError("update " + std::to_string(fn + 1) + " references input " + std::to_string(e.index() + 1) +
                     " but p=" + std::to_string(p));
  for (const Expr& c : e.children()) check_references(c, fn, n, p);
}

}  // namespace

Model::Model(std::size_t inputs, std::vector<Expr> updates, std::vector<std::size_t> outputs)
    : state_names_(default_names('X', updates.size())),
      input_names_(default_names('U', inputs)),
      updates_(std::move(updates)),
      outputs_(std::move(outputs)) {
  validate();
}

Model::Model(std::vector<std::string> state_names, std::vector<std::string> input_names, std::vector<Expr> updates,
             std::vector<std::size_t> outputs)
    : state_names_(std::move(state_names)),
      input_names_(std::move(input_names)),
      updates_(std::move(updates)),
      outputs_(std::move(outputs)) {
  validate();
}

void Model::validate() {
  const std::size_t n = updates_.size();
  if (state_names_.size() != n)
    throw ModelError("expected " + std::to_string(n) + " state names, got " + std::to_string(state_names_.size()));
  for (std::size_t i = 0; i < n; ++i) check_references(updates_[i], i, n, input_names_.size());
  output_flags_.assign(n, false);
  for (std::size_t j = 0; j < outputs_.size(); ++j) {
    if (outputs_[j] >= n) throw ModelError("output index " + std::to_string(outputs_[j] + 1) + " out of range");
    if (j > 0 && outputs_[j] <= outputs_[j - 1])
      throw ModelError("output indices must be strictly increasing");
    output_flags_[outputs_[j]] = true;
  }
}

bool Model::is_output(std::size_t state) const { return output_flags_.at(state); }

Model Model::with_outputs(std::vector<std::size_t> outputs) const {
  std::sort(outputs.begin(), outputs.end());
  outputs.erase(std::unique(outputs.begin(), outputs.end()), outputs.end());
  return Model(state_names_, input_names_, updates_, std::move(outputs));
}

Model Model::with_added_outputs(std::span<const std::size_t> extra) const {
  std::vector<std::size_t> merged = outputs_;
  merged.insert(merged.end(), extra.begin(), extra.end());
  return with_outputs(std::move(merged));
}

std::size_t Model::description_size() const {
  std::size_t total = state_count() + input_count();
  for (const Expr& f : updates_) total += f.size();
  return total;
}

StateVector step(const Model& model, const StateVector& x, const InputVector& u) {
  if (x.size() != model.state_count())
    throw ModelError("state vector has length " + std::to_string(x.size()) + ", model has n=" +
                     std::to_string(model.state_count()));
  if (u.size() != model.input_count())
    throw ModelError("input vector has length " + std::to_string(u.size()) + ", model has p=" +
                     std::to_string(model.input_count()));
  StateVector next(model.state_count());
  for (std::size_t i = 0; i < model.state_count(); ++i) next.set(i, model.update(i).evaluate(x, u));
  return next;
}

OutputVector output_of(const Model& model, const StateVector& x) {
  if (x.size() != model.state_count())
    throw ModelError("state vector has length " + std::to_string(x.size()) + ", model has n=" +
                     std::to_string(model.state_count()));
  OutputVector y(model.output_count());
  for (std::size_t j = 0; j < model.output_count(); ++j) y.set(j, x[model.outputs()[j]]);
  return y;
}

Trajectory simulate(const Model& model, const StateVector& x0, std::span<const InputVector> inputs) {
  Trajectory t;
  t.states.reserve(inputs.size() + 1);
  t.outputs.reserve(inputs.size() + 1);
  t.states.push_back(x0);
  t.outputs.push_back(output_of(model, x0));
  for (const InputVector& u : inputs) {
    t.states.push_back(step(model, t.states.back(), u));
    t.outputs.push_back(output_of(model, t.states.back()));
  }
  return t;
}

Model reduce_fictitious(const Model& model, std::size_t arity_cap) {
  std::vector<Expr> reduced;
  reduced.reserve(model.state_count());
  for (std::size_t i = 0; i < model.state_count(); ++i) {
    try {
      reduced.push_back(remove_fictitious(model.update(i), arity_cap));
    } catch (const ArityCapError& e) {
      throw ArityCapError(i, e.arity(), e.cap());
    }
  }
  return Model(model.state_names(), model.input_names(), std::move(reduced), model.outputs());
}

bool is_reduced(const Model& model, std::size_t arity_cap) {
  for (const Expr& f : model.updates())
    if (essential_support(f, arity_cap).size() != variables(f).size()) return false;
  return true;
}

}  // namespace bcn
