#ifndef BCN_MODEL_HPP
#define BCN_MODEL_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "bcn/bits.hpp"
#include "bcn/expr.hpp"

namespace bcn {

/// A Boolean control network with n states, p inputs and outputs that read
/// a subset of the states directly (Y_j = X_{outputs[j]}).
///
/// Indices are 0-based here; text formats use names. The constructor
/// validates the structural invariants and throws ModelError otherwise.
class Model {
 public:
  Model() = default;

  /// Names default to X1..Xn and U1..Up.
  Model(std::size_t inputs, std::vector<Expr> updates, std::vector<std::size_t> outputs);

  Model(std::vector<std::string> state_names, std::vector<std::string> input_names, std::vector<Expr> updates,
        std::vector<std::size_t> outputs);

  std::size_t state_count() const noexcept { return updates_.size(); }
  std::size_t input_count() const noexcept { return input_names_.size(); }
  std::size_t output_count() const noexcept { return outputs_.size(); }

  const std::vector<Expr>& updates() const noexcept { return updates_; }
  const Expr& update(std::size_t i) const { return updates_.at(i); }

  /// Strictly increasing state indices.
  const std::vector<std::size_t>& outputs() const noexcept { return outputs_; }
  bool is_output(std::size_t state) const;

  const std::vector<std::string>& state_names() const noexcept { return state_names_; }
  const std::vector<std::string>& input_names() const noexcept { return input_names_; }
  const std::string& state_name(std::size_t i) const { return state_names_.at(i); }
  const std::string& input_name(std::size_t i) const { return input_names_.at(i); }

  /// Same dynamics with a different output set (sorted and deduplicated).
  Model with_outputs(std::vector<std::size_t> outputs) const;
  /// Same dynamics with `extra` merged into the current outputs.
  Model with_added_outputs(std::span<const std::size_t> extra) const;

  /// Sum of update expression sizes plus n + p.
  std::size_t description_size() const;

 private:
  void validate();

  std::vector<std::string> state_names_;
  std::vector<std::string> input_names_;
  std::vector<Expr> updates_;
  std::vector<std::size_t> outputs_;
  std::vector<bool> output_flags_;
};

/// One synchronous update: X(k+1) from X(k), U(k).
StateVector step(const Model& model, const StateVector& x, const InputVector& u);

OutputVector output_of(const Model& model, const StateVector& x);

struct Trajectory {
  std::vector<StateVector> states;    // T + 1 entries
  std::vector<OutputVector> outputs;  // T + 1 entries
};

Trajectory simulate(const Model& model, const StateVector& x0, std::span<const InputVector> inputs);

/// Rewrites every update to mention only its essential variables. Throws
/// ArityCapError naming the offending update when an update has more than
/// `arity_cap` distinct variables.
Model reduce_fictitious(const Model& model, std::size_t arity_cap = kDefaultArityCap);

/// True when every variable mentioned by every update is essential.
bool is_reduced(const Model& model, std::size_t arity_cap = kDefaultArityCap);

}  // namespace bcn

#endif  // BCN_MODEL_HPP
