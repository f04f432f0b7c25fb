#ifndef BCN_TESTS_SUPPORT_HPP
#define BCN_TESTS_SUPPORT_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <random>
#include <string>
#include <vector>

#include "bcn/dsl.hpp"
#include "bcn/model.hpp"

namespace bcn::test {

std::string fixture_path(const std::string& name);
std::string read_text(const std::string& path);

Model load_fixture(const std::string& name);
Model ex1();
Model cc9();
Model gap2();
Model cyc2();
Model identity_model(std::size_t n);

using Rng = std::mt19937_64;

struct RandomModelOptions {
  std::size_t min_states = 1;
  std::size_t max_states = 6;
  std::size_t max_inputs = 2;
  std::size_t max_fanin = 3;
  double literal_probability = 0.5;  // chance an update is a single literal
  double output_probability = 0.3;
};

/// Random reduced model. Updates mix single literals with random
/// AND/OR/XOR trees; fictitious arguments are removed afterwards.
Model random_model(Rng& rng, const RandomModelOptions& options = {});

/// Random conjunctive network: every update is a conjunction of one or more
/// literals over states and inputs. With `allow_negation` false every literal
/// is a plain variable.
Model random_conjunctive_model(Rng& rng, const RandomModelOptions& options = {}, bool allow_negation = true);

/// Chains of identity/negation updates hanging off random heads with
/// in-degree at most `max_fanin`; every chain tail is an output.
Model random_chain_model(Rng& rng, std::size_t n, std::size_t p, std::size_t max_fanin);

// Reference routines computed by plain forward iteration over explicit
// state sets. They are deliberately independent of the library oracle.

/// Pairs that remain indistinguishable under some infinite input sequence.
bool brute_observable(const Model& model);
/// Smallest N with distinct initial states always separated on [0, N].
std::optional<std::size_t> brute_horizon(const Model& model);
/// Smallest number of extra outputs that makes the model observable.
std::size_t brute_min_outputs(const Model& model);
/// Brute-force essential support of an expression over `vars`.
std::vector<VarRef> brute_support(const Expr& e, std::size_t states, std::size_t inputs);

/// All X0 whose simulated outputs under `inputs` equal `outputs`.
std::vector<StateVector> consistent_initial_states(const Model& model, std::span<const OutputVector> outputs,
                                                   std::span<const InputVector> inputs);

std::vector<InputVector> random_inputs(Rng& rng, std::size_t length, std::size_t p);
StateVector random_state(Rng& rng, std::size_t n);

}  // namespace bcn::test

#endif  // BCN_TESTS_SUPPORT_HPP
