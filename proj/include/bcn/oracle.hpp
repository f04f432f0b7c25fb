#ifndef BCN_ORACLE_HPP
#define BCN_ORACLE_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "bcn/bits.hpp"
#include "bcn/model.hpp"

namespace bcn {

/// Size limits for the exhaustive checks. Work grows like 4^n * 2^p.
struct OracleLimits {
  std::size_t max_states = 12;
  std::size_t max_inputs = 4;
  /// Stricter limit for the minimal-output search, which repeats the
  /// observability check for up to 2^n output sets.
  std::size_t max_states_min_outputs = 8;
};

struct OracleOptions {
  OracleLimits limits;
  /// Input vectors the environment may apply. Empty means all 2^p.
  std::vector<InputVector> allowed_inputs;
};

/// Two distinct initial states and inputs under which their output
/// sequences never differ: apply `prefix`, then repeat `cycle` forever. An
/// empty cycle means the two trajectories have merged and any continuation
/// works.
struct IndistinguishableWitness {
  StateVector first;
  StateVector second;
  std::vector<InputVector> prefix;
  std::vector<InputVector> cycle;

  /// The first `length` inputs of the infinite sequence (zeros after a merge).
  std::vector<InputVector> inputs(std::size_t length, std::size_t input_count) const;
};

struct ObservabilityResult {
  bool observable = false;
  std::optional<IndistinguishableWitness> witness;
};

/// Exact check: every pair of distinct initial states is eventually
/// separated by the outputs under every input sequence. Greatest fixpoint
/// over the pair automaton. Throws OracleCapError above the limits.
ObservabilityResult oracle_observable(const Model& model, const OracleOptions& options = {});

/// Minimal N such that outputs on [0, N] separate every pair of initial
/// states for every input sequence; nullopt if not observable.
std::optional<std::size_t> oracle_horizon(const Model& model, const OracleOptions& options = {});

struct MinOutputsResult {
  std::size_t size = 0;
  /// Lexicographically first smallest set of states to add as outputs.
  std::vector<std::size_t> added;
};

/// Exact minimal number of additional directly measured states. Subsets are
/// tried by increasing size, in lexicographic order within a size.
MinOutputsResult oracle_min_outputs(const Model& model, const OracleOptions& options = {});

}  // namespace bcn

#endif  // BCN_ORACLE_HPP
