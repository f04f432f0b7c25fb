#ifndef BCN_OBSERVER_HPP
#define BCN_OBSERVER_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "bcn/bits.hpp"
#include "bcn/error.hpp"
#include "bcn/model.hpp"
#include "bcn/observability.hpp"

namespace bcn {

enum class Polarity { Identity, Negation };

/// Decodes one observed path (X_{i1}, ..., X_{iN}). Every update along the
/// path is the identity or the negation of its predecessor, so X_{iq}(0)
/// is the output sample at time N - q (1-based q) XOR the number of
/// negations between position q and the end, mod 2.
class PathDecoder {
 public:
  PathDecoder(std::vector<std::size_t> nodes, std::vector<Polarity> polarities, std::size_t output_position);

  std::span<const std::size_t> nodes() const noexcept { return nodes_; }
  /// polarities()[q] belongs to the edge nodes[q] -> nodes[q + 1].
  std::span<const Polarity> polarities() const noexcept { return polarities_; }
  std::size_t output_position() const noexcept { return output_position_; }
  std::size_t length() const noexcept { return nodes_.size(); }

  /// Writes the path's initial values into `x0`.
  void decode(std::span<const OutputVector> outputs, StateVector& x0) const;

 private:
  std::vector<std::size_t> nodes_;
  std::vector<Polarity> polarities_;
  std::vector<bool> parity_;  // parity_[q]: negations on edges q..N-2
  std::size_t output_position_;
};

/// Raised by build_observer when the sufficient condition does not hold.
class ObserverError : public Error {
 public:
  explicit ObserverError(SufficiencyVerdict verdict);

  const SufficiencyVerdict& verdict() const noexcept { return verdict_; }

 private:
  SufficiencyVerdict verdict_;
};

/// Recovers X(0) from outputs alone by inverting the identity/NOT chains
/// of a covering set of disjoint observed paths.
class DisjointPathObserver {
 public:
  DisjointPathObserver(std::size_t state_count, std::size_t output_count, std::vector<PathDecoder> decoders);

  std::span<const PathDecoder> decoders() const noexcept { return decoders_; }
  std::size_t state_count() const noexcept { return state_count_; }
  std::size_t output_count() const noexcept { return output_count_; }
  /// Output samples needed: Y(0) .. Y(horizon - 1).
  std::size_t horizon() const noexcept { return horizon_; }

  /// Uses only the first horizon() samples; throws HorizonError if fewer
  /// and ModelError on a sample of the wrong width.
  StateVector reconstruct_initial(std::span<const OutputVector> outputs) const;

 private:
  std::size_t state_count_;
  std::size_t output_count_;
  std::vector<PathDecoder> decoders_;
  std::size_t horizon_ = 0;
};

/// Throws ObserverError when the verdict is Unknown, ModelError if an update
/// on a path is not a single-argument identity/negation (unreduced model).
DisjointPathObserver build_observer(const Model& model);
DisjointPathObserver build_observer(const Model& model, const DepGraph& g);

std::size_t required_horizon(const DisjointPathObserver& obs);

/// X(k): reconstruct X(0), then k forward steps using inputs[0..k-1].
StateVector reconstruct_state(const DisjointPathObserver& obs, const Model& model,
                              std::span<const OutputVector> outputs, std::span<const InputVector> inputs,
                              std::size_t k);

struct TraceCheck {
  bool consistent = true;
  std::optional<std::size_t> first_mismatch;
};

/// Re-simulates from the reconstructed X(0) and compares every observed
/// sample. Needs at least outputs.size() - 1 inputs.
TraceCheck validate_trace(const DisjointPathObserver& obs, const Model& model, std::span<const OutputVector> outputs,
                          std::span<const InputVector> inputs);

}  // namespace bcn

#endif  // BCN_OBSERVER_HPP
