#ifndef BCN_TRACE_HPP
#define BCN_TRACE_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bcn/bits.hpp"
#include "bcn/model.hpp"

namespace bcn {

/// One time step of an observed run: U(k) (absent on a trailing
/// output-only sample) and Y(k).
struct TraceRecord {
  std::optional<InputVector> input;
  OutputVector output;

  friend bool operator==(const TraceRecord&, const TraceRecord&) = default;
};

/// CSV trace with header `k,u:<input>...,y:<output state>...`. Rows must
/// start at k=0 and be contiguous; only the last row may leave its `u:`
/// cells empty. Columns may appear in any order after `k`. With p = 0 the
/// last record is taken to be output-only.
std::vector<TraceRecord> read_trace(std::string_view text, const Model& model);

/// Canonical CSV: declaration-order header, one row per record, `\n`
/// line endings.
std::string write_trace(std::span<const TraceRecord> records, const Model& model);

/// Records for a simulated run: inputs on every row but the last.
std::vector<TraceRecord> make_trace(const Trajectory& trajectory, std::span<const InputVector> inputs);

struct SplitTrace {
  std::vector<OutputVector> outputs;
  std::vector<InputVector> inputs;
};

/// Separates a trace into output samples and the inputs that were given.
/// Throws TraceError when an input is missing before the last record.
SplitTrace split_trace(std::span<const TraceRecord> records);

}  // namespace bcn

#endif  // BCN_TRACE_HPP
