#include "bcn/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

#include "bcn/error.hpp"

namespace bcn {

std::vector<InputVector> IndistinguishableWitness::inputs(std::size_t length, std::size_t input_count) const {
  std::vector<InputVector> out;
  out.reserve(length);
  for (std::size_t k = 0; k < length; ++k) {
    if (k < prefix.size()) out.push_back(prefix[k]);
    else if (!cycle.empty()) out.push_back(cycle[(k - prefix.size()) % cycle.size()]);
    else out.emplace_back(input_count);
  }
  return out;
}

namespace {

using StateCode = std::uint32_t;
using PairIndex = std::uint64_t;

constexpr std::int32_t kSurviving = -1;

PairIndex pair_index(StateCode a, StateCode b) {
  if (a > b) std::swap(a, b);
  return static_cast<PairIndex>(b) * (b - 1) / 2 + a;
}

/// Transition table over encoded states plus per-input preimages, reused
/// across output sets.
class PairAutomaton {
 public:
  PairAutomaton(const Model& model, const OracleOptions& options)
      : n_(model.state_count()), state_space_(StateCode{1} << n_) {
    if (options.allowed_inputs.empty()) {
      for (std::uint64_t c = 0; c < (std::uint64_t{1} << model.input_count()); ++c)
        inputs_.push_back(InputVector::from_index(c, model.input_count()));
    } else {
      for (const InputVector& u : options.allowed_inputs) {
        if (u.size() != model.input_count())
          throw ModelError("allowed input has width " + std::to_string(u.size()) + ", model has p=" +
                           std::to_string(model.input_count()));
        inputs_.push_back(u);
      }
    }
    next_.resize(inputs_.size() * state_space_);
    for (std::size_t u = 0; u < inputs_.size(); ++u)
      for (StateCode x = 0; x < state_space_; ++x)
        next_[u * state_space_ + x] =
            static_cast<StateCode>(step(model, StateVector::from_index(x, n_), inputs_[u]).to_index());

    pre_offsets_.assign(inputs_.size() * (state_space_ + 1), 0);
    pre_states_.resize(next_.size());
    for (std::size_t u = 0; u < inputs_.size(); ++u) {
      std::size_t* off = &pre_offsets_[u * (state_space_ + 1)];
      for (StateCode x = 0; x < state_space_; ++x) ++off[next(u, x) + 1];
      for (StateCode y = 0; y < state_space_; ++y) off[y + 1] += off[y];
      std::vector<std::size_t> fill(off, off + state_space_);
      for (StateCode x = 0; x < state_space_; ++x) pre_states_[u * state_space_ + fill[next(u, x)]++] = x;
    }
  }

  std::size_t input_choices() const noexcept { return inputs_.size(); }
  const InputVector& input(std::size_t u) const { return inputs_[u]; }
  StateCode state_space() const noexcept { return state_space_; }
  StateCode next(std::size_t u, StateCode x) const { return next_[u * state_space_ + x]; }

  std::span<const StateCode> preimage(std::size_t u, StateCode y) const {
    const std::size_t* off = &pre_offsets_[u * (state_space_ + 1)];
    return {pre_states_.data() + u * state_space_ + off[y], pre_states_.data() + u * state_space_ + off[y + 1]};
  }

  /// rank[pair] = last time at which the pair can still share outputs
  /// under the worst input sequence, plus one; 0 means the outputs already
  /// differ at time 0; kSurviving means never separated.
  std::vector<std::int32_t> ranks(std::uint64_t output_mask) const {
    const PairIndex pairs = static_cast<PairIndex>(state_space_) * (state_space_ - 1) / 2;
    std::vector<std::int32_t> rank(pairs, 0);
    std::vector<std::uint32_t> live_successors(pairs, 0);
    struct Pending {
      StateCode a, b;
    };
    std::vector<Pending> queue;

    auto same_output = [&](StateCode a, StateCode b) { return ((a ^ b) & output_mask) == 0; };

    for (StateCode b = 1; b < state_space_; ++b) {
      for (StateCode a = 0; a < b; ++a) {
        if (!same_output(a, b)) continue;
        const PairIndex idx = pair_index(a, b);
        std::uint32_t live = 0;
        for (std::size_t u = 0; u < inputs_.size(); ++u) {
          const StateCode sa = next(u, a), sb = next(u, b);
          if (sa == sb || same_output(sa, sb)) ++live;
        }
        live_successors[idx] = live;
        if (live == 0) {
          rank[idx] = 1;
          queue.push_back({a, b});
        } else {
          rank[idx] = kSurviving;
        }
      }
    }

    for (std::size_t head = 0; head < queue.size(); ++head) {
      const auto [a, b] = queue[head];
      for (std::size_t u = 0; u < inputs_.size(); ++u) {
        for (StateCode x : preimage(u, a)) {
          for (StateCode y : preimage(u, b)) {
            const PairIndex p = pair_index(x, y);
            if (rank[p] != kSurviving) continue;
            if (--live_successors[p] != 0) continue;
            std::int32_t worst = 0;
            for (std::size_t v = 0; v < inputs_.size(); ++v)
              worst = std::max(worst, rank[pair_index(next(v, x), next(v, y))]);
            rank[p] = worst + 1;
            queue.push_back({x, y});
          }
        }
      }
    }
    return rank;
  }

 private:
  std::size_t n_;
  StateCode state_space_;
  std::vector<InputVector> inputs_;
  std::vector<StateCode> next_;
  std::vector<std::size_t> pre_offsets_;
  std::vector<StateCode> pre_states_;
};

void check_caps(const Model& model, const OracleLimits& limits, std::size_t max_states) {
  if (model.state_count() > max_states || model.input_count() > limits.max_inputs)
    throw OracleCapError("oracle limited to n <= " + std::to_string(max_states) + " and p <= " +
                         std::to_string(limits.max_inputs) + "; model has n=" + std::to_string(model.state_count()) +
                         ", p=" + std::to_string(model.input_count()));
  if (model.state_count() > 30) throw OracleCapError("oracle cannot encode more than 30 states");
}

std::uint64_t output_mask(const Model& model) {
  std::uint64_t mask = 0;
  for (std::size_t j : model.outputs()) mask |= std::uint64_t{1} << j;
  return mask;
}

IndistinguishableWitness make_witness(const PairAutomaton& automaton, const std::vector<std::int32_t>& rank,
                                      StateCode a, StateCode b, std::uint64_t mask, std::size_t n) {
  IndistinguishableWitness w;
  w.first = StateVector::from_index(a, n);
  w.second = StateVector::from_index(b, n);
  std::vector<InputVector> taken;
  std::unordered_map<PairIndex, std::size_t> seen_at;
  seen_at.emplace(pair_index(a, b), 0);
  while (true) {
    bool moved = false;
    for (std::size_t u = 0; u < automaton.input_choices(); ++u) {
      const StateCode sa = automaton.next(u, a), sb = automaton.next(u, b);
      if (sa == sb) {
        taken.push_back(automaton.input(u));
        w.prefix = std::move(taken);
        return w;
      }
      if (((sa ^ sb) & mask) == 0 && rank[pair_index(sa, sb)] == kSurviving) {
        taken.push_back(automaton.input(u));
        a = sa;
        b = sb;
        moved = true;
        break;
      }
    }
    if (!moved) throw std::logic_error("oracle witness walk left the surviving set");
    const auto [it, fresh] = seen_at.emplace(pair_index(a, b), taken.size());
    if (!fresh) {
      w.prefix.assign(taken.begin(), taken.begin() + static_cast<std::ptrdiff_t>(it->second));
      w.cycle.assign(taken.begin() + static_cast<std::ptrdiff_t>(it->second), taken.end());
      return w;
    }
  }
}

}  // namespace

ObservabilityResult oracle_observable(const Model& model, const OracleOptions& options) {
  check_caps(model, options.limits, options.limits.max_states);
  const PairAutomaton automaton(model, options);
  const std::uint64_t mask = output_mask(model);
  const auto rank = automaton.ranks(mask);
  const auto survivor = std::find(rank.begin(), rank.end(), kSurviving);
  if (survivor == rank.end()) return {true, std::nullopt};

  const auto q = static_cast<PairIndex>(survivor - rank.begin());
  StateCode b = 1;
  while (static_cast<PairIndex>(b + 1) * b / 2 <= q) ++b;
  const auto a = static_cast<StateCode>(q - static_cast<PairIndex>(b) * (b - 1) / 2);
  return {false, make_witness(automaton, rank, a, b, mask, model.state_count())};
}

std::optional<std::size_t> oracle_horizon(const Model& model, const OracleOptions& options) {
  check_caps(model, options.limits, options.limits.max_states);
  const PairAutomaton automaton(model, options);
  const auto rank = automaton.ranks(output_mask(model));
  std::int32_t worst = 0;
  for (std::int32_t r : rank) {
    if (r == kSurviving) return std::nullopt;
    worst = std::max(worst, r);
  }
  return static_cast<std::size_t>(worst);
}

MinOutputsResult oracle_min_outputs(const Model& model, const OracleOptions& options) {
  check_caps(model, options.limits,
             std::min(options.limits.max_states, options.limits.max_states_min_outputs));
  const PairAutomaton automaton(model, options);
  const std::uint64_t base = output_mask(model);

  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < model.state_count(); ++i)
    if (!model.is_output(i)) candidates.push_back(i);

  auto observable_with = [&](std::uint64_t mask) {
    const auto rank = automaton.ranks(mask);
    return std::find(rank.begin(), rank.end(), kSurviving) == rank.end();
  };

  for (std::size_t k = 0; k <= candidates.size(); ++k) {
    // lexicographic k-combinations of candidate positions
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      std::uint64_t mask = base;
      for (std::size_t i : pick) mask |= std::uint64_t{1} << candidates[i];
      if (observable_with(mask)) {
        MinOutputsResult r;
        r.size = k;
        for (std::size_t i : pick) r.added.push_back(candidates[i]);
        return r;
      }
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == candidates.size() - k + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  // all states measured always separates distinct states at time 0
  throw std::logic_error("oracle_min_outputs: full measurement not observable");
}

}  // namespace bcn
