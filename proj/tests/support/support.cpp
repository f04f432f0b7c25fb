#include "support.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <sstream>
#include <stdexcept>

#ifndef BCN_DATA_DIR
#error "BCN_DATA_DIR must point at the fixture directory"
#endif

namespace bcn::test {

std::string fixture_path(const std::string& name) { return std::string(BCN_DATA_DIR) + "/" + name; }

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Model load_fixture(const std::string& name) { return parse_model(read_text(fixture_path(name))); }

Model ex1() { return load_fixture("ex1.bcn"); }
Model cc9() { return load_fixture("cc9.bcn"); }

Model gap2() {
  return Model(0, {Expr::exclusive_or({Expr::state(0), Expr::state(1)}), Expr::state(1)}, {0});
}

Model cyc2() { return Model(0, {Expr::negate(Expr::state(1)), Expr::state(0)}, {}); }

Model identity_model(std::size_t n) {
  std::vector<Expr> updates;
  std::vector<std::size_t> outputs;
  for (std::size_t i = 0; i < n; ++i) {
    updates.push_back(Expr::state(i));
    outputs.push_back(i);
  }
  return Model(0, std::move(updates), std::move(outputs));
}

namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

VarRef random_var(Rng& rng, std::size_t n, std::size_t p) {
  const std::size_t k = uniform(rng, 0, n + p - 1);
  return k < n ? VarRef::state(k) : VarRef::input(k - n);
}

Expr literal(Rng& rng, VarRef v) {
  Expr e = Expr::var(v);
  return coin(rng, 0.5) ? Expr::negate(e) : e;
}

std::vector<VarRef> distinct_vars(Rng& rng, std::size_t n, std::size_t p, std::size_t k) {
  k = std::min(k, n + p);
  std::vector<VarRef> picked;
  while (picked.size() < k) {
    const VarRef v = random_var(rng, n, p);
    if (std::find(picked.begin(), picked.end(), v) == picked.end()) picked.push_back(v);
  }
  return picked;
}

Expr random_tree(Rng& rng, std::vector<Expr> leaves) {
  while (leaves.size() > 1) {
    const std::size_t a = uniform(rng, 0, leaves.size() - 1);
    Expr left = leaves[a];
    leaves.erase(leaves.begin() + static_cast<std::ptrdiff_t>(a));
    const std::size_t b = uniform(rng, 0, leaves.size() - 1);
    Expr right = leaves[b];
    static constexpr ExprKind kOps[] = {ExprKind::And, ExprKind::Or, ExprKind::Xor};
    Expr joined = Expr::nary(kOps[uniform(rng, 0, 2)], {left, right});
    leaves[b] = coin(rng, 0.25) ? Expr::negate(joined) : joined;
  }
  return leaves.front();
}

std::vector<std::size_t> random_outputs(Rng& rng, std::size_t n, double probability) {
  std::vector<std::size_t> outputs;
  for (std::size_t i = 0; i < n; ++i)
    if (coin(rng, probability)) outputs.push_back(i);
  return outputs;
}

}  // namespace

Model random_model(Rng& rng, const RandomModelOptions& options) {
  const std::size_t n = uniform(rng, options.min_states, options.max_states);
  const std::size_t p = uniform(rng, 0, options.max_inputs);
  std::vector<Expr> updates;
  for (std::size_t i = 0; i < n; ++i) {
    if (coin(rng, 0.02)) {
      updates.push_back(Expr::constant(coin(rng, 0.5)));
    } else if (coin(rng, options.literal_probability)) {
      updates.push_back(literal(rng, random_var(rng, n, p)));
    } else {
      std::vector<Expr> leaves;
      const std::size_t k = uniform(rng, 1, options.max_fanin);
      for (std::size_t j = 0; j < k; ++j) leaves.push_back(literal(rng, random_var(rng, n, p)));
      updates.push_back(random_tree(rng, std::move(leaves)));
    }
  }
  return reduce_fictitious(Model(p, std::move(updates), random_outputs(rng, n, options.output_probability)));
}

Model random_conjunctive_model(Rng& rng, const RandomModelOptions& options, bool allow_negation) {
  const std::size_t n = uniform(rng, options.min_states, options.max_states);
  const std::size_t p = uniform(rng, 0, options.max_inputs);
  std::vector<Expr> updates;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Expr> literals;
    for (VarRef v : distinct_vars(rng, n, p, uniform(rng, 1, options.max_fanin)))
      literals.push_back(allow_negation ? literal(rng, v) : Expr::var(v));
    updates.push_back(literals.size() == 1 ? literals.front() : Expr::conj(std::move(literals)));
  }
  return Model(p, std::move(updates), random_outputs(rng, n, options.output_probability));
}

Model random_chain_model(Rng& rng, std::size_t n, std::size_t p, std::size_t max_fanin) {
  std::vector<Expr> updates(n, Expr::constant(false));
  std::vector<std::size_t> outputs;
  std::size_t start = 0;
  while (start < n) {
    const std::size_t length = std::min(uniform(rng, 1, 8), n - start);
    const std::size_t fanin = std::min(uniform(rng, 2, std::max<std::size_t>(2, max_fanin)), n + p);
    std::vector<Expr> literals;
    for (VarRef v : distinct_vars(rng, n, p, fanin)) literals.push_back(literal(rng, v));
    if (literals.size() == 1) {
      updates[start] = literals.front();
    } else {
      static constexpr ExprKind kOps[] = {ExprKind::And, ExprKind::Or, ExprKind::Xor};
      updates[start] = Expr::nary(kOps[uniform(rng, 0, 2)], std::move(literals));
    }
    for (std::size_t i = start + 1; i < start + length; ++i) {
      Expr prev = Expr::state(i - 1);
      updates[i] = coin(rng, 0.5) ? Expr::negate(prev) : prev;
    }
    outputs.push_back(start + length - 1);
    start += length;
  }
  return Model(p, std::move(updates), std::move(outputs));
}

namespace {

struct Explicit {
  std::size_t states;
  std::size_t inputs;
  std::vector<std::uint64_t> next;    // next[u * states + x]
  std::vector<std::uint64_t> output;  // masked output code per state
};

Explicit explicit_form(const Model& model) {
  Explicit e;
  e.states = std::size_t{1} << model.state_count();
  e.inputs = std::size_t{1} << model.input_count();
  e.next.resize(e.states * e.inputs);
  e.output.resize(e.states);
  for (std::size_t x = 0; x < e.states; ++x) {
    const StateVector xv = StateVector::from_index(x, model.state_count());
    e.output[x] = output_of(model, xv).to_index();
    for (std::size_t u = 0; u < e.inputs; ++u)
      e.next[u * e.states + x] = step(model, xv, InputVector::from_index(u, model.input_count())).to_index();
  }
  return e;
}

/// Iterates B_{k+1}(a,b) = B_0(a,b) and exists u with B_k(succ), where B
/// includes the diagonal. Returns the sequence length until a fixpoint,
/// and whether the fixpoint has off-diagonal pairs.
struct Iteration {
  std::optional<std::size_t> first_empty;
};

Iteration iterate(const Explicit& e) {
  const std::size_t s = e.states;
  std::vector<char> base(s * s), cur(s * s);
  for (std::size_t a = 0; a < s; ++a)
    for (std::size_t b = 0; b < s; ++b) base[a * s + b] = e.output[a] == e.output[b];
  cur = base;
  auto off_diagonal = [&](const std::vector<char>& set) {
    for (std::size_t a = 0; a < s; ++a)
      for (std::size_t b = 0; b < s; ++b)
        if (a != b && set[a * s + b]) return true;
    return false;
  };
  for (std::size_t k = 0;; ++k) {
    if (!off_diagonal(cur)) return {k};
    std::vector<char> next(s * s, 0);
    for (std::size_t a = 0; a < s; ++a)
      for (std::size_t b = 0; b < s; ++b) {
        if (!base[a * s + b]) continue;
        for (std::size_t u = 0; u < e.inputs && !next[a * s + b]; ++u)
          next[a * s + b] = cur[e.next[u * s + a] * s + e.next[u * s + b]];
      }
    if (next == cur) return {std::nullopt};
    cur = std::move(next);
  }
}

}  // namespace

bool brute_observable(const Model& model) { return iterate(explicit_form(model)).first_empty.has_value(); }

std::optional<std::size_t> brute_horizon(const Model& model) { return iterate(explicit_form(model)).first_empty; }

std::size_t brute_min_outputs(const Model& model) {
  std::vector<std::size_t> hidden;
  for (std::size_t i = 0; i < model.state_count(); ++i)
    if (!model.is_output(i)) hidden.push_back(i);
  std::size_t best = hidden.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << hidden.size()); ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size >= best) continue;
    std::vector<std::size_t> extra;
    for (std::size_t j = 0; j < hidden.size(); ++j)
      if ((mask >> j) & 1U) extra.push_back(hidden[j]);
    if (brute_observable(model.with_added_outputs(extra))) best = size;
  }
  return best;
}

std::vector<VarRef> brute_support(const Expr& e, std::size_t states, std::size_t inputs) {
  std::vector<VarRef> support;
  const std::size_t total = states + inputs;
  for (std::size_t v = 0; v < total; ++v) {
    bool essential = false;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << total) && !essential; ++code) {
      const std::uint64_t flipped = code ^ (std::uint64_t{1} << v);
      auto eval = [&](std::uint64_t c) {
        return e.evaluate(StateVector::from_index(c & ((std::uint64_t{1} << states) - 1), states),
                          InputVector::from_index(c >> states, inputs));
      };
      essential = eval(code) != eval(flipped);
    }
    if (essential) support.push_back(v < states ? VarRef::state(v) : VarRef::input(v - states));
  }
  return support;
}

std::vector<StateVector> consistent_initial_states(const Model& model, std::span<const OutputVector> outputs,
                                                   std::span<const InputVector> inputs) {
  std::vector<StateVector> found;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << model.state_count()); ++x) {
    const StateVector x0 = StateVector::from_index(x, model.state_count());
    const Trajectory t = simulate(model, x0, inputs.first(outputs.size() - 1));
    if (std::equal(outputs.begin(), outputs.end(), t.outputs.begin())) found.push_back(x0);
  }
  return found;
}

std::vector<InputVector> random_inputs(Rng& rng, std::size_t length, std::size_t p) {
  std::vector<InputVector> out;
  for (std::size_t k = 0; k < length; ++k) out.push_back(InputVector::from_index(rng(), p));
  return out;
}

StateVector random_state(Rng& rng, std::size_t n) { return StateVector::from_index(rng(), n); }

}  // namespace bcn::test
