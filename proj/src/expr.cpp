#include "bcn/expr.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "bcn/error.hpp"

namespace bcn {

struct Expr::Node {
  ExprKind kind = ExprKind::Const;
  bool value = false;
  std::size_t index = 0;
  std::vector<Expr> children;
};

Expr Expr::constant(bool value) {
  auto n = std::make_shared<Node>();
  n->kind = ExprKind::Const;
  n->value = value;
  return Expr(std::move(n));
}

Expr Expr::state(std::size_t index) {
  auto n = std::make_shared<Node>();
  n->kind = ExprKind::State;
  n->index = index;
  return Expr(std::move(n));
}

Expr Expr::input(std::size_t index) {
  auto n = std::make_shared<Node>();
  n->kind = ExprKind::Input;
  n->index = index;
  return Expr(std::move(n));
}

Expr Expr::var(VarRef ref) {
  return ref.kind == VarKind::State ? state(ref.index) : input(ref.index);
}

Expr Expr::negate(Expr child) {
  auto n = std::make_shared<Node>();
  n->kind = ExprKind::Not;
  n->children.push_back(std::move(child));
  return Expr(std::move(n));
}

Expr Expr::nary(ExprKind kind, std::vector<Expr> children) {
  if (kind != ExprKind::And && kind != ExprKind::Or && kind != ExprKind::Xor)
    throw std::invalid_argument("Expr::nary: not an n-ary operator");
  if (children.size() < 2) throw std::invalid_argument("Expr::nary: needs at least two operands");
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->children = std::move(children);
  return Expr(std::move(n));
}

Expr Expr::conj(std::vector<Expr> children) { return nary(ExprKind::And, std::move(children)); }
Expr Expr::disj(std::vector<Expr> children) { return nary(ExprKind::Or, std::move(children)); }
Expr Expr::exclusive_or(std::vector<Expr> children) { return nary(ExprKind::Xor, std::move(children)); }

ExprKind Expr::kind() const noexcept { return node_->kind; }
bool Expr::value() const noexcept { return node_->value; }
std::size_t Expr::index() const noexcept { return node_->index; }
VarRef Expr::var_ref() const noexcept {
  return {node_->kind == ExprKind::Input ? VarKind::Input : VarKind::State, node_->index};
}
std::span<const Expr> Expr::children() const noexcept { return node_->children; }

bool Expr::is_leaf() const noexcept { return node_->children.empty(); }
bool Expr::is_variable() const noexcept {
  return node_->kind == ExprKind::State || node_->kind == ExprKind::Input;
}

std::size_t Expr::size() const {
  std::size_t total = 1;
  for (const Expr& c : children()) total += c.size();
  return total;
}

bool Expr::evaluate(const StateVector& x, const InputVector& u) const {
  switch (kind()) {
    case ExprKind::Const:
      return value();
    case ExprKind::State:
      if (index() >= x.size())
        throw ModelError("state reference X" + std::to_string(index() + 1) + " out of range (n=" +
                         std::to_string(x.size()) + ")");
      return x[index()];
    case ExprKind::Input:
      if (index() >= u.size())
        throw ModelError("input reference U" + std::to_string(index() + 1) + " out of range (p=" +
                         std::to_string(u.size()) + ")");
      return u[index()];
    case ExprKind::Not:
      return !children()[0].evaluate(x, u);
    case ExprKind::And:
      for (const Expr& c : children())
        if (!c.evaluate(x, u)) return false;
      return true;
    case ExprKind::Or:
      for (const Expr& c : children())
        if (c.evaluate(x, u)) return true;
      return false;
    case ExprKind::Xor: {
      bool acc = false;
      for (const Expr& c : children()) acc = acc != c.evaluate(x, u);
      return acc;
    }
  }
  return false;
}

bool same_structure(const Expr& a, const Expr& b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case ExprKind::Const:
      return a.value() == b.value();
    case ExprKind::State:
    case ExprKind::Input:
      return a.index() == b.index();
    default:
      break;
  }
  if (a.children().size() != b.children().size()) return false;
  for (std::size_t i = 0; i < a.children().size(); ++i)
    if (!same_structure(a.children()[i], b.children()[i])) return false;
  return true;
}

namespace {

void collect_variables(const Expr& e, std::vector<VarRef>& out) {
  if (e.is_variable()) {
    out.push_back(e.var_ref());
    return;
  }
  for (const Expr& c : e.children()) collect_variables(c, out);
}

using Words = std::vector<std::uint64_t>;

constexpr std::uint64_t kColumnPattern[6] = {
    0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
    0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL,
};

struct TableContext {
  const std::vector<VarRef>& vars;
  std::size_t word_count;
  std::uint64_t tail_mask;
};

Words column(const TableContext& ctx, std::size_t position) {
  Words w(ctx.word_count);
  if (position < 6) {
    std::fill(w.begin(), w.end(), kColumnPattern[position] & ctx.tail_mask);
  } else {
    const std::size_t stride_bit = position - 6;
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = ((i >> stride_bit) & 1U) ? ~std::uint64_t{0} : 0;
  }
  return w;
}

Words eval_words(const Expr& e, const TableContext& ctx) {
  switch (e.kind()) {
    case ExprKind::Const:
      return Words(ctx.word_count, e.value() ? ctx.tail_mask : 0);
    case ExprKind::State:
    case ExprKind::Input: {
      const auto it = std::find(ctx.vars.begin(), ctx.vars.end(), e.var_ref());
      if (it == ctx.vars.end()) throw std::invalid_argument("truth_table: variable not in table");
      return column(ctx, static_cast<std::size_t>(it - ctx.vars.begin()));
    }
    case ExprKind::Not: {
      Words w = eval_words(e.children()[0], ctx);
      for (auto& x : w) x = ~x & ctx.tail_mask;
      return w;
    }
    case ExprKind::And:
    case ExprKind::Or:
    case ExprKind::Xor: {
      Words acc = eval_words(e.children()[0], ctx);
      for (std::size_t c = 1; c < e.children().size(); ++c) {
        const Words rhs = eval_words(e.children()[c], ctx);
        for (std::size_t i = 0; i < acc.size(); ++i) {
          if (e.kind() == ExprKind::And) acc[i] &= rhs[i];
          else if (e.kind() == ExprKind::Or) acc[i] |= rhs[i];
          else acc[i] ^= rhs[i];
        }
      }
      return acc;
    }
  }
  return {};
}

bool column_is_essential(const TruthTable& t, std::size_t position) {
  if (position < 6) {
    const unsigned shift = 1U << position;
    const std::uint64_t low_half = ~kColumnPattern[position];
    for (std::uint64_t w : t.words)
      if (((w ^ (w >> shift)) & low_half) != 0) return true;
    return false;
  }
  const std::size_t stride = std::size_t{1} << (position - 6);
  for (std::size_t i = 0; i < t.words.size(); ++i)
    if ((i & stride) == 0 && t.words[i] != t.words[i | stride]) return true;
  return false;
}

Expr substitute_raw(const Expr& e, VarRef v, bool value) {
  if (e.is_variable()) return e.var_ref() == v ? Expr::constant(value) : e;
  if (e.is_leaf()) return e;
  if (e.kind() == ExprKind::Not) return Expr::negate(substitute_raw(e.children()[0], v, value));
  std::vector<Expr> kids;
  kids.reserve(e.children().size());
  for (const Expr& c : e.children()) kids.push_back(substitute_raw(c, v, value));
  return Expr::nary(e.kind(), std::move(kids));
}

}  // namespace

std::vector<VarRef> variables(const Expr& e) {
  std::vector<VarRef> out;
  variables(e, out);
  return out;
}

void variables(const Expr& e, std::vector<VarRef>& out) {
  out.clear();
  collect_variables(e, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
}

TruthTable truth_table(const Expr& e, std::vector<VarRef> vars, std::size_t arity_cap) {
  if (vars.size() > arity_cap) throw ArityCapError(std::nullopt, vars.size(), arity_cap);
  if (vars.size() >= 63) throw ArityCapError(std::nullopt, vars.size(), 62);
  const std::size_t rows = std::size_t{1} << vars.size();
  const TableContext ctx{vars, std::max<std::size_t>(1, rows / 64),
                         rows >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << rows) - 1};
  TruthTable table;
  table.words = eval_words(e, ctx);
  table.vars = std::move(vars);
  return table;
}

std::vector<VarRef> essential_support(const Expr& e, std::size_t arity_cap) {
  const TruthTable t = truth_table(e, variables(e), arity_cap);
  std::vector<VarRef> support;
  for (std::size_t i = 0; i < t.vars.size(); ++i)
    if (column_is_essential(t, i)) support.push_back(t.vars[i]);
  return support;
}

Expr fold_constants(const Expr& e) {
  switch (e.kind()) {
    case ExprKind::Const:
    case ExprKind::State:
    case ExprKind::Input:
      return e;
    case ExprKind::Not: {
      Expr c = fold_constants(e.children()[0]);
      if (c.kind() == ExprKind::Const) return Expr::constant(!c.value());
      if (c.kind() == ExprKind::Not) return c.children()[0];
      return Expr::negate(std::move(c));
    }
    case ExprKind::And:
    case ExprKind::Or: {
      // absorbing: 0 for AND, 1 for OR
      const bool absorbing = e.kind() == ExprKind::Or;
      std::vector<Expr> kept;
      for (const Expr& child : e.children()) {
        Expr c = fold_constants(child);
        if (c.kind() == ExprKind::Const) {
          if (c.value() == absorbing) return Expr::constant(absorbing);
          continue;
        }
        kept.push_back(std::move(c));
      }
      if (kept.empty()) return Expr::constant(!absorbing);
      if (kept.size() == 1) return kept.front();
      return Expr::nary(e.kind(), std::move(kept));
    }
    case ExprKind::Xor: {
      bool parity = false;
      std::vector<Expr> kept;
      for (const Expr& child : e.children()) {
        Expr c = fold_constants(child);
        if (c.kind() == ExprKind::Const) {
          parity = parity != c.value();
          continue;
        }
        kept.push_back(std::move(c));
      }
      if (kept.empty()) return Expr::constant(parity);
      Expr core = kept.size() == 1 ? kept.front() : Expr::exclusive_or(std::move(kept));
      return parity ? fold_constants(Expr::negate(std::move(core))) : core;
    }
  }
  return e;
}

Expr substitute(const Expr& e, VarRef v, bool value) { return fold_constants(substitute_raw(e, v, value)); }

Expr remove_fictitious(const Expr& e, std::size_t arity_cap) {
  const std::vector<VarRef> vars = variables(e);
  const std::vector<VarRef> support = essential_support(e, arity_cap);
  if (support.size() == vars.size()) return e;

  Expr current = e;
  for (const VarRef& v : vars) {
    if (std::binary_search(support.begin(), support.end(), v)) continue;
    Expr low = substitute(current, v, false);
    Expr high = substitute(current, v, true);
    if (truth_table(low, vars, arity_cap) != truth_table(high, vars, arity_cap))
      throw std::logic_error("remove_fictitious: branches disagree on a fictitious variable");
    current = std::move(low);
  }
  return current;
}

}  // namespace bcn
