#ifndef BCN_EXPR_HPP
#define BCN_EXPR_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "bcn/bits.hpp"

namespace bcn {

/// Default limit on distinct variables per update for essentiality testing.
inline constexpr std::size_t kDefaultArityCap = 20;

enum class VarKind : std::uint8_t { State, Input };

/// Reference to a state or input variable (0-based index). States order
/// before inputs.
struct VarRef {
  VarKind kind = VarKind::State;
  std::size_t index = 0;

  static VarRef state(std::size_t i) { return {VarKind::State, i}; }
  static VarRef input(std::size_t i) { return {VarKind::Input, i}; }

  friend auto operator<=>(const VarRef&, const VarRef&) = default;
};

enum class ExprKind : std::uint8_t { Const, State, Input, Not, And, Or, Xor };

/// Immutable Boolean expression tree. Copies share structure.
class Expr {
 public:
  static Expr constant(bool value);
  static Expr state(std::size_t index);
  static Expr input(std::size_t index);
  static Expr var(VarRef ref);
  static Expr negate(Expr child);
  /// The n-ary constructors require at least two operands.
  static Expr conj(std::vector<Expr> children);
  static Expr disj(std::vector<Expr> children);
  static Expr exclusive_or(std::vector<Expr> children);
  static Expr nary(ExprKind kind, std::vector<Expr> children);

  ExprKind kind() const noexcept;
  bool value() const noexcept;          // Const only
  std::size_t index() const noexcept;   // State / Input only
  VarRef var_ref() const noexcept;      // State / Input only
  std::span<const Expr> children() const noexcept;

  bool is_leaf() const noexcept;
  bool is_variable() const noexcept;

  /// Total number of nodes in the tree.
  std::size_t size() const;

  bool evaluate(const StateVector& x, const InputVector& u) const;

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Structural equality.
bool same_structure(const Expr& a, const Expr& b);

/// Distinct variables mentioned syntactically, sorted.
std::vector<VarRef> variables(const Expr& e);
/// Same as above, written into `out` (cleared first) to reuse its storage.
void variables(const Expr& e, std::vector<VarRef>& out);

/// Truth table of `e` over `vars`: row r assigns bit i of r to vars[i].
/// Rows are packed 64 per word; unused high bits of a short table are 0.
struct TruthTable {
  std::vector<VarRef> vars;
  std::vector<std::uint64_t> words;

  std::size_t rows() const noexcept { return std::size_t{1} << vars.size(); }
  bool at(std::size_t row) const noexcept { return ((words[row >> 6] >> (row & 63)) & 1U) != 0; }
  friend bool operator==(const TruthTable&, const TruthTable&) = default;
};

/// Throws ArityCapError when `vars` is longer than `arity_cap`.
TruthTable truth_table(const Expr& e, std::vector<VarRef> vars, std::size_t arity_cap = kDefaultArityCap);

/// Variables whose flip changes the value of `e` under some assignment of
/// the others. Exhaustive over all 2^arity assignments.
std::vector<VarRef> essential_support(const Expr& e, std::size_t arity_cap = kDefaultArityCap);

/// Replaces every occurrence of `v` by `value` and folds constants.
Expr substitute(const Expr& e, VarRef v, bool value);

/// Bottom-up constant folding; also collapses single-operand n-ary nodes
/// and double negation.
Expr fold_constants(const Expr& e);

/// Equivalent expression that mentions only the essential support of `e`.
Expr remove_fictitious(const Expr& e, std::size_t arity_cap = kDefaultArityCap);

}  // namespace bcn

#endif  // BCN_EXPR_HPP
