#ifndef BCN_DSL_HPP
#define BCN_DSL_HPP

#include <cstddef>
#include <string>
#include <string_view>

#include "bcn/expr.hpp"
#include "bcn/model.hpp"

namespace bcn {

struct ParseOptions {
  std::size_t arity_cap = kDefaultArityCap;
};

/// Parses the `.bcn` text format:
///
///     # comment
///     states: X1 X2 X3
///     inputs: U1
///     outputs: X1
///     X1 <= X2 & !U1
///     X2 <= X1 ^ X3 | 0
///     X3 <= (X1 | X2) & X3
///
/// Operators bind `!` > `&` > `^` > `|`. Every state needs exactly one
/// update line. The returned model has fictitious arguments removed.
/// Throws ParseError carrying every diagnostic found.
Model parse_model(std::string_view text, const ParseOptions& options = {});

/// Canonical text; parse_model(serialize_model(m)) has the same dynamics.
std::string serialize_model(const Model& model);

/// Expression text using the model's names, minimal parentheses.
std::string format_expr(const Expr& e, const Model& model);

}  // namespace bcn

#endif  // BCN_DSL_HPP
