#include "bcn/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "bcn/error.hpp"

namespace bcn {

namespace {

enum class Tok { Ident, Zero, One, Arrow, Not, And, Xor, Or, LParen, RParen, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t column = 0;  // 1-based
};

struct LineError {
  std::size_t column;
  std::string message;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    const std::size_t col = i + 1;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < line.size() && ident_char(line[j])) ++j;
      out.push_back({Tok::Ident, std::string(line.substr(i, j - i)), col});
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < line.size() && ident_char(line[j])) ++j;
      const std::string_view lit = line.substr(i, j - i);
      if (lit != "0" && lit != "1") throw LineError{col, "invalid literal '" + std::string(lit) + "'"};
      out.push_back({lit == "0" ? Tok::Zero : Tok::One, std::string(lit), col});
      i = j;
      continue;
    }
    if (c == '<' && i + 1 < line.size() && line[i + 1] == '=') {
      out.push_back({Tok::Arrow, "<=", col});
      i += 2;
      continue;
    }
    Tok kind;
    switch (c) {
      case '!': kind = Tok::Not; break;
      case '&': kind = Tok::And; break;
      case '^': kind = Tok::Xor; break;
      case '|': kind = Tok::Or; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      default:
        throw LineError{col, std::string("unexpected character '") + c + "'"};
    }
    out.push_back({kind, std::string(1, c), col});
    ++i;
  }
  out.push_back({Tok::End, "", line.size() + 1});
  return out;
}

struct SymbolTable {
  std::map<std::string, VarRef, std::less<>> names;

  const VarRef* find(std::string_view name) const {
    const auto it = names.find(name);
    return it == names.end() ? nullptr : &it->second;
  }
};

class ExprParser {
 public:
  ExprParser(const std::vector<Token>& tokens, std::size_t pos, const SymbolTable& symbols)
      : tokens_(tokens), pos_(pos), symbols_(symbols) {}

  Expr parse() {
    Expr e = parse_binary(0);
    if (peek().kind != Tok::End) throw LineError{peek().column, "unexpected '" + peek().text + "'"};
    return e;
  }

 private:
  static constexpr Tok kLevels[] = {Tok::Or, Tok::Xor, Tok::And};
  static constexpr ExprKind kKinds[] = {ExprKind::Or, ExprKind::Xor, ExprKind::And};

  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_++]; }

  Expr parse_binary(std::size_t level) {
    if (level == 3) return parse_unary();
    std::vector<Expr> operands;
    operands.push_back(parse_binary(level + 1));
    while (peek().kind == kLevels[level]) {
      take();
      operands.push_back(parse_binary(level + 1));
    }
    if (operands.size() == 1) return std::move(operands.front());
    return Expr::nary(kKinds[level], std::move(operands));
  }

  Expr parse_unary() {
    if (peek().kind == Tok::Not) {
      take();
      return Expr::negate(parse_unary());
    }
    return parse_atom();
  }

  Expr parse_atom() {
    const Token& t = take();
    switch (t.kind) {
      case Tok::Zero:
        return Expr::constant(false);
      case Tok::One:
        return Expr::constant(true);
      case Tok::Ident: {
        const VarRef* ref = symbols_.find(t.text);
        if (ref == nullptr) throw LineError{t.column, "undeclared identifier '" + t.text + "'"};
        return Expr::var(*ref);
      }
      case Tok::LParen: {
        Expr inner = parse_binary(0);
        if (peek().kind != Tok::RParen) throw LineError{peek().column, "expected ')'"};
        take();
        return inner;
      }
      case Tok::End:
        throw LineError{t.column, "unexpected end of expression"};
      default:
        throw LineError{t.column, "unexpected '" + t.text + "'"};
    }
  }

  const std::vector<Token>& tokens_;
  std::size_t pos_;
  const SymbolTable& symbols_;
};

struct NameDecl {
  std::string name;
  std::size_t line;
  std::size_t column;
};

struct Header {
  bool seen = false;
  std::size_t line = 0;
  std::vector<NameDecl> names;
};

struct UpdateLine {
  std::size_t line;
  std::vector<Token> tokens;
};

std::string_view strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  if (hash != std::string_view::npos) line = line.substr(0, hash);
  while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.remove_suffix(1);
  return line;
}

// Matches `keyword:` after leading whitespace; returns the offset just past
// the colon.
std::optional<std::size_t> header_keyword(std::string_view line, std::string_view keyword) {
  std::size_t i = 0;
  while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
  if (line.substr(i, keyword.size()) != keyword) return std::nullopt;
  i += keyword.size();
  while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
  if (i >= line.size() || line[i] != ':') return std::nullopt;
  return i + 1;
}

void read_header_names(std::string_view line, std::size_t start, std::size_t line_no, Header& header,
                       std::vector<Diagnostic>& diags) {
  std::size_t i = start;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    const std::string_view word = line.substr(i, j - i);
    bool valid = ident_start(word.front());
    for (char c : word) valid = valid && ident_char(c);
    if (!valid) diags.push_back({line_no, i + 1, "invalid identifier '" + std::string(word) + "'"});
    else header.names.push_back({std::string(word), line_no, i + 1});
    i = j;
  }
}

}  // namespace

Model parse_model(std::string_view text, const ParseOptions& options) {
  std::vector<Diagnostic> diags;
  Header states, inputs, outputs;
  std::vector<UpdateLine> update_lines;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = strip_comment(text.substr(pos, end - pos));
    ++line_no;
    pos = end + 1;

    bool blank = true;
    for (char c : line) blank = blank && std::isspace(static_cast<unsigned char>(c));
    if (blank) continue;

    bool handled = false;
    for (auto [keyword, header] : {std::pair<std::string_view, Header*>{"states", &states},
                                   std::pair<std::string_view, Header*>{"inputs", &inputs},
                                   std::pair<std::string_view, Header*>{"outputs", &outputs}}) {
      const auto start = header_keyword(line, keyword);
      if (!start) continue;
      handled = true;
      if (header->seen) {
        diags.push_back({line_no, 1, "duplicate '" + std::string(keyword) + ":' header"});
        break;
      }
      header->seen = true;
      header->line = line_no;
      read_header_names(line, *start, line_no, *header, diags);
      break;
    }
    if (handled) continue;

    try {
      update_lines.push_back({line_no, tokenize(line)});
    } catch (const LineError& e) {
      diags.push_back({line_no, e.column, e.message});
    }
  }

  SymbolTable symbols;
  std::vector<std::string> state_names, input_names;
  auto declare = [&](const NameDecl& d, VarRef ref, std::vector<std::string>& into) {
    if (symbols.find(d.name) != nullptr) {
      diags.push_back({d.line, d.column, "duplicate declaration of '" + d.name + "'"});
      return;
    }
    symbols.names.emplace(d.name, ref);
    into.push_back(d.name);
  };
  for (const NameDecl& d : states.names) declare(d, VarRef::state(state_names.size()), state_names);
  for (const NameDecl& d : inputs.names) declare(d, VarRef::input(input_names.size()), input_names);

  std::vector<std::size_t> output_indices;
  std::vector<bool> is_output(state_names.size(), false);
  for (const NameDecl& d : outputs.names) {
    const VarRef* ref = symbols.find(d.name);
    if (ref == nullptr) {
      diags.push_back({d.line, d.column, "undeclared identifier '" + d.name + "'"});
    } else if (ref->kind != VarKind::State) {
      diags.push_back({d.line, d.column, "output '" + d.name + "' is not a state"});
    } else if (is_output[ref->index]) {
      diags.push_back({d.line, d.column, "duplicate output '" + d.name + "'"});
    } else {
      is_output[ref->index] = true;
      output_indices.push_back(ref->index);
    }
  }
  std::sort(output_indices.begin(), output_indices.end());

  std::vector<std::optional<Expr>> updates(state_names.size());
  std::vector<std::size_t> update_line_of(state_names.size(), 0);
  std::vector<bool> attempted(state_names.size(), false);
  for (const UpdateLine& ul : update_lines) {
    const std::vector<Token>& toks = ul.tokens;
    try {
      if (toks[0].kind != Tok::Ident) throw LineError{toks[0].column, "expected '<name> <= <expr>'"};
      if (toks[1].kind != Tok::Arrow) throw LineError{toks[1].column, "expected '<='"};
      const VarRef* target = symbols.find(toks[0].text);
      if (target == nullptr) throw LineError{toks[0].column, "undeclared identifier '" + toks[0].text + "'"};
      if (target->kind != VarKind::State)
        throw LineError{toks[0].column, "'" + toks[0].text + "' is an input and cannot be updated"};
      if (updates[target->index] || attempted[target->index])
        throw LineError{toks[0].column, "duplicate update for '" + toks[0].text + "'"};
      attempted[target->index] = true;
      Expr e = ExprParser(toks, 2, symbols).parse();
      updates[target->index] = std::move(e);
      update_line_of[target->index] = ul.line;
    } catch (const LineError& e) {
      diags.push_back({ul.line, e.column, e.message});
    }
  }

  for (std::size_t i = 0; i < states.names.size() && i < updates.size(); ++i) {
    if (!attempted[i] && symbols.find(states.names[i].name)->index == i)
      diags.push_back({states.names[i].line, states.names[i].column,
                       "state '" + states.names[i].name + "' has no update"});
  }

  if (!diags.empty()) throw ParseError(std::move(diags));

  std::vector<Expr> exprs;
  exprs.reserve(updates.size());
  for (auto& u : updates) exprs.push_back(std::move(*u));
  Model raw(std::move(state_names), std::move(input_names), std::move(exprs), std::move(output_indices));
  try {
    return reduce_fictitious(raw, options.arity_cap);
  } catch (const ArityCapError& e) {
    const std::size_t fn = e.function_index().value_or(0);
    throw ParseError({{update_line_of[fn], 1, e.what()}});
  }
}

namespace {

int precedence(ExprKind k) {
  switch (k) {
    case ExprKind::Or: return 1;
    case ExprKind::Xor: return 2;
    case ExprKind::And: return 3;
    case ExprKind::Not: return 4;
    default: return 5;
  }
}

void format_into(const Expr& e, const Model& model, std::string& out) {
  switch (e.kind()) {
    case ExprKind::Const:
      out += e.value() ? '1' : '0';
      return;
    case ExprKind::State:
      out += model.state_name(e.index());
      return;
    case ExprKind::Input:
      out += model.input_name(e.index());
      return;
    case ExprKind::Not: {
      const Expr& c = e.children()[0];
      out += '!';
      const bool paren = precedence(c.kind()) < precedence(ExprKind::Not);
      if (paren) out += '(';
      format_into(c, model, out);
      if (paren) out += ')';
      return;
    }
    default:
      break;
  }
  const char* sep = e.kind() == ExprKind::And ? " & " : e.kind() == ExprKind::Xor ? " ^ " : " | ";
  bool first = true;
  for (const Expr& c : e.children()) {
    if (!first) out += sep;
    first = false;
    const bool paren = precedence(c.kind()) <= precedence(e.kind());
    if (paren) out += '(';
    format_into(c, model, out);
    if (paren) out += ')';
  }
}

void append_list(std::string& out, const char* header, const std::vector<std::string>& names) {
  out += header;
  for (const std::string& n : names) {
    out += ' ';
    out += n;
  }
  out += '\n';
}

}  // namespace

std::string format_expr(const Expr& e, const Model& model) {
  std::string out;
  format_into(e, model, out);
  return out;
}

std::string serialize_model(const Model& model) {
  std::string out;
  append_list(out, "states:", model.state_names());
  append_list(out, "inputs:", model.input_names());
  std::vector<std::string> outs;
  for (std::size_t j : model.outputs()) outs.push_back(model.state_name(j));
  append_list(out, "outputs:", outs);
  for (std::size_t i = 0; i < model.state_count(); ++i) {
    out += model.state_name(i);
    out += " <= ";
    format_into(model.update(i), model, out);
    out += '\n';
  }
  return out;
}

}  // namespace bcn
