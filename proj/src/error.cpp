#include "bcn/error.hpp"

namespace bcn {

namespace {

std::string arity_message(std::optional<std::size_t> function_index, std::size_t arity, std::size_t cap) {
  std::string where = function_index ? "update of X" + std::to_string(*function_index + 1) : "expression";
  return where + " mentions " + std::to_string(arity) + " distinct variables; arity cap is " +
         std::to_string(cap);
}

std::string first_message(const std::vector<Diagnostic>& diagnostics) {
  if (diagnostics.empty()) return "parse error";
  std::string msg = diagnostics.front().to_string();
  if (diagnostics.size() > 1) msg += " (+" + std::to_string(diagnostics.size() - 1) + " more)";
  return msg;
}

}  // namespace

ArityCapError::ArityCapError(std::optional<std::size_t> function_index, std::size_t arity, std::size_t cap)
    : Error(arity_message(function_index, arity, cap)),
      function_index_(function_index),
      arity_(arity),
      cap_(cap) {}

std::string Diagnostic::to_string() const {
  return std::to_string(line) + ":" + std::to_string(column) + ": " + message;
}

ParseError::ParseError(std::vector<Diagnostic> diagnostics)
    : Error(first_message(diagnostics)), diagnostics_(std::move(diagnostics)) {}

TraceError::TraceError(std::size_t line, const std::string& message)
    : Error("trace line " + std::to_string(line) + ": " + message), line_(line) {}

HorizonError::HorizonError(std::size_t required, std::size_t provided)
    : Error("trace too short: observer needs " + std::to_string(required) + " output samples, got " +
            std::to_string(provided)),
      required_(required),
      provided_(provided) {}

}  // namespace bcn
