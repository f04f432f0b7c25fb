#ifndef BCN_ERROR_HPP
#define BCN_ERROR_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bcn {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Structurally invalid model or a vector whose length does not match it.
class ModelError : public Error {
 public:
  using Error::Error;
};

/// An update mentions more distinct variables than the essentiality test
/// is allowed to enumerate.
class ArityCapError : public Error {
 public:
  ArityCapError(std::optional<std::size_t> function_index, std::size_t arity, std::size_t cap);

  std::optional<std::size_t> function_index() const noexcept { return function_index_; }
  std::size_t arity() const noexcept { return arity_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::optional<std::size_t> function_index_;
  std::size_t arity_;
  std::size_t cap_;
};

struct Diagnostic {
  std::size_t line = 0;    // 1-based
  std::size_t column = 0;  // 1-based
  std::string message;

  std::string to_string() const;
};

class ParseError : public Error {
 public:
  explicit ParseError(std::vector<Diagnostic> diagnostics);

  const std::vector<Diagnostic>& diagnostics() const noexcept { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

class TraceError : public Error {
 public:
  TraceError(std::size_t line, const std::string& message);

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Fewer output samples than the observer needs.
class HorizonError : public Error {
 public:
  HorizonError(std::size_t required, std::size_t provided);

  std::size_t required() const noexcept { return required_; }
  std::size_t provided() const noexcept { return provided_; }

 private:
  std::size_t required_;
  std::size_t provided_;
};

/// The exhaustive oracle refuses models above its configured size limits.
class OracleCapError : public Error {
 public:
  using Error::Error;
};

}  // namespace bcn

#endif  // BCN_ERROR_HPP
