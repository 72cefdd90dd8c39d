#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace crlab {

enum class ErrorCode {
  invalid_argument,
  parse,
  unknown_variable,
  validation,
  resource_limit,
  internal,
  io,
};

// Base of every exception thrown by the core library.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(ErrorCode::parse,
              message + " at column " + std::to_string(position + 1)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class UnknownVariableError : public Error {
 public:
  explicit UnknownVariableError(const std::string& name)
      : Error(ErrorCode::unknown_variable, "unknown variable '" + name + "'") {}
};

// Gröbner or other bounded search ran out of budget; the answer is Unknown.
class ResourceLimitError : public Error {
 public:
  explicit ResourceLimitError(const std::string& what)
      : Error(ErrorCode::resource_limit, what) {}
};

class ValidationError : public Error {
 public:
  ValidationError(std::string kind, const std::string& what)
      : Error(ErrorCode::validation, kind + ": " + what), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

inline void internal_check(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::internal, what);
}

}  // namespace crlab
