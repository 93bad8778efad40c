#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace poslat {

enum class ErrorCode {
  Index,
  Cycle,
  Capacity,
  NotALattice,
  NotDistributive,
  SizeMismatch,
  TooLarge,
  NotADownset,
  Parse,
  DuplicateLabel,
  UnknownLabel,
  InvalidArgument,
  Internal,
};

std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

/// An error tied to a position in a text input (1-based line and column).
class InputError : public Error {
public:
  InputError(ErrorCode code, const std::string& what, std::size_t line, std::size_t column)
      : Error(code, what), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace poslat
