#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rrc {

enum class ErrorCode {
  InvalidArgument,
  ParseError,
  NotMPrimary,
  RingMismatch,
  Overflow,
  ZeroPolynomial,
  BoundTooLarge,
  GenericityFailure,
  NotSuperficial,
  ElementNotInIdeal,
  RMaxExceeded,
  ChainUnstable,
  IoError,
  Internal,
};

std::string_view error_code_name(ErrorCode code);

/// Every failure surfaced by the library is an `Error` carrying a typed code.
/// Parse errors additionally carry the byte offset (and line/column) of the
/// offending token.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Error(ErrorCode code, const std::string& message, std::size_t offset,
        std::size_t line, std::size_t column)
      : std::runtime_error(message),
        code_(code),
        offset_(offset),
        line_(line),
        column_(column) {}

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> offset() const noexcept { return offset_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> offset_;
  std::size_t line_ = 0;
  std::size_t column_ = 0;
};

}  // namespace rrc
