#ifndef MOPKIT_ERRORS_HPP
#define MOPKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mopkit {

enum class ErrorKind {
  Shape,
  SingularMatrix,
  SingularPivot,
  PoleOnSupport,
  DuplicatePoint,
  UnknownPreset,
  NonNormal,
  RequiresRankOne,
  EqualArguments,
  ChainDepthExceeded,
  NegativeComponent,
  EnumerationCapExceeded,
  InvalidArgument,
  IdentityMismatch,
  Parse,
};

const char* error_kind_name(ErrorKind kind);

class MopError : public std::runtime_error {
 public:
  MopError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public MopError {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : MopError(ErrorKind::Parse, location(line, column) + what), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string location(std::size_t line, std::size_t column) {
    if (line == 0) return {};
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": ";
  }
  std::size_t line_;
  std::size_t column_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& what) { throw MopError(kind, what); }

}  // namespace mopkit

#endif  // MOPKIT_ERRORS_HPP
