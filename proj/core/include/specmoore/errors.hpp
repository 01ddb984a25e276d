#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace specmoore {

// Every failure the library reports carries one of these kinds so callers
// (notably the CLI) can map errors to stable exit codes without string
// matching.
enum class ErrorKind {
  InvalidArgument,
  Overflow,
  NoSignChange,
  ConvergenceFailure,
  InvalidSpec,
  CrossCheckFailure,
  ThetaOutOfRange,
  NonPositiveDefect,
  NotInvertible,
  MalformedSpectrum,
  NegativeSquaredEigenvalue,
  NotBipartite,
  NotApplicable,
  NotConnected,
  NonRegular,
  TooLarge,
  UnknownName,
  ParseError,
  IoError,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

// Overflow-checked 64-bit arithmetic. The polynomial coefficient tables and
// walk-count matrices must never wrap silently.
inline std::int64_t checked_add(std::int64_t a, std::int64_t b,
                                const char* context) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    fail(ErrorKind::Overflow,
         std::string("64-bit overflow in ") + context);
  }
  return out;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b,
                                const char* context) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    fail(ErrorKind::Overflow,
         std::string("64-bit overflow in ") + context);
  }
  return out;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b,
                                const char* context) {
  std::int64_t out = 0;
  if (__builtin_sub_overflow(a, b, &out)) {
    fail(ErrorKind::Overflow,
         std::string("64-bit overflow in ") + context);
  }
  return out;
}

}  // namespace specmoore
