#ifndef COXHOM_ERROR_HPP_
#define COXHOM_ERROR_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace coxhom {

enum class ErrorKind {
  DuplicateVertex,
  UnknownVertex,
  SelfLoop,
  ConflictingLabel,
  BadLabel,
  UnknownCatalogName,
  InvalidParameter,
  EmptyGraph,
  SyntaxError,
  OddBoundary,
  NotACycle,
  LengthMismatch,
  SameVertex,
  NonPositiveLength,
  InfiniteLabel,
  OrderViolation,
  InvalidSpec,
  Overflow,
};

inline std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DuplicateVertex: return "DuplicateVertex";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::ConflictingLabel: return "ConflictingLabel";
    case ErrorKind::BadLabel: return "BadLabel";
    case ErrorKind::UnknownCatalogName: return "UnknownCatalogName";
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    case ErrorKind::EmptyGraph: return "EmptyGraph";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::OddBoundary: return "OddBoundary";
    case ErrorKind::NotACycle: return "NotACycle";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::SameVertex: return "SameVertex";
    case ErrorKind::NonPositiveLength: return "NonPositiveLength";
    case ErrorKind::InfiniteLabel: return "InfiniteLabel";
    case ErrorKind::OrderViolation: return "OrderViolation";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::Overflow: return "Overflow";
  }
  return "Unknown";
}

/// The single exception type thrown by the library. `kind()` identifies the
/// failure; `line()` is set for errors raised while parsing a graph file.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string const& message,
        std::optional<std::size_t> line = std::nullopt)
      : std::runtime_error(format(kind, message, line)),
        kind_(kind),
        line_(line) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }
  [[nodiscard]] std::optional<std::size_t> line() const noexcept {
    return line_;
  }

 private:
  static std::string format(ErrorKind kind, std::string const& message,
                            std::optional<std::size_t> line) {
    std::string out(to_string(kind));
    if (line) {
      out += " (line " + std::to_string(*line) + ")";
    }
    out += ": ";
    out += message;
    return out;
  }

  ErrorKind kind_;
  std::optional<std::size_t> line_;
};

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) {
    throw Error(ErrorKind::Overflow, "integer overflow in addition");
  }
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw Error(ErrorKind::Overflow, "integer overflow in multiplication");
  }
  return r;
}

}  // namespace detail
}  // namespace coxhom

#endif  // COXHOM_ERROR_HPP_
