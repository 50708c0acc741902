#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ffiter {

enum class error_kind {
  out_of_range,
  length_mismatch,
  not_injective,
  x_out_of_range,
  parse_error,
  bad_magic,
  invariant_violation,
  io_error,
};

constexpr const char* to_string(error_kind kind) noexcept {
  switch (kind) {
    case error_kind::out_of_range: return "OutOfRange";
    case error_kind::length_mismatch: return "LengthMismatch";
    case error_kind::not_injective: return "NotInjective";
    case error_kind::x_out_of_range: return "XOutOfRange";
    case error_kind::parse_error: return "ParseError";
    case error_kind::bad_magic: return "BadMagic";
    case error_kind::invariant_violation: return "InvariantViolation";
    case error_kind::io_error: return "IoError";
  }
  return "Unknown";
}

/// Base of every exception thrown by the library. `kind()` is stable and is
/// what the CLI prints and maps to an exit status.
class error : public std::runtime_error {
 public:
  error(error_kind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  error_kind kind() const noexcept { return kind_; }

 private:
  error_kind kind_;
};

/// A table entry outside [0, n). Reports the first offending index.
class out_of_range_error : public error {
 public:
  out_of_range_error(std::size_t index, std::int64_t value)
      : error(error_kind::out_of_range,
              "entry " + std::to_string(index) + " has value " + std::to_string(value)),
        index_(index),
        value_(value) {}

  std::size_t index() const noexcept { return index_; }
  std::int64_t value() const noexcept { return value_; }

 private:
  std::size_t index_;
  std::int64_t value_;
};

class length_mismatch_error : public error {
 public:
  length_mismatch_error(std::size_t expected, std::size_t actual)
      : error(error_kind::length_mismatch,
              "expected " + std::to_string(expected) + " entries, got " + std::to_string(actual)),
        expected_(expected),
        actual_(actual) {}

  std::size_t expected() const noexcept { return expected_; }
  std::size_t actual() const noexcept { return actual_; }

 private:
  std::size_t expected_;
  std::size_t actual_;
};

/// `value` is the image of both `first` and `second` (first < second).
class not_injective_error : public error {
 public:
  not_injective_error(std::uint64_t value, std::uint64_t first, std::uint64_t second)
      : error(error_kind::not_injective,
              "value " + std::to_string(value) + " is hit by " + std::to_string(first) + " and " +
                  std::to_string(second)),
        value_(value),
        first_(first),
        second_(second) {}

  std::uint64_t value() const noexcept { return value_; }
  std::uint64_t first() const noexcept { return first_; }
  std::uint64_t second() const noexcept { return second_; }

 private:
  std::uint64_t value_;
  std::uint64_t first_;
  std::uint64_t second_;
};

class x_out_of_range_error : public error {
 public:
  x_out_of_range_error(std::uint64_t x, std::uint64_t n)
      : error(error_kind::x_out_of_range,
              "point " + std::to_string(x) + " is not in [0, " + std::to_string(n) + ")") {}
};

class parse_error : public error {
 public:
  parse_error(std::size_t line, const std::string& token)
      : error(error_kind::parse_error,
              "line " + std::to_string(line) + ": unexpected token '" + token + "'"),
        line_(line),
        token_(token) {}

  std::size_t line() const noexcept { return line_; }
  const std::string& token() const noexcept { return token_; }

 private:
  std::size_t line_;
  std::string token_;
};

class bad_magic_error : public error {
 public:
  explicit bad_magic_error(const std::string& header)
      : error(error_kind::bad_magic, "unrecognized header '" + header + "'") {}
};

class invariant_violation : public error {
 public:
  explicit invariant_violation(const std::string& invariant)
      : error(error_kind::invariant_violation, invariant), invariant_(invariant) {}

  const std::string& invariant() const noexcept { return invariant_; }

 private:
  std::string invariant_;
};

class io_error : public error {
 public:
  explicit io_error(const std::string& what) : error(error_kind::io_error, what) {}
};

}  // namespace ffiter
