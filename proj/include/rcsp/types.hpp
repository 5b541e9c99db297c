#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rcsp {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
using ResourceId = std::uint32_t;
using JobId = std::uint32_t;

/// Interval resource accumulation, in integer units.
using Accum = std::int64_t;

inline constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();
inline constexpr JobId kNoJob = std::numeric_limits<JobId>::max();

enum class Direction : std::uint8_t { forward, backward };

/// Fixed-precision decimal cost with four fractional digits. Comparison is
/// exact; there is no floating-point arithmetic on costs.
class Cost {
 public:
  static constexpr std::int64_t kScale = 10000;

  constexpr Cost() = default;
  static constexpr Cost from_ticks(std::int64_t ticks) {
    Cost c;
    c.ticks_ = ticks;
    return c;
  }
  static constexpr Cost units(std::int64_t whole) { return from_ticks(whole * kScale); }

  /// Parses "12", "-3.25", "0.0001". Throws std::invalid_argument on bad input
  /// or more than four fractional digits.
  static Cost parse(std::string_view text);

  constexpr std::int64_t ticks() const { return ticks_; }
  double to_double() const { return static_cast<double>(ticks_) / kScale; }
  /// Canonical decimal form: no trailing fractional zeros, no '+' sign.
  std::string to_string() const;

  constexpr Cost operator+(Cost o) const { return from_ticks(ticks_ + o.ticks_); }
  constexpr Cost operator-(Cost o) const { return from_ticks(ticks_ - o.ticks_); }
  constexpr Cost& operator+=(Cost o) {
    ticks_ += o.ticks_;
    return *this;
  }
  constexpr auto operator<=>(const Cost&) const = default;

 private:
  std::int64_t ticks_ = 0;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// An instance violates a model invariant.
class ValidationError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when the solver detects a broken internal contract (routing error,
/// double finish, replay mismatch). Always a bug.
class InternalError : public std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace rcsp
