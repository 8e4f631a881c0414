#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace twopack {

/// Raised when a caller breaks an operation's precondition (inactive vertex,
/// out-of-range ID, a rule probed on a vertex of the wrong shape, ...).
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed graph input. `line()` is 1-based; 0 when no line applies.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// The brute-force oracle refuses graphs above its vertex cap.
class OracleLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace twopack

#define TWOPACK_REQUIRE(cond, msg)                 \
  do {                                             \
    if (!(cond)) throw ::twopack::ContractError(msg); \
  } while (false)
