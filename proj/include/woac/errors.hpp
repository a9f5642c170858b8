#pragma once

#include <stdexcept>
#include <string>

namespace woac {

/// Raised when a caller breaks an operation's precondition.
class ContractViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed or inconsistent configuration. `where` carries file/line
/// context when known.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what, std::string where = {})
      : std::runtime_error(where.empty() ? what : where + ": " + what),
        where_(std::move(where)) {}

  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

/// No alive node is left to take part in a round.
class SimulationTerminated : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace woac
