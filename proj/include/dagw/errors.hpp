#pragma once
#include <stdexcept>

namespace dagw {

// Malformed input text (graph files, state files, graph specs).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid configuration (bad flags, disconnected shortest-path instance,
// degree cap exceeded, state that violates a local invariant, ...).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// State budget exhausted during exploration; partial results are discarded.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace dagw
