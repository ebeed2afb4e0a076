#pragma once
#include <string>

#include "dagw/checker.hpp"

namespace dagw {

// Graphviz form of an explored system: states labeled with their decoded
// form and rank, sinks double-circled, move edges labeled with the mover
// (1-based), delivery edges dashed. Output is deterministic.
std::string to_dot(const TransitionSystem& ts, const std::string& title = "");

}  // namespace dagw
