#pragma once
#include <cstdint>
#include <vector>

#include "dagw/state.hpp"

namespace dagw {

// One recorded simulation event. A single flat struct keeps serialization
// trivial; unused fields stay at their defaults.
struct TraceEvent {
  enum class Kind : uint8_t { Eval, Move, Deliver, Round };
  Kind kind = Kind::Eval;
  int64_t step = 0;
  NodeId node = 0;       // Eval / Move: acting node
  bool enabled = false;  // Eval verdict
  LocalState pre, post;  // Move
  ExtInt rank_after;     // Move: global rank right after the move
  NodeId src = 0, dst = 0;  // Deliver: source -> reader
  LocalState value;         // Deliver: the observed/delivered value
  int64_t round = 0;        // Round: 1-based boundary index
};

struct Trace {
  std::vector<TraceEvent> events;
  int64_t moves = 0;
  int64_t rounds = 0;  // completed round boundaries
  // Index of the round in which the last move happened (0 when no moves);
  // this is the "rounds to convergence" measurement.
  int64_t last_move_round = 0;
};

}  // namespace dagw
