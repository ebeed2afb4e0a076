#pragma once
#include <cstdint>
#include <string>
#include <string_view>

#include "dagw/algorithm.hpp"
#include "dagw/rng.hpp"
#include "dagw/trace.hpp"

namespace dagw {

enum class SchedulerKind { Central, Distributed, Synchronous };
enum class ChoicePolicy { Random, FixedOrder };
// How aggressively queued publications reach readers in the bounded-queue
// model: a random prefix per evaluation, everything, or nothing beyond the
// forced deliveries.
enum class DeliveryPolicy { Random, All, None };

std::string_view scheduler_name(SchedulerKind k);
std::string_view policy_name(ChoicePolicy p);
std::string_view delivery_name(DeliveryPolicy d);

struct AsyncModel {
  enum class Kind { Fresh, Amr, Aa };
  Kind kind = Kind::Fresh;
  int channel_bound = 1;  // Amr: max undelivered publications per channel
  int window = 3;         // Aa: observable suffix of the publication history
  DeliveryPolicy delivery = DeliveryPolicy::Random;

  static AsyncModel fresh() { return {}; }
  static AsyncModel amr(int bound, DeliveryPolicy d = DeliveryPolicy::Random) {
    return {Kind::Amr, bound, 3, d};
  }
  static AsyncModel aa(int window) { return {Kind::Aa, 1, window, DeliveryPolicy::Random}; }
  std::string str() const;
};

struct RunConfig {
  SchedulerKind scheduler = SchedulerKind::Central;
  ChoicePolicy policy = ChoicePolicy::Random;
  AsyncModel model;
  uint64_t seed = 1;
  int64_t max_moves = 100000;
  int64_t max_steps = 0;  // 0 = derived from max_moves
};

enum class RunVerdict { Converged, MoveBudget, StepBudget };
std::string_view verdict_name(RunVerdict v);

struct RunResult {
  RunVerdict verdict = RunVerdict::Converged;
  GlobalState final_state;
  Trace trace;
  int64_t steps = 0;
};

// Drives one execution. A step: the scheduler picks nodes, each picked node
// builds a view under the staleness model, evaluates its guard, and the
// enabled ones act (synchronous and distributed selections compute from the
// pre-step picture and apply jointly). Under the fresh model the central and
// distributed schedulers pick among enabled nodes only; under a staleness
// model enabledness is not knowable up front, so they pick among all nodes
// and a pick that finds its guard false is a recorded stutter.
class Runner {
 public:
  Runner(const Graph& g, const Algorithm& a, GlobalState init, RunConfig cfg);

  // Convergence is always judged on true states: no node enabled on a fresh
  // view.
  bool converged() const;
  // Executes one scheduler step; returns false (and does nothing) when
  // already converged.
  bool step();
  const GlobalState& state() const { return truth_; }
  const Trace& trace() const { return trace_; }
  Trace take_trace() { return std::move(trace_); }
  int64_t moves() const { return trace_.moves; }
  int64_t steps() const { return steps_; }

 private:
  struct Channel {
    NodeId src;
    size_t cursor;  // history prefix already delivered (>= 1: init value)
  };

  void build_view(NodeId reader, std::vector<LocalState>& scratch);
  void publish(NodeId mover);
  void record_eval(NodeId node, bool enabled);
  void note_round_progress(NodeId node);

  const Graph& g_;
  const Algorithm& algo_;
  RunConfig cfg_;
  GlobalState truth_;
  SplitMix64 rng_;
  Trace trace_;
  int64_t steps_ = 0;
  int64_t cur_step_ = 0;
  NodeId fixed_cursor_ = 0;
  // Full publication history per node (first entry = initial state); the
  // sources a reader may consult; per-reader delivery cursors into the
  // sources' histories. Views are sound by construction: a reader only ever
  // sees history prefixes, in publication order.
  std::vector<std::vector<LocalState>> history_;
  std::vector<std::vector<Channel>> in_;  // per reader, sources ascending
  std::vector<char> evaled_;
  int evaled_count_ = 0;
};

RunResult run(const Graph& g, const Algorithm& a, GlobalState init,
              const RunConfig& cfg);

}  // namespace dagw
