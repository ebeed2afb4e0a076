#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dagw/algorithm.hpp"
#include "dagw/executor.hpp"

namespace dagw {

// Effective state budget: the request when positive, else the DAGW_BUDGET
// environment variable, else 10^7 states.
int64_t state_budget(int64_t requested = 0);

struct ExploreOptions {
  int64_t budget = 0;               // 0 = state_budget(0)
  bool deterministic_only = false;  // one action per enabled node
};

// An explored transition system. Under the fresh model a state is a true
// global state; under a staleness model it is a global state plus channel
// contents, and `truth` holds the projection. `enc` is the canonical
// injective key either way; indices are discovery (BFS) order.
struct TransitionSystem {
  struct Edge {
    int from = 0;
    int to = 0;
    NodeId node = 0;   // the mover, or the source of a delivery
    bool move = true;  // false: delivery bookkeeping, no local change
  };

  int n_nodes = 0;
  std::vector<std::string> enc;
  std::unordered_map<std::string, int> index;
  std::vector<GlobalState> truth;
  std::vector<Edge> edges;
  std::vector<std::vector<int>> out;  // edge indices, by from-state
  std::vector<int> roots;
  std::vector<char> enabled;  // some node impedensable on fresh values
  std::vector<char> sink;     // out-degree 0
  std::vector<char> opt;      // optimal(truth)
  std::vector<ExtInt> rank;   // rank_of(truth); empty for bare fixtures

  int n_states() const { return int(enc.size()); }
  int find(const GlobalState& s) const;
  std::vector<int> sinks() const;
};

// Hand-built system for tests: opaque states, given edges and optimality.
TransitionSystem make_fixture(int n_states, int n_nodes,
                              const std::vector<std::pair<int, int>>& edges,
                              const std::vector<char>& opt);

// Breadth-first closure under one-move transitions on fresh values: for
// every reachable state, every impedensable node, every permitted action,
// one edge. Throws BudgetError past the state budget.
TransitionSystem explore(const Graph& g, const Algorithm& a,
                         const std::vector<GlobalState>& inits,
                         const ExploreOptions& opt = {});

// Every assignment from the per-node local domains, in odometer order (last
// node fastest). Throws BudgetError when the product exceeds the budget.
std::vector<GlobalState> all_inits(const Graph& g, const Algorithm& a,
                                   const ExploreOptions& opt = {});

// Closure of the extended system under a staleness model. For the bounded
// FIFO model, edges are single deliveries (one queued value becomes a
// reader's visible value) and moves evaluated on the visible values; a move
// publishes to every channel, forcing out the oldest entry of a full queue.
// For the window model, edges are moves evaluated under every combination
// of per-source window observations; there are no separate delivery edges.
TransitionSystem explore_extended(const Graph& g, const Algorithm& a,
                                  const std::vector<GlobalState>& inits,
                                  const AsyncModel& model,
                                  const ExploreOptions& opt = {});

// Cycle search by depth-first back-edge detection, cross-checked against an
// independent topological sort; the two must agree on every system.
struct CycleReport {
  bool acyclic = true;
  bool methods_agree = true;
  std::vector<int> cycle;  // closed walk (first == last) when cyclic
};
CycleReport find_cycle(const TransitionSystem& ts);

// Longest path counting move edges only; requires an acyclic system.
int64_t longest_moves(const TransitionSystem& ts);

// Memory-light sweep for large systems: depth-first scan that regenerates
// successors on demand and never materializes edges or decoded states.
struct ScanResult {
  int64_t states = 0;
  int64_t longest = 0;  // moves along the longest path
  bool acyclic = true;
  bool sinks_optimal = true;
  int64_t sink_count = 0;
  std::string witness;  // formatted offending state, when a check fails
};
ScanResult scan_longest(const Graph& g, const Algorithm& a,
                        const std::vector<GlobalState>& inits,
                        const ExploreOptions& opt = {});

// Guard/predicate agreement, checked exhaustively on the explored set:
//   covers:     suboptimal state => nonempty impedensable set
//   pinpoints:  impedensable (i, s) => no explored optimal state keeps i's
//               local value (the guard singles out nodes that must change)
//   silent:     optimal state => empty impedensable set
struct PairWitness {
  int state = -1;
  NodeId node = -1;
  int other = -1;  // the colliding optimal state, for pinpoints
};
struct DagInductionReport {
  bool covers = true;
  bool pinpoints = true;
  bool silent = true;
  PairWitness covers_w, pinpoints_w, silent_w;
  bool all() const { return covers && pinpoints && silent; }
};
DagInductionReport check_dag_inducing(const Graph& g, const Algorithm& a,
                                      const TransitionSystem& ts);

// Rank must strictly decrease across every move edge whose source rank is
// finite (infinite ranks carry no obligation).
struct RankDescentReport {
  bool holds = true;
  int bad_edge = -1;
  int64_t checked = 0;
};
RankDescentReport check_rank_descent(const TransitionSystem& ts);

// Global acyclicity plus: no path lets a node leave a local value and later
// return to it. A revisit carries the realizing path.
struct PartialOrderReport {
  bool acyclic = true;
  bool no_revisit = true;
  NodeId node = -1;       // the revisiting node
  std::vector<int> path;  // witness states: the cycle, or the revisit path
};
PartialOrderReport check_partial_order(const TransitionSystem& ts);

// Rank construction on an acyclic system whose sinks are all optimal:
// sinks get 0, every other state n + the maximum successor rank, so each
// node's induced state value is rank/n and every edge strictly descends.
// A suboptimal sink makes the construction inapplicable.
struct InducedOrder {
  bool applicable = true;
  int bad_sink = -1;
  std::vector<int64_t> rank;
  bool descends = true;
  int n_nodes = 0;
  Rational node_value(int state) const {
    return Rational(rank[state], n_nodes);
  }
};
InducedOrder induce_order(const TransitionSystem& ts);

// Longest move path against the applicable bounds: the per-algorithm move
// bound (2m for the clique rules, 2n for the matching rules), and the
// generic domain bound sum_i(|domain_i| - 1).
struct BoundsReport {
  int64_t longest = 0;
  std::optional<int64_t> algo_bound;
  int64_t generic_bound = 0;
  bool ok = true;
};
BoundsReport check_bounds(const Graph& g, const Algorithm& a,
                          const TransitionSystem& ts);

// Synchronous fresh run from the default init; returns the index of the
// round containing the last move (rounds to convergence).
int64_t measure_sync_rounds(const Graph& g, const Algorithm& a);

// Classification of what an exhaustive extended exploration found, for
// models where convergence is in doubt. Priority: a cycle beats a revisit
// beats a move-bound violation beats clean exhaustion. Any witness path is
// re-validated edge by edge against a fresh successor computation.
enum class ProbeOutcome { Cycle, Revisit, BoundExceeded, Exhausted };
std::string_view probe_outcome_name(ProbeOutcome o);
struct ProbeReport {
  ProbeOutcome outcome = ProbeOutcome::Exhausted;
  NodeId node = -1;        // Revisit: the revisiting node
  std::vector<int> path;   // witness states in ext
  int64_t longest = 0;     // longest move path found
  int64_t bound = 0;       // the move bound probed against
  int64_t states = 0;
  bool replay_ok = true;
};
ProbeReport probe_async(const Graph& g, const Algorithm& a,
                        const AsyncModel& model, const TransitionSystem& ext,
                        int64_t move_bound);

}  // namespace dagw
