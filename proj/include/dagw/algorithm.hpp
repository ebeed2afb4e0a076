#pragma once
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "dagw/ext_value.hpp"
#include "dagw/graph.hpp"
#include "dagw/state.hpp"

namespace dagw {

// What one node sees when it evaluates its guards. observed has one entry
// per node; observed[reader] is always the reader's own current state.
// Entries beyond the algorithm's read radius carry arbitrary values and an
// algorithm must not let them influence its verdicts (the test suite
// scrambles them to enforce this).
struct View {
  NodeId reader = 0;
  std::span<const LocalState> observed;
};

// A guarded-command algorithm: a guard ("is this node obligated to act?"),
// the set of permitted actions, a measure used for progress arguments, and
// the target predicate. All operations are pure.
class Algorithm {
 public:
  virtual ~Algorithm() = default;
  virtual AlgoKind kind() const = 0;
  // How many hops of neighbor state a guard evaluation may inspect.
  virtual int read_radius() const = 0;
  virtual GlobalState default_init(const Graph& g) const = 0;
  // The guard: true when the reader must eventually act.
  virtual bool impedensable(const Graph& g, const View& v) const = 0;
  // All permitted new local states for the reader; pre: impedensable.
  virtual std::vector<LocalState> actions(const Graph& g, const View& v) const = 0;
  // The single action a deterministic run takes (smallest-id candidate).
  virtual LocalState deterministic_action(const Graph& g, const View& v) const = 0;
  // Per-node progress measure, evaluated on true (fresh) states.
  virtual ExtInt state_value(const Graph& g, NodeId i, const GlobalState& s) const = 0;
  // The target predicate on global states.
  virtual bool optimal(const Graph& g, const GlobalState& s) const = 0;
  // Full per-node value domain (drives exhaustive-init sweeps and the
  // generic move bound).
  virtual std::vector<LocalState> local_domain(const Graph& g, NodeId i) const = 0;
  // Throws ConfigError when the value violates the node's local invariant.
  virtual void check_local(const Graph& g, NodeId i, const LocalState& ls) const = 0;
};

// Sum of per-node state values; infinity is absorbing.
ExtInt rank_of(const Graph& g, const Algorithm& a, const GlobalState& s);

// Returns s with component i replaced by nl (validated), everything else
// untouched.
GlobalState apply_move(const Graph& g, const Algorithm& a, const GlobalState& s,
                       NodeId i, const LocalState& nl);

// dest is required for AlgoKind::Sp and rejected otherwise.
std::unique_ptr<Algorithm> make_algorithm(AlgoKind kind, const Graph& g,
                                          std::optional<NodeId> dest = std::nullopt,
                                          int dc_degree_cap = 16);

}  // namespace dagw
