#pragma once
#include "dagw/algorithm.hpp"

namespace dagw {

// Truth values of the matching guards for one node under one observation.
struct MmMacros {
  bool wrongly_matched = false;
  bool matchable = false;
  bool i_pointed = false;
  bool else_pointed = false;
  bool unsatisfied = false;
};

// Macro evaluation for node x under an arbitrary observation vector. Reads
// stay within hop distance 3 of x.
MmMacros mm_macros_at(const Graph& g, std::span<const LocalState> obs, NodeId x);
// Convenience: macros for the view's reader.
MmMacros mm_macros(const Graph& g, const View& v);

// Maximal matching via proposals: an unmatched node with the highest id
// among the unsatisfied nodes in its 2-hop neighborhood proposes to an
// unmatched neighbor; a proposed-to node points back; a node whose partner
// went elsewhere withdraws. Guards read up to 3 hops. The priority and the
// else-pointed veto keep concurrent proposals from colliding.
class MaximalMatching : public Algorithm {
 public:
  AlgoKind kind() const override { return AlgoKind::Mm; }
  int read_radius() const override { return 3; }
  GlobalState default_init(const Graph& g) const override;
  bool impedensable(const Graph& g, const View& v) const override;
  std::vector<LocalState> actions(const Graph& g, const View& v) const override;
  LocalState deterministic_action(const Graph& g, const View& v) const override;
  ExtInt state_value(const Graph& g, NodeId i, const GlobalState& s) const override;
  bool optimal(const Graph& g, const GlobalState& s) const override;
  std::vector<LocalState> local_domain(const Graph& g, NodeId i) const override;
  void check_local(const Graph& g, NodeId i, const LocalState& ls) const override;
};

}  // namespace dagw
