#pragma once
#include <span>

#include "dagw/algorithm.hpp"

namespace dagw {

bool dc_is_clique(const Graph& g, std::span<const NodeId> members);
// Neighbors of i outside cliq that are adjacent to every cliq member.
std::vector<NodeId> dc_addable(const Graph& g, NodeId i, const DcState& own);
// Size of a maximum clique of g that contains all of cliq (which must be a
// clique containing i). Exhaustive branch-and-bound over the common
// neighborhood; degree_cap guards the search.
int dc_max_clique_containing(const Graph& g, NodeId i, const DcState& own,
                             int degree_cap);

// Dominant clique: every node grows a clique around itself until no common
// neighbor is left; an invalid clique collapses back to {i}. Guards and
// actions read only the node's own state plus the static topology, so the
// algorithm is insensitive to stale neighbor values.
class DominantClique : public Algorithm {
 public:
  explicit DominantClique(int degree_cap = 16) : degree_cap_(degree_cap) {}

  AlgoKind kind() const override { return AlgoKind::Dc; }
  int read_radius() const override { return 1; }
  GlobalState default_init(const Graph& g) const override;
  bool impedensable(const Graph& g, const View& v) const override;
  std::vector<LocalState> actions(const Graph& g, const View& v) const override;
  LocalState deterministic_action(const Graph& g, const View& v) const override;
  ExtInt state_value(const Graph& g, NodeId i, const GlobalState& s) const override;
  bool optimal(const Graph& g, const GlobalState& s) const override;
  std::vector<LocalState> local_domain(const Graph& g, NodeId i) const override;
  void check_local(const Graph& g, NodeId i, const LocalState& ls) const override;

 private:
  int degree_cap_;
};

}  // namespace dagw
