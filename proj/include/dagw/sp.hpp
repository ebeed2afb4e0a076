#pragma once
#include "dagw/algorithm.hpp"

namespace dagw {

// Single-destination shortest path. The destination pins itself to distance
// zero; every other node relaxes against its neighbors' advertised
// distances. Distances only ever decrease from the unknown-init state, and
// stale reads can only delay (never corrupt) progress, because every
// advertised value is the length of some real path.
//
// An instance is bound to one (graph, dest) pair: the exact distances used
// by state_value and optimal are computed once at construction.
class ShortestPath : public Algorithm {
 public:
  ShortestPath(const Graph& g, NodeId dest);

  NodeId dest() const { return dest_; }
  // Exact distance of every node to dest (finite: construction requires a
  // connected graph).
  const std::vector<int64_t>& exact_distances() const { return dist_; }

  AlgoKind kind() const override { return AlgoKind::Sp; }
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
  NodeId dest_;
  int n_;
  std::vector<int64_t> dist_;
};

inline ExtInt sp_dist(const SpState& s) {
  return s.dist == kInfDist ? ExtInt::infinity() : ExtInt::of(s.dist);
}

}  // namespace dagw
