#pragma once
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dagw/ext_value.hpp"

namespace dagw {

using NodeId = int32_t;
// Sentinel for the "points at nobody" value of parent/match pointers.
inline constexpr NodeId kTop = -1;

struct EdgeSpec {
  NodeId u = 0;
  NodeId v = 0;
  int64_t w = 1;
};

// Undirected, positively weighted graph with stable numeric per-node ids.
// Immutable after construction. Node indices are 0-based in code and 1-based
// in files and human-readable output. Ids default to the node index and only
// matter for the matching algorithm's priority tie-breaks.
class Graph {
 public:
  Graph(int n, std::vector<EdgeSpec> edges, std::string name = "",
        std::vector<int64_t> ids = {}, std::optional<NodeId> dest = {});

  int n() const { return n_; }
  int m() const { return m_; }
  const std::string& name() const { return name_; }
  std::optional<NodeId> dest() const { return dest_; }

  const std::vector<NodeId>& neighbors(NodeId i) const { return adj_[i]; }
  // Nodes at hop distance 1 or 2 from i, ascending, i excluded.
  const std::vector<NodeId>& neighbors2(NodeId i) const { return adj2_[i]; }
  bool adjacent(NodeId u, NodeId v) const { return mat_[size_t(u) * n_ + v]; }
  int64_t weight(NodeId u, NodeId v) const;  // edge must exist
  int64_t max_weight() const { return max_w_; }
  int degree(NodeId i) const { return int(adj_[i].size()); }
  int max_degree() const;
  int64_t id(NodeId i) const { return ids_[i]; }

  bool connected() const;
  // Nodes within hop distance x of i (1 <= x), ascending, i excluded.
  std::vector<NodeId> within(NodeId i, int x) const;
  std::vector<ExtInt> distances_from(NodeId src) const;  // Dijkstra
  ExtInt distance(NodeId u, NodeId v) const;
  ExtInt hop_diameter() const;       // infinity when disconnected
  ExtInt weighted_diameter() const;  // infinity when disconnected

  // Canonical text form: "n" line, non-default "id" lines, "e" lines sorted
  // ascending with weights printed only when != 1, then "dest" if set.
  std::string to_file() const;

  static Graph parse(std::string_view text, std::string name = "");
  // path<N> | star<N> | clique<N> | gnp (n, seed, edge probability 1/2).
  static Graph generate(std::string_view family, int n, uint64_t seed = 0);
  // Built-in alias (fig1, fig3, fig4, path<N>, star<N>, clique<N>,
  // gnp<N>-<SEED>); throws ParseError for anything else.
  static Graph from_alias(std::string_view alias);

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<NodeId>> adj_;
  std::vector<std::vector<NodeId>> adj2_;
  std::vector<char> mat_;
  std::map<std::pair<NodeId, NodeId>, int64_t> w_;  // key u < v
  std::vector<int64_t> ids_;
  int64_t max_w_ = 1;
  std::string name_;
  std::optional<NodeId> dest_;
};

}  // namespace dagw
