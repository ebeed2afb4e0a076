#pragma once
// Brute-force reference implementations for cross-checking the library.
// Deliberately independent of the algorithm classes: straight-line code,
// exhaustive search, no shared helpers beyond the Graph accessors.
#include <algorithm>
#include <cstdint>
#include <queue>
#include <vector>

#include "dagw/ext_value.hpp"
#include "dagw/graph.hpp"
#include "dagw/state.hpp"

namespace oracle {

using dagw::ExtInt;
using dagw::Graph;
using dagw::NodeId;

// Single-destination shortest distances by n rounds of edge relaxation.
inline std::vector<ExtInt> distances(const Graph& g, NodeId dest) {
  std::vector<ExtInt> d(g.n(), ExtInt::infinity());
  d[dest] = ExtInt::of(0);
  for (int round = 0; round < g.n(); round++)
    for (NodeId u = 0; u < g.n(); u++)
      for (NodeId v : g.neighbors(u))
        if (!d[v].is_inf()) {
          ExtInt cand = ExtInt::of(d[v].value() + g.weight(u, v));
          if (cand < d[u]) d[u] = cand;
        }
  return d;
}

inline bool is_clique(const Graph& g, const std::vector<NodeId>& mem) {
  for (size_t a = 0; a < mem.size(); a++)
    for (size_t b = a + 1; b < mem.size(); b++)
      if (!g.adjacent(mem[a], mem[b])) return false;
  return true;
}

// A clique is dominant when no further node is adjacent to all its members.
inline bool is_dominant_clique(const Graph& g, const std::vector<NodeId>& mem) {
  if (!is_clique(g, mem)) return false;
  for (NodeId c = 0; c < g.n(); c++) {
    if (std::find(mem.begin(), mem.end(), c) != mem.end()) continue;
    bool all = true;
    for (NodeId x : mem) all = all && g.adjacent(c, x);
    if (all && !mem.empty()) return false;
  }
  return true;
}

// Every clique containing i, enumerated over subsets of i's neighborhood.
inline std::vector<std::vector<NodeId>> cliques_containing(const Graph& g,
                                                           NodeId i) {
  const std::vector<NodeId>& nb = g.neighbors(i);
  std::vector<std::vector<NodeId>> out;
  for (uint64_t mask = 0; mask < (uint64_t(1) << nb.size()); mask++) {
    std::vector<NodeId> mem = {i};
    for (size_t b = 0; b < nb.size(); b++)
      if (mask >> b & 1) mem.push_back(nb[b]);
    std::sort(mem.begin(), mem.end());
    if (is_clique(g, mem)) out.push_back(mem);
  }
  return out;
}

// Does the match-pointer vector encode a maximal matching?
inline bool is_maximal_matching(const Graph& g,
                                const std::vector<NodeId>& match) {
  for (NodeId i = 0; i < g.n(); i++) {
    if (match[i] == dagw::kTop) continue;
    if (match[i] < 0 || match[i] >= g.n()) return false;
    if (!g.adjacent(i, match[i])) return false;
    if (match[match[i]] != i) return false;  // pointer must be mutual
  }
  for (NodeId u = 0; u < g.n(); u++)
    for (NodeId v : g.neighbors(u))
      if (match[u] == dagw::kTop && match[v] == dagw::kTop) return false;
  return true;
}

inline std::vector<NodeId> hop_ball(const Graph& g, NodeId i, int radius) {
  std::vector<int> dist(g.n(), -1);
  dist[i] = 0;
  std::queue<NodeId> q;
  q.push(i);
  while (!q.empty()) {
    NodeId u = q.front();
    q.pop();
    if (dist[u] == radius) continue;
    for (NodeId v : g.neighbors(u))
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        q.push(v);
      }
  }
  std::vector<NodeId> out;
  for (NodeId v = 0; v < g.n(); v++)
    if (v != i && dist[v] > 0) out.push_back(v);
  return out;
}

}  // namespace oracle
