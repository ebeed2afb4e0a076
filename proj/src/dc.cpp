#include "dagw/dc.hpp"

#include <algorithm>

#include "dagw/errors.hpp"

namespace dagw {

namespace {

const DcState& own_state(const View& v) {
  return std::get<DcState>(v.observed[v.reader]);
}

bool valid_cliq(const Graph& g, NodeId i, const DcState& own) {
  return own.contains(i) && dc_is_clique(g, own.cliq);
}

// Maximum clique size within `cands`. Plain include/exclude recursion;
// candidate sets are bounded by the degree cap, so the worst case is small.
int max_clique_in(const Graph& g, std::vector<NodeId> cands) {
  if (cands.empty()) return 0;
  NodeId x = cands.back();
  cands.pop_back();
  std::vector<NodeId> keep;
  keep.reserve(cands.size());
  for (NodeId y : cands)
    if (g.adjacent(x, y)) keep.push_back(y);
  int with_x = 1 + max_clique_in(g, std::move(keep));
  int without_x = max_clique_in(g, std::move(cands));
  return std::max(with_x, without_x);
}

}  // namespace

bool dc_is_clique(const Graph& g, std::span<const NodeId> members) {
  for (size_t a = 0; a < members.size(); a++)
    for (size_t b = a + 1; b < members.size(); b++)
      if (!g.adjacent(members[a], members[b])) return false;
  return true;
}

std::vector<NodeId> dc_addable(const Graph& g, NodeId i, const DcState& own) {
  std::vector<NodeId> out;
  for (NodeId j : g.neighbors(i)) {
    if (own.contains(j)) continue;
    bool ok = true;
    for (NodeId k : own.cliq)
      if (k != j && !g.adjacent(j, k)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(j);
  }
  return out;
}

int dc_max_clique_containing(const Graph& g, NodeId i, const DcState& own,
                             int degree_cap) {
  if (g.degree(i) > degree_cap)
    throw ConfigError("degree " + std::to_string(g.degree(i)) + " of node " +
                      std::to_string(i + 1) + " exceeds the clique search cap (" +
                      std::to_string(degree_cap) + ")");
  return int(own.cliq.size()) + max_clique_in(g, dc_addable(g, i, own));
}

GlobalState DominantClique::default_init(const Graph& g) const {
  GlobalState s{AlgoKind::Dc, {}};
  for (NodeId i = 0; i < g.n(); i++) s.locals.emplace_back(DcState{{i}});
  return s;
}

bool DominantClique::impedensable(const Graph& g, const View& v) const {
  const DcState& own = own_state(v);
  if (!valid_cliq(g, v.reader, own)) return true;
  return !dc_addable(g, v.reader, own).empty();
}

std::vector<LocalState> DominantClique::actions(const Graph& g,
                                                const View& v) const {
  const DcState& own = own_state(v);
  if (!valid_cliq(g, v.reader, own)) return {DcState{{v.reader}}};
  std::vector<LocalState> out;
  for (NodeId j : dc_addable(g, v.reader, own)) {
    DcState next = own;
    next.cliq.insert(
        std::lower_bound(next.cliq.begin(), next.cliq.end(), j), j);
    out.emplace_back(std::move(next));
  }
  return out;
}

LocalState DominantClique::deterministic_action(const Graph& g,
                                                const View& v) const {
  const DcState& own = own_state(v);
  if (!valid_cliq(g, v.reader, own)) return DcState{{v.reader}};
  std::vector<NodeId> add = dc_addable(g, v.reader, own);
  NodeId pick = add.front();
  for (NodeId j : add)
    if (g.id(j) < g.id(pick)) pick = j;
  DcState next = own;
  next.cliq.insert(std::lower_bound(next.cliq.begin(), next.cliq.end(), pick),
                   pick);
  return next;
}

ExtInt DominantClique::state_value(const Graph& g, NodeId i,
                                   const GlobalState& s) const {
  const DcState& own = std::get<DcState>(s.locals[i]);
  if (!valid_cliq(g, i, own)) return ExtInt::of(g.degree(i) + 1);
  int c = dc_max_clique_containing(g, i, own, degree_cap_);
  return ExtInt::of(c - int(own.cliq.size()));
}

bool DominantClique::optimal(const Graph& g, const GlobalState& s) const {
  for (NodeId i = 0; i < g.n(); i++) {
    const DcState& own = std::get<DcState>(s.locals[i]);
    if (!valid_cliq(g, i, own)) return false;
    if (!dc_addable(g, i, own).empty()) return false;
  }
  return true;
}

std::vector<LocalState> DominantClique::local_domain(const Graph& g,
                                                     NodeId i) const {
  std::vector<NodeId> base = g.neighbors(i);
  base.insert(std::lower_bound(base.begin(), base.end(), i), i);
  if (int(base.size()) > 24)
    throw ConfigError("per-node domain too large to enumerate");
  std::vector<LocalState> out;
  out.reserve(size_t(1) << base.size());
  for (uint32_t mask = 0; mask < (uint32_t(1) << base.size()); mask++) {
    DcState st;
    for (size_t b = 0; b < base.size(); b++)
      if (mask & (uint32_t(1) << b)) st.cliq.push_back(base[b]);
    out.emplace_back(std::move(st));
  }
  return out;
}

void DominantClique::check_local(const Graph& g, NodeId i,
                                 const LocalState& ls) const {
  const auto* dc = std::get_if<DcState>(&ls);
  if (!dc) throw ConfigError("wrong local-state kind for the clique algorithm");
  NodeId prev = -1;
  for (NodeId v : dc->cliq) {
    if (v <= prev) throw ConfigError("clique set must be sorted and unique");
    if (v < 0 || v >= g.n()) throw ConfigError("clique member out of range");
    if (v != i && !g.adjacent(i, v))
      throw ConfigError("clique member " + std::to_string(v + 1) +
                        " is not adjacent to node " + std::to_string(i + 1));
    prev = v;
  }
}

}  // namespace dagw
