#include "dagw/mm.hpp"

#include "dagw/errors.hpp"

namespace dagw {

namespace {

NodeId match_of(std::span<const LocalState> obs, NodeId x) {
  return std::get<MmState>(obs[x]).match;
}

bool unsat_at(const Graph& g, std::span<const LocalState> obs, NodeId x) {
  MmMacros m = mm_macros_at(g, obs, x);
  return m.unsatisfied;
}

}  // namespace

MmMacros mm_macros_at(const Graph& g, std::span<const LocalState> obs,
                      NodeId x) {
  MmMacros m;
  NodeId mx = match_of(obs, x);
  if (mx != kTop) {
    NodeId back = match_of(obs, mx);
    m.wrongly_matched = back != x && back != kTop;
  } else {
    for (NodeId j : g.neighbors(x)) {
      NodeId mj = match_of(obs, j);
      if (mj == kTop) m.matchable = true;
      if (mj == x) m.i_pointed = true;
    }
  }
  // Somebody within two hops is proposing to a still-unmatched node.
  for (NodeId j : g.neighbors2(x)) {
    NodeId mj = match_of(obs, j);
    if (mj != kTop && match_of(obs, mj) == kTop) {
      m.else_pointed = true;
      break;
    }
  }
  m.unsatisfied = m.wrongly_matched || m.matchable;
  return m;
}

MmMacros mm_macros(const Graph& g, const View& v) {
  return mm_macros_at(g, v.observed, v.reader);
}

GlobalState MaximalMatching::default_init(const Graph& g) const {
  GlobalState s{AlgoKind::Mm, {}};
  s.locals.assign(g.n(), MmState{});
  return s;
}

bool MaximalMatching::impedensable(const Graph& g, const View& v) const {
  MmMacros m = mm_macros(g, v);
  if (m.i_pointed) return true;
  if (m.else_pointed || !m.unsatisfied) return false;
  for (NodeId j : g.neighbors2(v.reader))
    if (g.id(v.reader) <= g.id(j) && unsat_at(g, v.observed, j)) return false;
  return true;
}

std::vector<LocalState> MaximalMatching::actions(const Graph& g,
                                                 const View& v) const {
  MmMacros m = mm_macros(g, v);
  std::vector<LocalState> out;
  if (m.i_pointed) {
    for (NodeId j : g.neighbors(v.reader))
      if (match_of(v.observed, j) == v.reader) out.emplace_back(MmState{j});
    return out;
  }
  if (m.wrongly_matched) return {MmState{kTop}};
  for (NodeId j : g.neighbors(v.reader))
    if (match_of(v.observed, j) == kTop) out.emplace_back(MmState{j});
  return out;
}

LocalState MaximalMatching::deterministic_action(const Graph& g,
                                                 const View& v) const {
  std::vector<LocalState> all = actions(g, v);
  const MmState* pick = &std::get<MmState>(all.front());
  for (const LocalState& ls : all) {
    const MmState& c = std::get<MmState>(ls);
    if (c.match != kTop &&
        (pick->match == kTop || g.id(c.match) < g.id(pick->match)))
      pick = &c;
  }
  return *pick;
}

ExtInt MaximalMatching::state_value(const Graph& g, NodeId i,
                                    const GlobalState& s) const {
  MmMacros m = mm_macros_at(g, s.locals, i);
  if (m.wrongly_matched) return ExtInt::of(3);
  if (m.matchable && !m.i_pointed) return ExtInt::of(2);
  if (m.i_pointed) return ExtInt::of(1);
  return ExtInt::of(0);
}

bool MaximalMatching::optimal(const Graph& g, const GlobalState& s) const {
  for (NodeId i = 0; i < g.n(); i++) {
    NodeId mi = match_of(s.locals, i);
    if (mi != kTop) {
      if (match_of(s.locals, mi) != i) return false;
    } else {
      for (NodeId j : g.neighbors(i))
        if (match_of(s.locals, j) == kTop) return false;
    }
  }
  return true;
}

std::vector<LocalState> MaximalMatching::local_domain(const Graph& g,
                                                      NodeId i) const {
  std::vector<LocalState> out{MmState{kTop}};
  for (NodeId j : g.neighbors(i)) out.emplace_back(MmState{j});
  return out;
}

void MaximalMatching::check_local(const Graph& g, NodeId i,
                                  const LocalState& ls) const {
  const auto* mm = std::get_if<MmState>(&ls);
  if (!mm) throw ConfigError("wrong local-state kind for the matching algorithm");
  if (mm->match != kTop && !g.adjacent(i, mm->match))
    throw ConfigError("match pointer must be a neighbor or T");
}

}  // namespace dagw
