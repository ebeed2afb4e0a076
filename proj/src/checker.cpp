#include "dagw/checker.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <set>
#include <tuple>
#include <unordered_set>

#include "dagw/errors.hpp"

namespace dagw {

int64_t state_budget(int64_t requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("DAGW_BUDGET")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (!end || *end != '\0' || v <= 0)
      throw ConfigError("DAGW_BUDGET must be a positive integer");
    return v;
  }
  return 10'000'000;
}

int TransitionSystem::find(const GlobalState& s) const {
  auto it = index.find(encode_global(s));
  return it == index.end() ? -1 : it->second;
}

std::vector<int> TransitionSystem::sinks() const {
  std::vector<int> r;
  for (int i = 0; i < n_states(); i++)
    if (sink[i]) r.push_back(i);
  return r;
}

TransitionSystem make_fixture(int n_states, int n_nodes,
                              const std::vector<std::pair<int, int>>& edges,
                              const std::vector<char>& opt) {
  TransitionSystem ts;
  ts.n_nodes = n_nodes;
  ts.opt = opt;
  ts.opt.resize(n_states, 0);
  for (int i = 0; i < n_states; i++) {
    ts.enc.push_back("#" + std::to_string(i));
    ts.index.emplace(ts.enc.back(), i);
  }
  ts.out.assign(n_states, {});
  for (auto [f, t] : edges) {
    ts.out[f].push_back(int(ts.edges.size()));
    ts.edges.push_back({f, t, 0, true});
  }
  ts.roots = {0};
  ts.sink.assign(n_states, 0);
  ts.enabled.assign(n_states, 0);
  for (int i = 0; i < n_states; i++) {
    ts.sink[i] = ts.out[i].empty();
    ts.enabled[i] = !ts.sink[i];
  }
  return ts;
}

namespace {

void check_init(const Graph& g, const Algorithm& a, const GlobalState& init) {
  if (init.kind != a.kind())
    throw ConfigError("initial state kind does not match the algorithm");
  if (int(init.locals.size()) != g.n())
    throw ConfigError("initial state length does not match the graph");
  for (NodeId i = 0; i < g.n(); i++) a.check_local(g, i, init.locals[i]);
}

std::vector<LocalState> permitted(const Graph& g, const Algorithm& a,
                                  const View& v, bool det_only) {
  if (det_only) return {a.deterministic_action(g, v)};
  return a.actions(g, v);
}

// Shared tail: out-edge lists, sink flags, optimality, ranks, fresh
// enabledness of the (projected) truth.
void finalize(TransitionSystem& ts, const Graph& g, const Algorithm& a) {
  int ns = ts.n_states();
  ts.out.assign(ns, {});
  for (int e = 0; e < int(ts.edges.size()); e++)
    ts.out[ts.edges[e].from].push_back(e);
  ts.sink.assign(ns, 0);
  ts.opt.assign(ns, 0);
  ts.enabled.assign(ns, 0);
  ts.rank.assign(ns, ExtInt());
  for (int s = 0; s < ns; s++) {
    ts.sink[s] = ts.out[s].empty();
    ts.opt[s] = a.optimal(g, ts.truth[s]) ? 1 : 0;
    ts.rank[s] = rank_of(g, a, ts.truth[s]);
    for (NodeId i = 0; i < g.n() && !ts.enabled[s]; i++)
      if (a.impedensable(g, View{i, ts.truth[s].locals})) ts.enabled[s] = 1;
  }
}

}  // namespace

TransitionSystem explore(const Graph& g, const Algorithm& a,
                         const std::vector<GlobalState>& inits,
                         const ExploreOptions& opt) {
  int64_t budget = state_budget(opt.budget);
  TransitionSystem ts;
  ts.n_nodes = g.n();
  auto add_state = [&](const GlobalState& s) {
    std::string key = encode_global(s);
    auto it = ts.index.find(key);
    if (it != ts.index.end()) return it->second;
    if (int64_t(ts.enc.size()) >= budget)
      throw BudgetError("state budget exceeded (" + std::to_string(budget) +
                        " states); raise DAGW_BUDGET to go further");
    int id = ts.n_states();
    ts.enc.push_back(key);
    ts.index.emplace(std::move(key), id);
    ts.truth.push_back(s);
    return id;
  };
  std::unordered_set<int> root_seen;
  for (const GlobalState& init : inits) {
    check_init(g, a, init);
    int id = add_state(init);
    if (root_seen.insert(id).second) ts.roots.push_back(id);
  }
  for (int cur = 0; cur < ts.n_states(); cur++) {
    const GlobalState s = ts.truth[cur];
    for (NodeId i = 0; i < g.n(); i++) {
      View v{i, s.locals};
      if (!a.impedensable(g, v)) continue;
      for (const LocalState& nl : permitted(g, a, v, opt.deterministic_only)) {
        int to = add_state(apply_move(g, a, s, i, nl));
        ts.edges.push_back({cur, to, i, true});
      }
    }
  }
  finalize(ts, g, a);
  return ts;
}

std::vector<GlobalState> all_inits(const Graph& g, const Algorithm& a,
                                   const ExploreOptions& opt) {
  int64_t budget = state_budget(opt.budget);
  std::vector<std::vector<LocalState>> dom(g.n());
  __int128 prod = 1;
  for (NodeId i = 0; i < g.n(); i++) {
    dom[i] = a.local_domain(g, i);
    prod *= __int128(dom[i].size());
    if (prod > budget)
      throw BudgetError("initial-state product exceeds the budget of " +
                        std::to_string(budget));
  }
  std::vector<GlobalState> out;
  out.reserve(size_t(prod));
  std::vector<size_t> idx(g.n(), 0);
  while (true) {
    GlobalState s;
    s.kind = a.kind();
    for (NodeId i = 0; i < g.n(); i++) s.locals.push_back(dom[i][idx[i]]);
    out.push_back(std::move(s));
    int k = g.n() - 1;
    while (k >= 0) {
      if (++idx[k] < dom[k].size()) break;
      idx[k--] = 0;
    }
    if (k < 0) break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Extended states: a true global state plus what each reader may still see.

namespace {

struct ExtChan {
  LocalState last;                // the value currently visible to the reader
  std::vector<LocalState> queue;  // undelivered publications, oldest first
};

struct ExtState {
  GlobalState truth;
  std::vector<std::vector<ExtChan>> chan;   // FIFO model, chan[r][k]
  std::vector<std::vector<LocalState>> hist;  // window model, oldest first
};

struct ExtLayout {
  AlgoKind kind = AlgoKind::Dc;
  bool wide = false;
  int n = 0;
  std::vector<std::vector<NodeId>> sources;  // per reader, ascending
};

ExtLayout make_layout(const Graph& g, const Algorithm& a) {
  ExtLayout L;
  L.kind = a.kind();
  L.n = g.n();
  L.wide = g.n() > 254;
  L.sources.resize(g.n());
  for (NodeId i = 0; i < g.n(); i++) L.sources[i] = g.within(i, a.read_radius());
  return L;
}

ExtState initial_ext(const ExtLayout& L, const AsyncModel& m,
                     const GlobalState& init) {
  ExtState st;
  st.truth = init;
  if (m.kind == AsyncModel::Kind::Amr) {
    st.chan.resize(L.n);
    for (int r = 0; r < L.n; r++)
      for (NodeId src : L.sources[r]) st.chan[r].push_back({init.locals[src], {}});
  } else {
    st.hist.resize(L.n);
    for (int i = 0; i < L.n; i++) st.hist[i] = {init.locals[i]};
  }
  return st;
}

std::string encode_ext(const ExtLayout& L, const AsyncModel& m,
                       const ExtState& st) {
  std::string buf = encode_global(st.truth);
  if (m.kind == AsyncModel::Kind::Amr) {
    for (int r = 0; r < L.n; r++)
      for (const ExtChan& ch : st.chan[r]) {
        encode_local(buf, ch.last, L.wide);
        buf.push_back(char(uint8_t(ch.queue.size())));
        for (const LocalState& v : ch.queue) encode_local(buf, v, L.wide);
      }
  } else {
    for (int i = 0; i < L.n; i++) {
      buf.push_back(char(uint8_t(st.hist[i].size())));
      for (const LocalState& v : st.hist[i]) encode_local(buf, v, L.wide);
    }
  }
  return buf;
}

ExtState decode_ext(const ExtLayout& L, const AsyncModel& m,
                    std::string_view buf) {
  ExtState st;
  st.truth.kind = L.kind;
  st.truth.locals.resize(L.n);
  size_t pos = 5;  // kind byte + node-count word
  for (int i = 0; i < L.n; i++)
    pos = decode_local(buf, pos, L.kind, L.wide, st.truth.locals[i]);
  if (m.kind == AsyncModel::Kind::Amr) {
    st.chan.resize(L.n);
    for (int r = 0; r < L.n; r++) {
      st.chan[r].resize(L.sources[r].size());
      for (ExtChan& ch : st.chan[r]) {
        pos = decode_local(buf, pos, L.kind, L.wide, ch.last);
        uint8_t q = uint8_t(buf[pos++]);
        ch.queue.resize(q);
        for (LocalState& v : ch.queue)
          pos = decode_local(buf, pos, L.kind, L.wide, v);
      }
    }
  } else {
    st.hist.resize(L.n);
    for (int i = 0; i < L.n; i++) {
      uint8_t h = uint8_t(buf[pos++]);
      st.hist[i].resize(h);
      for (LocalState& v : st.hist[i])
        pos = decode_local(buf, pos, L.kind, L.wide, v);
    }
  }
  return st;
}

struct RawSucc {
  ExtState st;
  NodeId node = 0;
  bool move = true;
};

// Every one-step successor of an extended state: under the FIFO model one
// delivery on one channel, or one move on the visible values (publishing to
// every channel, a full queue forcing out its oldest entry); under the
// window model one move per observation combination per permitted action.
std::vector<RawSucc> ext_successors(const Graph& g, const Algorithm& a,
                                    const ExtLayout& L, const AsyncModel& m,
                                    const ExtState& st, bool det_only) {
  std::vector<RawSucc> out;
  std::vector<LocalState> view;
  if (m.kind == AsyncModel::Kind::Amr) {
    for (int r = 0; r < L.n; r++)
      for (size_t k = 0; k < st.chan[r].size(); k++)
        if (!st.chan[r][k].queue.empty()) {
          RawSucc s{st, L.sources[r][k], false};
          ExtChan& ch = s.st.chan[r][k];
          ch.last = ch.queue.front();
          ch.queue.erase(ch.queue.begin());
          out.push_back(std::move(s));
        }
    for (NodeId i = 0; i < L.n; i++) {
      view = st.truth.locals;
      for (size_t k = 0; k < st.chan[i].size(); k++)
        view[L.sources[i][k]] = st.chan[i][k].last;
      view[i] = st.truth.locals[i];
      View v{i, view};
      if (!a.impedensable(g, v)) continue;
      for (const LocalState& nl : permitted(g, a, v, det_only)) {
        RawSucc s{st, i, true};
        s.st.truth.locals[i] = nl;
        for (int r = 0; r < L.n; r++)
          for (size_t k = 0; k < s.st.chan[r].size(); k++)
            if (L.sources[r][k] == i) {
              ExtChan& ch = s.st.chan[r][k];
              ch.queue.push_back(nl);
              if (int(ch.queue.size()) > m.channel_bound) {
                ch.last = ch.queue.front();
                ch.queue.erase(ch.queue.begin());
              }
            }
        out.push_back(std::move(s));
      }
    }
  } else {
    for (NodeId i = 0; i < L.n; i++) {
      const std::vector<NodeId>& src = L.sources[i];
      std::vector<int> counts(src.size()), pick(src.size(), 0);
      for (size_t k = 0; k < src.size(); k++)
        counts[k] = int(std::min<size_t>(size_t(m.window), st.hist[src[k]].size()));
      while (true) {
        view = st.truth.locals;
        for (size_t k = 0; k < src.size(); k++) {
          const std::vector<LocalState>& h = st.hist[src[k]];
          view[src[k]] = h[h.size() - 1 - pick[k]];
        }
        view[i] = st.truth.locals[i];
        View v{i, view};
        if (a.impedensable(g, v)) {
          for (const LocalState& nl : permitted(g, a, v, det_only)) {
            RawSucc s{st, i, true};
            s.st.truth.locals[i] = nl;
            std::vector<LocalState>& h = s.st.hist[i];
            h.push_back(nl);
            if (int(h.size()) > m.window) h.erase(h.begin());
            out.push_back(std::move(s));
          }
        }
        size_t k = 0;
        while (k < pick.size() && ++pick[k] == counts[k]) pick[k++] = 0;
        if (k == pick.size()) break;
      }
    }
  }
  return out;
}

void check_model(const AsyncModel& m) {
  if (m.kind == AsyncModel::Kind::Amr && m.channel_bound < 1)
    throw ConfigError("channel bound must be >= 1");
  if (m.kind == AsyncModel::Kind::Aa && m.window < 1)
    throw ConfigError("window must be >= 1");
}

// Recomputes successor encodings from scratch, for witness replay.
std::vector<std::string> recomputed_successors(const Graph& g,
                                               const Algorithm& a,
                                               const AsyncModel& m,
                                               const std::string& enc) {
  std::vector<std::string> out;
  if (m.kind == AsyncModel::Kind::Fresh) {
    GlobalState s = decode_global(enc);
    for (NodeId i = 0; i < g.n(); i++) {
      View v{i, s.locals};
      if (!a.impedensable(g, v)) continue;
      for (const LocalState& nl : a.actions(g, v))
        out.push_back(encode_global(apply_move(g, a, s, i, nl)));
    }
    return out;
  }
  ExtLayout L = make_layout(g, a);
  ExtState st = decode_ext(L, m, enc);
  for (RawSucc& s : ext_successors(g, a, L, m, st, false))
    out.push_back(encode_ext(L, m, s.st));
  return out;
}

}  // namespace

TransitionSystem explore_extended(const Graph& g, const Algorithm& a,
                                  const std::vector<GlobalState>& inits,
                                  const AsyncModel& model,
                                  const ExploreOptions& opt) {
  if (model.kind == AsyncModel::Kind::Fresh) return explore(g, a, inits, opt);
  check_model(model);
  int64_t budget = state_budget(opt.budget);
  ExtLayout L = make_layout(g, a);
  TransitionSystem ts;
  ts.n_nodes = g.n();
  auto add_state = [&](const ExtState& st) {
    std::string key = encode_ext(L, model, st);
    auto it = ts.index.find(key);
    if (it != ts.index.end()) return it->second;
    if (int64_t(ts.enc.size()) >= budget)
      throw BudgetError("state budget exceeded (" + std::to_string(budget) +
                        " states); raise DAGW_BUDGET to go further");
    int id = ts.n_states();
    ts.enc.push_back(key);
    ts.index.emplace(std::move(key), id);
    ts.truth.push_back(st.truth);
    return id;
  };
  std::unordered_set<int> root_seen;
  for (const GlobalState& init : inits) {
    check_init(g, a, init);
    int id = add_state(initial_ext(L, model, init));
    if (root_seen.insert(id).second) ts.roots.push_back(id);
  }
  for (int cur = 0; cur < ts.n_states(); cur++) {
    const std::string enc = ts.enc[cur];
    ExtState st = decode_ext(L, model, enc);
    std::set<std::tuple<int, NodeId, bool>> seen;
    for (RawSucc& s : ext_successors(g, a, L, model, st, opt.deterministic_only)) {
      int to = add_state(s.st);
      if (seen.insert({to, s.node, s.move}).second)
        ts.edges.push_back({cur, to, s.node, s.move});
    }
  }
  finalize(ts, g, a);
  return ts;
}

// ---------------------------------------------------------------------------
// Structural checks.

namespace {

// Kahn order, or nothing when the system has a cycle. Deterministic: ready
// states leave in index order.
std::optional<std::vector<int>> topo_order(const TransitionSystem& ts) {
  int ns = ts.n_states();
  std::vector<int> indeg(ns, 0);
  for (const TransitionSystem::Edge& e : ts.edges) indeg[e.to]++;
  std::deque<int> q;
  for (int s = 0; s < ns; s++)
    if (indeg[s] == 0) q.push_back(s);
  std::vector<int> order;
  order.reserve(ns);
  while (!q.empty()) {
    int s = q.front();
    q.pop_front();
    order.push_back(s);
    for (int ei : ts.out[s])
      if (--indeg[ts.edges[ei].to] == 0) q.push_back(ts.edges[ei].to);
  }
  if (int(order.size()) != ns) return std::nullopt;
  return order;
}

std::vector<int64_t> dp_longest(const TransitionSystem& ts,
                                const std::vector<int>& order) {
  std::vector<int64_t> dp(ts.n_states(), 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    for (int ei : ts.out[*it]) {
      const TransitionSystem::Edge& e = ts.edges[ei];
      dp[*it] = std::max(dp[*it], (e.move ? 1 : 0) + dp[e.to]);
    }
  return dp;
}

}  // namespace

CycleReport find_cycle(const TransitionSystem& ts) {
  CycleReport rep;
  int ns = ts.n_states();
  std::vector<char> color(ns, 0);  // 0 white, 1 on stack, 2 done
  for (int root = 0; root < ns && rep.acyclic; root++) {
    if (color[root]) continue;
    std::vector<std::pair<int, size_t>> fr{{root, 0}};
    color[root] = 1;
    while (!fr.empty() && rep.acyclic) {
      int s = fr.back().first;
      size_t k = fr.back().second;
      if (k == ts.out[s].size()) {
        color[s] = 2;
        fr.pop_back();
        continue;
      }
      fr.back().second++;
      int to = ts.edges[ts.out[s][k]].to;
      if (color[to] == 0) {
        color[to] = 1;
        fr.push_back({to, 0});
      } else if (color[to] == 1) {
        rep.acyclic = false;
        size_t start = 0;
        while (fr[start].first != to) start++;
        for (size_t idx = start; idx < fr.size(); idx++)
          rep.cycle.push_back(fr[idx].first);
        rep.cycle.push_back(to);
      }
    }
  }
  rep.methods_agree = (topo_order(ts).has_value() == rep.acyclic);
  return rep;
}

int64_t longest_moves(const TransitionSystem& ts) {
  auto order = topo_order(ts);
  if (!order) throw std::logic_error("longest path asked of a cyclic system");
  std::vector<int64_t> dp = dp_longest(ts, *order);
  int64_t best = 0;
  for (int64_t v : dp) best = std::max(best, v);
  return best;
}

ScanResult scan_longest(const Graph& g, const Algorithm& a,
                        const std::vector<GlobalState>& inits,
                        const ExploreOptions& opt) {
  int64_t budget = state_budget(opt.budget);
  ScanResult res;
  std::unordered_map<std::string, int64_t> memo;  // -1 while on the stack
  struct Frame {
    GlobalState s;
    std::string enc;
    std::vector<std::string> succ;
    size_t next = 0;
    int64_t best = 0;
  };
  auto expand = [&](Frame& f) {
    bool any = false;
    for (NodeId i = 0; i < g.n(); i++) {
      View v{i, f.s.locals};
      if (!a.impedensable(g, v)) continue;
      any = true;
      for (const LocalState& nl : permitted(g, a, v, opt.deterministic_only))
        f.succ.push_back(encode_global(apply_move(g, a, f.s, i, nl)));
    }
    if (!any) {
      res.sink_count++;
      if (res.sinks_optimal && !a.optimal(g, f.s)) {
        res.sinks_optimal = false;
        res.witness = format_global(f.s);
      }
    }
  };
  for (const GlobalState& init : inits) {
    check_init(g, a, init);
    std::string enc0 = encode_global(init);
    if (!memo.count(enc0)) {
      std::vector<Frame> st;
      memo.emplace(enc0, -1);
      st.push_back(Frame{init, enc0, {}, 0, 0});
      expand(st.back());
      while (!st.empty()) {
        Frame& f = st.back();
        if (f.next == f.succ.size()) {
          memo[f.enc] = f.best;
          int64_t done = f.best;
          st.pop_back();
          if (!st.empty())
            st.back().best = std::max(st.back().best, 1 + done);
          continue;
        }
        std::string nx = std::move(f.succ[f.next++]);
        auto it = memo.find(nx);
        if (it != memo.end()) {
          if (it->second < 0) {  // still on the stack: a cycle
            res.acyclic = false;
            res.witness = format_global(decode_global(nx));
            res.states = int64_t(memo.size());
            return res;
          }
          f.best = std::max(f.best, 1 + it->second);
          continue;
        }
        if (int64_t(memo.size()) >= budget)
          throw BudgetError("state budget exceeded (" +
                            std::to_string(budget) +
                            " states); raise DAGW_BUDGET to go further");
        memo.emplace(nx, -1);
        GlobalState ns = decode_global(nx);
        st.push_back(Frame{std::move(ns), std::move(nx), {}, 0, 0});
        expand(st.back());
      }
    }
    res.longest = std::max(res.longest, memo[enc0]);
  }
  res.states = int64_t(memo.size());
  return res;
}

DagInductionReport check_dag_inducing(const Graph& g, const Algorithm& a,
                                      const TransitionSystem& ts) {
  DagInductionReport rep;
  std::vector<int> optimal_states;
  for (int s = 0; s < ts.n_states(); s++)
    if (ts.opt[s]) optimal_states.push_back(s);
  for (int s = 0; s < ts.n_states(); s++) {
    const GlobalState& st = ts.truth[s];
    bool any = false;
    for (NodeId i = 0; i < g.n(); i++) {
      if (!a.impedensable(g, View{i, st.locals})) continue;
      any = true;
      if (ts.opt[s] && rep.silent) {
        rep.silent = false;
        rep.silent_w = {s, i, -1};
      }
      if (rep.pinpoints)
        for (int o : optimal_states)
          if (ts.truth[o].locals[i] == st.locals[i]) {
            rep.pinpoints = false;
            rep.pinpoints_w = {s, i, o};
            break;
          }
    }
    if (!any && !ts.opt[s] && rep.covers) {
      rep.covers = false;
      rep.covers_w = {s, -1, -1};
    }
  }
  return rep;
}

RankDescentReport check_rank_descent(const TransitionSystem& ts) {
  RankDescentReport rep;
  for (int e = 0; e < int(ts.edges.size()); e++) {
    const TransitionSystem::Edge& ed = ts.edges[e];
    if (!ed.move || ts.rank[ed.from].is_inf()) continue;
    rep.checked++;
    if (!(ts.rank[ed.to] < ts.rank[ed.from])) {
      rep.holds = false;
      rep.bad_edge = e;
      return rep;
    }
  }
  return rep;
}

PartialOrderReport check_partial_order(const TransitionSystem& ts) {
  PartialOrderReport rep;
  CycleReport cyc = find_cycle(ts);
  if (!cyc.acyclic) {
    rep.acyclic = false;
    rep.path = cyc.cycle;
    return rep;
  }
  if (ts.truth.empty()) return rep;  // bare fixture: nothing to project
  int ns = ts.n_states();
  bool wide = ts.n_nodes > 254;
  for (NodeId i = 0; i < ts.n_nodes; i++) {
    struct Ends {
      std::vector<int> leave, ret;  // edge indices
    };
    std::map<std::string, Ends> by_val;
    for (int e = 0; e < int(ts.edges.size()); e++) {
      const TransitionSystem::Edge& ed = ts.edges[e];
      if (!ed.move || ed.node != i) continue;
      const LocalState& pre = ts.truth[ed.from].locals[i];
      const LocalState& post = ts.truth[ed.to].locals[i];
      if (pre == post) continue;
      std::string kpre, kpost;
      encode_local(kpre, pre, wide);
      encode_local(kpost, post, wide);
      by_val[kpre].leave.push_back(e);
      by_val[kpost].ret.push_back(e);
    }
    for (const auto& [key, ends] : by_val) {
      if (ends.leave.empty() || ends.ret.empty()) continue;
      // Can the node reach, after leaving this value, a state where it
      // takes the value again? Multi-source forward search.
      std::vector<int> parent(ns, -2), leave_of(ns, -1);
      std::vector<char> is_ret(ns, 0);
      for (int e : ends.ret) is_ret[ts.edges[e].from] = 1;
      std::deque<int> q;
      for (int e : ends.leave) {
        int b = ts.edges[e].to;
        if (parent[b] == -2) {
          parent[b] = -1;
          leave_of[b] = e;
          q.push_back(b);
        }
      }
      int hit = -1;
      while (!q.empty() && hit < 0) {
        int s = q.front();
        q.pop_front();
        if (is_ret[s]) {
          hit = s;
          break;
        }
        for (int ei : ts.out[s]) {
          int t = ts.edges[ei].to;
          if (parent[t] == -2) {
            parent[t] = ei;
            q.push_back(t);
          }
        }
      }
      if (hit < 0) continue;
      int rete = -1;
      for (int e : ends.ret)
        if (ts.edges[e].from == hit) {
          rete = e;
          break;
        }
      std::vector<int> rpath{ts.edges[rete].to, hit};
      int cur = hit;
      while (parent[cur] >= 0) {
        cur = ts.edges[parent[cur]].from;
        rpath.push_back(cur);
      }
      rpath.push_back(ts.edges[leave_of[cur]].from);
      std::reverse(rpath.begin(), rpath.end());
      rep.no_revisit = false;
      rep.node = i;
      rep.path = std::move(rpath);
      return rep;
    }
  }
  return rep;
}

InducedOrder induce_order(const TransitionSystem& ts) {
  InducedOrder io;
  io.n_nodes = ts.n_nodes;
  for (int s = 0; s < ts.n_states(); s++)
    if (ts.sink[s] && !ts.opt[s]) {
      io.applicable = false;
      io.bad_sink = s;
      return io;
    }
  auto order = topo_order(ts);
  if (!order) {
    io.applicable = false;
    return io;
  }
  io.rank.assign(ts.n_states(), 0);
  for (auto it = order->rbegin(); it != order->rend(); ++it) {
    if (ts.sink[*it]) continue;
    int64_t mx = -1;
    for (int ei : ts.out[*it]) mx = std::max(mx, io.rank[ts.edges[ei].to]);
    io.rank[*it] = ts.n_nodes + mx;
  }
  for (const TransitionSystem::Edge& e : ts.edges)
    if (io.rank[e.from] <= io.rank[e.to]) {
      io.descends = false;
      break;
    }
  return io;
}

BoundsReport check_bounds(const Graph& g, const Algorithm& a,
                          const TransitionSystem& ts) {
  BoundsReport b;
  b.longest = longest_moves(ts);
  if (a.kind() == AlgoKind::Dc) b.algo_bound = 2 * int64_t(g.m());
  if (a.kind() == AlgoKind::Mm) b.algo_bound = 2 * int64_t(g.n());
  for (NodeId i = 0; i < g.n(); i++)
    b.generic_bound += int64_t(a.local_domain(g, i).size()) - 1;
  b.ok = b.longest <= b.generic_bound &&
         (!b.algo_bound || b.longest <= *b.algo_bound);
  return b;
}

int64_t measure_sync_rounds(const Graph& g, const Algorithm& a) {
  RunConfig cfg;
  cfg.scheduler = SchedulerKind::Synchronous;
  cfg.model = AsyncModel::fresh();
  cfg.seed = 1;
  RunResult r = run(g, a, a.default_init(g), cfg);
  if (r.verdict != RunVerdict::Converged) return -1;
  return r.trace.last_move_round;
}

std::string_view probe_outcome_name(ProbeOutcome o) {
  switch (o) {
    case ProbeOutcome::Cycle: return "cycle";
    case ProbeOutcome::Revisit: return "revisit";
    case ProbeOutcome::BoundExceeded: return "bound-exceeded";
    case ProbeOutcome::Exhausted: return "exhausted";
  }
  return "?";
}

namespace {

bool replay_path(const Graph& g, const Algorithm& a, const AsyncModel& m,
                 const TransitionSystem& ts, const std::vector<int>& path) {
  for (size_t k = 0; k + 1 < path.size(); k++) {
    std::vector<std::string> succ =
        recomputed_successors(g, a, m, ts.enc[path[k]]);
    if (std::find(succ.begin(), succ.end(), ts.enc[path[k + 1]]) == succ.end())
      return false;
  }
  return !path.empty();
}

std::vector<int> longest_path_states(const TransitionSystem& ts) {
  auto order = topo_order(ts);
  std::vector<int64_t> dp = dp_longest(ts, *order);
  int start = 0;
  for (int s = 1; s < ts.n_states(); s++)
    if (dp[s] > dp[start]) start = s;
  std::vector<int> path{start};
  int cur = start;
  while (dp[cur] > 0) {
    for (int ei : ts.out[cur]) {
      const TransitionSystem::Edge& e = ts.edges[ei];
      if ((e.move ? 1 : 0) + dp[e.to] == dp[cur]) {
        cur = e.to;
        path.push_back(cur);
        break;
      }
    }
  }
  return path;
}

}  // namespace

ProbeReport probe_async(const Graph& g, const Algorithm& a,
                        const AsyncModel& model, const TransitionSystem& ext,
                        int64_t move_bound) {
  ProbeReport rep;
  rep.bound = move_bound;
  rep.states = ext.n_states();
  CycleReport cyc = find_cycle(ext);
  if (!cyc.acyclic) {
    rep.outcome = ProbeOutcome::Cycle;
    rep.path = cyc.cycle;
    rep.replay_ok = replay_path(g, a, model, ext, rep.path);
    return rep;
  }
  PartialOrderReport po = check_partial_order(ext);
  if (!po.no_revisit) {
    rep.outcome = ProbeOutcome::Revisit;
    rep.node = po.node;
    rep.path = po.path;
    rep.replay_ok = replay_path(g, a, model, ext, rep.path);
    rep.longest = longest_moves(ext);
    return rep;
  }
  rep.longest = longest_moves(ext);
  if (rep.longest > move_bound) {
    rep.outcome = ProbeOutcome::BoundExceeded;
    rep.path = longest_path_states(ext);
    rep.replay_ok = replay_path(g, a, model, ext, rep.path);
    return rep;
  }
  rep.outcome = ProbeOutcome::Exhausted;
  return rep;
}

}  // namespace dagw
