#include "dagw/report.hpp"

#include <sstream>

namespace dagw {

namespace {

Json path_json(const TransitionSystem& ts, const std::vector<int>& path) {
  Json arr = Json::array();
  for (int s : path)
    arr.push_back(size_t(s) < ts.truth.size() ? format_global(ts.truth[s])
                                              : "#" + std::to_string(s));
  return arr;
}

Json witness_json(const TransitionSystem& ts, const PairWitness& w) {
  Json j;
  if (w.state >= 0 && size_t(w.state) < ts.truth.size())
    j["state"] = format_global(ts.truth[w.state]);
  if (w.node >= 0) j["node"] = w.node + 1;
  if (w.other >= 0 && size_t(w.other) < ts.truth.size())
    j["optimal_state"] = format_global(ts.truth[w.other]);
  return j;
}

}  // namespace

std::string trace_jsonl(const Graph& g, const Algorithm& a,
                        const RunConfig& cfg, const GlobalState& init,
                        const RunResult& res) {
  std::ostringstream os;
  Json head;
  head["schema"] = 1;
  head["kind"] = "trace-header";
  head["algo"] = std::string(algo_name(a.kind()));
  head["graph"] = g.name();
  head["n"] = g.n();
  head["m"] = g.m();
  head["scheduler"] = std::string(scheduler_name(cfg.scheduler));
  head["policy"] = std::string(policy_name(cfg.policy));
  head["model"] = cfg.model.str();
  if (cfg.model.kind == AsyncModel::Kind::Amr)
    head["delivery"] = std::string(delivery_name(cfg.model.delivery));
  head["seed"] = cfg.seed;
  head["max_moves"] = cfg.max_moves;
  head["init"] = format_global(init);
  os << head.dump() << "\n";
  for (const TraceEvent& e : res.trace.events) {
    Json j;
    switch (e.kind) {
      case TraceEvent::Kind::Eval:
        j["kind"] = "eval";
        j["step"] = e.step;
        j["node"] = e.node + 1;
        j["enabled"] = e.enabled;
        break;
      case TraceEvent::Kind::Move:
        j["kind"] = "move";
        j["step"] = e.step;
        j["node"] = e.node + 1;
        j["pre"] = format_local(e.pre);
        j["post"] = format_local(e.post);
        j["rank"] = e.rank_after.str();
        break;
      case TraceEvent::Kind::Deliver:
        j["kind"] = "deliver";
        j["step"] = e.step;
        j["src"] = e.src + 1;
        j["dst"] = e.dst + 1;
        j["value"] = format_local(e.value);
        break;
      case TraceEvent::Kind::Round:
        j["kind"] = "round";
        j["step"] = e.step;
        j["round"] = e.round;
        break;
    }
    os << j.dump() << "\n";
  }
  Json end;
  end["kind"] = "end";
  end["verdict"] = std::string(verdict_name(res.verdict));
  end["moves"] = res.trace.moves;
  end["steps"] = res.steps;
  end["rounds"] = res.trace.rounds;
  end["last_move_round"] = res.trace.last_move_round;
  end["final"] = format_global(res.final_state);
  end["final_rank"] = rank_of(g, a, res.final_state).str();
  end["optimal"] = a.optimal(g, res.final_state);
  os << end.dump() << "\n";
  return os.str();
}

Json json_of(const TransitionSystem& ts) {
  Json j;
  j["states"] = ts.n_states();
  int moves = 0;
  for (const TransitionSystem::Edge& e : ts.edges) moves += e.move ? 1 : 0;
  j["edges"] = int(ts.edges.size());
  j["move_edges"] = moves;
  j["roots"] = int(ts.roots.size());
  std::vector<int> sk = ts.sinks();
  j["sinks"] = int(sk.size());
  bool all_opt = true;
  for (int s : sk) all_opt = all_opt && ts.opt[s];
  j["all_sinks_optimal"] = all_opt;
  if (sk.size() <= 64 && !ts.truth.empty()) {
    Json arr = Json::array();
    for (int s : sk) arr.push_back(format_global(ts.truth[s]));
    j["sink_states"] = arr;
  }
  return j;
}

Json json_of(const TransitionSystem& ts, const CycleReport& r) {
  Json j;
  j["acyclic"] = r.acyclic;
  j["methods_agree"] = r.methods_agree;
  if (!r.acyclic) j["cycle"] = path_json(ts, r.cycle);
  return j;
}

Json json_of(const TransitionSystem& ts, const DagInductionReport& r) {
  Json j;
  j["covers"] = r.covers;
  if (!r.covers) j["covers_witness"] = witness_json(ts, r.covers_w);
  j["pinpoints"] = r.pinpoints;
  if (!r.pinpoints) j["pinpoints_witness"] = witness_json(ts, r.pinpoints_w);
  j["silent"] = r.silent;
  if (!r.silent) j["silent_witness"] = witness_json(ts, r.silent_w);
  return j;
}

Json json_of(const RankDescentReport& r) {
  Json j;
  j["holds"] = r.holds;
  j["checked_edges"] = r.checked;
  if (!r.holds) j["bad_edge"] = r.bad_edge;
  return j;
}

Json json_of(const TransitionSystem& ts, const PartialOrderReport& r) {
  Json j;
  j["acyclic"] = r.acyclic;
  j["no_revisit"] = r.no_revisit;
  if (!r.no_revisit) j["node"] = r.node + 1;
  if (!r.path.empty()) j["path"] = path_json(ts, r.path);
  return j;
}

Json json_of(const TransitionSystem& ts, const InducedOrder& io) {
  Json j;
  j["applicable"] = io.applicable;
  if (!io.applicable) {
    if (io.bad_sink >= 0 && size_t(io.bad_sink) < ts.truth.size())
      j["suboptimal_sink"] = format_global(ts.truth[io.bad_sink]);
    return j;
  }
  j["descends"] = io.descends;
  int64_t mx = 0;
  for (int64_t r : io.rank) mx = std::max(mx, r);
  j["max_rank"] = mx;
  Json roots = Json::array();
  for (int r : ts.roots) {
    Json e;
    if (size_t(r) < ts.truth.size()) e["state"] = format_global(ts.truth[r]);
    e["rank"] = io.rank[r];
    e["node_value"] = io.node_value(r).str();
    roots.push_back(e);
  }
  if (roots.size() <= 16) j["root_ranks"] = roots;
  return j;
}

Json json_of(const BoundsReport& b) {
  Json j;
  j["longest_moves"] = b.longest;
  if (b.algo_bound) j["algo_bound"] = *b.algo_bound;
  j["generic_bound"] = b.generic_bound;
  j["ok"] = b.ok;
  return j;
}

Json json_of(const TransitionSystem& ts, const ProbeReport& p) {
  Json j;
  j["outcome"] = std::string(probe_outcome_name(p.outcome));
  j["states"] = p.states;
  j["longest_moves"] = p.longest;
  j["move_bound"] = p.bound;
  if (p.node >= 0) j["node"] = p.node + 1;
  if (!p.path.empty()) {
    j["path"] = path_json(ts, p.path);
    j["replay_ok"] = p.replay_ok;
  }
  return j;
}

}  // namespace dagw
