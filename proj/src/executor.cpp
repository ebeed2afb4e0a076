#include "dagw/executor.hpp"

#include <algorithm>

#include "dagw/errors.hpp"

namespace dagw {

std::string AsyncModel::str() const {
  switch (kind) {
    case Kind::Fresh: return "fresh";
    case Kind::Amr: return "amr" + std::to_string(channel_bound);
    case Kind::Aa: return "aa" + std::to_string(window);
  }
  return "?";
}

std::string_view scheduler_name(SchedulerKind k) {
  switch (k) {
    case SchedulerKind::Central: return "central";
    case SchedulerKind::Distributed: return "distributed";
    case SchedulerKind::Synchronous: return "synchronous";
  }
  return "?";
}

std::string_view policy_name(ChoicePolicy p) {
  return p == ChoicePolicy::Random ? "random" : "fixed";
}

std::string_view delivery_name(DeliveryPolicy d) {
  switch (d) {
    case DeliveryPolicy::Random: return "random";
    case DeliveryPolicy::All: return "all";
    case DeliveryPolicy::None: return "none";
  }
  return "?";
}

std::string_view verdict_name(RunVerdict v) {
  switch (v) {
    case RunVerdict::Converged: return "converged";
    case RunVerdict::MoveBudget: return "move-budget";
    case RunVerdict::StepBudget: return "step-budget";
  }
  return "?";
}

Runner::Runner(const Graph& g, const Algorithm& a, GlobalState init,
               RunConfig cfg)
    : g_(g), algo_(a), cfg_(cfg), truth_(std::move(init)), rng_(cfg.seed) {
  if (int(truth_.locals.size()) != g.n())
    throw ConfigError("initial state length does not match the graph");
  if (truth_.kind != a.kind())
    throw ConfigError("initial state kind does not match the algorithm");
  for (NodeId i = 0; i < g.n(); i++) a.check_local(g, i, truth_.locals[i]);
  if (cfg_.max_moves < 0) throw ConfigError("max_moves must be >= 0");
  if (cfg_.max_steps == 0) cfg_.max_steps = 10000 + 100 * cfg_.max_moves;
  if (cfg_.model.kind == AsyncModel::Kind::Amr && cfg_.model.channel_bound < 1)
    throw ConfigError("channel bound must be >= 1");
  if (cfg_.model.kind == AsyncModel::Kind::Aa && cfg_.model.window < 1)
    throw ConfigError("window must be >= 1");

  history_.resize(g.n());
  for (NodeId i = 0; i < g.n(); i++) history_[i] = {truth_.locals[i]};
  in_.resize(g.n());
  if (cfg_.model.kind != AsyncModel::Kind::Fresh) {
    int r = algo_.read_radius();
    for (NodeId i = 0; i < g.n(); i++)
      for (NodeId s : g.within(i, r)) in_[i].push_back({s, 1});
  }
  evaled_.assign(g.n(), 0);
}

bool Runner::converged() const {
  for (NodeId i = 0; i < g_.n(); i++)
    if (algo_.impedensable(g_, View{i, truth_.locals})) return false;
  return true;
}

void Runner::record_eval(NodeId node, bool enabled) {
  TraceEvent e;
  e.kind = TraceEvent::Kind::Eval;
  e.step = cur_step_;
  e.node = node;
  e.enabled = enabled;
  trace_.events.push_back(std::move(e));
  note_round_progress(node);
}

void Runner::note_round_progress(NodeId node) {
  if (!evaled_[node]) {
    evaled_[node] = 1;
    evaled_count_++;
  }
  if (evaled_count_ == g_.n()) {
    trace_.rounds++;
    TraceEvent e;
    e.kind = TraceEvent::Kind::Round;
    e.step = cur_step_;
    e.round = trace_.rounds;
    trace_.events.push_back(std::move(e));
    std::fill(evaled_.begin(), evaled_.end(), 0);
    evaled_count_ = 0;
  }
}

void Runner::build_view(NodeId reader, std::vector<LocalState>& scratch) {
  scratch = truth_.locals;
  if (cfg_.model.kind == AsyncModel::Kind::Fresh) return;
  for (Channel& ch : in_[reader]) {
    const auto& hist = history_[ch.src];
    size_t pick;
    if (cfg_.model.kind == AsyncModel::Kind::Aa) {
      size_t w = std::min<size_t>(cfg_.model.window, hist.size());
      pick = hist.size() - w + rng_.below(w);
    } else {
      size_t undelivered = hist.size() - ch.cursor;
      size_t take;
      switch (cfg_.model.delivery) {
        case DeliveryPolicy::All: take = undelivered; break;
        case DeliveryPolicy::None: take = 0; break;
        default: take = rng_.below(undelivered + 1);
      }
      for (size_t k = 0; k < take; k++) {
        TraceEvent e;
        e.kind = TraceEvent::Kind::Deliver;
        e.step = cur_step_;
        e.src = ch.src;
        e.dst = reader;
        e.value = hist[ch.cursor + k];
        trace_.events.push_back(std::move(e));
      }
      ch.cursor += take;
      pick = ch.cursor - 1;
    }
    scratch[ch.src] = hist[pick];
    if (cfg_.model.kind == AsyncModel::Kind::Aa) {
      TraceEvent e;
      e.kind = TraceEvent::Kind::Deliver;
      e.step = cur_step_;
      e.src = ch.src;
      e.dst = reader;
      e.value = hist[pick];
      trace_.events.push_back(std::move(e));
    }
  }
  scratch[reader] = truth_.locals[reader];
}

void Runner::publish(NodeId mover) {
  history_[mover].push_back(truth_.locals[mover]);
  if (cfg_.model.kind != AsyncModel::Kind::Amr) return;
  // A full channel forces its oldest undelivered publication out.
  for (NodeId r = 0; r < g_.n(); r++)
    for (Channel& ch : in_[r])
      if (ch.src == mover) {
        size_t undelivered = history_[mover].size() - ch.cursor;
        if (int(undelivered) > cfg_.model.channel_bound) {
          TraceEvent e;
          e.kind = TraceEvent::Kind::Deliver;
          e.step = cur_step_;
          e.src = mover;
          e.dst = r;
          e.value = history_[mover][ch.cursor];
          trace_.events.push_back(std::move(e));
          ch.cursor++;
        }
      }
}

bool Runner::step() {
  if (converged()) return false;
  cur_step_ = ++steps_;
  // Moves in this step belong to the round in progress when it began, even
  // if the step's own evaluations complete that round.
  int64_t cur_round = trace_.rounds + 1;

  // Candidate selection.
  std::vector<NodeId> candidates;
  if (cfg_.scheduler == SchedulerKind::Synchronous) {
    for (NodeId i = 0; i < g_.n(); i++) candidates.push_back(i);
  } else {
    std::vector<NodeId> pool;
    if (cfg_.model.kind == AsyncModel::Kind::Fresh) {
      for (NodeId i = 0; i < g_.n(); i++)
        if (algo_.impedensable(g_, View{i, truth_.locals})) pool.push_back(i);
    } else {
      for (NodeId i = 0; i < g_.n(); i++) pool.push_back(i);
    }
    if (cfg_.scheduler == SchedulerKind::Central) {
      NodeId pick;
      if (cfg_.policy == ChoicePolicy::FixedOrder) {
        pick = pool[0];
        for (NodeId c : pool)
          if (c >= fixed_cursor_) {
            pick = c;
            break;
          }
        fixed_cursor_ = NodeId((pick + 1) % g_.n());
      } else {
        pick = pool[rng_.below(pool.size())];
      }
      candidates.push_back(pick);
    } else {  // Distributed: each candidate joins with probability 1/2,
              // redrawn until the set is nonempty.
      while (candidates.empty()) {
        for (NodeId c : pool)
          if (cfg_.policy == ChoicePolicy::FixedOrder || rng_.coin())
            candidates.push_back(c);
      }
    }
  }

  // Evaluate all picked nodes against the pre-step picture, then apply the
  // enabled moves jointly.
  std::vector<std::pair<NodeId, LocalState>> moves;
  std::vector<LocalState> scratch;
  for (NodeId i : candidates) {
    build_view(i, scratch);
    View v{i, scratch};
    bool en = algo_.impedensable(g_, v);
    record_eval(i, en);
    if (!en) continue;
    if (cfg_.policy == ChoicePolicy::Random) {
      std::vector<LocalState> acts = algo_.actions(g_, v);
      moves.emplace_back(i, acts[rng_.below(acts.size())]);
    } else {
      moves.emplace_back(i, algo_.deterministic_action(g_, v));
    }
  }
  for (auto& [i, nl] : moves) {
    algo_.check_local(g_, i, nl);
    truth_.locals[i] = nl;
  }
  for (auto& [i, nl] : moves) {
    publish(i);
    TraceEvent e;
    e.kind = TraceEvent::Kind::Move;
    e.step = cur_step_;
    e.node = i;
    e.pre = history_[i][history_[i].size() - 2];
    e.post = nl;
    e.rank_after = rank_of(g_, algo_, truth_);
    trace_.events.push_back(std::move(e));
    trace_.moves++;
    trace_.last_move_round = cur_round;
  }
  return true;
}

RunResult run(const Graph& g, const Algorithm& a, GlobalState init,
              const RunConfig& cfg) {
  Runner r(g, a, std::move(init), cfg);
  RunResult res;
  while (true) {
    if (r.converged()) {
      res.verdict = RunVerdict::Converged;
      break;
    }
    if (r.moves() >= cfg.max_moves) {
      res.verdict = RunVerdict::MoveBudget;
      break;
    }
    if (r.steps() >= (cfg.max_steps ? cfg.max_steps : 10000 + 100 * cfg.max_moves)) {
      res.verdict = RunVerdict::StepBudget;
      break;
    }
    r.step();
  }
  res.final_state = r.state();
  res.steps = r.steps();
  res.trace = r.take_trace();
  return res;
}

}  // namespace dagw
