#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dagw/checker.hpp"
#include "dagw/dot.hpp"
#include "dagw/errors.hpp"
#include "dagw/report.hpp"

using namespace dagw;

namespace {

Graph load_graph(const std::string& spec) {
  std::ifstream f(spec);
  if (f) {
    std::stringstream ss;
    ss << f.rdbuf();
    return Graph::parse(ss.str(), spec);
  }
  return Graph::from_alias(spec);
}

std::optional<NodeId> resolve_dest(const Graph& g, int dest_1b) {
  if (dest_1b > 0) {
    NodeId d = NodeId(dest_1b - 1);
    if (g.dest() && *g.dest() != d)
      throw ConfigError("--dest " + std::to_string(dest_1b) +
                        " conflicts with the graph's declared destination " +
                        std::to_string(*g.dest() + 1));
    return d;
  }
  return g.dest();
}

std::unique_ptr<Algorithm> algo_for(AlgoKind kind, const Graph& g,
                                    int dest_1b) {
  if (kind != AlgoKind::Sp) {
    if (dest_1b > 0) throw ConfigError("--dest applies to sp only");
    return make_algorithm(kind, g);
  }
  return make_algorithm(kind, g, resolve_dest(g, dest_1b));
}

AsyncModel make_model(const std::string& name, int channel_bound, int window,
                      const std::string& delivery) {
  DeliveryPolicy d = DeliveryPolicy::Random;
  if (delivery == "all")
    d = DeliveryPolicy::All;
  else if (delivery == "none")
    d = DeliveryPolicy::None;
  else if (delivery != "random")
    throw ConfigError("unknown delivery policy '" + delivery +
                      "' (random, all, none)");
  if (name == "fresh") return AsyncModel::fresh();
  if (name == "amr") return AsyncModel::amr(channel_bound, d);
  if (name == "aa") return AsyncModel::aa(window);
  throw ConfigError("unknown asynchrony model '" + name +
                    "' (fresh, amr, aa)");
}

SchedulerKind make_scheduler(const std::string& name) {
  if (name == "central") return SchedulerKind::Central;
  if (name == "distributed") return SchedulerKind::Distributed;
  if (name == "synchronous") return SchedulerKind::Synchronous;
  throw ConfigError("unknown scheduler '" + name +
                    "' (central, distributed, synchronous)");
}

enum class InitMode { Default, Zero, All, File };

InitMode init_mode(const std::string& spec) {
  if (spec == "default") return InitMode::Default;
  if (spec == "zero") return InitMode::Zero;
  if (spec == "all") return InitMode::All;
  if (spec.rfind("file:", 0) == 0) return InitMode::File;
  throw ConfigError("unknown init '" + spec +
                    "' (default, zero, all, file:PATH)");
}

std::vector<GlobalState> make_inits(const Graph& g, const Algorithm& a,
                                    const std::string& spec, int64_t budget,
                                    bool allow_multi) {
  switch (init_mode(spec)) {
    case InitMode::Default:
      return {a.default_init(g)};
    case InitMode::Zero: {
      if (a.kind() != AlgoKind::Sp)
        throw ConfigError("init zero applies to sp only");
      GlobalState s;
      s.kind = AlgoKind::Sp;
      s.locals.assign(g.n(), SpState{kTop, 0});
      return {s};
    }
    case InitMode::All:
      if (!allow_multi)
        throw ConfigError("init all needs an exploration command");
      return all_inits(g, a, {budget});
    case InitMode::File: {
      std::ifstream f(spec.substr(5));
      if (!f) throw ConfigError("cannot open init file " + spec.substr(5));
      std::vector<GlobalState> out;
      std::string line;
      while (std::getline(f, line)) {
        size_t h = line.find('#');
        if (h != std::string::npos) line.resize(h);
        bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
        if (blank) continue;
        out.push_back(parse_global(a.kind(), g.n(), line));
      }
      if (out.empty()) throw ConfigError("init file has no states");
      if (!allow_multi && out.size() > 1)
        throw ConfigError("run takes exactly one initial state");
      return out;
    }
  }
  throw ConfigError("unreachable init mode");
}

void write_out(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot write " + path);
  f << text;
}

// ---------------------------------------------------------------------------

struct RunOpts {
  std::string algo, graph, scheduler = "central", policy = "random";
  std::string async_model = "fresh", delivery = "random";
  std::string init = "default", trace_path;
  int channel_bound = 1, window = 3, dest = 0;
  uint64_t seed = 1;
  int64_t max_moves = 100000;
};

int cmd_run(const RunOpts& o) {
  Graph g = load_graph(o.graph);
  AlgoKind kind = algo_from_name(o.algo);
  auto algo = algo_for(kind, g, o.dest);
  GlobalState init = make_inits(g, *algo, o.init, 0, false)[0];
  RunConfig cfg;
  cfg.scheduler = make_scheduler(o.scheduler);
  cfg.policy = o.policy == "fixed" ? ChoicePolicy::FixedOrder
                                   : ChoicePolicy::Random;
  cfg.model = make_model(o.async_model, o.channel_bound, o.window, o.delivery);
  cfg.seed = o.seed;
  cfg.max_moves = o.max_moves;
  RunResult res = run(g, *algo, init, cfg);
  std::string jsonl = trace_jsonl(g, *algo, cfg, init, res);
  if (!o.trace_path.empty()) {
    write_out(o.trace_path, jsonl);
    size_t last = jsonl.rfind('\n', jsonl.size() - 2);
    std::cout << jsonl.substr(last + 1);  // just the closing record
  } else {
    std::cout << jsonl;
  }
  return res.verdict == RunVerdict::Converged ? 0 : 1;
}

// ---------------------------------------------------------------------------

struct VerifyOpts {
  std::string algo, graph, init = "default", async_model = "fresh";
  std::string out_path, dot_path;
  int channel_bound = 1, window = 2, dest = 0;
  int64_t budget = 0;
};

int cmd_verify(const VerifyOpts& o) {
  Graph g = load_graph(o.graph);
  AlgoKind kind = algo_from_name(o.algo);
  auto algo = algo_for(kind, g, o.dest);
  AsyncModel model = make_model(o.async_model, o.channel_bound, o.window,
                                "random");
  InitMode mode = init_mode(o.init);
  bool fresh = model.kind == AsyncModel::Kind::Fresh;
  if (!fresh && mode == InitMode::All)
    throw ConfigError("init all is a fresh-model feature");
  // The matching rules under window staleness are the adversarial-search
  // configuration: classify and replay whatever exploration finds instead
  // of demanding convergence.
  bool probe_mode = kind == AlgoKind::Mm && model.kind == AsyncModel::Kind::Aa;
  bool zero_probe = kind == AlgoKind::Sp && mode == InitMode::Zero;
  bool default_init = mode == InitMode::Default;

  Json doc;
  doc["schema"] = 1;
  doc["kind"] = "verdict";
  {
    Json c;
    c["algo"] = std::string(algo_name(kind));
    c["graph"] = g.name();
    c["n"] = g.n();
    c["m"] = g.m();
    c["init"] = o.init;
    c["model"] = model.str();
    c["budget"] = state_budget(o.budget);
    doc["config"] = c;
  }
  std::vector<std::pair<std::string, bool>> gates;
  auto gate = [&](const std::string& name, bool pass) {
    gates.push_back({name, pass});
  };

  try {
    std::vector<GlobalState> inits =
        make_inits(g, *algo, o.init, o.budget, true);
    ExploreOptions eo{o.budget, false};
    TransitionSystem ts = fresh
                              ? explore(g, *algo, inits, eo)
                              : explore_extended(g, *algo, inits, model, eo);
    doc["explore"] = json_of(ts);
    if (!o.dot_path.empty())
      write_out(o.dot_path, to_dot(ts, g.name() + " " + o.algo));

    Json checks;
    CycleReport cyc = find_cycle(ts);
    checks["acyclic"] = json_of(ts, cyc);
    bool all_opt = true;
    for (int s : ts.sinks()) all_opt = all_opt && ts.opt[s];

    if (probe_mode) {
      ProbeReport p = probe_async(g, *algo, model, ts, 2 * int64_t(g.n()));
      doc["checks"] = checks;
      doc["probe"] = json_of(ts, p);
      gate("probe_replay", p.path.empty() || p.replay_ok);
    } else {
      gate("acyclic", cyc.acyclic);
      gate("acyclic_methods_agree", cyc.methods_agree);
      if (zero_probe)
        gate("suboptimal_termination",
             ts.n_states() == 1 && ts.sink[0] && !ts.opt[0]);
      else
        gate("sinks_optimal", all_opt);

      RankDescentReport rd = check_rank_descent(ts);
      checks["rank_descent"] = json_of(rd);
      if (fresh && (kind != AlgoKind::Mm || default_init))
        gate("rank_descent", rd.holds);

      if (fresh) {
        DagInductionReport di = check_dag_inducing(g, *algo, ts);
        checks["guard"] = json_of(ts, di);
        if (zero_probe)
          gate("guard_covers_expected_fail", !di.covers);
        else
          gate("guard_covers", di.covers);
        gate("guard_silent", di.silent);
        if (kind != AlgoKind::Mm) gate("guard_pinpoints", di.pinpoints);
      }

      PartialOrderReport po = check_partial_order(ts);
      checks["partial_order"] = json_of(ts, po);
      if (kind != AlgoKind::Mm || default_init)
        gate("no_revisit", po.no_revisit);

      InducedOrder io = induce_order(ts);
      checks["induced_order"] = json_of(ts, io);
      if (zero_probe)
        gate("induced_order_inapplicable", !io.applicable);
      else
        gate("induced_order", io.applicable && io.descends);

      if (cyc.acyclic) {
        BoundsReport b = check_bounds(g, *algo, ts);
        checks["bounds"] = json_of(b);
        if (default_init) gate("bounds", b.ok);
      }

      if (fresh && default_init) {
        int64_t rounds = measure_sync_rounds(g, *algo);
        Json r;
        r["sync_rounds"] = rounds;
        if (kind == AlgoKind::Sp) {
          int64_t bound = g.hop_diameter().value() + 1;
          r["round_bound"] = bound;
          gate("sync_rounds", rounds >= 0 && rounds <= bound);
        } else if (kind == AlgoKind::Dc) {
          int64_t bound = g.max_degree() + 1;
          r["round_bound"] = bound;
          gate("sync_rounds", rounds >= 0 && rounds <= bound);
        }
        checks["rounds"] = r;
      }
      doc["checks"] = checks;
    }

    bool all = true;
    Json gj = Json::array();
    for (auto& [name, pass] : gates) {
      all = all && pass;
      Json e;
      e["name"] = name;
      e["pass"] = pass;
      gj.push_back(e);
    }
    doc["gates"] = gj;
    doc["verdict"] = all ? "pass" : "fail";
    write_out(o.out_path, doc.dump(2) + "\n");
    return all ? 0 : 1;
  } catch (const BudgetError& e) {
    doc["error"] = e.what();
    doc["partial"] = true;
    doc["verdict"] = "budget";
    write_out(o.out_path, doc.dump(2) + "\n");
    return 1;
  }
}

// ---------------------------------------------------------------------------

struct BenchOpts {
  std::string algo, graphs, out_path;
  int64_t budget = 0;
};

int cmd_bench(const BenchOpts& o) {
  std::vector<std::pair<std::string, std::string>> rows;  // algo, graph
  auto family = [&](const std::string& a,
                    const std::vector<std::string>& gs) {
    for (const std::string& g : gs) rows.push_back({a, g});
  };
  if (!o.graphs.empty()) {
    std::vector<std::string> gs;
    std::stringstream ss(o.graphs);
    std::string tok;
    while (std::getline(ss, tok, ',')) gs.push_back(tok);
    std::vector<std::string> algos =
        o.algo.empty() ? std::vector<std::string>{"dc", "sp", "mm"}
                       : std::vector<std::string>{o.algo};
    for (const std::string& a : algos) family(a, gs);
  } else {
    std::vector<std::string> paths = {"path1", "path2", "path3", "path4",
                                      "path5", "path6"};
    std::vector<std::string> stars = {"star3", "star4", "star5", "star6"};
    std::vector<std::string> dc = paths;
    dc.insert(dc.end(), stars.begin(), stars.end());
    for (const char* c : {"clique2", "clique3", "clique4", "clique5"})
      dc.push_back(c);
    for (int s = 1; s <= 10; s++) dc.push_back("gnp5-" + std::to_string(s));
    std::vector<std::string> sp = paths;
    sp.insert(sp.end(), stars.begin(), stars.end());
    sp.push_back("fig3");
    std::vector<std::string> mm = paths;
    mm.insert(mm.end(), stars.begin(), stars.end());
    mm.push_back("fig4");
    if (o.algo.empty() || o.algo == "dc") family("dc", dc);
    if (o.algo.empty() || o.algo == "sp") family("sp", sp);
    if (o.algo.empty() || o.algo == "mm") family("mm", mm);
  }

  std::ostringstream csv;
  csv << "graph,algo,n,m,model,states,longest_moves,move_bound,"
         "generic_bound,sync_rounds,round_bound,ok\n";
  bool all_ok = true;
  for (auto& [aname, gname] : rows) {
    Graph g = load_graph(gname);
    AlgoKind kind = algo_from_name(aname);
    std::optional<NodeId> dest;
    if (kind == AlgoKind::Sp) dest = g.dest() ? *g.dest() : NodeId(g.n() - 1);
    auto algo = make_algorithm(kind, g, dest);
    ScanResult scan =
        scan_longest(g, *algo, {algo->default_init(g)}, {o.budget});
    int64_t sync = measure_sync_rounds(g, *algo);
    std::optional<int64_t> move_bound, round_bound;
    if (kind == AlgoKind::Dc) {
      move_bound = 2 * int64_t(g.m());
      round_bound = g.max_degree() + 1;
    } else if (kind == AlgoKind::Mm) {
      move_bound = 2 * int64_t(g.n());
    } else {
      round_bound = g.hop_diameter().value() + 1;
    }
    int64_t generic = 0;
    for (NodeId i = 0; i < g.n(); i++)
      generic += int64_t(algo->local_domain(g, i).size()) - 1;
    bool ok = scan.acyclic && scan.sinks_optimal &&
              scan.longest <= generic &&
              (!move_bound || scan.longest <= *move_bound) &&
              (!round_bound || (sync >= 0 && sync <= *round_bound));
    all_ok = all_ok && ok;
    csv << gname << "," << aname << "," << g.n() << "," << g.m() << ",fresh,"
        << scan.states << "," << scan.longest << ","
        << (move_bound ? std::to_string(*move_bound) : "") << "," << generic
        << "," << sync << ","
        << (round_bound ? std::to_string(*round_bound) : "") << ","
        << (ok ? "pass" : "fail") << "\n";
  }
  write_out(o.out_path, csv.str());
  return all_ok ? 0 : 1;
}

// ---------------------------------------------------------------------------

int cmd_graph(const std::string& alias, const std::string& out_path) {
  Graph g = load_graph(alias);
  write_out(out_path, g.to_file());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"guarded-command runner and state-space checker for "
               "self-stabilizing graph algorithms"};
  app.require_subcommand(1);
  int rc = 0;

  RunOpts ro;
  CLI::App* run_cmd = app.add_subcommand("run", "execute one seeded run");
  run_cmd->add_option("--algo", ro.algo, "dc | sp | mm")->required();
  run_cmd->add_option("--graph", ro.graph, "graph file or alias")->required();
  run_cmd->add_option("--scheduler", ro.scheduler,
                      "central | distributed | synchronous");
  run_cmd->add_option("--policy", ro.policy, "random | fixed");
  run_cmd->add_option("--async", ro.async_model, "fresh | amr | aa");
  run_cmd->add_option("--channel-bound", ro.channel_bound,
                      "amr: max queued publications per channel");
  run_cmd->add_option("--window", ro.window,
                      "aa: observable publication window");
  run_cmd->add_option("--delivery", ro.delivery, "amr: random | all | none");
  run_cmd->add_option("--seed", ro.seed, "run seed");
  run_cmd->add_option("--max-moves", ro.max_moves, "move budget");
  run_cmd->add_option("--init", ro.init, "default | zero | file:PATH");
  run_cmd->add_option("--dest", ro.dest, "sp destination (1-based)");
  run_cmd->add_option("--trace", ro.trace_path, "trace output path (JSONL)");
  run_cmd->callback([&] { rc = cmd_run(ro); });

  VerifyOpts vo;
  CLI::App* ver = app.add_subcommand(
      "verify", "explore the state space and check every property");
  ver->add_option("--algo", vo.algo, "dc | sp | mm")->required();
  ver->add_option("--graph", vo.graph, "graph file or alias")->required();
  ver->add_option("--init", vo.init, "default | zero | all | file:PATH");
  ver->add_option("--async", vo.async_model, "fresh | amr | aa");
  ver->add_option("--channel-bound", vo.channel_bound,
                  "amr: max queued publications per channel");
  ver->add_option("--window", vo.window, "aa: observable publication window");
  ver->add_option("--dest", vo.dest, "sp destination (1-based)");
  ver->add_option("--budget", vo.budget, "state budget override");
  ver->add_option("--out", vo.out_path, "verdict output path (JSON)");
  ver->add_option("--dot", vo.dot_path, "state-space export path (DOT)");
  ver->callback([&] { rc = cmd_verify(vo); });

  BenchOpts bo;
  CLI::App* bench = app.add_subcommand(
      "bench", "measure moves and rounds against the stated bounds");
  bench->add_option("--algo", bo.algo, "restrict to one algorithm");
  bench->add_option("--graphs", bo.graphs, "comma-separated graph list");
  bench->add_option("--budget", bo.budget, "state budget override");
  bench->add_option("--out", bo.out_path, "CSV output path");
  bench->callback([&] { rc = cmd_bench(bo); });

  std::string alias, gout;
  CLI::App* gr = app.add_subcommand("graph", "print a built-in graph");
  gr->add_option("alias", alias, "graph alias")->required();
  gr->add_option("--out", gout, "output path");
  gr->callback([&] { rc = cmd_graph(alias, gout); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
