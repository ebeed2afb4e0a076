#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>

#include "dagw/checker.hpp"
#include "dagw/errors.hpp"

using namespace dagw;

namespace {

TransitionSystem explore_alias(const char* algo, const char* alias,
                               bool sweep = false) {
  Graph g = Graph::from_alias(alias);
  auto a = make_algorithm(algo_from_name(algo), g, g.dest());
  std::vector<GlobalState> inits =
      sweep ? all_inits(g, *a) : std::vector<GlobalState>{a->default_init(g)};
  return explore(g, *a, inits);
}

}  // namespace

TEST_CASE("state budget resolves request, environment, default in order") {
  unsetenv("DAGW_BUDGET");
  CHECK(state_budget(0) == 10000000);
  CHECK(state_budget(42) == 42);
  setenv("DAGW_BUDGET", "1234", 1);
  CHECK(state_budget(0) == 1234);
  CHECK(state_budget(7) == 7);
  setenv("DAGW_BUDGET", "junk", 1);
  CHECK_THROWS_AS(state_budget(0), ConfigError);
  unsetenv("DAGW_BUDGET");
}

TEST_CASE("the triangle-free triple explores to twelve states") {
  TransitionSystem ts = explore_alias("dc", "fig1");
  CHECK(ts.n_states() == 12);
  CHECK(ts.edges.size() == 20);
  CHECK(ts.roots == std::vector<int>{0});
  auto sinks = ts.sinks();
  REQUIRE(sinks.size() == 2);
  for (int s : sinks) {
    CHECK(ts.opt[s]);
    CHECK_FALSE(ts.enabled[s]);
    CHECK(ts.rank[s] == ExtInt::of(0));
  }
  CHECK(ts.rank[0] == ExtInt::of(3));
  CHECK(format_global(ts.truth[0]) == "<{1},{2},{3}>");
  CHECK(ts.find(ts.truth[0]) == 0);
  CHECK(ts.find(parse_global(AlgoKind::Dc, 3, "<{1,2},{1,2},{1,3}>")) >= 0);
  CHECK(ts.find(parse_global(AlgoKind::Dc, 3, "<{2},{2},{3}>")) == -1);
}

TEST_CASE("the weighted square explores to nine states with two sinks") {
  TransitionSystem ts = explore_alias("sp", "fig3");
  CHECK(ts.n_states() == 9);
  CHECK(ts.edges.size() == 11);
  auto sinks = ts.sinks();
  REQUIRE(sinks.size() == 2);
  std::vector<std::string> got;
  for (int s : sinks) got.push_back(format_global(ts.truth[s]));
  CHECK(got == std::vector<std::string>{"<(2,4),(4,2),(4,1),(4,0)>",
                                        "<(3,4),(4,2),(4,1),(4,0)>"});
  // the seven landmark snapshots all appear among the nine
  for (const char* snap : {
           "<(T,inf),(T,inf),(T,inf),(T,inf)>",
           "<(T,inf),(T,inf),(T,inf),(4,0)>",
           "<(T,inf),(4,2),(T,inf),(4,0)>",
           "<(T,inf),(T,inf),(4,1),(4,0)>",
           "<(T,inf),(4,2),(4,1),(4,0)>",
           "<(2,4),(4,2),(4,1),(4,0)>",
           "<(3,4),(4,2),(4,1),(4,0)>",
       })
    CHECK(ts.find(parse_global(AlgoKind::Sp, 4, snap)) >= 0);
}

TEST_CASE("the star explores to seven states and three matchings") {
  TransitionSystem ts = explore_alias("mm", "star4");
  CHECK(ts.n_states() == 7);
  CHECK(ts.edges.size() == 6);
  CHECK(ts.sinks().size() == 3);
  for (int s : ts.sinks()) CHECK(ts.opt[s]);
  CHECK(ts.rank[0] == ExtInt::of(8));
}

TEST_CASE("explore dedupes repeated roots and honors the budget") {
  Graph g = Graph::from_alias("fig1");
  auto a = make_algorithm(AlgoKind::Dc, g);
  GlobalState init = a->default_init(g);
  TransitionSystem ts = explore(g, *a, {init, init, init});
  CHECK(ts.roots == std::vector<int>{0});
  CHECK(ts.n_states() == 12);
  CHECK_THROWS_AS(explore(g, *a, {init}, {5, false}), BudgetError);
}

TEST_CASE("deterministic-only exploration keeps one action per node") {
  Graph g = Graph::from_alias("fig1");
  auto a = make_algorithm(AlgoKind::Dc, g);
  TransitionSystem ts = explore(g, *a, {a->default_init(g)}, {0, true});
  // node 1 no longer branches between its two growth targets
  CHECK(ts.n_states() < 12);
  for (int s : ts.sinks()) CHECK(ts.opt[s]);
}

TEST_CASE("the sweep over every initial state covers the whole domain") {
  Graph g = Graph::from_alias("fig1");
  auto a = make_algorithm(AlgoKind::Dc, g);
  std::vector<GlobalState> inits = all_inits(g, *a);
  CHECK(inits.size() == 128);  // 8 * 4 * 4 local choices
  // odometer order: the last node varies fastest
  CHECK(format_global(inits[0]) == "<{},{},{}>");
  CHECK(format_global(inits[1]) == "<{},{},{1}>");
  TransitionSystem ts = explore(g, *a, inits);
  CHECK(ts.n_states() == 128);
  CHECK(ts.roots.size() == 128);
  for (int s : ts.sinks()) CHECK(ts.opt[s]);
  CHECK_THROWS_AS(all_inits(g, *a, {100, false}), BudgetError);

  Graph p3 = Graph::from_alias("path3");
  auto mm = make_algorithm(AlgoKind::Mm, p3);
  CHECK(all_inits(p3, *mm).size() == 12);  // 2 * 3 * 2 pointer choices
}

TEST_CASE("cycle detection agrees with the topological cross-check") {
  TransitionSystem good = explore_alias("dc", "fig1");
  CycleReport cg = find_cycle(good);
  CHECK(cg.acyclic);
  CHECK(cg.methods_agree);
  CHECK(cg.cycle.empty());

  TransitionSystem bad = make_fixture(4, 2, {{0, 1}, {1, 2}, {2, 1}, {2, 3}},
                                      {0, 0, 0, 1});
  CycleReport cb = find_cycle(bad);
  CHECK_FALSE(cb.acyclic);
  CHECK(cb.methods_agree);
  REQUIRE(cb.cycle.size() >= 3);
  CHECK(cb.cycle.front() == cb.cycle.back());
  CHECK_THROWS_AS(longest_moves(bad), std::logic_error);
  PartialOrderReport po = check_partial_order(bad);
  CHECK_FALSE(po.acyclic);
}

TEST_CASE("longest move path on the known systems") {
  CHECK(longest_moves(explore_alias("dc", "fig1")) == 3);
  CHECK(longest_moves(explore_alias("sp", "fig3")) == 4);
  CHECK(longest_moves(explore_alias("mm", "star4")) == 2);
  CHECK(longest_moves(explore_alias("dc", "fig1", true)) == 6);
}

TEST_CASE("the scanning sweep matches full exploration") {
  for (const char* spec : {"dc fig1", "sp fig3", "mm star4", "dc gnp5-2",
                           "mm path5"}) {
    std::string s(spec);
    size_t sp = s.find(' ');
    Graph g = Graph::from_alias(s.substr(sp + 1));
    auto a = make_algorithm(algo_from_name(s.substr(0, sp)), g, g.dest());
    TransitionSystem ts = explore(g, *a, {a->default_init(g)});
    ScanResult scan = scan_longest(g, *a, {a->default_init(g)});
    CHECK(scan.states == ts.n_states());
    CHECK(scan.longest == longest_moves(ts));
    CHECK(scan.acyclic);
    CHECK(scan.sinks_optimal);
    CHECK(scan.sink_count == int64_t(ts.sinks().size()));
  }
  Graph g = Graph::from_alias("clique4");
  auto a = make_algorithm(AlgoKind::Dc, g);
  ScanResult scan = scan_longest(g, *a, {a->default_init(g)});
  CHECK(scan.states == 4096);
  CHECK(scan.longest == 12);  // exactly twice the edge count
  CHECK_THROWS_AS(scan_longest(g, *a, {a->default_init(g)}, {100, false}),
                  BudgetError);
}

TEST_CASE("guard agreement holds for the clique and path rules") {
  for (const char* spec : {"dc fig1", "sp fig3"}) {
    std::string s(spec);
    size_t sp = s.find(' ');
    Graph g = Graph::from_alias(s.substr(sp + 1));
    auto a = make_algorithm(algo_from_name(s.substr(0, sp)), g, g.dest());
    TransitionSystem ts = explore(g, *a, {a->default_init(g)});
    DagInductionReport r = check_dag_inducing(g, *a, ts);
    CHECK(r.all());
  }
  // the matching rules keep covers and silence but lose the singling-out
  // property as soon as several sinks exist: a proposed-to leaf is obliged
  // to act although another sink keeps it unmatched
  Graph s4 = Graph::from_alias("star4");
  auto mm = make_algorithm(AlgoKind::Mm, s4);
  TransitionSystem ts = explore(s4, *mm, {mm->default_init(s4)});
  DagInductionReport r = check_dag_inducing(s4, *mm, ts);
  CHECK(r.covers);
  CHECK(r.silent);
  CHECK_FALSE(r.pinpoints);
}

TEST_CASE("the matching guard cannot single out nodes across the sweep") {
  Graph g = Graph::from_alias("path3");
  auto a = make_algorithm(AlgoKind::Mm, g);
  TransitionSystem ts = explore(g, *a, all_inits(g, *a));
  DagInductionReport r = check_dag_inducing(g, *a, ts);
  CHECK(r.covers);
  CHECK(r.silent);
  CHECK_FALSE(r.pinpoints);
  REQUIRE(r.pinpoints_w.state >= 0);
  REQUIRE(r.pinpoints_w.other >= 0);
  // the witness pair really collides on the flagged node's local value
  const GlobalState& s = ts.truth[r.pinpoints_w.state];
  const GlobalState& o = ts.truth[r.pinpoints_w.other];
  CHECK(ts.opt[r.pinpoints_w.other]);
  CHECK_FALSE(ts.opt[r.pinpoints_w.state]);
  CHECK(s.locals[r.pinpoints_w.node] == o.locals[r.pinpoints_w.node]);
  View v{r.pinpoints_w.node, s.locals};
  CHECK(a->impedensable(g, v));
}

TEST_CASE("rank descent across move edges") {
  RankDescentReport good = check_rank_descent(explore_alias("dc", "fig1"));
  CHECK(good.holds);
  CHECK(good.checked == 20);
  // an ill-matched chain can push its rank back up
  RankDescentReport bad =
      check_rank_descent(explore_alias("mm", "path4", true));
  CHECK_FALSE(bad.holds);
  CHECK(bad.bad_edge >= 0);
}

TEST_CASE("local values never come back on the example systems") {
  for (const char* spec : {"dc fig1", "sp fig3", "mm star4"}) {
    std::string s(spec);
    size_t sp = s.find(' ');
    Graph g = Graph::from_alias(s.substr(sp + 1));
    auto a = make_algorithm(algo_from_name(s.substr(0, sp)), g, g.dest());
    TransitionSystem ts = explore(g, *a, {a->default_init(g)});
    PartialOrderReport r = check_partial_order(ts);
    CHECK(r.acyclic);
    CHECK(r.no_revisit);
  }
}

TEST_CASE("a withdrawn proposal can be re-proposed across the sweep") {
  TransitionSystem ts = explore_alias("mm", "path4", true);
  PartialOrderReport r = check_partial_order(ts);
  CHECK(r.acyclic);
  CHECK_FALSE(r.no_revisit);
  CHECK(r.node == 3);  // the tail node points, retracts, points again
  REQUIRE(r.path.size() >= 2);
  // endpoints of the witness hold the same local value for that node
  const GlobalState& first = ts.truth[r.path.front()];
  const GlobalState& last = ts.truth[r.path.back()];
  CHECK_FALSE(first == last);
}

TEST_CASE("induced ranks descend and scale with the node count") {
  // chain: one move per level, rank grows by n per level
  TransitionSystem chain = make_fixture(2, 3, {{0, 1}}, {0, 1});
  InducedOrder io = induce_order(chain);
  CHECK(io.applicable);
  CHECK(io.descends);
  CHECK(io.rank == std::vector<int64_t>{3, 0});
  CHECK(io.node_value(0) == Rational(1, 1));

  // diamond: two incomparable middles, the root clears both
  TransitionSystem dia =
      make_fixture(4, 3, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}, {0, 0, 0, 1});
  InducedOrder id = induce_order(dia);
  CHECK(id.applicable);
  CHECK(id.rank == std::vector<int64_t>{6, 3, 3, 0});
  CHECK(id.node_value(0) == Rational(2, 1));

  // a suboptimal sink forfeits the construction
  TransitionSystem stuck = make_fixture(2, 3, {{0, 1}}, {0, 0});
  InducedOrder is = induce_order(stuck);
  CHECK_FALSE(is.applicable);
  CHECK(is.bad_sink == 1);

  InducedOrder real = induce_order(explore_alias("dc", "fig1"));
  CHECK(real.applicable);
  CHECK(real.descends);
  CHECK(real.rank[0] == 9);
  CHECK(real.node_value(0) == Rational(3, 1));
}

TEST_CASE("move bounds on the example systems") {
  Graph f1 = Graph::from_alias("fig1");
  auto dc = make_algorithm(AlgoKind::Dc, f1);
  TransitionSystem ts = explore(f1, *dc, {dc->default_init(f1)});
  BoundsReport b = check_bounds(f1, *dc, ts);
  CHECK(b.longest == 3);
  CHECK(b.algo_bound == 4);  // twice the edge count
  CHECK(b.generic_bound == 13);
  CHECK(b.ok);

  TransitionSystem sweep = explore(f1, *dc, all_inits(f1, *dc));
  BoundsReport bs = check_bounds(f1, *dc, sweep);
  CHECK(bs.longest == 6);
  CHECK_FALSE(bs.ok);  // adversarial inits overshoot the clean-start bound

  Graph s4 = Graph::from_alias("star4");
  auto mm = make_algorithm(AlgoKind::Mm, s4);
  TransitionSystem mts = explore(s4, *mm, {mm->default_init(s4)});
  BoundsReport mb = check_bounds(s4, *mm, mts);
  CHECK(mb.algo_bound == 8);  // twice the node count
  CHECK(mb.ok);

  Graph f3 = Graph::from_alias("fig3");
  auto sp = make_algorithm(AlgoKind::Sp, f3, f3.dest());
  BoundsReport sb = check_bounds(f3, *sp, explore(f3, *sp, {sp->default_init(f3)}));
  CHECK_FALSE(sb.algo_bound.has_value());
  CHECK(sb.generic_bound == 220);
  CHECK(sb.ok);
}

TEST_CASE("synchronous round measurements") {
  Graph p5 = Graph::from_alias("path5");
  auto sp = make_algorithm(AlgoKind::Sp, p5, NodeId(4));
  CHECK(measure_sync_rounds(p5, *sp) == 5);
  Graph f1 = Graph::from_alias("fig1");
  auto dc = make_algorithm(AlgoKind::Dc, f1);
  CHECK(measure_sync_rounds(f1, *dc) == 1);
  Graph s4 = Graph::from_alias("star4");
  auto mm = make_algorithm(AlgoKind::Mm, s4);
  CHECK(measure_sync_rounds(s4, *mm) == 2);
}

TEST_CASE("the extended systems stay faithful to their projections") {
  Graph f1 = Graph::from_alias("fig1");
  auto dc = make_algorithm(AlgoKind::Dc, f1);
  // fresh model: the extended exploration is the plain one
  TransitionSystem fresh =
      explore_extended(f1, *dc, {dc->default_init(f1)}, AsyncModel::fresh());
  CHECK(fresh.n_states() == 12);

  Graph s4 = Graph::from_alias("star4");
  auto mm = make_algorithm(AlgoKind::Mm, s4);
  TransitionSystem amr = explore_extended(s4, *mm, {mm->default_init(s4)},
                                          AsyncModel::amr(1));
  CHECK(amr.n_states() == 121);
  bool has_delivery = false;
  for (const auto& e : amr.edges) has_delivery = has_delivery || !e.move;
  CHECK(has_delivery);
  for (int s : amr.sinks()) {
    CHECK(amr.opt[s]);  // quiescent queues leave a true matching behind
    CHECK_FALSE(amr.enabled[s]);
  }
  CHECK(find_cycle(amr).acyclic);

  Graph f3 = Graph::from_alias("fig3");
  auto sp = make_algorithm(AlgoKind::Sp, f3, f3.dest());
  TransitionSystem aa = explore_extended(f3, *sp, {sp->default_init(f3)},
                                         AsyncModel::aa(2));
  CHECK(aa.n_states() == 13);
  for (const auto& e : aa.edges) CHECK(e.move);  // observation edges only
  for (int s : aa.sinks()) CHECK(aa.opt[s]);
  CHECK(find_cycle(aa).acyclic);
}

TEST_CASE("the window-model probe classifies and replays") {
  for (const char* alias : {"star4", "path4"}) {
    Graph g = Graph::from_alias(alias);
    auto mm = make_algorithm(AlgoKind::Mm, g);
    AsyncModel model = AsyncModel::aa(2);
    TransitionSystem ext =
        explore_extended(g, *mm, {mm->default_init(g)}, model);
    ProbeReport p = probe_async(g, *mm, model, ext, 2 * g.n());
    CHECK(p.outcome == ProbeOutcome::Exhausted);
    CHECK(p.replay_ok);
    CHECK(p.longest <= p.bound);
    CHECK(p.states == ext.n_states());
  }
  CHECK(probe_outcome_name(ProbeOutcome::Revisit) == "revisit");
  CHECK(probe_outcome_name(ProbeOutcome::Cycle) == "cycle");
}
