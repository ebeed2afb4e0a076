#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "dagw/dc.hpp"
#include "dagw/errors.hpp"
#include "support/graph_enum.hpp"
#include "support/oracles.hpp"

using namespace dagw;

namespace {

View view_of(const GlobalState& s, NodeId reader) {
  return View{reader, std::span<const LocalState>(s.locals)};
}

const DcState& cliq_of(const GlobalState& s, NodeId i) {
  return std::get<DcState>(s.locals[i]);
}

}  // namespace

TEST_CASE("default init seeds every node with its own singleton") {
  Graph g = Graph::from_alias("fig1");
  DominantClique dc;
  GlobalState s = dc.default_init(g);
  CHECK(format_global(s) == "<{1},{2},{3}>");
  CHECK(rank_of(g, dc, s) == ExtInt::of(3));
}

TEST_CASE("state values on the triangle-free triple") {
  Graph g = Graph::from_alias("fig1");
  DominantClique dc;
  GlobalState s = dc.default_init(g);
  // room to grow: each singleton can still reach a 2-clique
  for (NodeId i = 0; i < 3; i++) CHECK(dc.state_value(g, i, s) == ExtInt::of(1));
  // a clique that omits the owner scores degree + 1
  GlobalState bad = parse_global(AlgoKind::Dc, 3, "<{2},{2},{3}>");
  CHECK(dc.state_value(g, 0, bad) == ExtInt::of(3));
  // settled nodes score zero
  GlobalState done = parse_global(AlgoKind::Dc, 3, "<{1,2},{1,2},{1,3}>");
  for (NodeId i = 0; i < 3; i++)
    CHECK(dc.state_value(g, i, done) == ExtInt::of(0));
  CHECK(dc.optimal(g, done));
  CHECK_FALSE(dc.optimal(g, s));
  CHECK_FALSE(dc.optimal(g, bad));
}

TEST_CASE("guard fires while the clique can grow or is invalid") {
  Graph g = Graph::from_alias("fig1");
  DominantClique dc;
  GlobalState s = dc.default_init(g);
  for (NodeId i = 0; i < 3; i++) CHECK(dc.impedensable(g, view_of(s, i)));
  GlobalState done = parse_global(AlgoKind::Dc, 3, "<{1,2},{1,2},{1,3}>");
  for (NodeId i = 0; i < 3; i++)
    CHECK_FALSE(dc.impedensable(g, view_of(done, i)));
  GlobalState bad = parse_global(AlgoKind::Dc, 3, "<{2},{2},{3}>");
  CHECK(dc.impedensable(g, view_of(bad, 0)));
}

TEST_CASE("actions grow by one member; invalid cliques collapse") {
  Graph g = Graph::from_alias("fig1");
  DominantClique dc;
  GlobalState s = dc.default_init(g);
  auto acts = dc.actions(g, view_of(s, 0));
  REQUIRE(acts.size() == 2);
  CHECK(format_local(acts[0]) == "{1,2}");
  CHECK(format_local(acts[1]) == "{1,3}");
  CHECK(format_local(dc.deterministic_action(g, view_of(s, 0))) == "{1,2}");

  GlobalState bad = parse_global(AlgoKind::Dc, 3, "<{2},{2},{3}>");
  auto reset = dc.actions(g, view_of(bad, 0));
  REQUIRE(reset.size() == 1);
  CHECK(format_local(reset[0]) == "{1}");
  CHECK(format_local(dc.deterministic_action(g, view_of(bad, 0))) == "{1}");
}

TEST_CASE("guards ignore everything but the node's own state") {
  Graph g = Graph::from_alias("gnp5-1");
  DominantClique dc;
  GlobalState s = dc.default_init(g);
  GlobalState scrambled = s;
  for (NodeId j = 1; j < g.n(); j++)
    scrambled.locals[j] = DcState{{0, 1, 2, 3, 4}};  // nonsense for them
  CHECK(dc.impedensable(g, view_of(s, 0)) ==
        dc.impedensable(g, view_of(scrambled, 0)));
  CHECK(dc.actions(g, view_of(s, 0)) == dc.actions(g, view_of(scrambled, 0)));
}

TEST_CASE("helper queries match brute-force clique search") {
  for (int n = 2; n <= 4; n++)
    for (const Graph& g : graph_enum::nonisomorphic_connected(n)) {
      DominantClique dc;
      for (NodeId i = 0; i < g.n(); i++)
        for (const LocalState& ls : dc.local_domain(g, i)) {
          const DcState& own = std::get<DcState>(ls);
          if (!own.contains(i) || !dc_is_clique(g, own.cliq)) continue;
          int best = 0;
          for (const auto& c : oracle::cliques_containing(g, i))
            if (std::includes(c.begin(), c.end(), own.cliq.begin(),
                              own.cliq.end()))
              best = std::max(best, int(c.size()));
          CHECK(dc_max_clique_containing(g, i, own, 16) == best);
          CHECK(dc_addable(g, i, own).empty() ==
                oracle::is_dominant_clique(g, own.cliq));
        }
    }
}

TEST_CASE("optimal means every clique is dominant") {
  Graph g = Graph::from_alias("fig1");
  DominantClique dc;
  std::vector<std::vector<LocalState>> dom;
  for (NodeId i = 0; i < 3; i++) dom.push_back(dc.local_domain(g, i));
  CHECK(dom[0].size() == 8);
  CHECK(dom[1].size() == 4);
  CHECK(dom[2].size() == 4);
  int optimal_count = 0;
  for (const LocalState& a : dom[0])
    for (const LocalState& b : dom[1])
      for (const LocalState& c : dom[2]) {
        GlobalState s{AlgoKind::Dc, {a, b, c}};
        bool want = true;
        for (NodeId i = 0; i < 3; i++) {
          const DcState& own = cliq_of(s, i);
          want = want && own.contains(i) &&
                 oracle::is_dominant_clique(g, own.cliq);
        }
        CHECK(dc.optimal(g, s) == want);
        optimal_count += want;
      }
  CHECK(optimal_count == 2);  // the two settled assignments
}

TEST_CASE("full clique graphs settle on the whole node set") {
  Graph k = Graph::from_alias("clique5");
  DominantClique dc;
  GlobalState s{AlgoKind::Dc, {}};
  for (NodeId i = 0; i < 5; i++) s.locals.push_back(DcState{{0, 1, 2, 3, 4}});
  CHECK(dc.optimal(k, s));
  CHECK(dc.state_value(k, 0, dc.default_init(k)) == ExtInt::of(4));
}

TEST_CASE("degree cap rejects oversized searches") {
  Graph k = Graph::from_alias("clique4");
  DominantClique capped(2);
  GlobalState s = capped.default_init(k);
  CHECK_THROWS_AS(capped.state_value(k, 0, s), ConfigError);
}

TEST_CASE("local invariant checks") {
  Graph g = Graph::from_alias("fig1");
  DominantClique dc;
  CHECK_NOTHROW(dc.check_local(g, 0, DcState{{0, 1}}));
  CHECK_THROWS_AS(dc.check_local(g, 0, DcState{{1, 0}}), ConfigError);
  CHECK_THROWS_AS(dc.check_local(g, 0, DcState{{0, 0}}), ConfigError);
  CHECK_THROWS_AS(dc.check_local(g, 0, DcState{{0, 5}}), ConfigError);
  CHECK_THROWS_AS(dc.check_local(g, 1, DcState{{1, 2}}), ConfigError);
  CHECK_THROWS_AS(dc.check_local(g, 0, MmState{kTop}), ConfigError);
}
