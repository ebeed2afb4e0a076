#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dagw/errors.hpp"
#include "dagw/mm.hpp"
#include "support/graph_enum.hpp"
#include "support/oracles.hpp"

using namespace dagw;

namespace {

View view_of(const GlobalState& s, NodeId reader) {
  return View{reader, std::span<const LocalState>(s.locals)};
}

std::vector<NodeId> pointers(const GlobalState& s) {
  std::vector<NodeId> out;
  for (const LocalState& ls : s.locals)
    out.push_back(std::get<MmState>(ls).match);
  return out;
}

}  // namespace

TEST_CASE("default init leaves everyone unmatched") {
  Graph g = Graph::from_alias("star4");
  MaximalMatching mm;
  CHECK(format_global(mm.default_init(g)) == "<T,T,T,T>");
}

TEST_CASE("macro truth table on a proposal chain") {
  Graph g = Graph::from_alias("path3");
  MaximalMatching mm;
  GlobalState s = parse_global(AlgoKind::Mm, 3, "<T,1,T>");  // 2 proposes to 1
  MmMacros a = mm_macros(g, view_of(s, 0));
  CHECK(a.i_pointed);
  CHECK_FALSE(a.matchable);
  CHECK_FALSE(a.wrongly_matched);
  MmMacros b = mm_macros(g, view_of(s, 1));
  CHECK_FALSE(b.unsatisfied);  // already pointing, partner still open
  MmMacros c = mm_macros(g, view_of(s, 2));
  CHECK(c.else_pointed);  // a live proposal two hops away
  CHECK_FALSE(c.matchable);
}

TEST_CASE("wrongly matched nodes retract and score highest") {
  Graph g = Graph::from_alias("path4");
  MaximalMatching mm;
  GlobalState s = parse_global(AlgoKind::Mm, 4, "<2,1,2,3>");
  MmMacros c = mm_macros(g, view_of(s, 2));
  CHECK(c.wrongly_matched);
  MmMacros d = mm_macros(g, view_of(s, 3));
  CHECK(d.wrongly_matched);
  auto acts = mm.actions(g, view_of(s, 2));
  REQUIRE(acts.size() == 1);
  CHECK(format_local(acts[0]) == "T");
  CHECK(mm.state_value(g, 2, s) == ExtInt::of(3));
  CHECK(mm.state_value(g, 0, s) == ExtInt::of(0));
}

TEST_CASE("the state-value ladder walks 2, 1, 0") {
  Graph g = Graph::from_alias("path2");
  MaximalMatching mm;
  GlobalState open = parse_global(AlgoKind::Mm, 2, "<T,T>");
  CHECK(mm.state_value(g, 0, open) == ExtInt::of(2));   // matchable
  GlobalState prop = parse_global(AlgoKind::Mm, 2, "<T,1>");
  CHECK(mm.state_value(g, 0, prop) == ExtInt::of(1));   // pointed at
  GlobalState done = parse_global(AlgoKind::Mm, 2, "<2,1>");
  CHECK(mm.state_value(g, 0, done) == ExtInt::of(0));   // settled
  CHECK(rank_of(g, mm, open) == ExtInt::of(4));
}

TEST_CASE("the star roots rank 8 and collapses in two moves") {
  Graph g = Graph::from_alias("star4");
  MaximalMatching mm;
  GlobalState s = mm.default_init(g);
  CHECK(rank_of(g, mm, s) == ExtInt::of(8));
  // only the hub (highest id) may open
  for (NodeId i = 0; i < 3; i++) CHECK_FALSE(mm.impedensable(g, view_of(s, i)));
  CHECK(mm.impedensable(g, view_of(s, 3)));
  auto acts = mm.actions(g, view_of(s, 3));
  CHECK(acts.size() == 3);  // any leaf
  s.locals[3] = acts[0];    // hub proposes to leaf 1
  CHECK(rank_of(g, mm, s) == ExtInt::of(1));
  // now only the proposed-to leaf may act, and it accepts
  for (NodeId i = 1; i < 4; i++) CHECK_FALSE(mm.impedensable(g, view_of(s, i)));
  REQUIRE(mm.impedensable(g, view_of(s, 0)));
  auto back = mm.actions(g, view_of(s, 0));
  REQUIRE(back.size() == 1);
  CHECK(format_local(back[0]) == "4");
  s.locals[0] = back[0];
  CHECK(rank_of(g, mm, s) == ExtInt::of(0));
  CHECK(mm.optimal(g, s));
}

TEST_CASE("a live proposal vetoes bystanders within two hops") {
  Graph g = Graph::from_alias("path4");
  MaximalMatching mm;
  GlobalState s = parse_global(AlgoKind::Mm, 4, "<T,T,T,3>");
  CHECK(mm.impedensable(g, view_of(s, 2)));        // the proposed-to node
  CHECK_FALSE(mm.impedensable(g, view_of(s, 1)));  // vetoed by the proposal
  CHECK_FALSE(mm.impedensable(g, view_of(s, 0)));  // outranked
  CHECK_FALSE(mm.impedensable(g, view_of(s, 3)));  // its proposal is pending
}

TEST_CASE("priority picks the highest id among the unsatisfied") {
  Graph g = Graph::from_alias("path3");
  MaximalMatching mm;
  GlobalState s = mm.default_init(g);
  CHECK_FALSE(mm.impedensable(g, view_of(s, 0)));
  CHECK_FALSE(mm.impedensable(g, view_of(s, 1)));
  CHECK(mm.impedensable(g, view_of(s, 2)));
  // flipping the id order flips who goes first
  Graph r = Graph::parse("n 3\nid 1 9\ne 1 2\ne 2 3\n");
  CHECK(mm.impedensable(r, view_of(s, 0)));
  CHECK_FALSE(mm.impedensable(r, view_of(s, 2)));
}

TEST_CASE("optimal coincides with the maximal-matching oracle") {
  for (int n = 2; n <= 4; n++)
    for (const Graph& g : graph_enum::nonisomorphic_connected(n)) {
      MaximalMatching mm;
      std::vector<std::vector<LocalState>> dom;
      for (NodeId i = 0; i < g.n(); i++) dom.push_back(mm.local_domain(g, i));
      std::vector<size_t> idx(g.n(), 0);
      while (true) {
        GlobalState s{AlgoKind::Mm, {}};
        for (NodeId i = 0; i < g.n(); i++) s.locals.push_back(dom[i][idx[i]]);
        CHECK(mm.optimal(g, s) == oracle::is_maximal_matching(g, pointers(s)));
        int k = g.n() - 1;
        while (k >= 0 && ++idx[k] == dom[k].size()) idx[k--] = 0;
        if (k < 0) break;
      }
    }
}

TEST_CASE("guards read at most three hops") {
  Graph g = Graph::from_alias("path6");
  MaximalMatching mm;
  GlobalState s = parse_global(AlgoKind::Mm, 6, "<T,T,T,T,T,T>");
  GlobalState far = s;
  far.locals[4] = MmState{5};  // four hops from node 1
  far.locals[5] = MmState{4};
  CHECK(mm.impedensable(g, view_of(s, 0)) ==
        mm.impedensable(g, view_of(far, 0)));
  MmMacros a = mm_macros(g, view_of(s, 0));
  MmMacros b = mm_macros(g, view_of(far, 0));
  CHECK(a.matchable == b.matchable);
  CHECK(a.else_pointed == b.else_pointed);
}

TEST_CASE("domains and local invariants") {
  Graph g = Graph::from_alias("path3");
  MaximalMatching mm;
  CHECK(mm.local_domain(g, 0).size() == 2);
  CHECK(mm.local_domain(g, 1).size() == 3);
  CHECK_NOTHROW(mm.check_local(g, 0, MmState{1}));
  CHECK_THROWS_AS(mm.check_local(g, 0, MmState{2}), ConfigError);
  CHECK_THROWS_AS(mm.check_local(g, 0, DcState{{0}}), ConfigError);
}
