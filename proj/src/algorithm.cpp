#include "dagw/algorithm.hpp"

#include "dagw/dc.hpp"
#include "dagw/errors.hpp"
#include "dagw/mm.hpp"
#include "dagw/sp.hpp"

namespace dagw {

ExtInt rank_of(const Graph& g, const Algorithm& a, const GlobalState& s) {
  ExtInt sum = ExtInt::of(0);
  for (NodeId i = 0; i < g.n(); i++) sum += a.state_value(g, i, s);
  return sum;
}

GlobalState apply_move(const Graph& g, const Algorithm& a, const GlobalState& s,
                       NodeId i, const LocalState& nl) {
  if (i < 0 || i >= g.n()) throw ConfigError("moving node out of range");
  if (int(s.locals.size()) != g.n())
    throw ConfigError("global state length does not match the graph");
  a.check_local(g, i, nl);
  GlobalState next = s;
  next.locals[i] = nl;
  return next;
}

std::unique_ptr<Algorithm> make_algorithm(AlgoKind kind, const Graph& g,
                                          std::optional<NodeId> dest,
                                          int dc_degree_cap) {
  switch (kind) {
    case AlgoKind::Dc:
      if (dest)
        throw ConfigError("only the path algorithm takes a destination");
      return std::make_unique<DominantClique>(dc_degree_cap);
    case AlgoKind::Sp:
      if (!dest) throw ConfigError("the path algorithm needs a destination");
      return std::make_unique<ShortestPath>(g, *dest);
    case AlgoKind::Mm:
      if (dest)
        throw ConfigError("only the path algorithm takes a destination");
      return std::make_unique<MaximalMatching>();
  }
  throw ConfigError("unknown algorithm kind");
}

}  // namespace dagw
