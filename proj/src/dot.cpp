#include "dagw/dot.hpp"

#include <sstream>

namespace dagw {

std::string to_dot(const TransitionSystem& ts, const std::string& title) {
  std::ostringstream os;
  os << "digraph \"" << (title.empty() ? "system" : title) << "\" {\n";
  os << "  rankdir=TB;\n";
  os << "  node [shape=ellipse, fontsize=10];\n";
  for (int s = 0; s < ts.n_states(); s++) {
    os << "  s" << s << " [label=\"";
    if (size_t(s) < ts.truth.size())
      os << format_global(ts.truth[s]);
    else
      os << "#" << s;
    if (!ts.rank.empty()) os << "\\nrank " << ts.rank[s].str();
    os << "\"";
    if (ts.sink[s]) os << ", peripheries=2";
    os << "];\n";
  }
  for (const TransitionSystem::Edge& e : ts.edges) {
    os << "  s" << e.from << " -> s" << e.to << " [label=\"v" << (e.node + 1)
       << "\"";
    if (!e.move) os << ", style=dashed";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace dagw
