#include "dagw/graph.hpp"

#include <algorithm>
#include <charconv>
#include <queue>
#include <set>
#include <sstream>

#include "dagw/errors.hpp"
#include "dagw/rng.hpp"

namespace dagw {

namespace {

// Hard cap on instance size; this is a desk-scale analysis tool and the
// adjacency matrix is dense.
constexpr int kMaxNodes = 4096;

int64_t parse_i64(std::string_view tok, const char* what) {
  int64_t v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size())
    throw ParseError(std::string("bad ") + what + ": '" + std::string(tok) + "'");
  return v;
}

}  // namespace

Graph::Graph(int n, std::vector<EdgeSpec> edges, std::string name,
             std::vector<int64_t> ids, std::optional<NodeId> dest)
    : n_(n), name_(std::move(name)), dest_(dest) {
  if (n < 1 || n > kMaxNodes)
    throw ParseError("node count must be in [1, " + std::to_string(kMaxNodes) +
                     "], got " + std::to_string(n));
  if (ids.empty()) {
    ids_.resize(n);
    for (int i = 0; i < n; i++) ids_[i] = i;
  } else {
    if (int(ids.size()) != n) throw ParseError("id table length != n");
    ids_ = std::move(ids);
    std::set<int64_t> seen(ids_.begin(), ids_.end());
    if (int(seen.size()) != n) throw ParseError("duplicate node id");
  }
  if (dest_ && (*dest_ < 0 || *dest_ >= n))
    throw ParseError("dest out of range");

  mat_.assign(size_t(n) * n, 0);
  adj_.assign(n, {});
  for (const EdgeSpec& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
      throw ParseError("edge endpoint out of range");
    if (e.u == e.v) throw ParseError("self-loop is not allowed");
    if (e.w < 1) throw ParseError("edge weight must be positive");
    auto key = std::minmax(e.u, e.v);
    auto it = w_.find(key);
    if (it != w_.end()) {
      if (it->second != e.w)
        throw ParseError("duplicate edge with conflicting weight");
      continue;  // exact duplicate, keep one copy
    }
    w_[key] = e.w;
    mat_[size_t(e.u) * n + e.v] = mat_[size_t(e.v) * n + e.u] = 1;
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
    max_w_ = std::max(max_w_, e.w);
  }
  m_ = int(w_.size());
  for (auto& a : adj_) std::sort(a.begin(), a.end());

  adj2_.assign(n, {});
  for (NodeId i = 0; i < n; i++) {
    std::set<NodeId> s(adj_[i].begin(), adj_[i].end());
    for (NodeId j : adj_[i])
      for (NodeId k : adj_[j])
        if (k != i) s.insert(k);
    adj2_[i].assign(s.begin(), s.end());
  }
}

int64_t Graph::weight(NodeId u, NodeId v) const {
  auto it = w_.find(std::minmax(u, v));
  if (it == w_.end()) throw ConfigError("weight of a non-edge requested");
  return it->second;
}

int Graph::max_degree() const {
  int d = 0;
  for (const auto& a : adj_) d = std::max(d, int(a.size()));
  return d;
}

bool Graph::connected() const {
  std::vector<char> vis(n_, 0);
  std::queue<NodeId> q;
  q.push(0);
  vis[0] = 1;
  int cnt = 1;
  while (!q.empty()) {
    NodeId u = q.front();
    q.pop();
    for (NodeId v : adj_[u])
      if (!vis[v]) {
        vis[v] = 1;
        cnt++;
        q.push(v);
      }
  }
  return cnt == n_;
}

std::vector<NodeId> Graph::within(NodeId i, int x) const {
  if (x < 1) throw ConfigError("radius must be >= 1");
  std::vector<int> depth(n_, -1);
  depth[i] = 0;
  std::queue<NodeId> q;
  q.push(i);
  std::vector<NodeId> out;
  while (!q.empty()) {
    NodeId u = q.front();
    q.pop();
    if (depth[u] == x) continue;
    for (NodeId v : adj_[u])
      if (depth[v] < 0) {
        depth[v] = depth[u] + 1;
        out.push_back(v);
        q.push(v);
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ExtInt> Graph::distances_from(NodeId src) const {
  std::vector<int64_t> d(n_, -1);
  using Item = std::pair<int64_t, NodeId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
  pq.push({0, src});
  while (!pq.empty()) {
    auto [du, u] = pq.top();
    pq.pop();
    if (d[u] >= 0) continue;
    d[u] = du;
    for (NodeId v : adj_[u])
      if (d[v] < 0) pq.push({du + weight(u, v), v});
  }
  std::vector<ExtInt> out(n_);
  for (int i = 0; i < n_; i++)
    out[i] = d[i] < 0 ? ExtInt::infinity() : ExtInt::of(d[i]);
  return out;
}

ExtInt Graph::distance(NodeId u, NodeId v) const { return distances_from(u)[v]; }

ExtInt Graph::hop_diameter() const {
  ExtInt best = ExtInt::of(0);
  for (NodeId s = 0; s < n_; s++) {
    std::vector<int> depth(n_, -1);
    depth[s] = 0;
    std::queue<NodeId> q;
    q.push(s);
    while (!q.empty()) {
      NodeId u = q.front();
      q.pop();
      for (NodeId v : adj_[u])
        if (depth[v] < 0) {
          depth[v] = depth[u] + 1;
          q.push(v);
        }
    }
    for (int i = 0; i < n_; i++) {
      if (depth[i] < 0) return ExtInt::infinity();
      if (ExtInt::of(depth[i]) > best) best = ExtInt::of(depth[i]);
    }
  }
  return best;
}

ExtInt Graph::weighted_diameter() const {
  ExtInt best = ExtInt::of(0);
  for (NodeId s = 0; s < n_; s++)
    for (ExtInt d : distances_from(s)) {
      if (d.is_inf()) return ExtInt::infinity();
      if (d > best) best = d;
    }
  return best;
}

std::string Graph::to_file() const {
  std::ostringstream os;
  os << "n " << n_ << "\n";
  for (int i = 0; i < n_; i++)
    if (ids_[i] != i) os << "id " << (i + 1) << " " << ids_[i] << "\n";
  for (const auto& [key, w] : w_) {
    os << "e " << (key.first + 1) << " " << (key.second + 1);
    if (w != 1) os << " " << w;
    os << "\n";
  }
  if (dest_) os << "dest " << (*dest_ + 1) << "\n";
  return os.str();
}

Graph Graph::parse(std::string_view text, std::string name) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  bool have_n = false;
  int n = 0;
  std::vector<EdgeSpec> edges;
  std::vector<int64_t> ids;
  std::optional<NodeId> dest;

  auto fail = [&](const std::string& msg) -> void {
    throw ParseError("line " + std::to_string(lineno) + ": " + msg);
  };

  while (std::getline(in, line)) {
    lineno++;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok) || tok[0] == '#') continue;
    std::vector<std::string> rest;
    std::string t;
    while (ls >> t) rest.push_back(t);
    if (!have_n) {
      if (tok != "n") fail("expected 'n <count>' as the first directive");
      if (rest.size() != 1) fail("'n' takes one argument");
      int64_t v = parse_i64(rest[0], "node count");
      if (v < 1 || v > kMaxNodes) fail("node count out of range");
      n = int(v);
      ids.assign(n, 0);
      for (int i = 0; i < n; i++) ids[i] = i;
      have_n = true;
    } else if (tok == "n") {
      fail("duplicate 'n' directive");
    } else if (tok == "e") {
      if (rest.size() != 2 && rest.size() != 3) fail("'e' takes 2 or 3 arguments");
      int64_t u = parse_i64(rest[0], "endpoint");
      int64_t v = parse_i64(rest[1], "endpoint");
      if (u < 1 || u > n || v < 1 || v > n) fail("edge endpoint out of range");
      int64_t w = rest.size() == 3 ? parse_i64(rest[2], "weight") : 1;
      if (w < 1) fail("edge weight must be positive");
      edges.push_back({NodeId(u - 1), NodeId(v - 1), w});
    } else if (tok == "id") {
      if (rest.size() != 2) fail("'id' takes 2 arguments");
      int64_t idx = parse_i64(rest[0], "node index");
      if (idx < 1 || idx > n) fail("id node index out of range");
      ids[idx - 1] = parse_i64(rest[1], "numeric id");
    } else if (tok == "dest") {
      if (rest.size() != 1) fail("'dest' takes one argument");
      int64_t v = parse_i64(rest[0], "dest");
      if (v < 1 || v > n) fail("dest out of range");
      if (dest && *dest != NodeId(v - 1)) fail("conflicting 'dest' directives");
      dest = NodeId(v - 1);
    } else {
      fail("unknown directive '" + tok + "'");
    }
  }
  if (!have_n) throw ParseError("missing 'n' directive");
  try {
    return Graph(n, std::move(edges), std::move(name), std::move(ids), dest);
  } catch (const ParseError& e) {
    throw ParseError(std::string(e.what()));
  }
}

Graph Graph::generate(std::string_view family, int n, uint64_t seed) {
  if (n < 1) throw ConfigError("generated graph needs n >= 1");
  std::vector<EdgeSpec> edges;
  std::string name = std::string(family) + std::to_string(n);
  if (family == "path") {
    for (NodeId i = 0; i + 1 < n; i++) edges.push_back({i, NodeId(i + 1), 1});
  } else if (family == "star") {
    // The hub gets the highest index so that it also carries the highest id.
    for (NodeId i = 0; i + 1 < n; i++) edges.push_back({i, NodeId(n - 1), 1});
  } else if (family == "clique") {
    for (NodeId u = 0; u < n; u++)
      for (NodeId v = u + 1; v < n; v++) edges.push_back({u, v, 1});
  } else if (family == "gnp") {
    SplitMix64 rng(seed);
    for (NodeId u = 0; u < n; u++)
      for (NodeId v = u + 1; v < n; v++)
        if (rng.coin()) edges.push_back({u, v, 1});
    name = "gnp" + std::to_string(n) + "-" + std::to_string(seed);
  } else {
    throw ConfigError("unknown graph family '" + std::string(family) + "'");
  }
  return Graph(n, std::move(edges), std::move(name));
}

Graph Graph::from_alias(std::string_view alias) {
  auto num_suffix = [&](std::string_view pre) -> std::optional<int64_t> {
    if (alias.substr(0, pre.size()) != pre) return std::nullopt;
    std::string_view rest = alias.substr(pre.size());
    if (rest.empty()) return std::nullopt;
    for (char c : rest)
      if (c < '0' || c > '9') return std::nullopt;
    return parse_i64(rest, "alias size");
  };

  if (alias == "fig1")
    return Graph(3, {{0, 1, 1}, {0, 2, 1}}, "fig1");
  if (alias == "fig3")
    return Graph(4, {{0, 1, 2}, {0, 2, 3}, {1, 3, 2}, {2, 3, 1}}, "fig3", {},
                 NodeId(3));
  if (alias == "fig4")
    return Graph(4, {{0, 3, 1}, {1, 3, 1}, {2, 3, 1}}, "fig4");
  for (std::string_view fam : {"path", "star", "clique"})
    if (auto sz = num_suffix(fam)) return generate(fam, int(*sz));
  if (alias.substr(0, 3) == "gnp") {
    std::string_view rest = alias.substr(3);
    size_t dash = rest.find('-');
    if (dash != std::string_view::npos) {
      int64_t n = parse_i64(rest.substr(0, dash), "alias size");
      int64_t seed = parse_i64(rest.substr(dash + 1), "alias seed");
      return generate("gnp", int(n), uint64_t(seed));
    }
  }
  throw ParseError("unknown graph alias '" + std::string(alias) + "'");
}

}  // namespace dagw
