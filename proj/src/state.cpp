#include "dagw/state.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "dagw/errors.hpp"

namespace dagw {

namespace {

void put_u8(std::string& b, uint8_t v) { b.push_back(char(v)); }
void put_u32(std::string& b, uint32_t v) {
  for (int s = 0; s < 32; s += 8) b.push_back(char((v >> s) & 0xff));
}
void put_u64(std::string& b, uint64_t v) {
  for (int s = 0; s < 64; s += 8) b.push_back(char((v >> s) & 0xff));
}

struct Cursor {
  std::string_view b;
  size_t pos = 0;
  uint8_t u8() {
    if (pos + 1 > b.size()) throw ParseError("truncated state encoding");
    return uint8_t(b[pos++]);
  }
  uint32_t u32() {
    if (pos + 4 > b.size()) throw ParseError("truncated state encoding");
    uint32_t v = 0;
    for (int s = 0; s < 32; s += 8) v |= uint32_t(uint8_t(b[pos++])) << s;
    return v;
  }
  uint64_t u64() {
    if (pos + 8 > b.size()) throw ParseError("truncated state encoding");
    uint64_t v = 0;
    for (int s = 0; s < 64; s += 8) v |= uint64_t(uint8_t(b[pos++])) << s;
    return v;
  }
};

constexpr uint32_t kTopU32 = 0xffffffffu;

void put_node(std::string& b, NodeId v, bool wide) {
  if (wide)
    put_u32(b, v == kTop ? kTopU32 : uint32_t(v));
  else
    put_u8(b, v == kTop ? 0xff : uint8_t(v));
}

NodeId get_node(Cursor& c, bool wide) {
  if (wide) {
    uint32_t v = c.u32();
    return v == kTopU32 ? kTop : NodeId(v);
  }
  uint8_t v = c.u8();
  return v == 0xff ? kTop : NodeId(v);
}

}  // namespace

std::string_view algo_name(AlgoKind k) {
  switch (k) {
    case AlgoKind::Dc: return "dc";
    case AlgoKind::Sp: return "sp";
    case AlgoKind::Mm: return "mm";
  }
  return "?";
}

AlgoKind algo_from_name(std::string_view name) {
  if (name == "dc") return AlgoKind::Dc;
  if (name == "sp") return AlgoKind::Sp;
  if (name == "mm") return AlgoKind::Mm;
  throw ConfigError("unknown algorithm '" + std::string(name) +
                    "' (expected dc, sp, or mm)");
}

bool DcState::contains(NodeId v) const {
  return std::binary_search(cliq.begin(), cliq.end(), v);
}

AlgoKind kind_of(const LocalState& ls) {
  return AlgoKind(uint8_t(ls.index()));
}

void encode_local(std::string& buf, const LocalState& ls, bool wide) {
  if (const auto* dc = std::get_if<DcState>(&ls)) {
    if (wide)
      put_u32(buf, uint32_t(dc->cliq.size()));
    else
      put_u8(buf, uint8_t(dc->cliq.size()));
    for (NodeId v : dc->cliq) put_node(buf, v, wide);
  } else if (const auto* sp = std::get_if<SpState>(&ls)) {
    put_u32(buf, sp->parent == kTop ? kTopU32 : uint32_t(sp->parent));
    put_u64(buf, sp->dist == kInfDist ? ~uint64_t(0) : uint64_t(sp->dist));
  } else {
    const auto& mm = std::get<MmState>(ls);
    put_u32(buf, mm.match == kTop ? kTopU32 : uint32_t(mm.match));
  }
}

size_t decode_local(std::string_view bytes, size_t pos, AlgoKind kind,
                    bool wide, LocalState& out) {
  Cursor c{bytes, pos};
  switch (kind) {
    case AlgoKind::Dc: {
      DcState dc;
      uint32_t sz = wide ? c.u32() : c.u8();
      dc.cliq.reserve(sz);
      for (uint32_t k = 0; k < sz; k++) dc.cliq.push_back(get_node(c, wide));
      out = std::move(dc);
      break;
    }
    case AlgoKind::Sp: {
      SpState sp;
      uint32_t p = c.u32();
      sp.parent = p == kTopU32 ? kTop : NodeId(p);
      uint64_t d = c.u64();
      sp.dist = d == ~uint64_t(0) ? kInfDist : int64_t(d);
      out = sp;
      break;
    }
    case AlgoKind::Mm: {
      uint32_t p = c.u32();
      out = MmState{p == kTopU32 ? kTop : NodeId(p)};
      break;
    }
  }
  return c.pos;
}

std::string encode_global(const GlobalState& s) {
  std::string buf;
  put_u8(buf, uint8_t(s.kind));
  put_u32(buf, uint32_t(s.locals.size()));
  bool wide = s.locals.size() > 254;
  for (const LocalState& ls : s.locals) encode_local(buf, ls, wide);
  return buf;
}

GlobalState decode_global(std::string_view bytes) {
  Cursor c{bytes};
  GlobalState s;
  s.kind = AlgoKind(c.u8());
  uint32_t n = c.u32();
  bool wide = n > 254;
  s.locals.reserve(n);
  for (uint32_t i = 0; i < n; i++) {
    switch (s.kind) {
      case AlgoKind::Dc: {
        DcState dc;
        uint32_t sz = wide ? c.u32() : c.u8();
        dc.cliq.reserve(sz);
        for (uint32_t k = 0; k < sz; k++) dc.cliq.push_back(get_node(c, wide));
        s.locals.emplace_back(std::move(dc));
        break;
      }
      case AlgoKind::Sp: {
        SpState sp;
        uint32_t p = c.u32();
        sp.parent = p == kTopU32 ? kTop : NodeId(p);
        uint64_t d = c.u64();
        sp.dist = d == ~uint64_t(0) ? kInfDist : int64_t(d);
        s.locals.emplace_back(sp);
        break;
      }
      case AlgoKind::Mm: {
        uint32_t p = c.u32();
        s.locals.emplace_back(MmState{p == kTopU32 ? kTop : NodeId(p)});
        break;
      }
    }
  }
  if (c.pos != bytes.size()) throw ParseError("trailing bytes in state encoding");
  return s;
}

std::string to_hex(std::string_view bytes) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 0xf]);
  }
  return out;
}

std::string from_hex(std::string_view hex) {
  auto nyb = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw ParseError("bad hex digit");
  };
  if (hex.size() % 2) throw ParseError("odd hex length");
  std::string out;
  out.reserve(hex.size() / 2);
  for (size_t i = 0; i < hex.size(); i += 2)
    out.push_back(char(nyb(hex[i]) * 16 + nyb(hex[i + 1])));
  return out;
}

std::string format_local(const LocalState& ls) {
  std::ostringstream os;
  if (const auto* dc = std::get_if<DcState>(&ls)) {
    os << "{";
    for (size_t k = 0; k < dc->cliq.size(); k++)
      os << (k ? "," : "") << (dc->cliq[k] + 1);
    os << "}";
  } else if (const auto* sp = std::get_if<SpState>(&ls)) {
    os << "(";
    if (sp->parent == kTop)
      os << "T";
    else
      os << (sp->parent + 1);
    os << ",";
    if (sp->dist == kInfDist)
      os << "inf";
    else
      os << sp->dist;
    os << ")";
  } else {
    const auto& mm = std::get<MmState>(ls);
    if (mm.match == kTop)
      os << "T";
    else
      os << (mm.match + 1);
  }
  return os.str();
}

std::string format_global(const GlobalState& s) {
  std::string out = "<";
  for (size_t i = 0; i < s.locals.size(); i++) {
    if (i) out += ",";
    out += format_local(s.locals[i]);
  }
  return out + ">";
}

namespace {

std::string_view strip(std::string_view v) {
  while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
  while (!v.empty() && (v.back() == ' ' || v.back() == '\t')) v.remove_suffix(1);
  return v;
}

NodeId parse_node_token(std::string_view tok) {
  tok = strip(tok);
  if (tok == "T") return kTop;
  int64_t v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size() || v < 1)
    throw ParseError("bad node token '" + std::string(tok) + "'");
  return NodeId(v - 1);
}

}  // namespace

LocalState parse_local(AlgoKind kind, std::string_view text) {
  text = strip(text);
  switch (kind) {
    case AlgoKind::Dc: {
      if (text.size() < 2 || text.front() != '{' || text.back() != '}')
        throw ParseError("clique state must look like {1,2}");
      DcState dc;
      std::string_view body = text.substr(1, text.size() - 2);
      while (!strip(body).empty()) {
        size_t comma = body.find(',');
        std::string_view tok = comma == std::string_view::npos
                                   ? body
                                   : body.substr(0, comma);
        NodeId v = parse_node_token(tok);
        if (v == kTop) throw ParseError("T is not a clique member");
        dc.cliq.push_back(v);
        if (comma == std::string_view::npos) break;
        body.remove_prefix(comma + 1);
        if (strip(body).empty())
          throw ParseError("trailing comma in clique state");
      }
      std::sort(dc.cliq.begin(), dc.cliq.end());
      dc.cliq.erase(std::unique(dc.cliq.begin(), dc.cliq.end()), dc.cliq.end());
      return dc;
    }
    case AlgoKind::Sp: {
      if (text.size() < 2 || text.front() != '(' || text.back() != ')')
        throw ParseError("path state must look like (2,4) or (T,inf)");
      std::string_view body = text.substr(1, text.size() - 2);
      size_t comma = body.find(',');
      if (comma == std::string_view::npos)
        throw ParseError("path state must have two fields");
      SpState sp;
      sp.parent = parse_node_token(body.substr(0, comma));
      std::string_view dtok = strip(body.substr(comma + 1));
      if (dtok == "inf") {
        sp.dist = kInfDist;
      } else {
        int64_t d = 0;
        auto [p, ec] = std::from_chars(dtok.data(), dtok.data() + dtok.size(), d);
        if (ec != std::errc{} || p != dtok.data() + dtok.size() || d < 0)
          throw ParseError("bad distance '" + std::string(dtok) + "'");
        sp.dist = d;
      }
      return sp;
    }
    case AlgoKind::Mm:
      return MmState{parse_node_token(text)};
  }
  throw ParseError("unknown algorithm kind");
}

GlobalState parse_global(AlgoKind kind, int n, std::string_view text) {
  text = strip(text);
  if (text.size() < 2 || text.front() != '<' || text.back() != '>')
    throw ParseError("global state must look like <...,...>");
  std::string_view body = text.substr(1, text.size() - 2);
  GlobalState s;
  s.kind = kind;
  size_t start = 0;
  int depth = 0;
  for (size_t k = 0; k <= body.size(); k++) {
    if (k < body.size() && (body[k] == '{' || body[k] == '(')) depth++;
    if (k < body.size() && (body[k] == '}' || body[k] == ')')) depth--;
    if (k == body.size() || (body[k] == ',' && depth == 0)) {
      s.locals.push_back(parse_local(kind, body.substr(start, k - start)));
      start = k + 1;
    }
  }
  if (int(s.locals.size()) != n)
    throw ParseError("expected " + std::to_string(n) + " node states, got " +
                     std::to_string(s.locals.size()));
  return s;
}

}  // namespace dagw
