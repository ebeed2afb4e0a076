#pragma once
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dagw/graph.hpp"

namespace dagw {

enum class AlgoKind : uint8_t { Dc = 0, Sp = 1, Mm = 2 };

std::string_view algo_name(AlgoKind k);
AlgoKind algo_from_name(std::string_view name);

// Distance sentinel inside SpState; converted to ExtInt for arithmetic.
inline constexpr int64_t kInfDist = std::numeric_limits<int64_t>::max();

// Dominant clique: the set of nodes this node believes forms its clique.
// Always kept sorted ascending (canonical form).
struct DcState {
  std::vector<NodeId> cliq;
  bool operator==(const DcState&) const = default;
  bool contains(NodeId v) const;
};

// Shortest path: parent pointer (kTop = none) and distance estimate.
struct SpState {
  NodeId parent = kTop;
  int64_t dist = kInfDist;
  bool operator==(const SpState&) const = default;
};

// Maximal matching: partner pointer (kTop = unmatched and not proposing).
struct MmState {
  NodeId match = kTop;
  bool operator==(const MmState&) const = default;
};

using LocalState = std::variant<DcState, SpState, MmState>;

AlgoKind kind_of(const LocalState& ls);

struct GlobalState {
  AlgoKind kind = AlgoKind::Dc;
  std::vector<LocalState> locals;
  bool operator==(const GlobalState&) const = default;
};

// Canonical byte encoding: injective for a fixed graph and algorithm, stable
// across runs and platforms (explicit little-endian fields). Used as the
// visited-set key during exploration and as the state key in JSON output.
void encode_local(std::string& buf, const LocalState& ls, bool wide);
// Reads one local value of the given kind from bytes starting at pos;
// returns the position one past it.
size_t decode_local(std::string_view bytes, size_t pos, AlgoKind kind,
                    bool wide, LocalState& out);
std::string encode_global(const GlobalState& s);
GlobalState decode_global(std::string_view bytes);

std::string to_hex(std::string_view bytes);
std::string from_hex(std::string_view hex);

// Human-readable forms, 1-based node numbers, "T" for the empty pointer,
// "inf" for the unknown distance: "{1,2}" / "(2,4)" / "(T,inf)" / "T" / "3".
std::string format_local(const LocalState& ls);
std::string format_global(const GlobalState& s);
LocalState parse_local(AlgoKind kind, std::string_view text);
// Inverse of format_global for a known kind and node count:
// "<{1},{2},{3}>" / "<(T,inf),(2,4)>" / "<T,3>".
GlobalState parse_global(AlgoKind kind, int n, std::string_view text);

}  // namespace dagw
