#pragma once
#include <json.hpp>
#include <string>

#include "dagw/checker.hpp"
#include "dagw/executor.hpp"

namespace dagw {

// Insertion-ordered documents keep the output layout stable and the bytes
// reproducible across runs.
using Json = nlohmann::ordered_json;

// One JSON document per line: a header, every recorded event, a closing
// summary record.
std::string trace_jsonl(const Graph& g, const Algorithm& a,
                        const RunConfig& cfg, const GlobalState& init,
                        const RunResult& res);

Json json_of(const TransitionSystem& ts);
Json json_of(const TransitionSystem& ts, const CycleReport& r);
Json json_of(const TransitionSystem& ts, const DagInductionReport& r);
Json json_of(const RankDescentReport& r);
Json json_of(const TransitionSystem& ts, const PartialOrderReport& r);
Json json_of(const TransitionSystem& ts, const InducedOrder& io);
Json json_of(const BoundsReport& b);
Json json_of(const TransitionSystem& ts, const ProbeReport& p);

}  // namespace dagw
