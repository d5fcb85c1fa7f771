#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "beepsim/graph.hpp"
#include "beepsim/types.hpp"

namespace beepsim {

enum class TraceVerbosity : std::uint8_t { DecisionsOnly, Full };

inline const char* to_string(TraceVerbosity v) {
  return v == TraceVerbosity::Full ? "full" : "decisions";
}
TraceVerbosity verbosity_from_string(const std::string& s);

struct DecisionEvent {
  NodeId node = 0;
  Decision decision = Decision::Undecided;
  bool operator==(const DecisionEvent&) const = default;
};

// Per-node state captured at interval boundaries (full verbosity only).
// At an estimation-interval end, p_exp/c/b are the values the interval ran
// with, before the desire-level update. At a marking-interval end, p_exp is
// the updated level and `marked` is meaningful.
struct NodeSnapshot {
  NodeId node = 0;
  std::uint32_t p_exp = 1;
  std::uint32_t c = 0;
  std::uint32_t b = 0;
  Phase phase = Phase::EstInterval;
  bool marked = false;
  bool operator==(const NodeSnapshot&) const = default;
};

struct SlotRecord {
  std::uint64_t slot = 0;
  std::vector<NodeId> beepers;           // full verbosity
  std::vector<NodeId> heard;             // listeners that heard a beep (full)
  std::vector<DecisionEvent> decisions;  // always recorded
  std::vector<NodeSnapshot> snapshots;   // interval boundaries (full)
  bool operator==(const SlotRecord&) const = default;
};

struct TraceHeader {
  int schema = 1;
  std::string protocol;  // "beep" | "local" | "beep-over-mac"
  NodeId n = 0;
  std::vector<std::pair<NodeId, NodeId>> edges;
  std::uint64_t seed = 0;
  std::string config_hash;
  std::string params_json;  // protocol parameter block, serialized
  TraceVerbosity verbosity = TraceVerbosity::Full;
  std::uint64_t slots = 0;         // slots (or rounds) consumed
  std::uint64_t elapsed_time = 0;  // equals slots natively; f_prog * slots over MAC
  bool truncated = false;
  bool operator==(const TraceHeader&) const = default;
};

struct Trace {
  TraceHeader header;
  std::vector<SlotRecord> records;
  bool operator==(const Trace&) const = default;

  Graph graph() const { return Graph::from_edges(header.n, header.edges); }
};

// Final per-node outcome of a run.
struct Verdict {
  std::vector<Decision> decision;
  std::vector<std::int64_t> decision_slot;  // -1 while undecided

  explicit Verdict(NodeId n = 0) : decision(n, Decision::Undecided), decision_slot(n, -1) {}
  NodeId node_count() const { return static_cast<NodeId>(decision.size()); }
  bool all_decided() const;
  bool operator==(const Verdict&) const = default;
};

// Rebuilds the verdict from a trace's decision events. Throws on duplicate
// decisions for a node.
Verdict verdict_from_trace(const Trace& trace);

// Line-delimited JSON: one header line, then one line per slot record.
std::string serialize_trace(const Trace& trace);
Trace parse_trace(const std::string& jsonl);

}  // namespace beepsim
