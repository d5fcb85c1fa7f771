#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "beepsim/coins.hpp"
#include "beepsim/graph.hpp"
#include "beepsim/trace.hpp"
#include "beepsim/types.hpp"

namespace beepsim {

// One communication slot: a listener hears a beep iff at least one of its
// graph neighbors beeps; beepers get no outcome. Nodes without an action
// (nullopt) are inactive and stay silent.
std::vector<SlotOutcome> run_slot(const Graph& g,
                                  const std::vector<std::optional<SlotAction>>& actions);

// How beeps propagate for one slot. The native channel applies the
// OR-over-neighbors rule directly; the MAC adapter reproduces it through
// timed broadcast windows.
class ChannelModel {
 public:
  virtual ~ChannelModel() = default;
  // Sets heard[v] = 1 for every node with at least one beeping neighbor.
  // The engine reads heard[] for listeners only.
  virtual void resolve_slot(std::uint64_t slot, const Graph& g,
                            const std::vector<NodeId>& beepers,
                            std::vector<std::uint8_t>& heard) = 0;
  virtual std::uint64_t elapsed(std::uint64_t slots) const { return slots; }
};

class BeepChannel final : public ChannelModel {
 public:
  void resolve_slot(std::uint64_t, const Graph& g, const std::vector<NodeId>& beepers,
                    std::vector<std::uint8_t>& heard) override;
};

// Slot-synchronous per-node state machine driven by the engine. All hooks are
// invoked in ascending node order; coin draws are per-node streams, so the
// order never changes the values drawn.
class SlotProtocol {
 public:
  virtual ~SlotProtocol() = default;

  virtual NodeId node_count() const = 0;
  // Whether the node takes part in the coming slot. Must be false forever
  // once the node has decided.
  virtual bool active(NodeId v) const = 0;
  virtual SlotAction choose_action(NodeId v, CoinSource& coins) = 0;
  // Outcome delivery for nodes that listened this slot.
  virtual void deliver(NodeId v, bool heard, CoinSource& coins) = 0;
  // End-of-slot bookkeeping: phase transitions, decisions. `snapshots` is
  // null unless full-verbosity tracing wants interval-boundary state.
  virtual void end_slot(std::uint64_t slot, CoinSource& coins,
                        std::vector<DecisionEvent>& decisions,
                        std::vector<NodeSnapshot>* snapshots) = 0;

  virtual Decision decision(NodeId v) const = 0;
  // Serialized parameter block for the trace header.
  virtual std::string params_json() const { return ""; }
  virtual const char* name() const = 0;
};

// Runs `proto` in slot lockstep until every node has decided (or gone
// permanently inactive) or `max_slots` slots have been consumed. Throws
// std::invalid_argument for max_slots == 0 and std::logic_error if the
// protocol breaks the engine contract (an action from a removed node, a
// second decision for a node).
struct RunResult {
  Trace trace;
  Verdict verdict;
  std::uint64_t slots = 0;
  std::uint64_t elapsed_time = 0;
  bool truncated = false;
};

RunResult run_protocol(const Graph& g, SlotProtocol& proto, CoinSource& coins,
                       std::uint64_t max_slots, TraceVerbosity verbosity,
                       ChannelModel* channel = nullptr);

}  // namespace beepsim
