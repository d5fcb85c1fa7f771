#include "beepsim/channel.hpp"

#include <algorithm>

namespace beepsim {

namespace {

void mark_neighbors_of_beepers(const Graph& g, const std::vector<NodeId>& beepers,
                               std::vector<std::uint8_t>& heard) {
  for (NodeId b : beepers)
    for (NodeId u : g.neighbors(b)) heard[u] = 1;
}

}  // namespace

std::vector<SlotOutcome> run_slot(const Graph& g,
                                  const std::vector<std::optional<SlotAction>>& actions) {
  if (actions.size() != g.node_count())
    throw std::invalid_argument("actions must cover every node (nullopt for inactive)");
  std::vector<NodeId> beepers;
  for (NodeId v = 0; v < g.node_count(); ++v)
    if (actions[v] == SlotAction::Beep) beepers.push_back(v);
  std::vector<std::uint8_t> heard(g.node_count(), 0);
  mark_neighbors_of_beepers(g, beepers, heard);
  std::vector<SlotOutcome> out(g.node_count(), SlotOutcome::None);
  for (NodeId v = 0; v < g.node_count(); ++v)
    if (actions[v] == SlotAction::Listen)
      out[v] = heard[v] ? SlotOutcome::HeardBeep : SlotOutcome::Silence;
  return out;
}

void BeepChannel::resolve_slot(std::uint64_t, const Graph& g, const std::vector<NodeId>& beepers,
                               std::vector<std::uint8_t>& heard) {
  mark_neighbors_of_beepers(g, beepers, heard);
}

RunResult run_protocol(const Graph& g, SlotProtocol& proto, CoinSource& coins,
                       std::uint64_t max_slots, TraceVerbosity verbosity,
                       ChannelModel* channel) {
  if (max_slots == 0) throw std::invalid_argument("max_slots must be positive");
  const NodeId n = g.node_count();
  if (proto.node_count() != n || coins.node_count() != n)
    throw std::invalid_argument("graph, protocol and coin source disagree on node count");

  BeepChannel native;
  if (!channel) channel = &native;
  const bool full = verbosity == TraceVerbosity::Full;

  RunResult result;
  result.verdict = Verdict(n);
  std::vector<NodeId> beepers, listeners;
  std::vector<std::uint8_t> heard(n, 0);
  std::vector<DecisionEvent> decisions;
  std::vector<NodeSnapshot> snapshots;

  std::uint64_t slot = 0;
  bool any_active = true;
  for (; slot < max_slots; ++slot) {
    beepers.clear();
    listeners.clear();
    any_active = false;
    for (NodeId v = 0; v < n; ++v) {
      if (!proto.active(v)) continue;
      if (result.verdict.decision[v] != Decision::Undecided)
        throw std::logic_error("action supplied for removed node " + std::to_string(v));
      any_active = true;
      if (proto.choose_action(v, coins) == SlotAction::Beep)
        beepers.push_back(v);
      else
        listeners.push_back(v);
    }
    if (!any_active) break;

    std::fill(heard.begin(), heard.end(), 0);
    channel->resolve_slot(slot, g, beepers, heard);
    for (NodeId v : listeners) proto.deliver(v, heard[v] != 0, coins);

    decisions.clear();
    snapshots.clear();
    proto.end_slot(slot, coins, decisions, full ? &snapshots : nullptr);

    for (const auto& ev : decisions) {
      if (ev.node >= n || ev.decision == Decision::Undecided)
        throw std::logic_error("protocol emitted a malformed decision event");
      if (result.verdict.decision[ev.node] != Decision::Undecided)
        throw std::logic_error("second decision for node " + std::to_string(ev.node));
      result.verdict.decision[ev.node] = ev.decision;
      result.verdict.decision_slot[ev.node] = static_cast<std::int64_t>(slot);
    }

    if (full) {
      SlotRecord rec;
      rec.slot = slot;
      rec.beepers = beepers;
      for (NodeId v : listeners)
        if (heard[v]) rec.heard.push_back(v);
      rec.decisions = decisions;
      rec.snapshots = std::move(snapshots);
      result.trace.records.push_back(std::move(rec));
    } else if (!decisions.empty()) {
      SlotRecord rec;
      rec.slot = slot;
      rec.decisions = decisions;
      result.trace.records.push_back(std::move(rec));
    }
  }

  result.slots = slot;
  result.elapsed_time = channel->elapsed(slot);
  result.truncated = any_active && slot == max_slots;

  auto& h = result.trace.header;
  h.protocol = proto.name();
  h.n = n;
  h.edges = g.edges();
  h.seed = coins.master_seed();
  h.params_json = proto.params_json();
  h.verbosity = verbosity;
  h.slots = result.slots;
  h.elapsed_time = result.elapsed_time;
  h.truncated = result.truncated;
  return result;
}

}  // namespace beepsim
