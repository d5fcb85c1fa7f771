#include "beepsim/beep_mis.hpp"

#include <cassert>
#include <stdexcept>

namespace beepsim {

DegreeClass classify(std::uint32_t c, std::uint32_t b, std::uint32_t interval, double coin) {
  if (3ull * c <= interval)  // not enough listening slots; also guards c == 0
    return coin < 0.5 ? DegreeClass::High : DegreeClass::Low;
  return 5ull * b > c ? DegreeClass::High : DegreeClass::Low;
}

DesireLevel update_desire(DesireLevel p, DegreeClass cls) {
  return cls == DegreeClass::High ? p.halved() : p.doubled();
}

BeepMisProtocol::BeepMisProtocol(NodeId node_count, const ProtocolParams& params)
    : params_(params), nodes_(node_count) {
  if (params_.interval < 9) throw std::invalid_argument("interval must be >= 9");
  if (params_.max_rounds < params_.rounds)
    throw std::invalid_argument("max_rounds must be >= rounds");
}

SlotAction BeepMisProtocol::choose_action(NodeId v, CoinSource& coins) {
  Node& node = nodes_[v];
  node.listened = false;
  switch (phase_) {
    case Phase::EstInterval:
      if (coins.next_unit(v) < node.p.value()) {
        ++node.beeped;
        return SlotAction::Beep;
      }
      ++node.c;
      node.listened = true;
      return SlotAction::Listen;
    case Phase::MarkInterval:
      if (node.marked && node.beep_mask[slot_in_phase_]) return SlotAction::Beep;
      node.listened = true;
      return SlotAction::Listen;
    default:  // FinalSlot
      if (node.in_m) return SlotAction::Beep;
      node.listened = true;
      return SlotAction::Listen;
  }
}

void BeepMisProtocol::deliver(NodeId v, bool heard, CoinSource&) {
  Node& node = nodes_[v];
  if (!node.listened) return;
  switch (phase_) {
    case Phase::EstInterval:
      if (heard) ++node.b;
      break;
    case Phase::MarkInterval:
      // Unmarked listeners also hear the channel; the outcome is recorded in
      // the trace but feeds no decision of theirs.
      if (heard && node.marked) node.heard_while_listening = true;
      break;
    default:
      if (heard) node.heard_final = true;
      break;
  }
}

void BeepMisProtocol::finish_estimation_interval(CoinSource& coins,
                                                 std::vector<NodeSnapshot>* snapshots) {
  const std::uint32_t I = params_.interval;
  const std::uint32_t half = I / 2;
  std::vector<std::uint32_t> perm(I);
  for (NodeId v = 0; v < nodes_.size(); ++v) {
    Node& node = nodes_[v];
    if (!node.active) continue;
    assert(node.c + node.beeped == I && node.b <= node.c);
    if (snapshots)
      snapshots->push_back({v, node.p.exponent(), node.c, node.b, Phase::EstInterval, false});

    const double classify_coin = coins.next_unit(v);
    node.p = update_desire(node.p, classify(node.c, node.b, I, classify_coin));

    node.marked = coins.next_unit(v) < node.p.value();

    // Partial Fisher-Yates choosing floor(I/2) of the I marking slots.
    for (std::uint32_t i = 0; i < I; ++i) perm[i] = i;
    node.beep_mask.assign(I, 0);
    for (std::uint32_t j = 0; j < half; ++j) {
      const std::uint64_t r = coins.next_u64(v) % (I - j);
      std::swap(perm[j], perm[j + static_cast<std::uint32_t>(r)]);
      if (node.marked) node.beep_mask[perm[j]] = 1;
    }
    node.heard_while_listening = false;
  }
  phase_ = Phase::MarkInterval;
  slot_in_phase_ = 0;
}

void BeepMisProtocol::finish_marking_interval(std::vector<NodeSnapshot>* snapshots) {
  for (NodeId v = 0; v < nodes_.size(); ++v) {
    Node& node = nodes_[v];
    if (!node.active) continue;
    node.in_m = node.marked && !node.heard_while_listening;
    node.heard_final = false;
    if (snapshots)
      snapshots->push_back(
          {v, node.p.exponent(), node.c, node.b, Phase::MarkInterval, node.marked});
  }
  phase_ = Phase::FinalSlot;
  slot_in_phase_ = 0;
}

void BeepMisProtocol::finish_final_slot(std::uint64_t slot,
                                        std::vector<DecisionEvent>& decisions) {
  for (NodeId v = 0; v < nodes_.size(); ++v) {
    Node& node = nodes_[v];
    if (!node.active) continue;
    if (node.in_m) {
      node.decision = Decision::In;
      node.active = false;
      decisions.push_back({v, Decision::In});
    } else if (node.heard_final) {
      node.decision = Decision::Out;
      node.active = false;
      decisions.push_back({v, Decision::Out});
    } else {
      node.c = 0;
      node.b = 0;
      node.beeped = 0;
      node.marked = false;
      node.in_m = false;
    }
  }
  ++round_;
  if (round_ >= params_.max_rounds) {
    // Out of rounds: survivors stop executing and stay UNDECIDED.
    for (Node& node : nodes_) node.active = false;
  }
  phase_ = Phase::EstInterval;
  slot_in_phase_ = 0;
  (void)slot;
}

void BeepMisProtocol::end_slot(std::uint64_t slot, CoinSource& coins,
                               std::vector<DecisionEvent>& decisions,
                               std::vector<NodeSnapshot>* snapshots) {
  ++slot_in_phase_;
  switch (phase_) {
    case Phase::EstInterval:
      if (slot_in_phase_ == params_.interval) finish_estimation_interval(coins, snapshots);
      break;
    case Phase::MarkInterval:
      if (slot_in_phase_ == params_.interval) finish_marking_interval(snapshots);
      break;
    default:
      finish_final_slot(slot, decisions);
      break;
  }
}

}  // namespace beepsim
