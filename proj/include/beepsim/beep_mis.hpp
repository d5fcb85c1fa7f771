#pragma once

#include <cstdint>
#include <vector>

#include "beepsim/channel.hpp"
#include "beepsim/params.hpp"
#include "beepsim/types.hpp"

namespace beepsim {

enum class DegreeClass : std::uint8_t { High, Low };

// End-of-interval classifier. With c listening slots out of I the node trusts
// the observed ratio only when c > I/3; otherwise the coin decides. High
// stands for "b/c > 1/5", compared exactly as 5b > c.
DegreeClass classify(std::uint32_t c, std::uint32_t b, std::uint32_t interval, double coin);

// High halves the desire level, Low doubles it capped at 1/2.
DesireLevel update_desire(DesireLevel p, DegreeClass cls);

// Per-node state machine of the beep-model MIS protocol. Each emulated round
// is an estimation interval (I slots, counters c/b, desire-level update), a
// marking interval (I slots, marked nodes beep in a random half and join M if
// they hear nothing while listening) and one final slot (members of M beep
// and decide IN; listeners that hear them decide OUT).
//
// Coin draws per node per round are a fixed schedule: one per estimation
// slot, then one classify draw, one marking draw and floor(I/2) subset draws
// at the interval boundary -- consumed whether or not the branch needs them,
// so scripted streams stay positionally aligned.
class BeepMisProtocol final : public SlotProtocol {
 public:
  BeepMisProtocol(NodeId node_count, const ProtocolParams& params);

  NodeId node_count() const override { return static_cast<NodeId>(nodes_.size()); }
  bool active(NodeId v) const override { return nodes_[v].active; }
  SlotAction choose_action(NodeId v, CoinSource& coins) override;
  void deliver(NodeId v, bool heard, CoinSource& coins) override;
  void end_slot(std::uint64_t slot, CoinSource& coins, std::vector<DecisionEvent>& decisions,
                std::vector<NodeSnapshot>* snapshots) override;
  Decision decision(NodeId v) const override { return nodes_[v].decision; }
  std::string params_json() const override { return params_.to_json(); }
  const char* name() const override { return "beep"; }

  const ProtocolParams& params() const { return params_; }
  Phase phase() const { return phase_; }
  std::uint64_t round() const { return round_; }
  DesireLevel desire(NodeId v) const { return nodes_[v].p; }
  bool marked(NodeId v) const { return nodes_[v].marked; }
  const std::vector<std::uint8_t>& beep_slots(NodeId v) const { return nodes_[v].beep_mask; }

 private:
  struct Node {
    DesireLevel p;
    std::uint32_t c = 0;
    std::uint32_t b = 0;
    std::uint32_t beeped = 0;  // beep slots this estimation interval
    bool listened = false;     // transient, current slot
    bool marked = false;
    std::vector<std::uint8_t> beep_mask;  // marking-interval slots to beep in
    bool heard_while_listening = false;   // within the marking interval
    bool in_m = false;
    bool heard_final = false;
    bool active = true;
    Decision decision = Decision::Undecided;
  };

  void finish_estimation_interval(CoinSource& coins, std::vector<NodeSnapshot>* snapshots);
  void finish_marking_interval(std::vector<NodeSnapshot>* snapshots);
  void finish_final_slot(std::uint64_t slot, std::vector<DecisionEvent>& decisions);

  ProtocolParams params_;
  std::vector<Node> nodes_;
  // All nodes wake together and phases have fixed lengths, so phase state is
  // global lockstep.
  Phase phase_ = Phase::EstInterval;
  std::uint32_t slot_in_phase_ = 0;
  std::uint64_t round_ = 0;
};

}  // namespace beepsim
