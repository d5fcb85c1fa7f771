#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "beepsim/types.hpp"

namespace beepsim {

// Parameters of the beep-model MIS protocol. The interval length I and the
// round budget R derive from eps/gamma and a scale knob:
//   I = max(9, ceil(scale * 2000 * (ln 1500 + ln(2/eps))))
//   R = max(1, ceil(scale * gamma * (log2(max(2, delta_bound)) + log2(2/eps))))
// The literature constants (beta = 1300, gamma = 80*beta = 104000) put I in
// the tens of thousands; scale shrinks both for desk-scale experiments
// without touching the control flow.
struct ProtocolParams {
  double eps = 0.5;
  double beta = 1300.0;
  double gamma = 104000.0;
  double scale = 1.0;
  NodeId delta_bound = 2;  // max degree, or any upper bound on it

  std::uint32_t interval = 0;   // I, derived
  std::uint64_t rounds = 0;     // R, derived
  std::uint64_t max_rounds = 0; // >= rounds; undecided nodes stop here

  std::uint64_t round_slots() const { return 2 * std::uint64_t{interval} + 1; }
  std::uint64_t budget_slots() const { return rounds * round_slots(); }

  static ProtocolParams derive(double eps, NodeId delta_bound, double scale = 1.0,
                               std::optional<std::uint64_t> max_rounds = {},
                               double beta = 1300.0, double gamma = 104000.0);
  // Picks the scale that makes the derived interval exactly `target_interval`.
  static ProtocolParams for_target_interval(double eps, NodeId delta_bound,
                                            std::uint32_t target_interval,
                                            std::optional<std::uint64_t> max_rounds = {},
                                            double beta = 1300.0, double gamma = 104000.0);

  std::string to_json() const;
  static ProtocolParams from_json(const std::string& json_text);
};

// Parameters of the round-synchronous baseline. round_budget is reported
// against measured decision rounds, never enforced; max_rounds is the cap.
struct LocalParams {
  double eps = 0.5;
  double beta = 1300.0;
  NodeId delta_bound = 2;
  std::uint64_t round_budget = 0;  // ceil(beta * (log2(max(2, delta)) + log2(2/eps)))
  std::uint64_t max_rounds = 0;

  static LocalParams derive(double eps, NodeId delta_bound,
                            std::optional<std::uint64_t> max_rounds = {}, double beta = 1300.0);

  std::string to_json() const;
};

}  // namespace beepsim
