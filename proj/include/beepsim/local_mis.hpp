#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "beepsim/coins.hpp"
#include "beepsim/graph.hpp"
#include "beepsim/params.hpp"
#include "beepsim/trace.hpp"
#include "beepsim/types.hpp"

namespace beepsim {

// Exact sum of desire levels, held as an integer count of 2^-63 units so the
// d >= 2 (and the verifier's d >= 1/10, d <= 22) comparisons never touch
// floating point.
class EffectiveDegree {
 public:
  void add(DesireLevel p) { units_ += p.units(); }
  // d >= num/den, exact. num and den are small protocol constants.
  bool at_least(std::uint64_t num, std::uint64_t den) const {
    return units_ * den >= (static_cast<unsigned __int128>(num) << DesireLevel::kMaxExp);
  }
  bool at_most(std::uint64_t num, std::uint64_t den) const {
    return units_ * den <= (static_cast<unsigned __int128>(num) << DesireLevel::kMaxExp);
  }
  // Exact when true: d == num * 2^-63.
  std::uint64_t units_u64() const { return static_cast<std::uint64_t>(units_); }
  double approx() const { return static_cast<double>(units_) * 0x1.0p-63; }

 private:
  unsigned __int128 units_ = 0;
};

// Sum of active neighbors' desire levels; removed neighbors contribute 0.
// active[u] == 0 marks removed nodes.
EffectiveDegree effective_degree(const Graph& g, NodeId v, std::span<const DesireLevel> levels,
                                 std::span<const std::uint8_t> active);

struct LocalRunResult {
  Trace trace;  // one record per round; "slot" fields are round indices
  Verdict verdict;
  std::uint64_t rounds = 0;
  bool truncated = false;
};

// Round-synchronous MIS with exact neighbor information: each round every
// active node recomputes its effective degree from the previous round's
// desire levels, halves its level iff d >= 2 (else doubles, capped at 1/2),
// then marks itself with the fresh level; a marked node with no marked
// neighbor joins the set and removes its neighborhood. Runs until everyone
// has decided or max_rounds.
LocalRunResult run_local_mis(const Graph& g, const LocalParams& params, CoinSource& coins,
                             TraceVerbosity verbosity);

}  // namespace beepsim
