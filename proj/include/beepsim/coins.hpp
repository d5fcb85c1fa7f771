#pragma once

#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "beepsim/types.hpp"

namespace beepsim {

// All randomness in the simulator comes from counter-indexed SplitMix64
// streams: draw k of stream s under seed m is mix64(mix64(m + G*(s+1)) + G*(k+1)).
// Integer-only state, identical on every platform.
inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

constexpr std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ull;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBull;
  x ^= x >> 31;
  return x;
}

constexpr std::uint64_t stream_draw(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  return mix64(mix64(seed + kGolden * (stream + 1)) + kGolden * (index + 1));
}

// Node coin streams use the node id as stream id; everything else gets a
// stream id far outside the node range.
inline constexpr std::uint64_t kEdgeStream = 0xE000'0000'0000'0001ull;
inline constexpr std::uint64_t kSwapStream = 0xE000'0000'0000'0002ull;
inline constexpr std::uint64_t kTrialStream = 0xE000'0000'0000'0003ull;
inline constexpr std::uint64_t kMacStream = 0xE000'0000'0000'0004ull;

// [0, 1) with 53-bit resolution; exact for comparisons against powers of two.
constexpr double to_unit_interval(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

// Replacement rule for a node's coin stream.
struct CoinScript {
  enum class Kind : std::uint8_t { AlwaysMin, AlwaysMax, Sequence };

  Kind kind = Kind::AlwaysMin;
  std::vector<std::uint64_t> sequence;  // cycled once exhausted

  static CoinScript always_min() { return {Kind::AlwaysMin, {}}; }
  static CoinScript always_max() { return {Kind::AlwaysMax, {}}; }
  static CoinScript from_units(std::vector<std::uint64_t> seq) {
    if (seq.empty()) throw std::invalid_argument("empty coin script sequence");
    return {Kind::Sequence, std::move(seq)};
  }
  // Values in [0, 1) scaled onto the raw 64-bit draw range.
  static CoinScript from_unit_sequence(const std::vector<double>& seq);
};

// Per-node coin streams. Draw k of node v is a pure function of
// (master seed, v, k), so scripting one node's stream cannot move any other
// stream, and two runs with equal seeds and scripts draw identically.
class CoinSource {
 public:
  CoinSource(std::uint64_t master_seed, NodeId node_count)
      : seed_(master_seed), counters_(node_count, 0) {}

  NodeId node_count() const { return static_cast<NodeId>(counters_.size()); }
  std::uint64_t master_seed() const { return seed_; }

  std::uint64_t next_u64(NodeId v) {
    const std::uint64_t index = counters_.at(v)++;
    auto it = scripts_.find(v);
    if (it == scripts_.end()) return stream_draw(seed_, v, index);
    switch (it->second.kind) {
      case CoinScript::Kind::AlwaysMin: return 0;
      case CoinScript::Kind::AlwaysMax: return ~std::uint64_t{0};
      default: return it->second.sequence[index % it->second.sequence.size()];
    }
  }

  double next_unit(NodeId v) { return to_unit_interval(next_u64(v)); }

  std::uint64_t draws_consumed(NodeId v) const { return counters_.at(v); }

  void set_script(NodeId v, CoinScript script) {
    if (v >= counters_.size()) throw std::out_of_range("script target out of range");
    scripts_[v] = std::move(script);
  }
  bool scripted(NodeId v) const { return scripts_.count(v) != 0; }

 private:
  std::uint64_t seed_;
  std::vector<std::uint64_t> counters_;
  std::unordered_map<NodeId, CoinScript> scripts_;
};

// Copy of `coins` in which every listed node follows `script`; all other
// streams are untouched.
CoinSource script_adversary(CoinSource coins, const std::vector<NodeId>& nodes,
                            const CoinScript& script);

}  // namespace beepsim
