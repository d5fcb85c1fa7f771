#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace beepsim {

using NodeId = std::uint32_t;

enum class SlotAction : std::uint8_t { Beep, Listen };

// What a listener observed in one slot. Beeping nodes get no outcome.
enum class SlotOutcome : std::int8_t { None = -1, Silence = 0, HeardBeep = 1 };

enum class Decision : std::uint8_t { Undecided, In, Out };

enum class Phase : std::uint8_t { EstInterval, MarkInterval, FinalSlot };

inline const char* to_string(Decision d) {
  switch (d) {
    case Decision::In: return "IN";
    case Decision::Out: return "OUT";
    default: return "UNDECIDED";
  }
}

inline const char* to_string(Phase p) {
  switch (p) {
    case Phase::EstInterval: return "est";
    case Phase::MarkInterval: return "mark";
    default: return "final";
  }
}

inline Decision decision_from_string(const std::string& s) {
  if (s == "IN") return Decision::In;
  if (s == "OUT") return Decision::Out;
  if (s == "UNDECIDED") return Decision::Undecided;
  throw std::invalid_argument("unknown decision: " + s);
}

inline Phase phase_from_string(const std::string& s) {
  if (s == "est") return Phase::EstInterval;
  if (s == "mark") return Phase::MarkInterval;
  if (s == "final") return Phase::FinalSlot;
  throw std::invalid_argument("unknown phase: " + s);
}

// Desire level p = 2^-exponent, the only probability weight the protocols use.
// Exponent stays in [1, kMaxExp]: updates only halve or double with a 1/2 cap,
// and 2^-63 is already below the 53-bit resolution of the uniform draws, so
// saturating there is unobservable. Keeping exponents <= 63 lets effective
// degrees accumulate exactly as integers in units of 2^-63.
class DesireLevel {
 public:
  static constexpr std::uint32_t kMaxExp = 63;

  constexpr DesireLevel() = default;  // 1/2
  static constexpr DesireLevel from_exponent(std::uint32_t k) {
    if (k < 1 || k > kMaxExp) throw std::invalid_argument("desire exponent out of range");
    DesireLevel p;
    p.exp_ = k;
    return p;
  }

  constexpr std::uint32_t exponent() const { return exp_; }
  constexpr double value() const { return 1.0 / static_cast<double>(std::uint64_t{1} << exp_); }
  // Integer value in units of 2^-63.
  constexpr std::uint64_t units() const { return std::uint64_t{1} << (kMaxExp - exp_); }

  constexpr DesireLevel halved() const { return unchecked(exp_ < kMaxExp ? exp_ + 1 : kMaxExp); }
  constexpr DesireLevel doubled() const { return unchecked(exp_ > 1 ? exp_ - 1 : 1); }

  constexpr bool operator==(const DesireLevel&) const = default;

 private:
  static constexpr DesireLevel unchecked(std::uint32_t k) {
    DesireLevel p;
    p.exp_ = k;
    return p;
  }
  std::uint32_t exp_ = 1;
};

}  // namespace beepsim
