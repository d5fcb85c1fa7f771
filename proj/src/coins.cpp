#include "beepsim/coins.hpp"

#include <cmath>

namespace beepsim {

CoinScript CoinScript::from_unit_sequence(const std::vector<double>& seq) {
  std::vector<std::uint64_t> units;
  units.reserve(seq.size());
  for (double s : seq) {
    if (!(s >= 0.0 && s < 1.0))
      throw std::invalid_argument("coin script values must be in [0, 1)");
    units.push_back(static_cast<std::uint64_t>(s * 0x1p64));
  }
  return from_units(std::move(units));
}

CoinSource script_adversary(CoinSource coins, const std::vector<NodeId>& nodes,
                            const CoinScript& script) {
  for (NodeId v : nodes) coins.set_script(v, script);
  return coins;
}

}  // namespace beepsim
