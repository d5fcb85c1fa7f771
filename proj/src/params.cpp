#include "beepsim/params.hpp"

#include <cmath>
#include <stdexcept>

#include "json.hpp"

namespace beepsim {

namespace {

void validate_common(double eps, double scale, double beta, double gamma) {
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("eps must be in (0, 1)");
  if (!(scale > 0.0)) throw std::invalid_argument("scale must be positive");
  if (!(beta > 0.0) || !(gamma > 0.0))
    throw std::invalid_argument("beta and gamma must be positive");
}

double raw_interval(double eps) { return 2000.0 * (std::log(1500.0) + std::log(2.0 / eps)); }

double raw_rounds(double eps, double gamma, NodeId delta_bound) {
  const double d = std::max<double>(2.0, delta_bound);
  return gamma * (std::log2(d) + std::log2(2.0 / eps));
}

}  // namespace

ProtocolParams ProtocolParams::derive(double eps, NodeId delta_bound, double scale,
                                      std::optional<std::uint64_t> max_rounds, double beta,
                                      double gamma) {
  validate_common(eps, scale, beta, gamma);
  ProtocolParams p;
  p.eps = eps;
  p.beta = beta;
  p.gamma = gamma;
  p.scale = scale;
  p.delta_bound = delta_bound;
  p.interval =
      std::max<std::uint32_t>(9, static_cast<std::uint32_t>(std::ceil(scale * raw_interval(eps))));
  p.rounds = std::max<std::uint64_t>(
      1, static_cast<std::uint64_t>(std::ceil(scale * raw_rounds(eps, gamma, delta_bound))));
  p.max_rounds = max_rounds.value_or(p.rounds);
  if (p.max_rounds < p.rounds) throw std::invalid_argument("max_rounds must be >= derived rounds");
  return p;
}

ProtocolParams ProtocolParams::for_target_interval(double eps, NodeId delta_bound,
                                                   std::uint32_t target_interval,
                                                   std::optional<std::uint64_t> max_rounds,
                                                   double beta, double gamma) {
  if (target_interval < 9) throw std::invalid_argument("target interval must be >= 9");
  // Aim half a slot below the target so ceil() lands on it exactly.
  const double scale = (static_cast<double>(target_interval) - 0.5) / raw_interval(eps);
  ProtocolParams p = derive(eps, delta_bound, scale, max_rounds, beta, gamma);
  if (p.interval != target_interval)
    throw std::logic_error("target interval derivation failed");
  return p;
}

std::string ProtocolParams::to_json() const {
  nlohmann::json j{{"eps", eps},       {"beta", beta},
                   {"gamma", gamma},   {"scale", scale},
                   {"delta_bound", delta_bound}, {"interval", interval},
                   {"rounds", rounds}, {"max_rounds", max_rounds}};
  return j.dump();
}

ProtocolParams ProtocolParams::from_json(const std::string& json_text) {
  auto j = nlohmann::json::parse(json_text);
  auto p = derive(j.at("eps").get<double>(), j.at("delta_bound").get<NodeId>(),
                  j.at("scale").get<double>(), j.at("max_rounds").get<std::uint64_t>(),
                  j.at("beta").get<double>(), j.at("gamma").get<double>());
  if (p.interval != j.at("interval").get<std::uint32_t>() ||
      p.rounds != j.at("rounds").get<std::uint64_t>())
    throw std::runtime_error("serialized params disagree with re-derived I/R");
  return p;
}

LocalParams LocalParams::derive(double eps, NodeId delta_bound,
                                std::optional<std::uint64_t> max_rounds, double beta) {
  validate_common(eps, 1.0, beta, 1.0);
  LocalParams p;
  p.eps = eps;
  p.beta = beta;
  p.delta_bound = delta_bound;
  p.round_budget = std::max<std::uint64_t>(
      1, static_cast<std::uint64_t>(std::ceil(raw_rounds(eps, beta, delta_bound))));
  p.max_rounds = max_rounds.value_or(10 * p.round_budget);
  if (p.max_rounds == 0) throw std::invalid_argument("max_rounds must be positive");
  return p;
}

std::string LocalParams::to_json() const {
  nlohmann::json j{{"eps", eps},
                   {"beta", beta},
                   {"delta_bound", delta_bound},
                   {"round_budget", round_budget},
                   {"max_rounds", max_rounds}};
  return j.dump();
}

}  // namespace beepsim
