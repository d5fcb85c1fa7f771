#include "beepsim/trace.hpp"

#include <sstream>

#include "json.hpp"

namespace beepsim {

using nlohmann::json;

TraceVerbosity verbosity_from_string(const std::string& s) {
  if (s == "full") return TraceVerbosity::Full;
  if (s == "decisions") return TraceVerbosity::DecisionsOnly;
  throw std::invalid_argument("unknown trace verbosity: " + s);
}

bool Verdict::all_decided() const {
  for (Decision d : decision)
    if (d == Decision::Undecided) return false;
  return true;
}

Verdict verdict_from_trace(const Trace& trace) {
  Verdict verdict(trace.header.n);
  for (const auto& rec : trace.records) {
    for (const auto& ev : rec.decisions) {
      if (ev.node >= trace.header.n)
        throw std::runtime_error("trace decision for out-of-range node");
      if (verdict.decision[ev.node] != Decision::Undecided)
        throw std::runtime_error("duplicate decision for node " + std::to_string(ev.node));
      if (ev.decision == Decision::Undecided)
        throw std::runtime_error("trace records an UNDECIDED decision event");
      verdict.decision[ev.node] = ev.decision;
      verdict.decision_slot[ev.node] = static_cast<std::int64_t>(rec.slot);
    }
  }
  return verdict;
}

std::string serialize_trace(const Trace& trace) {
  std::ostringstream out;
  const auto& h = trace.header;
  json edges = json::array();
  for (auto [u, v] : h.edges) edges.push_back(json::array({u, v}));
  json header{{"type", "header"},
              {"schema", h.schema},
              {"protocol", h.protocol},
              {"n", h.n},
              {"edges", std::move(edges)},
              {"seed", h.seed},
              {"config_hash", h.config_hash},
              {"params", h.params_json.empty() ? json(nullptr) : json::parse(h.params_json)},
              {"verbosity", to_string(h.verbosity)},
              {"slots", h.slots},
              {"elapsed", h.elapsed_time},
              {"truncated", h.truncated}};
  out << header.dump() << "\n";
  for (const auto& rec : trace.records) {
    json r{{"type", "slot"}, {"slot", rec.slot}};
    if (!rec.beepers.empty()) r["beep"] = rec.beepers;
    if (!rec.heard.empty()) r["heard"] = rec.heard;
    if (!rec.decisions.empty()) {
      json dec = json::array();
      for (const auto& ev : rec.decisions)
        dec.push_back(json::array({ev.node, to_string(ev.decision)}));
      r["dec"] = std::move(dec);
    }
    if (!rec.snapshots.empty()) {
      json snaps = json::array();
      for (const auto& s : rec.snapshots)
        snaps.push_back(json::array(
            {s.node, s.p_exp, s.c, s.b, to_string(s.phase), s.marked ? 1 : 0}));
      r["snap"] = std::move(snaps);
    }
    out << r.dump() << "\n";
  }
  return out.str();
}

Trace parse_trace(const std::string& jsonl) {
  Trace trace;
  std::istringstream in(jsonl);
  std::string line;
  bool have_header = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json j = json::parse(line);
    const std::string type = j.at("type").get<std::string>();
    if (type == "header") {
      if (have_header) throw std::runtime_error("trace has two header lines");
      have_header = true;
      auto& h = trace.header;
      h.schema = j.at("schema").get<int>();
      h.protocol = j.at("protocol").get<std::string>();
      h.n = j.at("n").get<NodeId>();
      for (const auto& e : j.at("edges"))
        h.edges.emplace_back(e.at(0).get<NodeId>(), e.at(1).get<NodeId>());
      h.seed = j.at("seed").get<std::uint64_t>();
      h.config_hash = j.at("config_hash").get<std::string>();
      h.params_json = j.at("params").is_null() ? "" : j.at("params").dump();
      h.verbosity = verbosity_from_string(j.at("verbosity").get<std::string>());
      h.slots = j.at("slots").get<std::uint64_t>();
      h.elapsed_time = j.at("elapsed").get<std::uint64_t>();
      h.truncated = j.at("truncated").get<bool>();
      continue;
    }
    if (type != "slot") throw std::runtime_error("unknown trace line type: " + type);
    if (!have_header) throw std::runtime_error("trace record before header");
    SlotRecord rec;
    rec.slot = j.at("slot").get<std::uint64_t>();
    if (j.contains("beep")) rec.beepers = j.at("beep").get<std::vector<NodeId>>();
    if (j.contains("heard")) rec.heard = j.at("heard").get<std::vector<NodeId>>();
    if (j.contains("dec"))
      for (const auto& d : j.at("dec"))
        rec.decisions.push_back(
            {d.at(0).get<NodeId>(), decision_from_string(d.at(1).get<std::string>())});
    if (j.contains("snap"))
      for (const auto& s : j.at("snap"))
        rec.snapshots.push_back({s.at(0).get<NodeId>(), s.at(1).get<std::uint32_t>(),
                                 s.at(2).get<std::uint32_t>(), s.at(3).get<std::uint32_t>(),
                                 phase_from_string(s.at(4).get<std::string>()),
                                 s.at(5).get<int>() != 0});
    if (!trace.records.empty() && rec.slot <= trace.records.back().slot)
      throw std::runtime_error("trace slot indices not strictly increasing");
    trace.records.push_back(std::move(rec));
  }
  if (!have_header) throw std::runtime_error("trace has no header line");
  return trace;
}

}  // namespace beepsim
