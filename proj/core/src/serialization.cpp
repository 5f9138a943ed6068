#include "dupdist/serialization.hpp"

#include <json.hpp>

#include "dupdist/errors.hpp"

namespace dupdist {

using nlohmann::json;

std::string process_to_json(const DedupProcess& p, int indent) {
  json steps = json::array();
  for (const auto& s : p.steps) {
    steps.push_back({{"i", s.i}, {"h", s.h}, {"keep", s.keep == Keep::first ? "first" : "second"}});
  }
  json j;
  j["original"] = p.original.to_string();
  if (p.rule.is_linear()) {
    j["beta"] = p.rule.parameter();
  } else {
    j["beta"] = 0.5;
    j["a"] = p.rule.parameter();
  }
  j["steps"] = std::move(steps);
  j["final"] = p.final_seq.to_string();
  return j.dump(indent);
}

DedupProcess process_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    DedupProcess p;
    p.original = BinarySeq::from_string(j.at("original").get<std::string>());
    p.final_seq = BinarySeq::from_string(j.at("final").get<std::string>());
    p.rule = j.contains("a") ? MismatchRule::power(j.at("a").get<double>())
                             : MismatchRule::linear(j.value("beta", 0.0));
    for (const auto& s : j.at("steps")) {
      const auto i = s.at("i").get<long long>();
      const auto h = s.at("h").get<long long>();
      if (i < 1 || h < 1) throw InvalidInput("step positions and lengths must be positive");
      const std::string keep = s.value("keep", std::string("first"));
      if (keep != "first" && keep != "second") throw InvalidInput("keep must be first or second");
      p.steps.push_back({static_cast<std::size_t>(i), static_cast<std::size_t>(h),
                         keep == "first" ? Keep::first : Keep::second});
    }
    return p;
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed process JSON: ") + e.what());
  }
}

std::string witness_to_json(const RepeatWitness& w, int indent) {
  const json j = {{"i", w.i},   {"h", w.h},          {"mismatches", w.mismatches},
                  {"k", w.k},   {"ell", w.ell},      {"B", w.block_size},
                  {"pair", {w.pair.first, w.pair.second}}, {"r", w.r}};
  return j.dump(indent);
}

RepeatWitness witness_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    RepeatWitness w;
    w.i = j.at("i").get<std::size_t>();
    w.h = j.at("h").get<std::size_t>();
    w.mismatches = j.at("mismatches").get<std::size_t>();
    w.k = j.at("k").get<std::size_t>();
    w.ell = j.at("ell").get<std::size_t>();
    w.block_size = j.at("B").get<std::size_t>();
    w.pair = {j.at("pair").at(0).get<std::size_t>(), j.at("pair").at(1).get<std::size_t>()};
    w.r = j.at("r").get<std::size_t>();
    return w;
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed witness JSON: ") + e.what());
  }
}

std::string report_to_json(const BoundReport& report, int indent) {
  json entries = json::array();
  for (const auto& e : report.entries) {
    entries.push_back({{"name", e.name},
                       {"value", e.value},
                       {"kind", to_string(e.kind)},
                       {"source", e.source},
                       {"asymptotic", e.asymptotic}});
  }
  json j = {{"n", report.n}, {"bounds", std::move(entries)}, {"consistent", report.consistent}};
  j["exact"] = report.exact ? json(*report.exact) : json(nullptr);
  return j.dump(indent);
}

}  // namespace dupdist
