#include <json.hpp>

#include "extremal/errors.hpp"
#include "extremal/verify.hpp"

namespace extremal {

using Json = nlohmann::ordered_json;

std::string to_json(const VerificationReport& r, bool include_elapsed) {
  Json j;
  j["theorem"] = r.theorem;
  Json params = Json::object();
  for (const auto& [key, value] : r.params) params[key] = value;
  j["params"] = params;
  j["source"] = r.source;
  j["graphs_scanned"] = r.graphs_scanned.to_string();
  j["graphs_checked"] = r.graphs_checked.to_string();
  Json violations = Json::array();
  for (const auto& v : r.violations) {
    violations.push_back({{"graph6", v.graph6}, {"observed", v.observed}, {"bound", v.bound}});
  }
  j["violations"] = violations;
  j["witnesses"] = r.witnesses;
  Json tallies = Json::object();
  for (const auto& [key, value] : r.tallies) tallies[key] = value.to_string();
  j["tallies"] = tallies;
  j["skipped_templates"] = r.skipped_templates;
  j["verdict"] = r.verified() ? "verified" : "violated";
  if (include_elapsed) j["elapsed_ms"] = r.elapsed_ms;
  return j.dump(2) + "\n";
}

VerificationReport report_from_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("report is not valid JSON: ") + e.what());
  }
  try {
    VerificationReport r;
    r.theorem = j.at("theorem").get<std::string>();
    for (const auto& [key, value] : j.at("params").items()) r.params.emplace_back(key, value.get<std::int64_t>());
    r.source = j.at("source").get<std::string>();
    r.graphs_scanned = CountValue::parse(j.at("graphs_scanned").get<std::string>());
    r.graphs_checked = CountValue::parse(j.at("graphs_checked").get<std::string>());
    for (const auto& v : j.at("violations")) {
      r.violations.push_back(
          {v.at("graph6").get<std::string>(), v.at("observed").get<std::string>(), v.at("bound").get<std::string>()});
    }
    r.witnesses = j.at("witnesses").get<std::vector<std::string>>();
    for (const auto& [key, value] : j.at("tallies").items()) {
      r.tallies.emplace_back(key, CountValue::parse(value.get<std::string>()));
    }
    r.skipped_templates = j.at("skipped_templates").get<std::vector<std::string>>();
    if (j.contains("elapsed_ms")) r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
    return r;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
}

}  // namespace extremal
