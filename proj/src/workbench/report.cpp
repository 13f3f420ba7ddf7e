#include "koszul/workbench/report.hpp"

#include "koszul/errors.hpp"

namespace koszul {

Json emit_report(const Report& r) {
  Json j;
  j["schema"] = kReportSchema;
  if (!r.command.empty()) j["command"] = r.command;
  if (!r.config.empty()) j["config"] = r.config;
  if (!r.seeds.empty()) j["seeds"] = r.seeds;
  Json verdicts = Json::array();
  for (const auto& v : r.verdicts) verdicts.push_back(to_json(v));
  j["verdicts"] = verdicts;
  if (!r.results.empty()) j["results"] = r.results;
  if (!r.timings.empty()) j["timings"] = r.timings;
  return j;
}

Report parse_report(const Json& j) {
  try {
    if (!j.is_object()) throw InputError("report must be a JSON object");
    if (j.at("schema").get<int>() != kReportSchema) throw InputError("unsupported report schema");
    Report r;
    if (j.contains("command")) r.command = j.at("command").get<std::string>();
    if (j.contains("config")) r.config = j.at("config");
    if (j.contains("seeds")) r.seeds = j.at("seeds");
    for (const auto& v : j.at("verdicts")) r.verdicts.push_back(verdict_from_json(v));
    if (j.contains("results")) r.results = j.at("results");
    if (j.contains("timings")) r.timings = j.at("timings");
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  }
}

}  // namespace koszul
