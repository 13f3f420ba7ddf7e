#pragma once

#include <string>
#include <vector>

#include "koszul/invariants/verdict.hpp"

namespace koszul {

inline constexpr int kReportSchema = 1;

/// Everything needed to replay a command: its echo, configuration and seeds,
/// the verdicts with witnesses, extra results (tables, certificates) and
/// wall-clock timings in seconds.
struct Report {
  std::string command;
  Json config = Json::object();
  Json seeds = Json::object();
  std::vector<Verdict> verdicts;
  Json results = Json::object();
  Json timings = Json::object();

  friend bool operator==(const Report&, const Report&) = default;
};

/// Stable key order: schema, command, config, seeds, verdicts, results,
/// timings. Empty command/config/seeds/results/timings are omitted.
Json emit_report(const Report& r);
/// Inverse of emit_report; InputError on a wrong schema or malformed data.
Report parse_report(const Json& j);

}  // namespace koszul
