#include "koszul/invariants/verdict.hpp"

#include "koszul/errors.hpp"

namespace koszul {

std::string to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::CertifiedYes:
      return "CertifiedYes";
    case Outcome::CertifiedNo:
      return "CertifiedNo";
    case Outcome::UndeterminedAtBound:
      return "UndeterminedAtBound";
  }
  throw InternalError("unknown outcome");
}

Outcome parse_outcome(const std::string& text) {
  if (text == "CertifiedYes") return Outcome::CertifiedYes;
  if (text == "CertifiedNo") return Outcome::CertifiedNo;
  if (text == "UndeterminedAtBound") return Outcome::UndeterminedAtBound;
  throw InputError("unknown outcome '" + text + "'");
}

Json to_json(const Verdict& v) {
  Json j;
  j["claim"] = v.claim;
  j["outcome"] = to_string(v.outcome);
  j["witness"] = v.witness;
  j["bounds"] = v.bounds;
  j["note"] = v.note;
  return j;
}

Verdict verdict_from_json(const Json& j) {
  try {
    Verdict v;
    v.claim = j.at("claim").get<std::string>();
    v.outcome = parse_outcome(j.at("outcome").get<std::string>());
    v.witness = j.at("witness");
    v.bounds = j.at("bounds");
    v.note = j.at("note").get<std::string>();
    return v;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed verdict: ") + e.what());
  }
}

}  // namespace koszul
