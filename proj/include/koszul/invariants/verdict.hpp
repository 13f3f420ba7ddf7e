#pragma once

#include <string>

#include "json.hpp"

namespace koszul {

using Json = nlohmann::ordered_json;

enum class Outcome { CertifiedYes, CertifiedNo, UndeterminedAtBound };

std::string to_string(Outcome outcome);
/// Throws InputError on an unknown name.
Outcome parse_outcome(const std::string& text);

/// Three-valued answer to a claim ("koszul", "quadratic", ...). A CertifiedNo
/// always carries a concrete witness.
struct Verdict {
  Outcome outcome = Outcome::UndeterminedAtBound;
  std::string claim;
  Json witness = Json::object();
  Json bounds = Json::object();
  std::string note;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

Json to_json(const Verdict& v);
Verdict verdict_from_json(const Json& j);

}  // namespace koszul
