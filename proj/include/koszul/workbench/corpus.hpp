#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "koszul/groebner/quotient.hpp"
#include "koszul/invariants/verdict.hpp"

namespace koszul {

/// certified: the verdict must come out exactly as recorded.
/// probe: a bounded computation whose recorded outcome is reproduced.
/// expected-failure: a search that must fail within its budget.
enum class ExpectationKind { Certified, Probe, ExpectedFailure };
std::string to_string(ExpectationKind kind);

struct Expectation {
  std::string claim;
  ExpectationKind kind = ExpectationKind::Certified;
  Outcome outcome = Outcome::CertifiedYes;
};

struct EntryOutput {
  Ideal ideal;
  std::vector<Verdict> verdicts;
  Json results = Json::object();
};

struct CorpusEntry {
  std::string name;
  std::string description;
  bool long_running = false;
  std::vector<Expectation> expectations;
  std::function<EntryOutput(const Field&)> run;
};

struct ExpectationCheck {
  Expectation expected;
  std::optional<Verdict> verdict;
  bool passed = false;
};

struct EntryRun {
  std::string name;
  EntryOutput output;
  std::vector<ExpectationCheck> checks;
  bool green = false;
  double seconds = 0;
};

/// Sorted by name.
const std::vector<CorpusEntry>& corpus();
/// InputError for an unknown name.
const CorpusEntry& corpus_entry(const std::string& name);
EntryRun run_entry(const CorpusEntry& entry, const Field& field = Field::rationals());
Json to_json(const EntryRun& run);

/// Claim "quadratic": every minimal generator has degree 2.
Verdict quadratic_verdict(const Ideal& ideal);

/// (x1^2, x2^2, x4^2, x5^2, x1x2, x4x5, x1x3 + x3x4 + x2x5) + m^3 in five variables.
Ideal anick_ideal(const Field& field);
/// x^2, xy, y^2 + sign*xz, yz in x,y,z (sign = +1 or -1).
Ideal exceptional_ideal(const Field& field, int sign);

}  // namespace koszul
