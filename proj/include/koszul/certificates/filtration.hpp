#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "koszul/invariants/verdict.hpp"
#include "koszul/polyring/ideal.hpp"

namespace koszul {

/// Member `member` = J + (x) with J = members[j], and J : member = members[colon].
struct FiltrationWitness {
  std::size_t member = 0;
  std::size_t j = 0;
  Polynomial x;
  std::size_t colon = 0;
};

/// A family of ideals of R = S/I generated by linear forms, each given by a
/// space of linear forms in S, with one witness per nonzero member.
struct KoszulFiltration {
  Ideal defining;
  std::vector<LinearSpace> members;
  std::vector<FiltrationWitness> witnesses;
};

/// CertifiedYes (R is Koszul, and every member I has a linear resolution of
/// R/I) iff (0) and the maximal ideal are members and every witness checks
/// by exact colon computations. Otherwise CertifiedNo for this certificate,
/// naming the first failing condition.
Verdict verify_filtration(const KoszulFiltration& f);

/// All ideals generated by subsets of the variables, for R = S/I with I
/// generated by quadratic monomials. Member k is the subset with bitmask k.
/// Throws InputError for other defining ideals.
KoszulFiltration monomial_filtration(const Ideal& defining);

Json to_json(const KoszulFiltration& f);
KoszulFiltration filtration_from_json(const Json& j);

}  // namespace koszul
