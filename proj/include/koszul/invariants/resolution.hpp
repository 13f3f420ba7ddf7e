#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "koszul/groebner/quotient.hpp"
#include "koszul/invariants/verdict.hpp"

namespace koszul {

inline constexpr std::size_t kDefaultIMax = 5;
inline constexpr unsigned kDefaultDMax = 9;

/// Graded Betti numbers beta_{i,j} for 0 <= i <= i_max, j <= d_max.
struct BettiTable {
  enum class Subject { ResidueField, CyclicQuotient };

  Subject subject = Subject::ResidueField;
  std::size_t i_max = 0;
  unsigned d_max = 0;
  /// Nonzero entries only.
  std::map<std::pair<std::size_t, unsigned>, std::size_t> entries;
  /// column_complete[i]: no generator of F_i can have degree above d_max.
  std::vector<bool> column_complete;

  std::size_t at(std::size_t i, unsigned j) const;
  /// Entries at the degree boundary are reported but never cited.
  bool flagged(std::size_t, unsigned j) const { return j >= d_max; }
  std::size_t total(std::size_t i) const;
  /// beta_{i,j} = 0 whenever i != j.
  bool linear() const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

Json to_json(const BettiTable& t);
BettiTable betti_from_json(const Json& j);

/// Minimal graded free resolution of K over R, truncated at (i_max, d_max).
BettiTable resolve_residue_field(const QuotientRing& q, std::size_t i_max = kDefaultIMax, unsigned d_max = kDefaultDMax);
/// Resolution of R/J over R for an ideal J generated by linear forms (given
/// by preimages in S). Throws InputError if some generator is not linear.
BettiTable resolve_cyclic(const QuotientRing& q, const Ideal& linear_ideal, std::size_t i_max = kDefaultIMax,
                          unsigned d_max = kDefaultDMax);

}  // namespace koszul
