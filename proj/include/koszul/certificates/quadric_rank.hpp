#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "koszul/invariants/verdict.hpp"
#include "koszul/polyring/polynomial.hpp"

namespace koszul {

/// Symmetric Gram matrix of a quadric with q(x) = x^T G x, so off-diagonal
/// entries are half the mixed coefficients. Characteristic 2 is rejected.
DenseMatrix gram_matrix(const Polynomial& quadric);
std::size_t quadric_rank(const Polynomial& quadric);

inline constexpr std::int64_t kRankGridBound = 7;
inline constexpr std::size_t kRankExhaustiveMaxDim = 3;

struct QuadricRankReport {
  std::size_t dimension = 0;
  /// Smallest rank seen among the sampled members, with one such member.
  std::optional<std::size_t> min_rank_seen;
  std::optional<Polynomial> member;
  /// The projective integer grid of coefficient vectors was scanned in full.
  bool exhaustive = false;
  /// Set when the 3x3-minors locus of the generic member was decided empty
  /// (no nonzero member of rank <= 2, even over the algebraic closure).
  bool locus_empty = false;
  /// Claim "rank-at-most-2-member".
  Verdict verdict;
};

/// Smallest rank of a nonzero member of span(quadrics): seeded random
/// combinations, plus the full grid [-kRankGridBound, kRankGridBound]^k when
/// dim <= kRankExhaustiveMaxDim. CertifiedYes when a member of rank <= 2 is
/// found; CertifiedNo only when the minors locus is empty.
QuadricRankReport min_quadric_rank(const std::vector<Polynomial>& quadrics, std::uint64_t seed, std::size_t samples = 256);

}  // namespace koszul
