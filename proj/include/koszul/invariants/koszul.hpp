#pragma once

#include <cstddef>
#include <optional>

#include "koszul/invariants/hilbert.hpp"
#include "koszul/invariants/resolution.hpp"
#include "koszul/invariants/verdict.hpp"

namespace koszul {

/// Resolves K up to the bounds and looks for a nonlinear Betti number below
/// the degree boundary; falls back to a minimal generator of degree >= 3.
/// Never returns CertifiedYes.
Verdict koszul_probe(const QuotientRing& q, std::size_t i_max = kDefaultIMax, unsigned d_max = kDefaultDMax);
/// Same, reusing an already computed table of K.
Verdict koszul_probe(const QuotientRing& q, const BettiTable& table);

/// Prefix of 1/H_R(-z) to degree D; a negative coefficient gives CertifiedNo.
/// With a table of K, also checks the Euler identity
/// sum_i (-1)^i beta_{i,j} = [1/H_R(z)]_j wherever the table is exact, and
/// throws InternalError if it fails.
Verdict series_koszul_test(const QuotientRing& q, std::size_t truncation, const BettiTable* table = nullptr);

/// 1/H_R(-z) up to degree D (the Poincare series if R is Koszul).
TruncatedSeries koszul_dual_series(const QuotientRing& q, std::size_t truncation);

struct PoincarePrefix {
  TruncatedSeries series{0};
  bool complete = false;
};
/// Total Betti numbers beta_i of K for i <= i_max; incomplete when some
/// column may have generators beyond d_max.
PoincarePrefix poincare_prefix(const QuotientRing& q, std::size_t i_max = kDefaultIMax, unsigned d_max = kDefaultDMax);
PoincarePrefix poincare_prefix(const BettiTable& table);

}  // namespace koszul
