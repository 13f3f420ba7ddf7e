#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "koszul/polyring/ideal.hpp"

namespace koszul {

struct GroebnerStats {
  std::size_t pairs_created = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
  std::size_t product_criterion = 0;
  std::size_t chain_criterion = 0;
  std::size_t capped_pairs = 0;
};

/// Reduced Groebner basis: monic elements sorted by ascending leading
/// monomial, no term of any element divisible by another leading monomial.
class GroebnerBasis {
 public:
  const RingDescriptor& ring() const { return ideal_.ring(); }
  const TermOrder& order() const { return order_; }
  const Ideal& ideal() const { return ideal_; }
  const std::vector<Polynomial>& elements() const { return elements_; }
  const GroebnerStats& stats() const { return stats_; }
  /// True when the degree cap dropped pairs or generators, so the basis is
  /// only valid in degrees <= degree_cap().
  bool truncated() const { return truncated_; }
  std::optional<unsigned> degree_cap() const { return degree_cap_; }

  std::vector<Monomial> leading_monomials() const;
  /// Largest element degree; -1 when the basis is empty.
  int max_degree() const;
  bool is_unit_ideal() const;

  /// Elements with terms in descending order for this basis' term order.
  const std::vector<std::vector<Term>>& ordered_elements() const { return ordered_; }

 private:
  friend GroebnerBasis buchberger(const Ideal&, const TermOrder&, std::optional<unsigned>);
  GroebnerBasis(Ideal ideal, TermOrder order) : ideal_(std::move(ideal)), order_(std::move(order)) {}

  Ideal ideal_;
  TermOrder order_;
  std::vector<Polynomial> elements_;
  std::vector<std::vector<Term>> ordered_;
  GroebnerStats stats_;
  bool truncated_ = false;
  std::optional<unsigned> degree_cap_;
};

/// Buchberger's algorithm with the normal selection strategy (smallest lcm
/// degree, then smallest lcm under the order, then pair indices) and the
/// product and chain criteria. With a degree cap the input must be
/// homogeneous; pairs above the cap are dropped and the result flagged.
GroebnerBasis buchberger(const Ideal& ideal, const TermOrder& order, std::optional<unsigned> degree_cap = std::nullopt);

/// Remainder of f on full division by the basis.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis);
bool ideal_contains(const GroebnerBasis& basis, const Polynomial& f);

/// Recomputes every S-pair of the basis and checks it reduces to zero.
bool satisfies_buchberger_criterion(const GroebnerBasis& basis);

/// When enabled, buchberger() runs satisfies_buchberger_criterion on every
/// result and throws InternalError on failure. Test builds switch it on.
void set_buchberger_post_check(bool enabled);
bool buchberger_post_check();

/// Leading monomials of the reduced basis; already a minimal generating set.
struct InitialIdeal {
  std::size_t num_variables = 0;
  std::vector<Monomial> generators;
};
InitialIdeal initial_ideal(const GroebnerBasis& basis);

/// Every reduced basis element has degree 2.
bool is_quadratic_gb(const GroebnerBasis& basis);
/// All minimal generators have degree 2. Minimal generators are read off the
/// graded pieces, so no degree beyond the largest input generator can hold one.
bool is_quadratic_ideal(const Ideal& ideal);

/// Equality via reduced Groebner bases under the same order.
bool ideals_equal(const Ideal& a, const Ideal& b, const TermOrder& order);
bool ideals_equal(const Ideal& a, const Ideal& b);

}  // namespace koszul
