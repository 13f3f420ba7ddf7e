#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "koszul/groebner/groebner.hpp"

namespace koszul {

/// R = S/I presented by a Groebner basis of I.
class QuotientRing {
 public:
  /// Default order: degrevlex x1 > ... > xn.
  explicit QuotientRing(const Ideal& ideal);
  QuotientRing(const Ideal& ideal, const TermOrder& order);
  explicit QuotientRing(GroebnerBasis basis) : basis_(std::move(basis)) {}
  static QuotientRing polynomial_ring(const RingDescriptor& ring);

  const RingDescriptor& ring() const { return basis_.ring(); }
  const GroebnerBasis& defining() const { return basis_; }
  const Ideal& ideal() const { return basis_.ideal(); }
  bool is_graded() const { return basis_.ideal().is_homogeneous(); }

  Polynomial normal_form(const Polynomial& f) const { return koszul::normal_form(f, basis_); }

 private:
  GroebnerBasis basis_;
};

/// Standard monomials of degree d (not divisible by any leading monomial),
/// descending under the basis order.
std::vector<Monomial> quotient_hilbert_basis(const QuotientRing& q, unsigned d);
/// Standard monomials of every degree 0..max_degree, grown as an order ideal
/// (cost proportional to the output, not to dim S_d).
std::vector<std::vector<Monomial>> standard_monomials_upto(const QuotientRing& q, unsigned max_degree);

using SparseVector = std::vector<std::pair<std::size_t, FieldElem>>;

/// Graded pieces R_0..R_D of a graded quotient with their standard-monomial
/// bases and the multiplication-by-variable maps R_d -> R_{d+1}.
class GradedQuotient {
 public:
  GradedQuotient(const QuotientRing& q, unsigned max_degree);

  const QuotientRing& quotient() const { return *quotient_; }
  const RingDescriptor& ring() const { return quotient_->ring(); }
  const Field& field() const { return ring().field(); }
  std::size_t num_variables() const { return ring().num_variables(); }
  unsigned max_degree() const { return static_cast<unsigned>(bases_.size() - 1); }

  const std::vector<Monomial>& basis(unsigned d) const { return bases_.at(d); }
  std::size_t dim(unsigned d) const { return d < bases_.size() ? bases_[d].size() : 0; }
  std::optional<std::size_t> index(unsigned d, const Monomial& m) const;

  /// x_k * basis(d)[i] expressed in basis(d+1). Requires d < max_degree().
  const SparseVector& multiply_variable(std::size_t k, unsigned d, std::size_t i) const {
    return mult_.at(d)[k][i];
  }
  /// Coordinates in basis(d) of the normal form of a degree-d form.
  Vector coordinates(const Polynomial& form, unsigned d) const;
  Polynomial polynomial(const Vector& coords, unsigned d) const;

 private:
  const QuotientRing* quotient_;
  std::vector<std::vector<Monomial>> bases_;
  std::vector<std::unordered_map<Monomial, std::size_t, MonomialHash>> index_;
  // mult_[d][k][i]
  std::vector<std::vector<std::vector<SparseVector>>> mult_;
};

}  // namespace koszul
