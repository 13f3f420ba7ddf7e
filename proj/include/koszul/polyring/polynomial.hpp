#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "koszul/polyring/monomial.hpp"
#include "koszul/polyring/term_order.hpp"
#include "koszul/scalars/field.hpp"
#include "koszul/scalars/matrix.hpp"

namespace koszul {

/// K[x1..xn]: variable count, distinct names, coefficient field. Cheap to copy.
class RingDescriptor {
 public:
  /// Names default to x1..xn.
  RingDescriptor(std::size_t n, Field field, std::vector<std::string> names = {});

  std::size_t num_variables() const { return data_->names.size(); }
  const std::vector<std::string>& names() const { return data_->names; }
  const std::string& name(std::size_t i) const { return data_->names[i]; }
  const Field& field() const { return data_->field; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  /// The same variables over another field.
  RingDescriptor with_field(Field field) const { return RingDescriptor(num_variables(), field, names()); }

  /// "ring n=3 field=q vars=x,y,z"
  std::string header() const;

  friend bool operator==(const RingDescriptor& a, const RingDescriptor& b);

 private:
  struct Data {
    Field field;
    std::vector<std::string> names;
  };
  std::shared_ptr<const Data> data_;
};

struct Term {
  Monomial monomial;
  FieldElem coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial. Terms are kept sorted in descending degrevlex order
/// (x1 > ... > xn) with no zero coefficients.
class Polynomial {
 public:
  explicit Polynomial(RingDescriptor ring) : ring_(std::move(ring)) {}
  static Polynomial constant(const RingDescriptor& ring, const FieldElem& c);
  static Polynomial variable(const RingDescriptor& ring, std::size_t index);
  static Polynomial monomial(const RingDescriptor& ring, const Monomial& m);
  static Polynomial monomial(const RingDescriptor& ring, const Monomial& m, const FieldElem& c);
  /// Combines like terms and drops zeros.
  static Polynomial from_terms(const RingDescriptor& ring, std::vector<Term> terms);
  /// Linear form sum c_i x_i.
  static Polynomial linear_form(const RingDescriptor& ring, const Vector& coeffs);

  const RingDescriptor& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  FieldElem coefficient(const Monomial& m) const;
  /// Largest term under the order. Precondition: nonzero.
  const Term& leading_term(const TermOrder& order) const;
  Polynomial homogeneous_component(unsigned d) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const FieldElem& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const FieldElem& c) { return a *= c; }
  friend Polynomial operator*(const FieldElem& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial times_monomial(const Monomial& m, const FieldElem& c) const;

  /// x_i -> images[i]; images live in the target ring.
  Polynomial substitute(const std::vector<Polynomial>& images) const;
  /// x_i -> sum_j m(i,j) x_j. Throws InputError when m is singular.
  Polynomial substitute_linear(const DenseMatrix& m) const;
  FieldElem evaluate(const Vector& point) const;
  Polynomial partial_derivative(std::size_t index) const;
  /// Re-embeds into `target`, sending variable i to variable var_map[i].
  Polynomial map_variables(const RingDescriptor& target, const std::vector<std::size_t>& var_map) const;

  /// Coefficient vector over a monomial basis; throws if a term falls outside it.
  Vector coordinates(const std::vector<Monomial>& basis) const;
  static Polynomial from_coordinates(const RingDescriptor& ring, const std::vector<Monomial>& basis, const Vector& coords);

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void check_ring(const Polynomial& other) const;

  RingDescriptor ring_;
  std::vector<Term> terms_;
};

Polynomial power(const Polynomial& p, unsigned exponent);

/// true when a comes before b in the canonical (descending degrevlex) storage order.
bool canonical_before(const Monomial& a, const Monomial& b, std::size_t n);

}  // namespace koszul
