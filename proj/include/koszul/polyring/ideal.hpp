#pragma once

#include <string>
#include <vector>

#include "koszul/polyring/polynomial.hpp"

namespace koszul {

/// Ideal given by generators. Zero generators are dropped, so the zero ideal
/// has an empty generator list.
class Ideal {
 public:
  explicit Ideal(RingDescriptor ring, std::vector<Polynomial> generators = {});

  const RingDescriptor& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  bool is_zero() const { return generators_.empty(); }
  bool is_homogeneous() const { return homogeneous_; }
  /// Largest generator degree; -1 for the zero ideal.
  int max_degree() const;

  Ideal operator+(const Ideal& other) const;
  std::string to_string() const;

 private:
  RingDescriptor ring_;
  std::vector<Polynomial> generators_;
  bool homogeneous_ = true;
};

/// Subspace of S_1 with a verified linearly independent basis of linear forms.
class LinearSpace {
 public:
  /// Throws InputError unless every element is a nonzero linear form and the
  /// list is linearly independent.
  LinearSpace(RingDescriptor ring, std::vector<Polynomial> basis);
  explicit LinearSpace(RingDescriptor ring) : ring_(std::move(ring)) {}
  /// Span of arbitrary linear forms; the stored basis is the reduced echelon one.
  static LinearSpace span(const RingDescriptor& ring, const std::vector<Polynomial>& forms);
  static LinearSpace whole(const RingDescriptor& ring);

  const RingDescriptor& ring() const { return ring_; }
  const std::vector<Polynomial>& basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }

  bool contains(const Polynomial& form) const;
  bool contains(const LinearSpace& other) const;
  LinearSpace plus(const Polynomial& form) const;
  /// Reduced echelon basis, identical for equal spaces.
  std::vector<Polynomial> canonical_basis() const;
  Ideal ideal() const { return Ideal(ring_, basis_); }

  friend bool operator==(const LinearSpace& a, const LinearSpace& b);

 private:
  RingDescriptor ring_;
  std::vector<Polynomial> basis_;
};

/// Coordinates of a linear form in the basis x1..xn.
Vector linear_coordinates(const Polynomial& form);

}  // namespace koszul
