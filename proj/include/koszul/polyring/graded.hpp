#pragma once

#include <vector>

#include "koszul/polyring/ideal.hpp"

namespace koszul {

/// The degree-d piece I_d of a homogeneous ideal, as a reduced row echelon
/// matrix over the monomial basis of S_d (descending degrevlex).
struct GradedSlice {
  unsigned degree = 0;
  std::vector<Monomial> monomials;
  DenseMatrix rows;

  std::size_t dim() const { return rows.rows(); }
  std::size_t codim() const { return monomials.size() - rows.rows(); }
  std::vector<Polynomial> polynomials(const RingDescriptor& ring) const;
};

/// Throws InputError for non-homogeneous input.
GradedSlice graded_slice(const Ideal& ideal, unsigned degree);
/// Slices for degrees 0..max_degree, built incrementally from S_1 * I_{d-1}.
std::vector<GradedSlice> graded_slices(const Ideal& ideal, unsigned max_degree);

/// Canonical minimal homogeneous generators: in each degree d, the reduced
/// echelon basis of a complement of S_1 * I_{d-1} inside I_d.
Ideal minimal_generators(const Ideal& ideal);
/// Degrees of the minimal generators, ascending with multiplicity.
std::vector<unsigned> minimal_generator_degrees(const Ideal& ideal);

/// Equality of homogeneous ideals, degree by degree up to the larger
/// generator degree.
bool homogeneous_ideals_equal(const Ideal& a, const Ideal& b);

}  // namespace koszul
