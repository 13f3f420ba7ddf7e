#include "koszul/polyring/graded.hpp"

#include <algorithm>
#include <unordered_map>

#include "koszul/errors.hpp"

namespace koszul {
namespace {

using MonomialIndex = std::unordered_map<Monomial, std::size_t, MonomialHash>;

MonomialIndex index_of(const std::vector<Monomial>& basis) {
  MonomialIndex idx;
  idx.reserve(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) idx.emplace(basis[i], i);
  return idx;
}

void require_homogeneous(const Ideal& ideal) {
  if (!ideal.is_homogeneous()) throw InputError("graded operation on a non-homogeneous ideal");
}

// Echelon basis of S_1 * (rows of prev), expressed in the degree-d basis.
EchelonBasis multiply_up(const GradedSlice& prev, const std::vector<Monomial>& basis, const MonomialIndex& index,
                         const Field& field, std::size_t n) {
  EchelonBasis echelon(field, basis.size());
  for (std::size_t r = 0; r < prev.rows.rows(); ++r) {
    auto row = prev.rows.row(r);
    for (std::size_t k = 0; k < n; ++k) {
      Vector v(basis.size(), field.zero());
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (row[c].is_zero()) continue;
        v[index.at(prev.monomials[c].times_variable(k))] = row[c];
      }
      echelon.insert(v);
      if (echelon.rank() == basis.size()) return echelon;
    }
  }
  return echelon;
}

Vector coords_in(const Polynomial& p, const std::vector<Monomial>& basis, const MonomialIndex& index) {
  Vector v(basis.size(), p.ring().field().zero());
  for (const auto& t : p.terms()) v[index.at(t.monomial)] = t.coeff;
  return v;
}

}  // namespace

std::vector<Polynomial> GradedSlice::polynomials(const RingDescriptor& ring) const {
  std::vector<Polynomial> out;
  for (std::size_t r = 0; r < rows.rows(); ++r) out.push_back(Polynomial::from_coordinates(ring, monomials, rows.row_vector(r)));
  return out;
}

std::vector<GradedSlice> graded_slices(const Ideal& ideal, unsigned max_degree) {
  require_homogeneous(ideal);
  const RingDescriptor& ring = ideal.ring();
  const std::size_t n = ring.num_variables();
  std::vector<GradedSlice> slices;
  for (unsigned d = 0; d <= max_degree; ++d) {
    GradedSlice s;
    s.degree = d;
    s.monomials = monomials_of_degree(n, d);
    MonomialIndex index = index_of(s.monomials);
    EchelonBasis echelon = d == 0 ? EchelonBasis(ring.field(), s.monomials.size())
                                  : multiply_up(slices.back(), s.monomials, index, ring.field(), n);
    for (const auto& g : ideal.generators())
      if (g.degree() == static_cast<int>(d)) echelon.insert(coords_in(g, s.monomials, index));
    s.rows = echelon.matrix();
    slices.push_back(std::move(s));
  }
  return slices;
}

GradedSlice graded_slice(const Ideal& ideal, unsigned degree) { return graded_slices(ideal, degree).back(); }

Ideal minimal_generators(const Ideal& ideal) {
  require_homogeneous(ideal);
  const RingDescriptor& ring = ideal.ring();
  const std::size_t n = ring.num_variables();
  const int top = ideal.max_degree();
  std::vector<Polynomial> gens;
  if (top < 0) return Ideal(ring);
  GradedSlice prev;
  for (unsigned d = 0; d <= static_cast<unsigned>(top); ++d) {
    GradedSlice s;
    s.degree = d;
    s.monomials = monomials_of_degree(n, d);
    MonomialIndex index = index_of(s.monomials);
    EchelonBasis lower = d == 0 ? EchelonBasis(ring.field(), s.monomials.size())
                                : multiply_up(prev, s.monomials, index, ring.field(), n);
    EchelonBasis fresh(ring.field(), s.monomials.size());
    for (const auto& g : ideal.generators())
      if (g.degree() == static_cast<int>(d)) fresh.insert(lower.reduce(coords_in(g, s.monomials, index)));
    DenseMatrix fresh_rows = fresh.matrix();
    for (std::size_t r = 0; r < fresh_rows.rows(); ++r) {
      gens.push_back(Polynomial::from_coordinates(ring, s.monomials, fresh_rows.row_vector(r)));
      lower.insert(fresh_rows.row_vector(r));
    }
    s.rows = lower.matrix();
    prev = std::move(s);
  }
  return Ideal(ring, std::move(gens));
}

std::vector<unsigned> minimal_generator_degrees(const Ideal& ideal) {
  std::vector<unsigned> degrees;
  const Ideal minimal = minimal_generators(ideal);
  for (const auto& g : minimal.generators()) degrees.push_back(static_cast<unsigned>(g.degree()));
  return degrees;
}

bool homogeneous_ideals_equal(const Ideal& a, const Ideal& b) {
  if (!(a.ring() == b.ring())) throw InputError("ideal comparison across different rings");
  const int top = std::max(a.max_degree(), b.max_degree());
  if (top < 0) return true;
  auto sa = graded_slices(a, static_cast<unsigned>(top));
  auto sb = graded_slices(b, static_cast<unsigned>(top));
  for (std::size_t d = 0; d < sa.size(); ++d)
    if (!(sa[d].rows == sb[d].rows)) return false;
  return true;
}

}  // namespace koszul
