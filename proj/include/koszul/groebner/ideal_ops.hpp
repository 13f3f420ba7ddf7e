#pragma once

#include <cstddef>
#include <vector>

#include "koszul/groebner/groebner.hpp"

namespace koszul {

/// Ring with `extra` fresh variables placed in front of the given ones.
RingDescriptor prepend_variables(const RingDescriptor& ring, std::size_t extra, const std::string& stem);

/// Elimination ideal I ∩ K[x_{k+1}..x_n], returned in the ring of the
/// remaining variables (names kept), from a block-order basis.
Ideal eliminate(const Ideal& ideal, std::size_t k);

/// I ∩ J through t*I + (1-t)*J and elimination of t. Homogeneous results are
/// given by minimal generators.
Ideal intersect(const Ideal& a, const Ideal& b);

/// q with q*f = g; throws InternalError when f does not divide g.
Polynomial divide_exact(const Polynomial& g, const Polynomial& f);

/// I : f = (I ∩ (f)) / f. Throws InputError for f = 0.
Ideal colon(const Ideal& ideal, const Polynomial& f);
/// I : J as the intersection of I : g over the generators g of J.
Ideal colon_ideal(const Ideal& ideal, const Ideal& other);

/// Kernel of K[t1..tm] -> K[x1..xn], t_i -> m_i, for distinct monomials of one
/// degree. The t ring uses names t1..tm.
Ideal toric_ideal(const std::vector<Monomial>& monomials, std::size_t n, const Field& field);

/// Minimal generators of that toric ideal in one degree k >= 2, as binomials
/// t^a - t^b. Within a fiber of the monomial map, the ideal generated in lower
/// degrees is spanned by differences of monomials sharing a variable, so each
/// fiber contributes (components - 1) generators joining component
/// representatives. No elimination is needed; the count is exact.
std::vector<Polynomial> toric_generators_in_degree(const std::vector<Monomial>& monomials, std::size_t n,
                                                   const Field& field, unsigned degree);

/// The unit ideal test via the reduced basis.
bool is_unit_ideal(const Ideal& ideal);

}  // namespace koszul
