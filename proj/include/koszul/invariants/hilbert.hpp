#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "koszul/groebner/quotient.hpp"
#include "koszul/scalars/series.hpp"

namespace koszul {

/// Integer polynomial as coefficient list, index = exponent.
using IntPoly = std::vector<mpz_class>;

/// H_R(z) = numerator(z) / (1-z)^dim with numerator(1) != 0, together with
/// the coefficient prefix dim R_0 .. dim R_D read from standard monomials.
struct HilbertSeries {
  IntPoly numerator;
  std::size_t dim = 0;
  TruncatedSeries prefix{0};
};

/// K(z) with H_{S/M}(z) = K(z) / (1-z)^n for a monomial ideal M, by splitting
/// on a variable: K(M) = K(M + x) + z K(M : x).
IntPoly monomial_hilbert_numerator(const std::vector<Monomial>& generators, std::size_t n);

/// Power series expansion of numerator / (1-z)^dim up to degree D.
TruncatedSeries expand_hilbert(const IntPoly& numerator, std::size_t dim, std::size_t truncation);

/// Requires a homogeneous defining ideal.
HilbertSeries hilbert_series(const QuotientRing& q, std::size_t truncation);

/// Largest set of variables containing the support of no generator.
std::size_t monomial_krull_dim(const std::vector<Monomial>& generators, std::size_t n);
/// dim S/I through the initial ideal. Throws InputError for the unit ideal
/// or non-homogeneous input.
std::size_t krull_dim(const Ideal& ideal);
std::size_t codim(const Ideal& ideal);

}  // namespace koszul
