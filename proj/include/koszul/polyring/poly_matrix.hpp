#pragma once

#include <cstddef>
#include <vector>

#include "koszul/polyring/polynomial.hpp"

namespace koszul {

/// Dense matrix of polynomials over one ring, row-major.
using PolyMatrix = std::vector<std::vector<Polynomial>>;

/// Determinant of the submatrix on the given rows and columns (equal sizes),
/// by Laplace expansion memoized over column subsets.
Polynomial minor(const PolyMatrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols);
Polynomial determinant(const PolyMatrix& m);
/// All nonzero t x t minors, rows and columns in lexicographic subset order.
std::vector<Polynomial> all_minors(const PolyMatrix& m, std::size_t t);

}  // namespace koszul
