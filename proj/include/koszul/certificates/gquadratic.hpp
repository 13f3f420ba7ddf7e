#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "koszul/groebner/groebner.hpp"
#include "koszul/invariants/verdict.hpp"
#include "koszul/polyring/constructions.hpp"

namespace koszul {

enum class ChangeProvenance { Identity, SeededRandom, User };
std::string to_string(ChangeProvenance p);

/// Invertible linear substitution x_i -> sum_j matrix(i,j) x_j.
class CoordinateChange {
 public:
  /// Throws InputError when the matrix is not square or is singular.
  CoordinateChange(DenseMatrix matrix, ChangeProvenance provenance);
  static CoordinateChange identity(const Field& field, std::size_t n);
  /// Entries drawn uniformly from [-bound, bound], redrawn until invertible.
  static CoordinateChange random(const Field& field, std::size_t n, Rng& rng, std::int64_t bound = 3);

  const DenseMatrix& matrix() const { return matrix_; }
  ChangeProvenance provenance() const { return provenance_; }
  Ideal apply(const Ideal& ideal) const;

  Json to_json() const;
  static CoordinateChange from_json(const Json& j, const Field& field);

 private:
  DenseMatrix matrix_;
  ChangeProvenance provenance_;
};

/// Tries every order on the given coordinates, then `changes` seeded random
/// changes under every order. CertifiedYes (claim "g-quadratic") names the
/// change, order and quadratic reduced basis; a failed search is
/// UndeterminedAtBound. Non-quadratic input is CertifiedNo at once.
Verdict gquadratic_search(const Ideal& ideal, const std::vector<TermOrder>& orders, std::size_t changes,
                          std::uint64_t seed);

/// Recomputes the basis named by a CertifiedYes witness.
GroebnerBasis replay_gquadratic(const Ideal& ideal, const Json& witness);

}  // namespace koszul
