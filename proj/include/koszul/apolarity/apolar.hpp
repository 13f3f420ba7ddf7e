#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "koszul/groebner/quotient.hpp"
#include "koszul/invariants/verdict.hpp"
#include "koszul/polyring/poly_matrix.hpp"

namespace koszul {

/// g(d/dx_1, ..., d/dx_n) f: g acts by differentiation.
Polynomial apply_operator(const Polynomial& g, const Polynomial& f);

/// A nonzero form f of degree s with its catalecticants computed up front.
/// Over F_p requires p > s.
class ApolarForm {
 public:
  explicit ApolarForm(Polynomial f);

  const Polynomial& form() const { return f_; }
  unsigned degree() const { return s_; }
  std::size_t num_variables() const { return f_.ring().num_variables(); }
  /// Rows: degree-a monomials, columns: degree-(s-a) monomials (both in
  /// monomials_of_degree order); entry (alpha, beta) = d^{alpha+beta} f.
  const DenseMatrix& catalecticant(unsigned a) const { return cats_.at(a); }

 private:
  Polynomial f_;
  unsigned s_;
  std::vector<DenseMatrix> cats_;
};

struct InverseSystemResult {
  /// I_f by minimal generators.
  Ideal ideal;
  QuotientRing quotient;
  /// dim (R_f)_d for d = 0..s.
  std::vector<std::size_t> h_vector;
};

/// (I_f)_d = {g in S_d : g(d)f = 0} for d <= s, all of S_d beyond.
InverseSystemResult inverse_system(const ApolarForm& f);
/// Partials linearly dependent.
bool is_cone(const ApolarForm& f);

/// n x n matrix of second partials.
PolyMatrix hessian(const Polynomial& f);
/// Ideal of t x t minors, by minimal generators. t > n is InputError.
Ideal minors_ideal(const PolyMatrix& h, std::size_t t);

/// Claim "koszul" for R_f of a non-cone cubic in 3 or 4 variables, decided
/// by the codimension of the 2-minors of the Hessian: codim n gives
/// CertifiedYes, smaller gives CertifiedNo (R_f not even quadratic).
/// Cross-checked against quadraticity of I_f. Outside n in {3,4} the raw
/// codimension is reported as UndeterminedAtBound. Cones are InputError.
Verdict theorem34_check(const Polynomial& f);

/// Rank of the symmetric matrix of a quadric (0 for the zero form).
std::size_t form_rank(const Polynomial& quadric);

/// (yz)(d)f = 0 and y(d)f, z(d)f are quadrics of rank n-1. f must be a
/// cubic; y and z must be independent linear forms.
bool balla_condition(const Polynomial& f, const Polynomial& y, const Polynomial& z);

struct BallaSearchResult {
  std::optional<std::pair<Polynomial, Polynomial>> pair;
  std::size_t attempts_used = 0;
};
/// Walks the shared linear-form pool: for each y with y(d)f of rank n-1 the
/// only candidate z (up to scale) is the kernel of that quadric's matrix.
BallaSearchResult balla_search(const Polynomial& f, std::uint64_t seed, std::size_t attempts = 500);

/// (y^2)(d)f = 0 and y(d)f has rank n-1.
bool singular_flag_condition(const Polynomial& f, const Polynomial& y);

/// x_1 q + c with q a seeded quadric and c a seeded cubic in x_2..x_n, so
/// d^2 f / dx_1^2 = 0.
Polynomial generic_singular_cubic(const RingDescriptor& ring, std::uint64_t seed, std::int64_t bound = 5);

/// Codimension of the ideal of first partials (n means f is smooth).
std::size_t jacobian_codim(const Polynomial& f);

}  // namespace koszul
