#include "koszul/certificates/linear_ideals.hpp"

#include "koszul/errors.hpp"
#include "koszul/groebner/ideal_ops.hpp"
#include "koszul/polyring/graded.hpp"

namespace koszul {

LinearSpace linear_part(const Ideal& defining) {
  if (defining.is_zero()) return LinearSpace(defining.ring());
  return LinearSpace::span(defining.ring(), graded_slice(defining, 1).polynomials(defining.ring()));
}

LinearSpace saturate_linear(const LinearSpace& v, const Ideal& defining) {
  std::vector<Polynomial> forms = v.basis();
  for (const auto& f : linear_part(defining).basis()) forms.push_back(f);
  return LinearSpace::span(v.ring(), forms);
}

std::size_t dim_in_quotient(const LinearSpace& v, const Ideal& defining) {
  return saturate_linear(v, defining).dim() - linear_part(defining).dim();
}

bool same_in_quotient(const LinearSpace& v, const LinearSpace& w, const Ideal& defining) {
  return saturate_linear(v, defining) == saturate_linear(w, defining);
}

Ideal extend(const LinearSpace& v, const Ideal& defining) {
  std::vector<Polynomial> gens = v.basis();
  for (const auto& g : defining.generators()) gens.push_back(g);
  return Ideal(defining.ring(), gens);
}

Ideal quotient_colon(const Ideal& defining, const LinearSpace& v, const Polynomial& x) {
  if (!(v.ring() == defining.ring())) throw InputError("linear space and ideal live in different rings");
  return colon(extend(v, defining), x);
}

std::optional<LinearSpace> linear_generated(const Ideal& ideal, const Ideal& defining) {
  if (!ideal.is_homogeneous()) return std::nullopt;
  for (const auto& g : ideal.generators())
    if (g.degree() == 0) return std::nullopt;
  LinearSpace w = ideal.is_zero() ? LinearSpace(ideal.ring())
                                  : LinearSpace::span(ideal.ring(), graded_slice(ideal, 1).polynomials(ideal.ring()));
  if (!homogeneous_ideals_equal(ideal, extend(w, defining))) return std::nullopt;
  return w;
}

}  // namespace koszul
