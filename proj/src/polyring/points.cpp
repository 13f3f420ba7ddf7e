#include "koszul/polyring/points.hpp"

#include "koszul/errors.hpp"
#include "koszul/groebner/ideal_ops.hpp"

namespace koszul {

Ideal point_prime(const RingDescriptor& ring, const ProjectivePoint& point) {
  const std::size_t n = ring.num_variables();
  if (point.size() != n) throw InputError("point has the wrong number of coordinates");
  if (is_zero_vector(point)) throw InputError("the zero vector is not a projective point");
  for (const auto& c : point)
    if (!(c.field() == ring.field())) throw InputError("point coordinates over the wrong field");
  std::vector<Polynomial> forms;
  for (const auto& v : kernel_basis(DenseMatrix::from_rows(ring.field(), n, {point})))
    forms.push_back(Polynomial::linear_form(ring, v));
  return Ideal(ring, std::move(forms));
}

Ideal points_ideal(const RingDescriptor& ring, const std::vector<ProjectivePoint>& points) {
  if (points.empty()) throw InputError("points ideal needs at least one point");
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (same_projective_point(points[i], points[j])) throw InputError("repeated point");
  Ideal result = point_prime(ring, points.front());
  for (std::size_t i = 1; i < points.size(); ++i) result = intersect(result, point_prime(ring, points[i]));
  return result;
}

}  // namespace koszul
