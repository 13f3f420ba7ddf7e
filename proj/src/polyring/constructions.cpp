#include "koszul/polyring/constructions.hpp"

#include <algorithm>
#include <limits>

#include "koszul/errors.hpp"

namespace koszul {

std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw InputError("empty integer range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(rng());
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return lo + static_cast<std::int64_t>(draw % span);
}

std::int64_t uniform_nonzero(Rng& rng, std::int64_t bound) {
  if (bound < 1) throw InputError("coefficient bound must be positive");
  std::int64_t v = uniform_int(rng, -bound, bound - 1);
  return v >= 0 ? v + 1 : v;
}

std::vector<Monomial> pinched_veronese(std::size_t n, unsigned d, std::size_t s) {
  if (n < 1 || s < 1 || s > n || d < 1) throw InputError("pinched Veronese needs 1 <= s <= n and d >= 1");
  std::vector<Monomial> out;
  for (const auto& m : monomials_of_degree(n, d))
    if (m.support_size(n) <= s) out.push_back(m);
  return out;
}

std::vector<Polynomial> generic_forms(const RingDescriptor& ring, unsigned degree, std::size_t count, std::uint64_t seed,
                                      std::int64_t bound) {
  Rng rng(seed);
  std::vector<Polynomial> forms;
  const auto monomials = monomials_of_degree(ring.num_variables(), degree);
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<Term> terms;
    for (const auto& m : monomials) terms.push_back({m, ring.field().from_int(uniform_nonzero(rng, bound))});
    forms.push_back(Polynomial::from_terms(ring, std::move(terms)));
  }
  return forms;
}

Polynomial generic_form(const RingDescriptor& ring, unsigned degree, std::uint64_t seed, std::int64_t bound) {
  return generic_forms(ring, degree, 1, seed, bound).front();
}

Polynomial symmetric_det_cubic(const Field& field) {
  RingDescriptor ring(6, field);
  auto x = [&](std::size_t i) { return Polynomial::variable(ring, i - 1); };
  // Cofactor expansion along the first row of [[x1,x2,x3],[x2,x4,x5],[x3,x5,x6]].
  Polynomial det = x(1) * (x(4) * x(6) - x(5) * x(5));
  det -= x(2) * (x(2) * x(6) - x(5) * x(3));
  det += x(3) * (x(2) * x(5) - x(4) * x(3));
  return det;
}

bool same_projective_point(const ProjectivePoint& a, const ProjectivePoint& b) {
  if (a.size() != b.size()) return false;
  DenseMatrix m = DenseMatrix::from_rows(a.front().field(), a.size(), {a, b});
  return rank(m) < 2;
}

std::vector<ProjectivePoint> generic_points(const Field& field, std::size_t projective_dim, std::size_t count,
                                            std::uint64_t seed, std::int64_t bound) {
  const std::size_t len = projective_dim + 1;
  Rng rng(seed);
  std::vector<ProjectivePoint> points;
  std::size_t guard = 0;
  while (points.size() < count) {
    if (++guard > 100000) throw InputError("could not draw points in general linear position");
    ProjectivePoint p;
    for (std::size_t i = 0; i < len; ++i) p.push_back(field.from_int(uniform_int(rng, -bound, bound)));
    if (is_zero_vector(p)) continue;
    // Every subset of size <= len containing the candidate must be independent.
    bool ok = true;
    const std::size_t k = points.size();
    const std::size_t max_subset = std::min(len - 1, k);
    for (std::size_t size = 0; size <= max_subset && ok; ++size) {
      std::vector<bool> pick(k, false);
      std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), true);
      do {
        std::vector<Vector> rows{p};
        for (std::size_t i = 0; i < k; ++i)
          if (pick[i]) rows.push_back(points[i]);
        if (rank(DenseMatrix::from_rows(field, len, rows)) < rows.size()) {
          ok = false;
          break;
        }
      } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    if (ok) points.push_back(std::move(p));
  }
  return points;
}

}  // namespace koszul
