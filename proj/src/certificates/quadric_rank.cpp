#include "koszul/certificates/quadric_rank.hpp"

#include <algorithm>

#include "koszul/errors.hpp"
#include "koszul/invariants/hilbert.hpp"
#include "koszul/polyring/constructions.hpp"
#include "koszul/polyring/ideal.hpp"
#include "koszul/polyring/poly_matrix.hpp"

namespace koszul {

namespace {

// 2^61 - 1.
constexpr std::uint64_t kLocusPrime = 2305843009213693951ULL;

void require_quadric(const Polynomial& q) {
  if (q.is_zero() || q.degree() != 2 || !q.is_homogeneous()) throw InputError("rank is defined here for nonzero quadrics");
  if (q.ring().field().characteristic() == 2) throw InputError("quadric rank is not defined in characteristic 2");
}

Polynomial combine(const std::vector<Polynomial>& basis, const std::vector<std::int64_t>& coeffs) {
  const Field& field = basis.front().ring().field();
  Polynomial out(basis.front().ring());
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (coeffs[i] != 0) out += basis[i] * field.from_int(coeffs[i]);
  return out;
}

// Independent basis of the span.
std::vector<Polynomial> independent(const std::vector<Polynomial>& quadrics) {
  std::vector<Polynomial> out;
  const RingDescriptor& ring = quadrics.front().ring();
  const auto monos = monomials_of_degree(ring.num_variables(), 2);
  EchelonBasis e(ring.field(), monos.size());
  for (const auto& q : quadrics)
    if (e.insert(q.coordinates(monos))) out.push_back(q);
  return out;
}

// Empty 3x3-minors locus of sum a_i G_i, decided modulo a large prime (or
// in the given prime field). Emptiness there implies emptiness in
// characteristic zero; nonemptiness proves nothing, so it returns false.
bool rank2_locus_empty(const std::vector<Polynomial>& basis) {
  const RingDescriptor& ring = basis.front().ring();
  const std::size_t n = ring.num_variables(), k = basis.size();
  if (n < 3) return false;
  const Field target = ring.field().is_rational() ? Field::prime(kLocusPrime) : ring.field();
  RingDescriptor coeff_ring(k, target);
  PolyMatrix generic(n, std::vector<Polynomial>(n, Polynomial(coeff_ring)));
  try {
    for (std::size_t a = 0; a < k; ++a) {
      DenseMatrix g = gram_matrix(basis[a]);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          if (g(i, j).is_zero()) continue;
          FieldElem c = ring.field().is_rational() ? target.from_rational(g(i, j).rational()) : g(i, j);
          generic[i][j] += Polynomial::variable(coeff_ring, a) * c;
        }
    }
  } catch (const InputError&) {
    return false;  // a denominator vanished mod p
  }
  auto minors = all_minors(generic, 3);
  if (minors.empty()) return false;
  return krull_dim(Ideal(coeff_ring, minors)) == 0;
}

}  // namespace

DenseMatrix gram_matrix(const Polynomial& q) {
  require_quadric(q);
  const Field& field = q.ring().field();
  const std::size_t n = q.ring().num_variables();
  const FieldElem half = field.from_int(2).inverse();
  DenseMatrix g(field, n, n);
  for (const auto& t : q.terms()) {
    std::vector<std::size_t> vars;
    for (std::size_t i = 0; i < n; ++i)
      for (unsigned e = 0; e < t.monomial[i]; ++e) vars.push_back(i);
    if (vars[0] == vars[1]) {
      g(vars[0], vars[0]) += t.coeff;
    } else {
      g(vars[0], vars[1]) += t.coeff * half;
      g(vars[1], vars[0]) += t.coeff * half;
    }
  }
  return g;
}

std::size_t quadric_rank(const Polynomial& q) { return rank(gram_matrix(q)); }

QuadricRankReport min_quadric_rank(const std::vector<Polynomial>& quadrics, std::uint64_t seed, std::size_t samples) {
  if (quadrics.empty()) throw InputError("empty space of quadrics");
  for (const auto& q : quadrics) require_quadric(q);
  QuadricRankReport report;
  const std::vector<Polynomial> basis = independent(quadrics);
  const std::size_t k = basis.size();
  report.dimension = k;

  auto consider = [&](const std::vector<std::int64_t>& coeffs) {
    Polynomial q = combine(basis, coeffs);
    if (q.is_zero()) return;
    const std::size_t r = quadric_rank(q);
    if (!report.min_rank_seen || r < *report.min_rank_seen) {
      report.min_rank_seen = r;
      report.member = q;
    }
  };
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<std::int64_t> e(k, 0);
    e[i] = 1;
    consider(e);
  }
  Rng rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    std::vector<std::int64_t> c(k);
    for (auto& x : c) x = uniform_int(rng, -kRankGridBound, kRankGridBound);
    consider(c);
  }
  if (k <= kRankExhaustiveMaxDim) {
    report.exhaustive = true;
    std::vector<std::int64_t> c(k, -kRankGridBound);
    while (true) {
      auto first = std::find_if(c.begin(), c.end(), [](std::int64_t x) { return x != 0; });
      if (first != c.end() && *first > 0) consider(c);
      std::size_t i = 0;
      while (i < k && c[i] == kRankGridBound) c[i++] = -kRankGridBound;
      if (i == k) break;
      ++c[i];
    }
  }

  Verdict& v = report.verdict;
  v.claim = "rank-at-most-2-member";
  v.bounds = Json{{"samples", samples}, {"grid_bound", kRankGridBound}, {"exhaustive", report.exhaustive}, {"seed", seed}};
  if (report.min_rank_seen && *report.min_rank_seen <= 2) {
    v.outcome = Outcome::CertifiedYes;
    v.witness = Json{{"member", report.member->to_string()}, {"rank", *report.min_rank_seen}};
    v.note = "member of rank <= 2 found";
    return report;
  }
  report.locus_empty = rank2_locus_empty(basis);
  if (report.locus_empty) {
    v.outcome = Outcome::CertifiedNo;
    v.witness = Json{{"method", "3x3-minors locus of the generic member is empty"}, {"min_rank_seen", *report.min_rank_seen}};
    v.note = "no nonzero member has rank <= 2";
  } else {
    v.outcome = Outcome::UndeterminedAtBound;
    v.witness = Json{{"min_rank_seen", *report.min_rank_seen}};
    v.note = report.exhaustive ? "grid exhausted without a rank <= 2 member; locus not shown empty"
                               : "random screen only; locus not shown empty";
  }
  return report;
}

}  // namespace koszul
