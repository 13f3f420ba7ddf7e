#include "koszul/groebner/ideal_ops.hpp"

#include <map>
#include <numeric>
#include <optional>

#include "koszul/errors.hpp"
#include "koszul/polyring/graded.hpp"

namespace koszul {

namespace {

Ideal tidy(const Ideal& ideal) { return ideal.is_homogeneous() ? minimal_generators(ideal) : ideal; }

void check_same_ring(const Ideal& a, const Ideal& b) {
  if (!(a.ring() == b.ring())) throw InputError("ideals live in different rings");
}

}  // namespace

RingDescriptor prepend_variables(const RingDescriptor& ring, std::size_t extra, const std::string& stem) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < extra; ++i) {
    std::string candidate = stem + std::to_string(i + 1);
    while (ring.index_of(candidate)) candidate = "_" + candidate;
    names.push_back(candidate);
  }
  names.insert(names.end(), ring.names().begin(), ring.names().end());
  return RingDescriptor(names.size(), ring.field(), names);
}

Ideal eliminate(const Ideal& ideal, std::size_t k) {
  const RingDescriptor& ring = ideal.ring();
  const std::size_t n = ring.num_variables();
  if (k >= n) throw InputError("cannot eliminate every variable");
  std::vector<std::string> rest(ring.names().begin() + static_cast<std::ptrdiff_t>(k), ring.names().end());
  RingDescriptor target(rest.size(), ring.field(), rest);
  if (k == 0) return Ideal(target, ideal.generators());
  GroebnerBasis gb = buchberger(ideal, TermOrder::block_elimination(n, k));
  std::vector<Polynomial> kept;
  for (const auto& g : gb.elements()) {
    bool free = true;
    for (const auto& t : g.terms()) {
      for (std::size_t i = 0; i < k && free; ++i)
        if (t.monomial[i] != 0) free = false;
      if (!free) break;
    }
    if (!free) continue;
    std::vector<Term> terms;
    for (const auto& t : g.terms()) {
      std::vector<unsigned> e = t.monomial.exponents(n);
      terms.push_back({Monomial(std::span<const unsigned>(e.data() + k, n - k)), t.coeff});
    }
    kept.push_back(Polynomial::from_terms(target, std::move(terms)));
  }
  return Ideal(target, std::move(kept));
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  check_same_ring(a, b);
  const RingDescriptor& ring = a.ring();
  if (a.is_zero() || b.is_zero()) return Ideal(ring);
  RingDescriptor big = prepend_variables(ring, 1, "t");
  std::vector<std::size_t> shift(ring.num_variables());
  std::iota(shift.begin(), shift.end(), 1);
  Polynomial t = Polynomial::variable(big, 0);
  Polynomial one_minus_t = Polynomial::constant(big, big.field().one()) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) gens.push_back(t * f.map_variables(big, shift));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * g.map_variables(big, shift));
  Ideal eliminated = eliminate(Ideal(big, std::move(gens)), 1);
  return tidy(Ideal(ring, eliminated.generators()));
}

Polynomial divide_exact(const Polynomial& g, const Polynomial& f) {
  if (f.is_zero()) throw InputError("division by the zero polynomial");
  const TermOrder order = TermOrder::degrevlex(g.ring().num_variables());
  const Term& lead = f.leading_term(order);
  const FieldElem inv = lead.coeff.inverse();
  Polynomial quotient(g.ring());
  Polynomial rest = g;
  while (!rest.is_zero()) {
    const Term& top = rest.leading_term(order);
    if (!lead.monomial.divides(top.monomial)) throw InternalError("polynomial division is not exact");
    Monomial m = top.monomial.quotient(lead.monomial);
    FieldElem c = top.coeff * inv;
    quotient += Polynomial::monomial(g.ring(), m, c);
    rest -= f.times_monomial(m, c);
  }
  return quotient;
}

Ideal colon(const Ideal& ideal, const Polynomial& f) {
  if (f.is_zero()) throw InputError("colon by the zero polynomial");
  if (!(f.ring() == ideal.ring())) throw InputError("polynomial and ideal live in different rings");
  Ideal meet = intersect(ideal, Ideal(ideal.ring(), {f}));
  std::vector<Polynomial> gens;
  for (const auto& g : meet.generators()) gens.push_back(divide_exact(g, f));
  return tidy(Ideal(ideal.ring(), std::move(gens)));
}

Ideal colon_ideal(const Ideal& ideal, const Ideal& other) {
  check_same_ring(ideal, other);
  if (other.is_zero()) return Ideal(ideal.ring(), {Polynomial::constant(ideal.ring(), ideal.ring().field().one())});
  Ideal result = colon(ideal, other.generators().front());
  for (std::size_t i = 1; i < other.generators().size(); ++i) result = intersect(result, colon(ideal, other.generators()[i]));
  return result;
}

namespace {

void check_toric_input(const std::vector<Monomial>& monomials, std::size_t n) {
  if (monomials.empty()) throw InputError("toric ideal needs at least one monomial");
  const unsigned d = monomials.front().degree();
  for (std::size_t i = 0; i < monomials.size(); ++i) {
    if (monomials[i].degree() != d) throw InputError("toric ideal needs monomials of equal degree");
    const auto e = monomials[i].exponents(n);
    if (std::accumulate(e.begin(), e.end(), 0u) != d) throw InputError("monomial uses a variable beyond n");
    for (std::size_t j = 0; j < i; ++j)
      if (monomials[i] == monomials[j]) throw InputError("toric ideal needs distinct monomials");
  }
}

}  // namespace

Ideal toric_ideal(const std::vector<Monomial>& monomials, std::size_t n, const Field& field) {
  check_toric_input(monomials, n);
  const std::size_t m = monomials.size();
  if (n + m > kMaxVariables) throw InputError("too many variables for the toric elimination");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  for (std::size_t i = 0; i < m; ++i) names.push_back("t" + std::to_string(i + 1));
  RingDescriptor big(n + m, field, names);
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < m; ++i)
    gens.push_back(Polynomial::variable(big, n + i) - Polynomial::monomial(big, monomials[i]));
  Ideal eliminated = eliminate(Ideal(big, std::move(gens)), n);
  return tidy(eliminated);
}

std::vector<Polynomial> toric_generators_in_degree(const std::vector<Monomial>& monomials, std::size_t n,
                                                   const Field& field, unsigned degree) {
  check_toric_input(monomials, n);
  if (degree < 2) throw InputError("toric generators start in degree 2");
  const std::size_t m = monomials.size();
  if (m > kMaxVariables) throw InputError("too many monomials");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < m; ++i) names.push_back("t" + std::to_string(i + 1));
  RingDescriptor ring(m, field, names);

  std::map<std::vector<unsigned>, std::vector<Monomial>> fibers;
  for (const auto& t : monomials_of_degree(m, degree)) {
    std::vector<unsigned> image(n, 0);
    for (std::size_t i = 0; i < m; ++i)
      if (t[i] != 0)
        for (std::size_t k = 0; k < n; ++k) image[k] += t[i] * monomials[i][k];
    fibers[image].push_back(t);
  }

  std::vector<Polynomial> out;
  for (const auto& [image, members] : fibers) {
    if (members.size() < 2) continue;
    std::vector<std::size_t> parent(members.size());
    for (std::size_t a = 0; a < parent.size(); ++a) parent[a] = a;
    auto find = [&](std::size_t a) {
      while (parent[a] != a) a = parent[a] = parent[parent[a]];
      return a;
    };
    for (std::size_t i = 0; i < m; ++i) {
      std::optional<std::size_t> first;
      for (std::size_t a = 0; a < members.size(); ++a) {
        if (members[a][i] == 0) continue;
        if (!first) {
          first = a;
        } else {
          auto ra = find(a), rf = find(*first);
          if (ra != rf) parent[std::max(ra, rf)] = std::min(ra, rf);
        }
      }
    }
    const Polynomial base = Polynomial::monomial(ring, members.front());
    for (std::size_t a = 1; a < members.size(); ++a)
      if (find(a) == a) out.push_back(Polynomial::monomial(ring, members[a]) - base);
  }
  return out;
}

bool is_unit_ideal(const Ideal& ideal) {
  if (ideal.is_zero()) return false;
  return buchberger(ideal, TermOrder::degrevlex(ideal.ring().num_variables())).is_unit_ideal();
}

}  // namespace koszul
