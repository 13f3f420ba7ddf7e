#include "koszul/groebner/groebner.hpp"

#include <algorithm>
#include <atomic>

#include "koszul/errors.hpp"
#include "koszul/polyring/graded.hpp"

namespace koszul {
namespace {

std::atomic<bool> g_post_check{false};

using Terms = std::vector<Term>;

Terms sort_by_order(const Polynomial& p, const TermOrder& order) {
  Terms t = p.terms();
  std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) { return order.greater(a.monomial, b.monomial); });
  return t;
}

void make_monic(Terms& t) {
  if (t.empty() || t.front().coeff.is_one()) return;
  FieldElem inv = t.front().coeff.inverse();
  for (auto& term : t) term.coeff *= inv;
}

// a[a_from..] - c * m * b[b_from..], all descending under the order.
Terms sub_scaled(const Terms& a, std::size_t a_from, const Terms& b, std::size_t b_from, const Monomial& m,
                 const FieldElem& c, const TermOrder& order) {
  Terms out;
  out.reserve(a.size() - a_from + b.size() - b_from);
  std::size_t i = a_from, j = b_from;
  while (i < a.size() && j < b.size()) {
    Monomial mb = b[j].monomial * m;
    int cmp = order.compare(a[i].monomial, mb);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({mb, -(c * b[j].coeff)});
      ++j;
    } else {
      FieldElem v = a[i].coeff - c * b[j].coeff;
      if (!v.is_zero()) out.push_back({std::move(mb), std::move(v)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back({b[j].monomial * m, -(c * b[j].coeff)});
  return out;
}

class Reducer {
 public:
  explicit Reducer(const TermOrder& order) : order_(order) {}

  void add(const Terms* poly) {
    polys_.push_back(poly);
    leads_.push_back(poly->front().monomial);
    masks_.push_back(poly->front().monomial.support_mask());
    active_.push_back(true);
  }
  void deactivate(std::size_t i) { active_[i] = false; }
  std::size_t size() const { return polys_.size(); }

  // Index of the first active element whose leading monomial divides m.
  std::optional<std::size_t> find(const Monomial& m, std::optional<std::size_t> skip = std::nullopt) const {
    const std::uint64_t mask = m.support_mask();
    for (std::size_t i = 0; i < leads_.size(); ++i) {
      if (!active_[i] || (skip && *skip == i)) continue;
      if ((masks_[i] & ~mask) != 0) continue;
      if (leads_[i].divides(m)) return i;
    }
    return std::nullopt;
  }

  // Full reduction; the reducers are monic.
  Terms reduce(Terms f, std::optional<std::size_t> skip = std::nullopt) const {
    Terms result;
    std::size_t pos = 0;
    while (pos < f.size()) {
      auto r = find(f[pos].monomial, skip);
      if (!r) {
        result.push_back(std::move(f[pos]));
        ++pos;
        continue;
      }
      const Terms& g = *polys_[*r];
      Monomial mult = f[pos].monomial.quotient(g.front().monomial);
      FieldElem c = f[pos].coeff;
      f = sub_scaled(f, pos + 1, g, 1, mult, c, order_);
      pos = 0;
    }
    return result;
  }

 private:
  const TermOrder& order_;
  std::vector<const Terms*> polys_;
  std::vector<Monomial> leads_;
  std::vector<std::uint64_t> masks_;
  std::vector<bool> active_;
};

Terms s_polynomial(const Terms& a, const Terms& b, const TermOrder& order) {
  const Monomial l = a.front().monomial.lcm(b.front().monomial);
  const Monomial ma = l.quotient(a.front().monomial);
  const Monomial mb = l.quotient(b.front().monomial);
  Terms scaled_a;
  scaled_a.reserve(a.size());
  for (std::size_t i = 1; i < a.size(); ++i) scaled_a.push_back({a[i].monomial * ma, a[i].coeff});
  return sub_scaled(scaled_a, 0, b, 1, mb, b.front().coeff.field().one(), order);
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

}  // namespace

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  for (const auto& t : ordered_) out.push_back(t.front().monomial);
  return out;
}

int GroebnerBasis::max_degree() const {
  int d = -1;
  for (const auto& e : elements_) d = std::max(d, e.degree());
  return d;
}

bool GroebnerBasis::is_unit_ideal() const {
  return std::any_of(ordered_.begin(), ordered_.end(), [](const Terms& t) { return t.front().monomial.is_one(); });
}

void set_buchberger_post_check(bool enabled) { g_post_check = enabled; }
bool buchberger_post_check() { return g_post_check; }

GroebnerBasis buchberger(const Ideal& ideal, const TermOrder& order, std::optional<unsigned> degree_cap) {
  const RingDescriptor& ring = ideal.ring();
  if (order.num_variables() != ring.num_variables()) throw InputError("term order has the wrong number of variables");
  if (degree_cap && !ideal.is_homogeneous()) throw InputError("degree cap requires a homogeneous ideal");

  GroebnerBasis result(ideal, order);
  result.degree_cap_ = degree_cap;
  GroebnerStats& stats = result.stats_;

  // Working basis; deque-like storage keeps addresses stable for the reducer.
  std::vector<std::unique_ptr<Terms>> basis;
  Reducer reducer(order);
  std::vector<Pair> pending;
  std::vector<std::vector<char>> is_pending;

  auto add_element = [&](Terms poly) {
    make_monic(poly);
    const std::size_t t = basis.size();
    basis.push_back(std::make_unique<Terms>(std::move(poly)));
    reducer.add(basis.back().get());
    for (auto& row : is_pending) row.push_back(0);
    is_pending.emplace_back(t + 1, 0);
    const Monomial& lead_t = basis[t]->front().monomial;
    for (std::size_t k = 0; k < t; ++k) {
      Monomial l = basis[k]->front().monomial.lcm(lead_t);
      if (degree_cap && l.degree() > *degree_cap) {
        ++stats.capped_pairs;
        result.truncated_ = true;
        continue;
      }
      pending.push_back({k, t, l});
      is_pending[t][k] = is_pending[k][t] = 1;
      ++stats.pairs_created;
    }
  };

  // Inputs are reduced against what is already present so the start is tidy.
  {
    std::vector<Terms> inputs;
    for (const auto& g : ideal.generators()) {
      if (degree_cap && g.degree() > static_cast<int>(*degree_cap)) {
        result.truncated_ = true;
        continue;
      }
      inputs.push_back(sort_by_order(g, order));
    }
    std::stable_sort(inputs.begin(), inputs.end(), [&](const Terms& a, const Terms& b) {
      if (a.front().monomial.degree() != b.front().monomial.degree())
        return a.front().monomial.degree() < b.front().monomial.degree();
      return order.less(a.front().monomial, b.front().monomial);
    });
    for (auto& in : inputs) {
      Terms r = reducer.reduce(std::move(in));
      if (!r.empty()) add_element(std::move(r));
    }
  }

  auto pair_before = [&](const Pair& a, const Pair& b) {
    if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
    int c = order.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  };

  while (!pending.empty()) {
    auto best = std::min_element(pending.begin(), pending.end(), pair_before);
    Pair p = *best;
    *best = pending.back();
    pending.pop_back();
    is_pending[p.i][p.j] = is_pending[p.j][p.i] = 0;

    const Terms& a = *basis[p.i];
    const Terms& b = *basis[p.j];
    if (a.front().monomial.coprime(b.front().monomial)) {
      ++stats.product_criterion;
      continue;
    }
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == p.i || k == p.j || is_pending[p.i][k] || is_pending[p.j][k]) continue;
      chain = basis[k]->front().monomial.divides(p.lcm);
    }
    if (chain) {
      ++stats.chain_criterion;
      continue;
    }
    ++stats.pairs_reduced;
    Terms r = reducer.reduce(s_polynomial(a, b, order));
    if (r.empty()) {
      ++stats.zero_reductions;
      continue;
    }
    add_element(std::move(r));
  }

  // Minimalize: drop elements whose leading monomial is divisible by another's.
  const std::size_t m = basis.size();
  std::vector<bool> keep(m, true);
  for (std::size_t i = 0; i < m; ++i) {
    const Monomial& li = basis[i]->front().monomial;
    for (std::size_t j = 0; j < m && keep[i]; ++j) {
      if (i == j || !keep[j]) continue;
      const Monomial& lj = basis[j]->front().monomial;
      if (lj.divides(li) && (lj != li || j < i)) keep[i] = false;
    }
  }
  Reducer minimal(order);
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < m; ++i)
    if (keep[i]) {
      minimal.add(basis[i].get());
      kept.push_back(i);
    }
  std::vector<Terms> reduced;
  for (std::size_t k = 0; k < kept.size(); ++k) {
    const Terms& g = *basis[kept[k]];
    Terms tail(g.begin() + 1, g.end());
    Terms r = minimal.reduce(std::move(tail), k);
    r.insert(r.begin(), g.front());
    reduced.push_back(std::move(r));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const Terms& x, const Terms& y) { return order.less(x.front().monomial, y.front().monomial); });
  for (auto& r : reduced) {
    result.elements_.push_back(Polynomial::from_terms(ring, r));
    result.ordered_.push_back(std::move(r));
  }

  if (g_post_check && !satisfies_buchberger_criterion(result)) {
    throw InternalError("Buchberger post-check failed: an S-pair of the reduced basis does not reduce to zero");
  }
  return result;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis) {
  if (!(f.ring() == basis.ring())) throw InputError("normal form across different rings");
  Reducer reducer(basis.order());
  for (const auto& t : basis.ordered_elements()) reducer.add(&t);
  return Polynomial::from_terms(f.ring(), reducer.reduce(sort_by_order(f, basis.order())));
}

bool ideal_contains(const GroebnerBasis& basis, const Polynomial& f) { return normal_form(f, basis).is_zero(); }

bool satisfies_buchberger_criterion(const GroebnerBasis& basis) {
  const auto& elems = basis.ordered_elements();
  Reducer reducer(basis.order());
  for (const auto& t : elems) reducer.add(&t);
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j) {
      const Monomial l = elems[i].front().monomial.lcm(elems[j].front().monomial);
      if (basis.degree_cap() && l.degree() > *basis.degree_cap()) continue;
      if (!reducer.reduce(s_polynomial(elems[i], elems[j], basis.order())).empty()) return false;
    }
  return true;
}

InitialIdeal initial_ideal(const GroebnerBasis& basis) {
  return {basis.ring().num_variables(), basis.leading_monomials()};
}

bool is_quadratic_gb(const GroebnerBasis& basis) {
  const auto& e = basis.elements();
  return !e.empty() && std::all_of(e.begin(), e.end(), [](const Polynomial& p) { return p.degree() == 2; });
}

bool is_quadratic_ideal(const Ideal& ideal) {
  if (!ideal.is_homogeneous()) throw InputError("quadraticity is defined for homogeneous ideals");
  auto degrees = minimal_generator_degrees(ideal);
  return !degrees.empty() && std::all_of(degrees.begin(), degrees.end(), [](unsigned d) { return d == 2; });
}

bool ideals_equal(const Ideal& a, const Ideal& b, const TermOrder& order) {
  if (!(a.ring() == b.ring())) throw InputError("ideal comparison across different rings");
  return buchberger(a, order).elements() == buchberger(b, order).elements();
}

bool ideals_equal(const Ideal& a, const Ideal& b) {
  return ideals_equal(a, b, TermOrder::degrevlex(a.ring().num_variables()));
}

}  // namespace koszul
