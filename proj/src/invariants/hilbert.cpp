#include "koszul/invariants/hilbert.hpp"

#include <algorithm>
#include <functional>

#include "koszul/errors.hpp"

namespace koszul {

namespace {

IntPoly trim(IntPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

IntPoly add(const IntPoly& a, const IntPoly& b) {
  IntPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return trim(std::move(out));
}

IntPoly mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return trim(std::move(out));
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (const auto& g : gens)
    if (std::none_of(out.begin(), out.end(), [&](const Monomial& h) { return h.divides(g); })) out.push_back(g);
  return out;
}

IntPoly numerator_rec(const std::vector<Monomial>& gens, std::size_t n) {
  if (gens.empty()) return {1};
  for (const auto& g : gens)
    if (g.is_one()) return {};
  // Pairwise coprime generators form a regular sequence.
  bool coprime = true;
  for (std::size_t i = 0; i < gens.size() && coprime; ++i)
    for (std::size_t j = i + 1; j < gens.size() && coprime; ++j) coprime = gens[i].coprime(gens[j]);
  if (coprime) {
    IntPoly out{1};
    for (const auto& g : gens) {
      IntPoly factor(g.degree() + 1, 0);
      factor[0] = 1;
      factor[g.degree()] -= 1;
      out = mul(out, factor);
    }
    return out;
  }
  // Pivot on the variable shared by the most non-linear generators.
  std::vector<std::size_t> count(n, 0);
  for (const auto& g : gens)
    if (g.degree() > 1)
      for (std::size_t i = 0; i < n; ++i)
        if (g[i] != 0) ++count[i];
  const std::size_t x = static_cast<std::size_t>(std::max_element(count.begin(), count.end()) - count.begin());
  const Monomial var = Monomial::variable(x);
  std::vector<Monomial> plus{var};
  std::vector<Monomial> colon;
  for (const auto& g : gens) {
    if (g[x] == 0) plus.push_back(g);
    colon.push_back(g[x] > 0 ? g.quotient(var) : g);
  }
  IntPoly a = numerator_rec(minimalize(std::move(plus)), n);
  IntPoly b = numerator_rec(minimalize(std::move(colon)), n);
  b.insert(b.begin(), 0);
  return add(a, trim(std::move(b)));
}

}  // namespace

IntPoly monomial_hilbert_numerator(const std::vector<Monomial>& generators, std::size_t n) {
  return numerator_rec(minimalize(generators), n);
}

TruncatedSeries expand_hilbert(const IntPoly& numerator, std::size_t dim, std::size_t truncation) {
  std::vector<mpq_class> c(truncation + 1, 0);
  for (std::size_t i = 0; i < numerator.size() && i <= truncation; ++i) c[i] = numerator[i];
  // Multiply by 1/(1-z) dim times: prefix sums.
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t i = 1; i <= truncation; ++i) c[i] += c[i - 1];
  return TruncatedSeries(std::move(c), truncation);
}

HilbertSeries hilbert_series(const QuotientRing& q, std::size_t truncation) {
  if (!q.is_graded()) throw InputError("Hilbert series needs a homogeneous defining ideal");
  const std::size_t n = q.ring().num_variables();
  HilbertSeries h;
  IntPoly num = monomial_hilbert_numerator(q.defining().leading_monomials(), n);
  std::size_t dim = n;
  // Divide out (1-z) while the numerator vanishes at 1.
  while (dim > 0 && !num.empty()) {
    mpz_class at_one = 0;
    for (const auto& c : num) at_one += c;
    if (at_one != 0) break;
    // Synthetic division by (1 - z): q_i = sum_{k<=i} num_k.
    IntPoly quot(num.size() - 1, 0);
    mpz_class run = 0;
    for (std::size_t i = 0; i + 1 < num.size(); ++i) {
      run += num[i];
      quot[i] = run;
    }
    num = trim(std::move(quot));
    --dim;
  }
  h.numerator = num;
  h.dim = num.empty() ? 0 : dim;
  std::vector<mpq_class> counts;
  for (const auto& level : standard_monomials_upto(q, static_cast<unsigned>(truncation)))
    counts.emplace_back(static_cast<unsigned long>(level.size()));
  h.prefix = TruncatedSeries(std::move(counts), truncation);
  return h;
}

std::size_t monomial_krull_dim(const std::vector<Monomial>& generators, std::size_t n) {
  auto gens = minimalize(generators);
  for (const auto& g : gens)
    if (g.is_one()) throw InputError("Krull dimension of the unit ideal");
  std::vector<std::uint64_t> supports;
  for (const auto& g : gens) {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (g[i] != 0) mask |= std::uint64_t{1} << i;
    supports.push_back(mask);
  }
  // dim = n - (minimum number of variables meeting every support).
  std::size_t best = n;
  std::function<void(std::uint64_t, std::size_t)> search = [&](std::uint64_t cover, std::size_t size) {
    if (size >= best) return;
    for (auto s : supports) {
      if ((s & cover) == 0) {
        for (std::size_t i = 0; i < n; ++i)
          if (s & (std::uint64_t{1} << i)) search(cover | (std::uint64_t{1} << i), size + 1);
        return;
      }
    }
    best = size;
  };
  search(0, 0);
  return n - best;
}

std::size_t krull_dim(const Ideal& ideal) {
  if (!ideal.is_homogeneous()) throw InputError("Krull dimension needs a homogeneous ideal");
  const std::size_t n = ideal.ring().num_variables();
  if (ideal.is_zero()) return n;
  GroebnerBasis gb = buchberger(ideal, TermOrder::degrevlex(n));
  if (gb.is_unit_ideal()) throw InputError("Krull dimension of the unit ideal");
  return monomial_krull_dim(gb.leading_monomials(), n);
}

std::size_t codim(const Ideal& ideal) { return ideal.ring().num_variables() - krull_dim(ideal); }

}  // namespace koszul
