#include "koszul/invariants/koszul.hpp"

#include "koszul/errors.hpp"
#include "koszul/polyring/graded.hpp"

namespace koszul {

namespace {

Json coefficient_json(const mpq_class& c) {
  if (c.get_den() == 1 && c.get_num().fits_slong_p()) return c.get_num().get_si();
  return c.get_str();
}

Json bounds_json(std::size_t i_max, unsigned d_max) {
  Json b;
  b["i_max"] = i_max;
  b["d_max"] = d_max;
  return b;
}

}  // namespace

Verdict koszul_probe(const QuotientRing& q, std::size_t i_max, unsigned d_max) {
  return koszul_probe(q, resolve_residue_field(q, i_max, d_max));
}

Verdict koszul_probe(const QuotientRing& q, const BettiTable& table) {
  if (!q.is_graded()) throw InputError("Koszul probe needs a homogeneous defining ideal");
  Verdict v;
  v.claim = "koszul";
  v.bounds = bounds_json(table.i_max, table.d_max);
  for (const auto& [key, beta] : table.entries) {
    const auto [i, j] = key;
    if (i != j && !table.flagged(i, j)) {
      v.outcome = Outcome::CertifiedNo;
      v.witness = Json{{"i", i}, {"j", j}, {"beta", beta}};
      v.note = "nonlinear syzygy of the residue field";
      return v;
    }
  }
  const Ideal minimal = minimal_generators(q.ideal());
  for (const auto& g : minimal.generators()) {
    if (g.degree() >= 3) {
      v.outcome = Outcome::CertifiedNo;
      v.witness = Json{{"generator_degree", g.degree()}, {"generator", g.to_string()}};
      v.note = "defining ideal is not quadratic";
      return v;
    }
  }
  Json strand = Json::array();
  for (std::size_t i = 0; i <= table.i_max; ++i) strand.push_back(table.at(i, static_cast<unsigned>(i)));
  v.outcome = Outcome::UndeterminedAtBound;
  v.witness = Json{{"linear_strand", strand}};
  v.note = "resolution linear within the bounds";
  return v;
}

TruncatedSeries koszul_dual_series(const QuotientRing& q, std::size_t truncation) {
  HilbertSeries h = hilbert_series(q, truncation);
  return series_inverse(h.prefix.negate_variable());
}

Verdict series_koszul_test(const QuotientRing& q, std::size_t truncation, const BettiTable* table) {
  HilbertSeries h = hilbert_series(q, truncation);
  TruncatedSeries dual = series_inverse(h.prefix.negate_variable());
  Verdict v;
  v.claim = "koszul";
  v.bounds = Json{{"truncation", truncation}};
  Json coeffs = Json::array();
  for (const auto& c : dual.coeffs()) coeffs.push_back(coefficient_json(c));
  if (table) {
    // Euler identity, degree by degree, where every beta_{i,j} with i <= j is exact.
    TruncatedSeries inv = series_inverse(h.prefix);
    const std::size_t top = std::min<std::size_t>({truncation, table->i_max, table->d_max});
    for (std::size_t j = 0; j <= top; ++j) {
      mpq_class sum = 0;
      for (std::size_t i = 0; i <= j; ++i) {
        const long beta = static_cast<long>(table->at(i, static_cast<unsigned>(j)));
        sum += (i % 2 == 0) ? beta : -beta;
      }
      if (sum != inv[j]) throw InternalError("Betti table violates the Euler identity in degree " + std::to_string(j));
    }
    v.note = "Euler identity checked through degree " + std::to_string(top) + "; ";
  }
  for (std::size_t k = 0; k <= truncation; ++k) {
    if (dual[k] < 0) {
      v.outcome = Outcome::CertifiedNo;
      v.witness = Json{{"degree", k}, {"coefficient", coefficient_json(dual[k])}};
      v.note += "1/H(-z) has a negative coefficient";
      return v;
    }
  }
  v.outcome = Outcome::UndeterminedAtBound;
  v.witness = Json{{"prefix", coeffs}};
  v.note += "1/H(-z) nonnegative through the truncation";
  return v;
}

PoincarePrefix poincare_prefix(const BettiTable& table) {
  PoincarePrefix p;
  std::vector<mpq_class> c;
  p.complete = true;
  for (std::size_t i = 0; i <= table.i_max; ++i) {
    c.emplace_back(static_cast<unsigned long>(table.total(i)));
    if (i >= table.column_complete.size() || !table.column_complete[i]) p.complete = false;
  }
  p.series = TruncatedSeries(std::move(c), table.i_max);
  return p;
}

PoincarePrefix poincare_prefix(const QuotientRing& q, std::size_t i_max, unsigned d_max) {
  return poincare_prefix(resolve_residue_field(q, i_max, d_max));
}

}  // namespace koszul
