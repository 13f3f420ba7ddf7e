#include "koszul/groebner/quotient.hpp"

#include <algorithm>

#include "koszul/errors.hpp"

namespace koszul {

QuotientRing::QuotientRing(const Ideal& ideal)
    : basis_(buchberger(ideal, TermOrder::degrevlex(ideal.ring().num_variables()))) {}

QuotientRing::QuotientRing(const Ideal& ideal, const TermOrder& order) : basis_(buchberger(ideal, order)) {}

QuotientRing QuotientRing::polynomial_ring(const RingDescriptor& ring) { return QuotientRing(Ideal(ring)); }

std::vector<std::vector<Monomial>> standard_monomials_upto(const QuotientRing& q, unsigned max_degree) {
  const auto leads = q.defining().leading_monomials();
  const std::size_t n = q.ring().num_variables();
  const TermOrder& order = q.defining().order();
  auto standard = [&](const Monomial& m) {
    return std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); });
  };
  std::vector<std::vector<Monomial>> out;
  out.push_back({});
  if (standard(Monomial())) out[0].push_back(Monomial());
  for (unsigned d = 1; d <= max_degree; ++d) {
    std::vector<Monomial> level;
    // Each monomial arises once: extend only by variables at or after its last one.
    for (const auto& m : out[d - 1]) {
      std::size_t last = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (m[i] != 0) last = i;
      for (std::size_t k = last; k < n; ++k) {
        Monomial next = m.times_variable(k);
        if (standard(next)) level.push_back(next);
      }
    }
    out.push_back(std::move(level));
  }
  for (auto& level : out)
    std::sort(level.begin(), level.end(), [&](const Monomial& a, const Monomial& b) { return order.greater(a, b); });
  return out;
}

std::vector<Monomial> quotient_hilbert_basis(const QuotientRing& q, unsigned d) {
  return standard_monomials_upto(q, d).back();
}

GradedQuotient::GradedQuotient(const QuotientRing& q, unsigned max_degree) : quotient_(&q) {
  if (!q.is_graded()) throw InputError("graded structure requires a homogeneous defining ideal");
  const std::size_t n = q.ring().num_variables();
  bases_ = standard_monomials_upto(q, max_degree);
  for (unsigned d = 0; d <= max_degree; ++d) {
    auto& idx = index_.emplace_back();
    for (std::size_t i = 0; i < bases_[d].size(); ++i) idx.emplace(bases_[d][i], i);
  }
  const Field& field = q.ring().field();
  for (unsigned d = 0; d < max_degree; ++d) {
    auto& layer = mult_.emplace_back(n);
    for (std::size_t k = 0; k < n; ++k) {
      auto& col = layer[k];
      col.reserve(bases_[d].size());
      for (const auto& m : bases_[d]) {
        Monomial prod = m.times_variable(k);
        SparseVector v;
        auto it = index_[d + 1].find(prod);
        if (it != index_[d + 1].end()) {
          v.emplace_back(it->second, field.one());
        } else {
          Polynomial nf = q.normal_form(Polynomial::monomial(q.ring(), prod));
          for (const auto& t : nf.terms()) v.emplace_back(index_[d + 1].at(t.monomial), t.coeff);
          std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        }
        col.push_back(std::move(v));
      }
    }
  }
}

std::optional<std::size_t> GradedQuotient::index(unsigned d, const Monomial& m) const {
  if (d >= index_.size()) return std::nullopt;
  auto it = index_[d].find(m);
  if (it == index_[d].end()) return std::nullopt;
  return it->second;
}

Vector GradedQuotient::coordinates(const Polynomial& form, unsigned d) const {
  if (d > max_degree()) throw InputError("degree beyond the graded structure");
  Vector v(dim(d), field().zero());
  const Polynomial nf = quotient_->normal_form(form);
  for (const auto& t : nf.terms()) {
    if (t.monomial.degree() != d) throw InputError("form is not homogeneous of the requested degree");
    v[index_[d].at(t.monomial)] = t.coeff;
  }
  return v;
}

Polynomial GradedQuotient::polynomial(const Vector& coords, unsigned d) const {
  return Polynomial::from_coordinates(ring(), bases_.at(d), coords);
}

}  // namespace koszul
