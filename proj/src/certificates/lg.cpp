#include "koszul/certificates/lg.hpp"

#include <algorithm>
#include <numeric>

#include "koszul/errors.hpp"
#include "koszul/groebner/quotient.hpp"
#include "koszul/invariants/hilbert.hpp"
#include "koszul/polyring/graded.hpp"

namespace koszul {

namespace {

Verdict lift_failure(const std::string& condition, Json detail, const std::string& note) {
  Verdict v;
  v.claim = "lg-quadratic";
  v.outcome = Outcome::CertifiedNo;
  v.witness = Json{{"condition", condition}};
  for (auto& [k, val] : detail.items()) v.witness[k] = val;
  v.note = note;
  return v;
}

TruncatedSeries times_one_minus_z(TruncatedSeries s, std::size_t times) {
  for (std::size_t t = 0; t < times; ++t)
    for (std::size_t k = s.truncation(); k >= 1; --k) s[k] -= s[k - 1];
  return s;
}

Json series_json(const TruncatedSeries& s) {
  Json out = Json::array();
  for (const auto& c : s.coeffs()) out.push_back(c.get_str());
  return out;
}

}  // namespace

Verdict verify_lg_lift(const Ideal& r_ideal, const LgLift& lift, std::size_t truncation) {
  const RingDescriptor& s_ring = r_ideal.ring();
  const RingDescriptor& t_ring = lift.lift.ring();
  if (!lift.lift.is_homogeneous()) throw InputError("lift ideal must be homogeneous");
  if (!r_ideal.is_homogeneous()) throw InputError("R must be defined by a homogeneous ideal");
  for (const auto& f : lift.forms)
    if (!(f.ring() == t_ring) || f.degree() != 1 || !f.is_homogeneous()) throw InputError("lift forms must be linear forms of T");
  if (lift.order.num_variables() != t_ring.num_variables()) throw InputError("order does not match the lift ring");

  // S -> T by names.
  std::vector<std::size_t> var_map;
  for (const auto& name : s_ring.names()) {
    auto idx = t_ring.index_of(name);
    if (!idx) throw InputError("variable '" + name + "' of R is missing from the lift ring");
    var_map.push_back(*idx);
  }
  const std::size_t s = lift.forms.size();

  // (a)
  GroebnerBasis gb = buchberger(lift.lift, lift.order);
  if (!is_quadratic_gb(gb)) return lift_failure("quadratic-gb", Json{{"max_degree", gb.max_degree()}}, "reduced basis of the lift is not quadratic");

  // (b)
  const HilbertSeries h_lift = hilbert_series(QuotientRing(gb), truncation);
  const HilbertSeries h_r = hilbert_series(QuotientRing(r_ideal), truncation);
  const auto reduced = times_one_minus_z(h_lift.prefix, s);
  if (reduced != h_r.prefix)
    return lift_failure("regular-sequence", Json{{"lift_times_one_minus_z", series_json(reduced)}, {"target", series_json(h_r.prefix)}},
                        "Hilbert identity fails, so the forms are not a regular sequence onto R");

  // (c)
  std::vector<Polynomial> lhs = lift.lift.generators();
  std::vector<Polynomial> rhs;
  for (const auto& g : r_ideal.generators()) rhs.push_back(g.map_variables(t_ring, var_map));
  for (const auto& f : lift.forms) {
    lhs.push_back(f);
    rhs.push_back(f);
  }
  if (!homogeneous_ideals_equal(Ideal(t_ring, lhs), Ideal(t_ring, rhs)))
    return lift_failure("specialization", Json::object(), "lift modulo the forms differs from R");

  Verdict v;
  v.claim = "lg-quadratic";
  v.outcome = Outcome::CertifiedYes;
  Json basis = Json::array();
  for (const auto& g : gb.elements()) basis.push_back(g.to_string());
  Json forms = Json::array();
  for (const auto& f : lift.forms) forms.push_back(f.to_string());
  v.witness = Json{{"order", lift.order.to_string()}, {"basis", basis}, {"forms", forms}, {"hilbert", series_json(h_r.prefix)}};
  v.bounds = Json{{"truncation", truncation}};
  v.note = "quadratic Groebner basis lift, forms regular, specializes to R";
  return v;
}

LgLift caviglia_lift(const Ideal& quadrics) {
  const RingDescriptor& ring = quadrics.ring();
  const std::size_t n = ring.num_variables(), m = quadrics.generators().size();
  for (const auto& q : quadrics.generators())
    if (q.degree() != 2 || !q.is_homogeneous()) throw InputError("Caviglia lift needs quadrics");
  std::vector<std::string> names = ring.names();
  for (std::size_t i = 0; i < m; ++i) {
    std::string name = "y" + std::to_string(i + 1);
    while (std::find(names.begin(), names.end(), name) != names.end()) name = "_" + name;
    names.push_back(name);
  }
  RingDescriptor t_ring(n + m, ring.field(), names);
  std::vector<std::size_t> var_map(n);
  std::iota(var_map.begin(), var_map.end(), 0);
  std::vector<Polynomial> gens, forms;
  for (std::size_t i = 0; i < m; ++i) {
    Polynomial y = Polynomial::variable(t_ring, n + i);
    gens.push_back(y * y + quadrics.generators()[i].map_variables(t_ring, var_map));
    forms.push_back(y);
  }
  std::vector<std::size_t> priority;
  for (std::size_t i = 0; i < m; ++i) priority.push_back(n + i);
  for (std::size_t i = 0; i < n; ++i) priority.push_back(i);
  return LgLift{Ideal(t_ring, gens), forms, TermOrder::degrevlex(priority)};
}

}  // namespace koszul
