#include "koszul/certificates/filtration.hpp"

#include "koszul/certificates/linear_ideals.hpp"
#include "koszul/errors.hpp"
#include "koszul/polyring/graded.hpp"
#include "koszul/workbench/format.hpp"

namespace koszul {

namespace {

Verdict failure(const std::string& condition, std::optional<std::size_t> member, const std::string& note) {
  Verdict v;
  v.claim = "koszul-filtration";
  v.outcome = Outcome::CertifiedNo;
  v.witness = Json{{"condition", condition}};
  if (member) v.witness["member"] = *member;
  v.note = note;
  return v;
}

std::optional<std::size_t> find_member(const KoszulFiltration& f, const LinearSpace& space) {
  for (std::size_t k = 0; k < f.members.size(); ++k)
    if (same_in_quotient(f.members[k], space, f.defining)) return k;
  return std::nullopt;
}

Json forms_json(const std::vector<Polynomial>& forms) {
  Json a = Json::array();
  for (const auto& p : forms) a.push_back(p.to_string());
  return a;
}

std::vector<Polynomial> forms_from_json(const RingDescriptor& ring, const Json& a) {
  std::vector<Polynomial> out;
  for (const auto& s : a) out.push_back(parse_polynomial(ring, s.get<std::string>()));
  return out;
}

}  // namespace

Verdict verify_filtration(const KoszulFiltration& f) {
  const Ideal& I = f.defining;
  const RingDescriptor& ring = I.ring();
  if (!I.is_homogeneous()) throw InputError("filtration over a non-homogeneous quotient");
  for (const auto& m : f.members)
    if (!(m.ring() == ring)) throw InputError("filtration member in a different ring");
  const std::size_t top = dim_in_quotient(LinearSpace::whole(ring), I);
  std::vector<std::size_t> dims;
  for (const auto& m : f.members) dims.push_back(dim_in_quotient(m, I));
  if (std::find(dims.begin(), dims.end(), 0) == dims.end())
    return failure("contains-zero", std::nullopt, "the zero ideal is not a member");
  if (std::find(dims.begin(), dims.end(), top) == dims.end())
    return failure("contains-maximal", std::nullopt, "the maximal ideal is not a member");

  std::vector<const FiltrationWitness*> by_member(f.members.size(), nullptr);
  for (const auto& w : f.witnesses) {
    if (w.member >= f.members.size() || w.j >= f.members.size() || w.colon >= f.members.size())
      throw InputError("filtration witness refers to a missing member");
    if (!by_member[w.member]) by_member[w.member] = &w;
  }
  for (std::size_t k = 0; k < f.members.size(); ++k) {
    if (dims[k] == 0) continue;
    const FiltrationWitness* w = by_member[k];
    if (!w) return failure("witness-present", k, "nonzero member without a witness");
    const LinearSpace& member = f.members[k];
    const LinearSpace& j = f.members[w->j];
    if (w->x.degree() != 1 || !w->x.is_homogeneous()) return failure("linear-x", k, "witness x is not a linear form");
    // I = J + (x) with x outside J: a cyclic extension.
    if (!same_in_quotient(j.plus(w->x), member, I)) return failure("cyclic", k, "member differs from J + (x)");
    if (dims[w->j] + 1 != dims[k]) return failure("cyclic", k, "x already lies in J");
    Ideal colon = quotient_colon(I, j, w->x);
    if (!homogeneous_ideals_equal(colon, extend(f.members[w->colon], I)))
      return failure("colon", k, "J : x differs from the named member");
  }
  Verdict v;
  v.claim = "koszul-filtration";
  v.outcome = Outcome::CertifiedYes;
  v.witness = Json{{"members", f.members.size()}};
  v.note = "Koszul filtration verified: R is Koszul";
  return v;
}

KoszulFiltration monomial_filtration(const Ideal& defining) {
  const RingDescriptor& ring = defining.ring();
  const std::size_t n = ring.num_variables();
  if (n > 16) throw InputError("monomial filtration limited to 16 variables");
  for (const auto& g : defining.generators())
    if (g.size() != 1 || g.degree() != 2) throw InputError("monomial filtration needs quadratic monomial generators");
  KoszulFiltration f{defining, {}, {}};
  const std::size_t count = std::size_t{1} << n;
  for (std::size_t mask = 0; mask < count; ++mask) {
    std::vector<Polynomial> vars;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) vars.push_back(Polynomial::variable(ring, i));
    f.members.emplace_back(ring, vars);
  }
  for (std::size_t mask = 1; mask < count; ++mask) {
    std::size_t top = n - 1;
    while (!(mask & (std::size_t{1} << top))) --top;
    const std::size_t j = mask & ~(std::size_t{1} << top);
    Polynomial x = Polynomial::variable(ring, top);
    Ideal colon = quotient_colon(defining, f.members[j], x);
    auto w = linear_generated(colon, defining);
    if (!w) throw InternalError("colon of a quadratic monomial ideal by a variable is not linear");
    std::size_t target = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (w->contains(Polynomial::variable(ring, i))) target |= std::size_t{1} << i;
    if (!same_in_quotient(f.members[target], *w, defining)) throw InternalError("colon is not generated by variables");
    f.witnesses.push_back({mask, j, x, target});
  }
  return f;
}

Json to_json(const KoszulFiltration& f) {
  Json j;
  j["kind"] = "koszul-filtration";
  j["ring"] = f.defining.ring().header();
  j["defining"] = forms_json(f.defining.generators());
  Json members = Json::array();
  for (const auto& m : f.members) members.push_back(forms_json(m.basis()));
  j["members"] = members;
  Json ws = Json::array();
  for (const auto& w : f.witnesses)
    ws.push_back(Json{{"member", w.member}, {"J", w.j}, {"x", w.x.to_string()}, {"colon", w.colon}});
  j["witnesses"] = ws;
  return j;
}

KoszulFiltration filtration_from_json(const Json& j) {
  try {
    if (j.at("kind").get<std::string>() != "koszul-filtration") throw InputError("not a Koszul filtration");
    RingDescriptor ring = parse_ring_header(j.at("ring").get<std::string>());
    KoszulFiltration f{Ideal(ring, forms_from_json(ring, j.at("defining"))), {}, {}};
    for (const auto& m : j.at("members")) f.members.emplace_back(ring, forms_from_json(ring, m));
    for (const auto& w : j.at("witnesses"))
      f.witnesses.push_back({w.at("member").get<std::size_t>(), w.at("J").get<std::size_t>(),
                             parse_polynomial(ring, w.at("x").get<std::string>()), w.at("colon").get<std::size_t>()});
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed filtration: ") + e.what());
  }
}

}  // namespace koszul
