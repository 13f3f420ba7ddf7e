#include "koszul/workbench/corpus.hpp"

#include <algorithm>
#include <chrono>

#include "koszul/apolarity/apolar.hpp"
#include "koszul/certificates/filtration.hpp"
#include "koszul/certificates/flag.hpp"
#include "koszul/certificates/gquadratic.hpp"
#include "koszul/certificates/lg.hpp"
#include "koszul/certificates/quadric_rank.hpp"
#include "koszul/errors.hpp"
#include "koszul/groebner/ideal_ops.hpp"
#include "koszul/invariants/hilbert.hpp"
#include "koszul/invariants/koszul.hpp"
#include "koszul/polyring/constructions.hpp"
#include "koszul/polyring/graded.hpp"
#include "koszul/polyring/points.hpp"
#include "koszul/workbench/format.hpp"

namespace koszul {

std::string to_string(ExpectationKind kind) {
  switch (kind) {
    case ExpectationKind::Certified: return "certified";
    case ExpectationKind::Probe: return "probe";
    case ExpectationKind::ExpectedFailure: return "expected-failure";
  }
  return "certified";
}

Verdict quadratic_verdict(const Ideal& ideal) {
  Verdict v;
  v.claim = "quadratic";
  const Ideal minimal = minimal_generators(ideal);
  Json degrees = Json::array();
  for (const auto& g : minimal.generators()) degrees.push_back(g.degree());
  for (const auto& g : minimal.generators())
    if (g.degree() != 2) {
      v.outcome = Outcome::CertifiedNo;
      v.witness = Json{{"generator", g.to_string()}, {"degree", g.degree()}};
      v.note = "minimal generator of degree " + std::to_string(g.degree());
      return v;
    }
  v.outcome = Outcome::CertifiedYes;
  v.witness = Json{{"degrees", degrees}};
  v.note = "all minimal generators are quadrics";
  return v;
}

Ideal anick_ideal(const Field& field) {
  RingDescriptor ring(5, field);
  std::vector<Polynomial> gens;
  for (const char* g : {"x1^2", "x2^2", "x4^2", "x5^2", "x1*x2", "x4*x5", "x1*x3+x3*x4+x2*x5"})
    gens.push_back(parse_polynomial(ring, g));
  for (const auto& m : monomials_of_degree(5, 3)) gens.push_back(Polynomial::monomial(ring, m));
  return minimal_generators(Ideal(ring, gens));
}

Ideal exceptional_ideal(const Field& field, int sign) {
  if (sign != 1 && sign != -1) throw InputError("sign must be +1 or -1");
  RingDescriptor ring(3, field, {"x", "y", "z"});
  const char* third = sign > 0 ? "y^2+x*z" : "y^2-x*z";
  std::vector<Polynomial> gens;
  for (const char* g : {"x^2", "x*y", third, "y*z"}) gens.push_back(parse_polynomial(ring, g));
  return Ideal(ring, gens);
}

namespace {

Json strings_of(const std::vector<Polynomial>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

Json series_ints(const TruncatedSeries& s) {
  Json out = Json::array();
  for (const auto& c : s.coeffs()) out.push_back(c.get_str());
  return out;
}

Verdict search_failed(const std::string& claim, const std::string& note, Json bounds) {
  Verdict v;
  v.claim = claim;
  v.outcome = Outcome::UndeterminedAtBound;
  v.bounds = std::move(bounds);
  v.note = note;
  return v;
}

Verdict flag_verdict(const QuotientRing& q, std::uint64_t seed, std::size_t attempts, Json& results) {
  auto found = search_flag(q, seed, attempts);
  results["flag_attempts"] = found.attempts_used;
  if (!found.flag) return search_failed("groebner-flag", "flag search exhausted", Json{{"attempts", attempts}, {"seed", seed}});
  Verdict v = verify_flag(*found.flag);
  v.bounds = Json{{"attempts", attempts}, {"seed", seed}};
  results["flag"] = to_json(*found.flag);
  return v;
}

Verdict filtration_verdict(const Ideal& ideal, Json& results) {
  auto f = monomial_filtration(ideal);
  results["filtration_members"] = f.members.size();
  return verify_filtration(f);
}

Verdict lift_verdict(const Ideal& r_ideal, const LgLift& lift, Json& results) {
  results["lift"] = Json{{"ring", lift.lift.ring().header()},
                         {"generators", strings_of(lift.lift.generators())},
                         {"forms", strings_of(lift.forms)},
                         {"order", lift.order.to_string()}};
  return verify_lg_lift(r_ideal, lift);
}

LgLift exceptional_lift(const Field& field, int sign) {
  RingDescriptor ring(4, field, {"x", "y", "z", "t"});
  const char* third = sign > 0 ? "y*z+x*t" : "-y*z+x*t";
  const char* fourth = sign > 0 ? "y^2+x*z" : "y^2-x*z";
  std::vector<Polynomial> gens;
  for (const char* g : {"x^2+x*t", "x*y+y*t", third, fourth}) gens.push_back(parse_polynomial(ring, g));
  return LgLift{Ideal(ring, gens), {Polynomial::variable(ring, 3)}, TermOrder::degrevlex(std::vector<std::size_t>{3, 0, 1, 2})};
}

Ideal power_of_variable(const Field& field, unsigned n) {
  RingDescriptor ring(1, field, {"x"});
  return Ideal(ring, {Polynomial::monomial(ring, Monomial::variable(0, n))});
}

Ideal ideal_from(const Field& field, const std::string& vars, std::initializer_list<const char*> gens) {
  std::vector<std::string> names;
  std::size_t start = 0;
  while (start <= vars.size()) {
    auto comma = vars.find(',', start);
    names.push_back(vars.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  RingDescriptor ring(names.size(), field, names);
  std::vector<Polynomial> out;
  for (const char* g : gens) out.push_back(parse_polynomial(ring, g));
  return Ideal(ring, out);
}

Json hilbert_json(const QuotientRing& q, std::size_t truncation) {
  return series_ints(hilbert_series(q, truncation).prefix);
}

EntryOutput cubic_entry(const Polynomial& f, Json extra = Json::object()) {
  auto inv = inverse_system(ApolarForm(f));
  EntryOutput out{inv.ideal, {}, std::move(extra)};
  out.results["form"] = f.to_string();
  Json h = Json::array();
  for (auto d : inv.h_vector) h.push_back(d);
  out.results["h_vector"] = h;
  out.verdicts.push_back(quadratic_verdict(inv.ideal));
  return out;
}

Polynomial seeded_non_cone_cubic(const RingDescriptor& ring, std::uint64_t seed) {
  for (std::uint64_t s = seed;; s += 1000) {
    Polynomial f = generic_form(ring, 3, s, 5);
    if (!is_cone(ApolarForm(f))) return f;
  }
}

using K = ExpectationKind;
constexpr Outcome Yes = Outcome::CertifiedYes;
constexpr Outcome No = Outcome::CertifiedNo;
constexpr Outcome Open = Outcome::UndeterminedAtBound;

std::vector<CorpusEntry> build_corpus() {
  std::vector<CorpusEntry> c;

  c.push_back({"anick", "seven quadrics plus m^3 in five variables: not quadratic, hence not Koszul",
               false,
               {{"quadratic", K::Certified, No}, {"koszul", K::Certified, No}},
               [](const Field& field) {
                 EntryOutput out{anick_ideal(field), {}, {}};
                 QuotientRing q(out.ideal);
                 out.verdicts.push_back(quadratic_verdict(out.ideal));
                 BettiTable t = resolve_residue_field(q, 4, 6);
                 out.verdicts.push_back(koszul_probe(q, t));
                 auto p = poincare_prefix(t);
                 out.results["poincare_prefix"] = series_ints(p.series);
                 out.results["poincare_complete"] = p.complete;
                 out.results["hilbert"] = hilbert_json(q, 4);
                 return out;
               }});

  c.push_back({"caviglia-ci", "complete intersection of 3 seeded quadrics with the lift y_i^2 + q_i", false,
               {{"quadratic", K::Certified, Yes}, {"lg-quadratic", K::Certified, Yes}},
               [](const Field& field) {
                 RingDescriptor ring(3, field, {"x", "y", "z"});
                 EntryOutput out{Ideal(ring, generic_forms(ring, 2, 3, 42, 5)), {}, {}};
                 out.results["seed"] = 42;
                 out.verdicts.push_back(quadratic_verdict(out.ideal));
                 out.verdicts.push_back(lift_verdict(out.ideal, caviglia_lift(out.ideal), out.results));
                 return out;
               }});

  c.push_back({"ci-3-general-quadrics", "3 seeded general quadrics in 3 variables: quadratic, Koszul, expected not G-quadratic",
               false,
               {{"quadratic", K::Certified, Yes}, {"g-quadratic", K::ExpectedFailure, Open}, {"koszul", K::Probe, Open}},
               [](const Field& field) {
                 RingDescriptor ring(3, field, {"x", "y", "z"});
                 EntryOutput out{Ideal(ring, generic_forms(ring, 2, 3, 43, 5)), {}, {}};
                 out.results["seed"] = 43;
                 out.verdicts.push_back(quadratic_verdict(out.ideal));
                 out.verdicts.push_back(gquadratic_search(out.ideal, {TermOrder::degrevlex(3), TermOrder::lex(3)}, 4, 9));
                 out.verdicts.push_back(series_koszul_test(QuotientRing(out.ideal), 12));
                 return out;
               }});

  for (unsigned n : {2u, 3u, 4u}) {
    std::vector<Expectation> ex;
    if (n == 2) {
      ex = {{"quadratic", K::Certified, Yes}, {"koszul-filtration", K::Certified, Yes}, {"koszul", K::Probe, Open}};
    } else {
      ex = {{"quadratic", K::Certified, No}, {"koszul", K::Certified, No}};
    }
    c.push_back({"x-power-" + std::to_string(n), "K[x]/(x^" + std::to_string(n) + ")", false, ex, [n](const Field& field) {
                   EntryOutput out{power_of_variable(field, n), {}, {}};
                   QuotientRing q(out.ideal);
                   out.verdicts.push_back(quadratic_verdict(out.ideal));
                   if (n == 2) out.verdicts.push_back(filtration_verdict(out.ideal, out.results));
                   BettiTable t = resolve_residue_field(q, 4, 8);
                   out.results["betti"] = to_json(t);
                   out.verdicts.push_back(koszul_probe(q, t));
                   return out;
                 }});
  }

  c.push_back({"monomial-xy", "K[x,y]/(xy) with the filtration by variable subsets", false,
               {{"koszul-filtration", K::Certified, Yes}},
               [](const Field& field) {
                 EntryOutput out{ideal_from(field, "x,y", {"x*y"}), {}, {}};
                 out.verdicts.push_back(filtration_verdict(out.ideal, out.results));
                 return out;
               }});

  c.push_back({"monomial-x2-xy-xz-yz", "K[x,y,z]/(x^2,xy,xz,yz) with its 8-member filtration", false,
               {{"koszul-filtration", K::Certified, Yes}},
               [](const Field& field) {
                 EntryOutput out{ideal_from(field, "x,y,z", {"x^2", "x*y", "x*z", "y*z"}), {}, {}};
                 out.verdicts.push_back(filtration_verdict(out.ideal, out.results));
                 return out;
               }});

  c.push_back({"five-generic-quadrics", "5 seeded quadrics in 5 variables: no member of rank <= 2, so no Koszul filtration",
               false,
               {{"quadratic", K::Certified, Yes}, {"rank-at-most-2-member", K::Certified, No}},
               [](const Field& field) {
                 RingDescriptor ring(5, field);
                 EntryOutput out{Ideal(ring, generic_forms(ring, 2, 5, 7, 5)), {}, {}};
                 out.results["seed"] = 7;
                 out.verdicts.push_back(quadratic_verdict(out.ideal));
                 out.verdicts.push_back(min_quadric_rank(out.ideal.generators(), 2, 64).verdict);
                 return out;
               }});

  c.push_back({"no-flag", "K[x,y,z]/(x^2,y^2,xz,yz): Koszul by a filtration, but without a Groebner flag", false,
               {{"koszul-filtration", K::Certified, Yes}, {"groebner-flag", K::ExpectedFailure, Open}},
               [](const Field& field) {
                 EntryOutput out{ideal_from(field, "x,y,z", {"x^2", "y^2", "x*z", "y*z"}), {}, {}};
                 out.verdicts.push_back(filtration_verdict(out.ideal, out.results));
                 out.verdicts.push_back(flag_verdict(QuotientRing(out.ideal), 11, kDefaultFlagAttempts, out.results));
                 return out;
               }});

  c.push_back({"pv-3-3-2", "pinched Veronese PV(3,3,2): quadratic toric presentation", false,
               {{"quadratic", K::Certified, Yes}, {"koszul", K::Probe, Open}},
               [](const Field& field) {
                 EntryOutput out{toric_ideal(pinched_veronese(3, 3, 2), 3, field), {}, {}};
                 out.verdicts.push_back(quadratic_verdict(out.ideal));
                 out.verdicts.push_back(series_koszul_test(QuotientRing(out.ideal), 10));
                 return out;
               }});

  c.push_back({"pv-4-5-2", "pinched Veronese PV(4,5,2): presentation needs a generator of degree >= 3", true,
               {{"quadratic", K::Certified, No}},
               [](const Field& field) {
                 // Fibers of the monomial map in degrees 2 and 3; full elimination in 32 variables is out of reach.
                 const auto monos = pinched_veronese(4, 5, 2);
                 auto gens = toric_generators_in_degree(monos, 4, field, 2);
                 const auto cubics = toric_generators_in_degree(monos, 4, field, 3);
                 gens.insert(gens.end(), cubics.begin(), cubics.end());
                 EntryOutput out{Ideal(gens.front().ring(), gens), {}, {}};
                 out.results["generators_by_degree"] = Json{{"2", gens.size() - cubics.size()}, {"3", cubics.size()}};
                 Verdict v;
                 v.claim = "quadratic";
                 v.bounds = Json{{"max_degree", 3}};
                 if (!cubics.empty()) {
                   v.outcome = Outcome::CertifiedNo;
                   v.witness = Json{{"generator", cubics.front().to_string()}, {"degree", 3}};
                   v.note = "minimal generator of degree 3";
                 } else {
                   v.note = "no minimal generator in degree 3";
                 }
                 out.verdicts.push_back(v);
                 return out;
               }});

  c.push_back({"points-4-p2", "4 seeded general points in P^2 (coordinates in [-2,2]): Groebner flag", false,
               {{"quadratic", K::Certified, Yes}, {"groebner-flag", K::Certified, Yes}},
               [](const Field& field) {
                 RingDescriptor ring(3, field, {"x", "y", "z"});
                 EntryOutput out{points_ideal(ring, generic_points(field, 2, 4, 1, 2)), {}, {}};
                 out.verdicts.push_back(quadratic_verdict(out.ideal));
                 out.verdicts.push_back(flag_verdict(QuotientRing(out.ideal), 11, kDefaultFlagAttempts, out.results));
                 return out;
               }});

  for (std::size_t count : {6u, 7u}) {
    std::vector<Expectation> ex{{"koszul", count == 6 ? K::Probe : K::Certified, count == 6 ? Open : No}};
    c.push_back({"points-" + std::to_string(count) + "-p3",
                 std::to_string(count) + " seeded generic points in P^3", false, ex, [count](const Field& field) {
                   RingDescriptor ring(4, field, {"a", "b", "c", "d"});
                   EntryOutput out{points_ideal(ring, generic_points(field, 3, count, 1, 5)), {}, {}};
                   QuotientRing q(out.ideal);
                   BettiTable t = resolve_residue_field(q, 4, 8);
                   out.results["betti"] = to_json(t);
                   Verdict series = series_koszul_test(q, 8, &t);
                   Verdict probe = koszul_probe(q, t);
                   out.verdicts.push_back(series.outcome == Outcome::CertifiedNo ? series : probe);
                   out.results["series_screen"] = to_json(series);
                   return out;
                 }});
  }

  c.push_back({"fermat-cubic", "R_f for f = x1^3 + x2^3 + x3^3: not quadratic", false,
               {{"quadratic", K::Certified, No}, {"koszul", K::Certified, No}},
               [](const Field& field) {
                 RingDescriptor ring(3, field);
                 const Polynomial f = parse_polynomial(ring, "x1^3+x2^3+x3^3");
                 EntryOutput out = cubic_entry(f);
                 out.verdicts.push_back(theorem34_check(f));
                 return out;
               }});

  c.push_back({"veronese-cubic", "R_f for the symmetric 3x3 determinant: G-quadratic, though no pair (y,z) qualifies",
               false,
               {{"quadratic", K::Certified, Yes}, {"g-quadratic", K::Certified, Yes}, {"pair-condition", K::ExpectedFailure, Open}},
               [](const Field& field) {
                 const Polynomial f = symmetric_det_cubic(field);
                 EntryOutput out = cubic_entry(f);
                 out.verdicts.push_back(gquadratic_search(out.ideal, {TermOrder::degrevlex(6)}, 0, 1));
                 auto pair = balla_search(f, 1);
                 out.verdicts.push_back(pair.pair ? Verdict{Outcome::CertifiedYes, "pair-condition", Json::object(), Json::object(), "pair found"}
                                                  : search_failed("pair-condition", "no pair in the pool", Json{{"attempts", pair.attempts_used}}));
                 return out;
               }});

  c.push_back({"generic-cubic-3", "R_f for a seeded cubic in 3 variables: Koszul; smooth, so not expected G-quadratic", false,
               {{"quadratic", K::Certified, Yes}, {"koszul", K::Certified, Yes}, {"g-quadratic", K::ExpectedFailure, Open}},
               [](const Field& field) {
                 RingDescriptor ring(3, field);
                 const Polynomial f = seeded_non_cone_cubic(ring, 1);
                 EntryOutput out = cubic_entry(f, Json{{"jacobian_codim", jacobian_codim(f)}});
                 out.verdicts.push_back(theorem34_check(f));
                 out.verdicts.push_back(gquadratic_search(out.ideal, {TermOrder::degrevlex(3), TermOrder::lex(3)}, 2, 5));
                 return out;
               }});

  c.push_back({"generic-singular-cubic", "R_f for x1*q + c: the singular flag condition holds; rational flag search is a probe",
               false,
               {{"singular-flag-condition", K::Certified, Yes}, {"groebner-flag", K::Probe, Open}},
               [](const Field& field) {
                 RingDescriptor ring(3, field);
                 const Polynomial f = generic_singular_cubic(ring, 1);
                 EntryOutput out = cubic_entry(f);
                 Verdict cond;
                 cond.claim = "singular-flag-condition";
                 cond.outcome = singular_flag_condition(f, Polynomial::variable(ring, 0)) ? Yes : No;
                 cond.witness = Json{{"y", "x1"}};
                 out.verdicts.push_back(cond);
                 out.verdicts.push_back(flag_verdict(QuotientRing(out.ideal), 3, 100, out.results));
                 return out;
               }});

  for (int sign : {1, -1}) {
    c.push_back({sign > 0 ? "exceptional-plus" : "exceptional-minus",
                 sign > 0 ? "K[x,y,z]/(x^2,xy,y^2+xz,yz) with its one-parameter lift"
                          : "K[x,y,z]/(x^2,xy,y^2-xz,yz), the other sign, lifted through z -> -z",
                 false,
                 {{"quadratic", K::Certified, Yes}, {"lg-quadratic", K::Certified, Yes}, {"koszul", K::Probe, Open}},
                 [sign](const Field& field) {
                   EntryOutput out{exceptional_ideal(field, sign), {}, {}};
                   QuotientRing q(out.ideal);
                   out.results["hilbert"] = hilbert_json(q, 12);
                   out.verdicts.push_back(quadratic_verdict(out.ideal));
                   out.verdicts.push_back(lift_verdict(out.ideal, exceptional_lift(field, sign), out.results));
                   out.verdicts.push_back(koszul_probe(q, 4, 8));
                   return out;
                 }});
  }

  std::sort(c.begin(), c.end(), [](const CorpusEntry& a, const CorpusEntry& b) { return a.name < b.name; });
  return c;
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = build_corpus();
  return entries;
}

const CorpusEntry& corpus_entry(const std::string& name) {
  for (const auto& e : corpus())
    if (e.name == name) return e;
  throw InputError("unknown corpus entry '" + name + "'");
}

EntryRun run_entry(const CorpusEntry& entry, const Field& field) {
  const auto start = std::chrono::steady_clock::now();
  EntryRun run{entry.name, entry.run(field), {}, false, 0};
  run.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  run.green = true;
  for (const auto& ex : entry.expectations) {
    ExpectationCheck check{ex, std::nullopt, false};
    for (const auto& v : run.output.verdicts)
      if (v.claim == ex.claim) {
        check.verdict = v;
        break;
      }
    check.passed = check.verdict && check.verdict->outcome == ex.outcome;
    run.green = run.green && check.passed;
    run.checks.push_back(std::move(check));
  }
  return run;
}

Json to_json(const EntryRun& run) {
  Json checks = Json::array();
  for (const auto& c : run.checks)
    checks.push_back(Json{{"claim", c.expected.claim},
                          {"kind", to_string(c.expected.kind)},
                          {"expected", to_string(c.expected.outcome)},
                          {"observed", c.verdict ? to_string(c.verdict->outcome) : "missing"},
                          {"passed", c.passed}});
  return Json{{"entry", run.name},
              {"ideal", format_ideal_file(run.output.ideal)},
              {"green", run.green},
              {"checks", checks},
              {"results", run.output.results}};
}

}  // namespace koszul
