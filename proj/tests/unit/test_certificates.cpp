#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "koszul/certificates/filtration.hpp"
#include "koszul/certificates/flag.hpp"
#include "koszul/certificates/gquadratic.hpp"
#include "koszul/certificates/lg.hpp"
#include "koszul/certificates/linear_ideals.hpp"
#include "koszul/certificates/quadric_rank.hpp"
#include "koszul/errors.hpp"
#include "koszul/invariants/hilbert.hpp"
#include "koszul/invariants/koszul.hpp"
#include "koszul/polyring/constructions.hpp"
#include "koszul/polyring/graded.hpp"
#include "koszul/polyring/points.hpp"

using namespace testing;

namespace {

LinearSpace space(const RingDescriptor& ring, std::initializer_list<const char*> forms) {
  return LinearSpace::span(ring, polys(ring, forms));
}

// Seeded ideal generated by a random nonempty set of quadratic monomials.
Ideal random_quadratic_monomial_ideal(std::mt19937_64& rng, const RingDescriptor& ring) {
  const auto monos = monomials_of_degree(ring.num_variables(), 2);
  std::vector<Polynomial> gens;
  for (const auto& m : monos)
    if (rng() % 3 == 0) gens.push_back(Polynomial::monomial(ring, m));
  if (gens.empty()) gens.push_back(Polynomial::monomial(ring, monos[rng() % monos.size()]));
  return Ideal(ring, gens);
}

// Bitmask of the variables generating (J + I) : x_k for a quadratic monomial I:
// J itself plus every x_l with x_k x_l in I.
std::size_t monomial_colon_mask(const Ideal& I, std::size_t j_mask, std::size_t k) {
  std::size_t mask = j_mask;
  const std::size_t n = I.ring().num_variables();
  for (const auto& g : I.generators()) {
    const Monomial& m = g.terms().front().monomial;
    if (m[k] == 0) continue;
    for (std::size_t l = 0; l < n; ++l) {
      const unsigned need = l == k ? 2 : 1;
      if (m[l] == need) mask |= std::size_t{1} << l;
    }
  }
  return mask;
}

std::size_t mask_of(const LinearSpace& v, std::size_t n) {
  std::size_t mask = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (v.contains(LinearSpace::span(v.ring(), {Polynomial::variable(v.ring(), i)}))) mask |= std::size_t{1} << i;
  return mask;
}

std::vector<std::string> strings(const Json& arr) {
  std::vector<std::string> out;
  for (const auto& s : arr) out.push_back(s.get<std::string>());
  return out;
}

}  // namespace

TEST_CASE("filtration of K[x,y]/(xy) by variable subsets verifies") {
  auto r = make_ring("x,y");
  KoszulFiltration f{ideal(r, {"x*y"}),
                     {LinearSpace(r), space(r, {"x"}), space(r, {"y"}), space(r, {"x", "y"})},
                     {{1, 0, poly(r, "x"), 2}, {2, 0, poly(r, "y"), 1}, {3, 1, poly(r, "y"), 1}}};
  const Verdict v = verify_filtration(f);
  CHECK(v.outcome == Outcome::CertifiedYes);
  CHECK(v.claim == "koszul-filtration");

  // A wrong colon target is caught.
  f.witnesses[0].colon = 0;
  const Verdict bad = verify_filtration(f);
  CHECK(bad.outcome == Outcome::CertifiedNo);
  CHECK(bad.witness["condition"] == "colon");
}

TEST_CASE("filtration trivial and failing cases") {
  auto r = make_ring("x");
  KoszulFiltration poly_ring{Ideal(r), {LinearSpace(r), space(r, {"x"})}, {{1, 0, poly(r, "x"), 0}}};
  CHECK(verify_filtration(poly_ring).outcome == Outcome::CertifiedYes);

  // (0) : (x) = (x^2) in K[x]/(x^3) is not generated by linear forms.
  KoszulFiltration cube{ideal(r, {"x^3"}), {LinearSpace(r), space(r, {"x"})}, {{1, 0, poly(r, "x"), 0}}};
  const Verdict v = verify_filtration(cube);
  CHECK(v.outcome == Outcome::CertifiedNo);
  CHECK(v.witness["condition"] == "colon");
  cube.witnesses[0].colon = 1;
  CHECK(verify_filtration(cube).outcome == Outcome::CertifiedNo);

  // Missing maximal ideal.
  KoszulFiltration short_f{Ideal(make_ring("x,y")), {LinearSpace(make_ring("x,y"))}, {}};
  CHECK(verify_filtration(short_f).outcome == Outcome::CertifiedNo);
}

TEST_CASE("monomial filtrations: sizes and colon targets match the monomial rule") {
  auto r2 = make_ring("x,y");
  auto f = monomial_filtration(ideal(r2, {"x*y"}));
  CHECK(f.members.size() == 4);
  CHECK(verify_filtration(f).outcome == Outcome::CertifiedYes);

  auto r1 = make_ring("x");
  auto g = monomial_filtration(ideal(r1, {"x^2"}));
  REQUIRE(g.members.size() == 2);
  REQUIRE(g.witnesses.size() == 1);
  CHECK(g.witnesses[0].colon == 1);
  CHECK(verify_filtration(g).outcome == Outcome::CertifiedYes);

  auto r3 = make_ring("x,y,z");
  const Ideal I = ideal(r3, {"x^2", "x*y", "x*z", "y*z"});
  auto h = monomial_filtration(I);
  CHECK(h.members.size() == 8);
  CHECK(verify_filtration(h).outcome == Outcome::CertifiedYes);
  for (const auto& w : h.witnesses) {
    const std::size_t j_mask = mask_of(h.members[w.j], 3);
    std::size_t k = 0;
    while (w.x != Polynomial::variable(r3, k)) ++k;
    CHECK(mask_of(h.members[w.colon], 3) == monomial_colon_mask(I, j_mask, k));
  }

  CHECK_THROWS_AS(monomial_filtration(ideal(r2, {"x^2+y^2"})), InputError);
  CHECK_THROWS_AS(monomial_filtration(ideal(r2, {"x^3"})), InputError);
}

TEST_CASE("filtration soundness: seeded quadratic monomial algebras stay linear") {
  std::mt19937_64 rng(20261018);
  for (int trial = 0; trial < 6; ++trial) {
    auto r = make_ring(trial % 2 ? "a,b,c" : "a,b,c,d");
    const Ideal I = random_quadratic_monomial_ideal(rng, r);
    auto f = monomial_filtration(I);
    CHECK(verify_filtration(f).outcome == Outcome::CertifiedYes);
    QuotientRing q(I);
    CHECK(series_koszul_test(q, 10).outcome != Outcome::CertifiedNo);
    BettiTable t = resolve_residue_field(q, 3, 6);
    CHECK(t.linear());
    // Every member has a linear resolution as well.
    for (std::size_t m = 1; m < f.members.size(); m += 3) {
      BettiTable c = resolve_cyclic(q, f.members[m].ideal(), 3, 6);
      for (const auto& [ij, b] : c.entries) CHECK(ij.first == ij.second);
    }
  }
}

TEST_CASE("filtration JSON round trip") {
  auto r3 = make_ring("x,y,z");
  auto f = monomial_filtration(ideal(r3, {"x^2", "y*z"}));
  auto back = filtration_from_json(to_json(f));
  CHECK(back.members == f.members);
  REQUIRE(back.witnesses.size() == f.witnesses.size());
  for (std::size_t i = 0; i < f.witnesses.size(); ++i) {
    CHECK(back.witnesses[i].member == f.witnesses[i].member);
    CHECK(back.witnesses[i].colon == f.witnesses[i].colon);
    CHECK(back.witnesses[i].x == f.witnesses[i].x);
  }
  CHECK(verify_filtration(back).outcome == Outcome::CertifiedYes);
}

TEST_CASE("Groebner flag of K[x,y]") {
  auto r = make_ring("x,y");
  GroebnerFlag flag{Ideal(r), polys(r, {"x", "y"}), {0, 1}};
  const Verdict v = verify_flag(flag);
  CHECK(v.outcome == Outcome::CertifiedYes);
  CHECK(v.claim == "groebner-flag");
  CHECK(verify_filtration(flag_to_filtration(flag)).outcome == Outcome::CertifiedYes);

  GroebnerFlag wrong{Ideal(r), polys(r, {"x", "y"}), {1, 1}};
  CHECK(verify_flag(wrong).outcome == Outcome::CertifiedNo);
  GroebnerFlag dependent{Ideal(r), polys(r, {"x", "2*x"}), {0, 1}};
  CHECK(verify_flag(dependent).outcome == Outcome::CertifiedNo);

  auto back = flag_from_json(to_json(flag));
  CHECK(back.forms == flag.forms);
  CHECK(back.colon_map == flag.colon_map);
}

TEST_CASE("flag search: four general points have a flag") {
  auto r = make_ring("x,y,z");
  for (std::uint64_t seed : {1u, 3u}) {
    const Ideal I = points_ideal(r, generic_points(r.field(), 2, 4, seed, 2));
    QuotientRing q(I);
    auto result = search_flag(q, 11);
    REQUIRE(result.flag.has_value());
    CHECK(verify_flag(*result.flag).outcome == Outcome::CertifiedYes);
    // Flag => filtration.
    CHECK(verify_filtration(flag_to_filtration(*result.flag)).outcome == Outcome::CertifiedYes);
    // A flag certifies G-quadratic; the oracle: some order on the flag
    // coordinates has a quadratic basis.
    CHECK(is_quadratic_ideal(I));
  }
}

TEST_CASE("flag search: K[x,y,z]/(x^2,y^2,xz,yz) has none") {
  auto r = make_ring("x,y,z");
  QuotientRing q(ideal(r, {"x^2", "y^2", "x*z", "y*z"}));
  auto result = search_flag(q, 11);
  CHECK_FALSE(result.flag.has_value());
  CHECK(result.attempts_used == kDefaultFlagAttempts);
  CHECK(result.transcript.size() == kDefaultFlagAttempts);
}

TEST_CASE("flag search transcripts are deterministic") {
  auto r = make_ring("x,y,z");
  QuotientRing q(points_ideal(r, generic_points(r.field(), 2, 4, 5, 2)));
  auto a = search_flag(q, 99, 40);
  auto b = search_flag(q, 99, 40);
  CHECK(a.transcript == b.transcript);
  CHECK(a.attempts_used == b.attempts_used);
}

TEST_CASE("flag search rejects non-quadratic input at once") {
  auto r = make_ring("x");
  QuotientRing q(ideal(r, {"x^3"}));
  auto result = search_flag(q, 1);
  CHECK_FALSE(result.flag.has_value());
  CHECK(result.attempts_used == 0);
}

TEST_CASE("G-quadratic search") {
  auto r2 = make_ring("x,y");
  const std::vector<TermOrder> orders{TermOrder::degrevlex(2), TermOrder::lex(2)};
  const Verdict mono = gquadratic_search(ideal(r2, {"x^2", "x*y", "y^2"}), orders, 0, 1);
  CHECK(mono.outcome == Outcome::CertifiedYes);
  CHECK(mono.witness["change"]["provenance"] == "identity");
  CHECK(mono.witness["order"] == "degrevlex");

  // The lift of the exceptional algebra, in the given coordinates.
  auto r4 = make_ring("x,y,z,t");
  const Ideal lift = ideal(r4, {"x^2+x*t", "x*y+y*t", "y*z+x*t", "y^2+x*z"});
  const TermOrder t_first = TermOrder::degrevlex(std::vector<std::size_t>{3, 0, 1, 2});
  const Verdict v = gquadratic_search(lift, {t_first}, 0, 1);
  REQUIRE(v.outcome == Outcome::CertifiedYes);
  CHECK(v.witness["change"]["provenance"] == "identity");
  // Replay reproduces the basis exactly.
  GroebnerBasis again = replay_gquadratic(lift, v.witness);
  Json replayed = Json::array();
  for (const auto& g : again.elements()) replayed.push_back(g.to_string());
  CHECK(replayed == v.witness["basis"]);
  CHECK(is_quadratic_gb(again));

  // Three general quadrics in three variables: the search fails.
  auto r3 = make_ring("x,y,z");
  const Ideal ci(r3, generic_forms(r3, 2, 3, 42, 5));
  const Verdict fail = gquadratic_search(ci, {TermOrder::degrevlex(3), TermOrder::lex(3)}, 4, 9);
  CHECK(fail.outcome == Outcome::UndeterminedAtBound);

  const Verdict cubic = gquadratic_search(ideal(r2, {"x^2", "y^3"}), orders, 2, 1);
  CHECK(cubic.outcome == Outcome::CertifiedNo);
}

TEST_CASE("G-quadratic witnesses replay under random coordinate changes") {
  auto r3 = make_ring("x,y,z");
  // (x^2, y^2) moved by a change is still G-quadratic in suitable coordinates.
  Rng rng(4);
  const Ideal moved = CoordinateChange::random(r3.field(), 3, rng).apply(ideal(r3, {"x^2", "x*y"}));
  const Verdict v = gquadratic_search(moved, {TermOrder::degrevlex(3)}, 3, 17);
  REQUIRE(v.outcome == Outcome::CertifiedYes);
  GroebnerBasis again = replay_gquadratic(moved, v.witness);
  CHECK(strings(v.witness["basis"]).size() == again.elements().size());
  for (std::size_t i = 0; i < again.elements().size(); ++i) CHECK(again.elements()[i].to_string() == v.witness["basis"][i]);

  CHECK_THROWS_AS(CoordinateChange(DenseMatrix::from_ints(r3.field(), {{1, 1}, {2, 2}}), ChangeProvenance::User), InputError);
  auto change = CoordinateChange::random(r3.field(), 3, rng);
  auto back = CoordinateChange::from_json(change.to_json(), r3.field());
  CHECK(back.matrix() == change.matrix());
  CHECK(back.provenance() == ChangeProvenance::SeededRandom);
}

TEST_CASE("LG lifts") {
  // Caviglia lift of a seeded complete intersection of quadrics.
  auto r3 = make_ring("x,y,z");
  const Ideal ci(r3, generic_forms(r3, 2, 3, 42, 5));
  LgLift lift = caviglia_lift(ci);
  CHECK(lift.lift.ring().num_variables() == 6);
  GroebnerBasis gb = buchberger(lift.lift, lift.order);
  CHECK(gb.elements().size() == 3);
  for (const auto& g : gb.elements()) CHECK(g.terms().front().monomial.support_size(6) == 1);
  const Verdict v = verify_lg_lift(ci, lift);
  CHECK(v.outcome == Outcome::CertifiedYes);
  // Soundness: the specialization has R's Hilbert function.
  std::vector<Polynomial> specialized = lift.lift.generators();
  for (const auto& f : lift.forms) specialized.push_back(f);
  auto h_special = hilbert_series(QuotientRing(Ideal(lift.lift.ring(), specialized)), 12);
  auto h_r = hilbert_series(QuotientRing(ci), 12);
  CHECK(h_special.prefix == h_r.prefix);

  // Trivial lift.
  auto r2 = make_ring("x,y");
  const Ideal mono = ideal(r2, {"x^2", "x*y", "y^2"});
  CHECK(verify_lg_lift(mono, LgLift{mono, {}, TermOrder::degrevlex(2)}).outcome == Outcome::CertifiedYes);

  // Exceptional algebra with its one-parameter lift.
  auto r4 = make_ring("x,y,z,t");
  const Ideal exc_lift = ideal(r4, {"x^2+x*t", "x*y+y*t", "y*z+x*t", "y^2+x*z"});
  const TermOrder t_first = TermOrder::degrevlex(std::vector<std::size_t>{3, 0, 1, 2});
  const Ideal exc = ideal(r3, {"x^2", "x*y", "y^2+x*z", "y*z"});
  CHECK(verify_lg_lift(exc, LgLift{exc_lift, polys(r4, {"t"}), t_first}).outcome == Outcome::CertifiedYes);
  // The other sign is not the specialization of this lift.
  const Ideal exc_minus = ideal(r3, {"x^2", "x*y", "y^2-x*z", "y*z"});
  const Verdict minus = verify_lg_lift(exc_minus, LgLift{exc_lift, polys(r4, {"t"}), t_first});
  CHECK(minus.outcome == Outcome::CertifiedNo);
  CHECK(minus.witness["condition"] == "specialization");
  // A zero divisor as the form fails the Hilbert identity.
  const Verdict zd = verify_lg_lift(exc, LgLift{exc_lift, polys(r4, {"x"}), t_first});
  CHECK(zd.outcome == Outcome::CertifiedNo);

  CHECK_THROWS_AS(verify_lg_lift(exc, LgLift{exc_lift, polys(r4, {"t^2"}), t_first}), InputError);
}

TEST_CASE("Gram matrix evaluates the quadric") {
  auto r = make_ring("x,y,z");
  const Polynomial q = poly(r, "3*x^2 - x*y + 5*y*z + 2*z^2 + 7*x*z");
  DenseMatrix g = gram_matrix(q);
  CHECK(g == g.transpose());
  Rng rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    Vector v;
    for (int i = 0; i < 3; ++i) v.push_back(r.field().from_int(uniform_int(rng, -9, 9)));
    Vector gv = multiply(g, v);
    FieldElem quad = r.field().zero();
    for (int i = 0; i < 3; ++i) quad += v[i] * gv[i];
    CHECK(quad == q.evaluate(v));
  }
  CHECK(quadric_rank(poly(r, "x*y")) == 2);
  CHECK(quadric_rank(poly(r, "x^2+2*x*y+y^2")) == 1);
  CHECK_THROWS_AS(gram_matrix(poly(make_ring("x,y", Field::prime(2)), "x*y")), InputError);
}

TEST_CASE("minimal quadric rank in a space") {
  auto r2 = make_ring("x,y");
  auto a = min_quadric_rank(polys(r2, {"x^2", "y^2"}), 1);
  CHECK(a.verdict.outcome == Outcome::CertifiedYes);
  CHECK(a.min_rank_seen == 1u);

  auto b = min_quadric_rank(polys(r2, {"x*y", "x^2-y^2"}), 1);
  CHECK(b.verdict.outcome == Outcome::CertifiedYes);
  CHECK(b.min_rank_seen == 2u);
  CHECK(b.exhaustive);

  // Five general quadrics in five variables contain no rank <= 2 member.
  auto r5 = make_ring("a,b,c,d,e");
  auto c = min_quadric_rank(generic_forms(r5, 2, 5, 7, 5), 2, 64);
  CHECK(c.verdict.outcome == Outcome::CertifiedNo);
  CHECK(c.locus_empty);
  CHECK_FALSE(c.exhaustive);
  CHECK(*c.min_rank_seen >= 3);

  // x^2 + y^2 + z^2 spans alone: rank 3, but the pencil with x*y hits rank 2.
  auto r3 = make_ring("x,y,z");
  auto d = min_quadric_rank(polys(r3, {"x^2+y^2+z^2"}), 1);
  CHECK(d.verdict.outcome == Outcome::CertifiedNo);
  auto e = min_quadric_rank(polys(r3, {"x^2+y^2+z^2", "z^2"}), 1);
  CHECK(e.verdict.outcome == Outcome::CertifiedYes);
}
