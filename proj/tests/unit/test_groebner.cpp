#include <algorithm>
#include <random>
#include <numeric>

#include "doctest.h"
#include "helpers.hpp"
#include "koszul/errors.hpp"
#include "koszul/groebner/groebner.hpp"
#include "koszul/groebner/ideal_ops.hpp"
#include "koszul/groebner/quotient.hpp"
#include "koszul/polyring/constructions.hpp"
#include "koszul/polyring/graded.hpp"

using namespace testing;

namespace {

// Degreewise membership oracle: f homogeneous of degree d lies in I iff its
// coordinates lie in the row space of I_d.
bool slice_contains(const Ideal& I, const Polynomial& f) {
  if (f.is_zero()) return true;
  auto s = graded_slice(I, static_cast<unsigned>(f.degree()));
  EchelonBasis b(I.ring().field(), s.monomials.size());
  for (std::size_t i = 0; i < s.dim(); ++i) b.insert(s.rows.row_vector(i));
  return b.contains(f.coordinates(s.monomials));
}

Ideal random_homogeneous_ideal(std::mt19937_64& rng, const RingDescriptor& r) {
  std::vector<Polynomial> gens;
  const std::size_t count = 1 + rng() % 3;
  const auto n = r.num_variables();
  for (std::size_t i = 0; i < count; ++i) {
    unsigned d = 1 + static_cast<unsigned>(rng() % 3);
    auto monos = monomials_of_degree(n, d);
    std::vector<Term> terms;
    for (int k = 0; k < 3; ++k)
      terms.push_back({monos[rng() % monos.size()], r.field().from_int(static_cast<long>(rng() % 5) - 2)});
    auto p = Polynomial::from_terms(r, terms);
    if (!p.is_zero()) gens.push_back(p);
  }
  if (gens.empty()) gens.push_back(Polynomial::variable(r, 0));
  return Ideal(r, gens);
}

}  // namespace

TEST_CASE("Caviglia-shaped inputs are already Groebner bases") {
  auto r = make_ring("x1,x2,y1,y2");
  auto order = TermOrder::degrevlex({2, 3, 0, 1});
  auto I = ideal(r, {"y1^2+x1^2", "y2^2+x2^2"});
  auto gb = buchberger(I, order);
  // Ascending leading monomials: y2^2 < y1^2.
  REQUIRE(gb.elements().size() == 2);
  CHECK(gb.elements()[0] == poly(r, "y2^2+x2^2"));
  CHECK(gb.elements()[1] == poly(r, "y1^2+x1^2"));
  CHECK(gb.stats().product_criterion == 1);
  CHECK(is_quadratic_gb(gb));
}

TEST_CASE("small Groebner bases") {
  auto r1 = make_ring("x");
  auto gb1 = buchberger(ideal(r1, {"x"}), TermOrder::degrevlex(1));
  REQUIRE(gb1.elements().size() == 1);
  CHECK(gb1.elements()[0] == poly(r1, "x"));

  auto r = make_ring("x,y");
  auto gb = buchberger(ideal(r, {"x*y-1", "y^2-1"}), TermOrder::lex(2));
  REQUIRE(gb.elements().size() == 2);
  CHECK(gb.elements()[0] == poly(r, "y^2-1"));
  CHECK(gb.elements()[1] == poly(r, "x-y"));
  CHECK(satisfies_buchberger_criterion(gb));

  auto unit = buchberger(ideal(r, {"x", "x+1"}), TermOrder::lex(2));
  CHECK(unit.is_unit_ideal());
}

TEST_CASE("normal forms") {
  auto r = make_ring("x,y");
  auto I = ideal(r, {"x^2", "x*y"});
  auto gb = buchberger(I, TermOrder::degrevlex(2));
  for (const auto& g : I.generators()) CHECK(normal_form(g, gb).is_zero());
  CHECK(normal_form(poly(r, "1"), gb) == poly(r, "1"));
  CHECK(normal_form(poly(r, "x^2+x*y"), gb).is_zero());
  CHECK(normal_form(poly(r, "y^3+x*y^2+x"), gb) == poly(r, "y^3+x"));
}

TEST_CASE("degree cap truncation") {
  auto r = make_ring("x,y,z");
  auto I = ideal(r, {"x^2-y*z", "x*y-z^2"});
  auto full = buchberger(I, TermOrder::degrevlex(3));
  CHECK(full.max_degree() >= 3);
  auto capped = buchberger(I, TermOrder::degrevlex(3), 2);
  CHECK(capped.truncated());
  CHECK(capped.max_degree() == 2);
  CHECK_THROWS_AS(buchberger(ideal(r, {"x^2-y"}), TermOrder::degrevlex(3), 2), InputError);
}

TEST_CASE("quadraticity") {
  auto r = make_ring("x,y,z");
  CHECK(is_quadratic_ideal(ideal(r, {"x^2", "x*y", "y^2-x*z", "y*z"})));
  auto r1 = make_ring("x");
  CHECK_FALSE(is_quadratic_ideal(ideal(r1, {"x^3"})));
  CHECK_FALSE(is_quadratic_gb(buchberger(ideal(r1, {"x^3"}), TermOrder::degrevlex(1))));
}

TEST_CASE("membership agrees with the degreewise oracle") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    std::size_t n = 2 + rng() % 3;
    RingDescriptor r(n, Field::rationals());
    Ideal I = random_homogeneous_ideal(rng, r);
    auto gb = buchberger(I, TermOrder::degrevlex(n));
    for (unsigned d = 0; d <= 4; ++d) {
      for (const auto& m : monomials_of_degree(n, d)) {
        auto f = Polynomial::monomial(r, m);
        CHECK(ideal_contains(gb, f) == slice_contains(I, f));
      }
    }
    // A few random combinations of generators must be members.
    for (const auto& g : I.generators()) {
      auto f = g * Polynomial::monomial(r, monomials_of_degree(n, 1)[rng() % n]);
      CHECK(ideal_contains(gb, f));
      CHECK(slice_contains(I, f));
    }
  }
}

TEST_CASE("reduced basis does not depend on generator order") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 15; ++trial) {
    RingDescriptor r(3, Field::prime(32003));
    Ideal I = random_homogeneous_ideal(rng, r);
    auto gens = I.generators();
    std::reverse(gens.begin(), gens.end());
    for (const auto& order : {TermOrder::degrevlex(3), TermOrder::lex(3)}) {
      auto a = buchberger(I, order);
      auto b = buchberger(Ideal(r, gens), order);
      CHECK(a.elements() == b.elements());
    }
  }
}

TEST_CASE("standard monomials") {
  auto r1 = make_ring("x");
  QuotientRing q1(ideal(r1, {"x^2"}));
  CHECK(quotient_hilbert_basis(q1, 1) == std::vector<Monomial>{Monomial{1}});
  CHECK(quotient_hilbert_basis(q1, 2).empty());

  auto r3 = make_ring("x,y,z");
  QuotientRing exc(ideal(r3, {"x^2", "x*y", "y^2+x*z", "y*z"}));
  CHECK(quotient_hilbert_basis(exc, 2).size() == 2);

  auto r2 = make_ring("x,y");
  QuotientRing q2(ideal(r2, {"x*y"}));
  CHECK(quotient_hilbert_basis(q2, 3) == std::vector<Monomial>{Monomial{3, 0}, Monomial{0, 3}});
}

TEST_CASE("standard monomial counts match slice codimensions") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 15; ++trial) {
    std::size_t n = 2 + rng() % 3;
    RingDescriptor r(n, Field::rationals());
    Ideal I = random_homogeneous_ideal(rng, r);
    QuotientRing q(I);
    for (unsigned d = 0; d <= 5; ++d) CHECK(quotient_hilbert_basis(q, d).size() == graded_slice(I, d).codim());
  }
}

TEST_CASE("graded quotient multiplication tables") {
  auto r = make_ring("x,y,z");
  QuotientRing q(ideal(r, {"x^2", "x*y", "y^2+x*z", "y*z"}));
  GradedQuotient g(q, 4);
  CHECK(g.dim(0) == 1);
  CHECK(g.dim(1) == 3);
  CHECK(g.dim(2) == 2);
  CHECK(g.dim(3) == 1);
  // x_k * m computed through the table equals the normal form of the product.
  for (unsigned d = 0; d < 4; ++d)
    for (std::size_t k = 0; k < 3; ++k)
      for (std::size_t i = 0; i < g.dim(d); ++i) {
        Vector v(g.dim(d + 1), r.field().zero());
        for (const auto& [idx, c] : g.multiply_variable(k, d, i)) v[idx] = c;
        auto prod = Polynomial::monomial(r, g.basis(d)[i].times_variable(k));
        CHECK(g.coordinates(prod, d + 1) == v);
      }
}

TEST_CASE("intersections") {
  auto r = make_ring("x,y");
  CHECK(homogeneous_ideals_equal(intersect(ideal(r, {"x"}), ideal(r, {"y"})), ideal(r, {"x*y"})));
  CHECK(homogeneous_ideals_equal(intersect(ideal(r, {"x"}), ideal(r, {"x"})), ideal(r, {"x"})));
  CHECK(homogeneous_ideals_equal(intersect(ideal(r, {"x^2", "y"}), ideal(r, {"x"})), ideal(r, {"x^2", "x*y"})));
}

TEST_CASE("colon ideals") {
  auto r = make_ring("x,y");
  CHECK(homogeneous_ideals_equal(colon(ideal(r, {"x*y"}), poly(r, "x")), ideal(r, {"y"})));
  CHECK(homogeneous_ideals_equal(colon(ideal(r, {"x^2", "x*y"}), poly(r, "x")), ideal(r, {"x", "y"})));
  CHECK_THROWS_AS(colon(ideal(r, {"x"}), Polynomial(r)), InputError);
  CHECK(homogeneous_ideals_equal(colon_ideal(ideal(r, {"x^2", "x*y", "y^3"}), ideal(r, {"x", "y"})),
                                 ideal(r, {"x", "y^2"})));
}

TEST_CASE("colon and intersection agree with the degreewise oracle") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 12; ++trial) {
    RingDescriptor r(3, Field::rationals());
    Ideal I = random_homogeneous_ideal(rng, r);
    Ideal J = random_homogeneous_ideal(rng, r);
    Polynomial f = J.generators().front();
    const unsigned df = static_cast<unsigned>(f.degree());
    Ideal C = colon(I, f);
    Ideal M = intersect(I, J);
    for (unsigned d = 0; d <= 3; ++d) {
      for (const auto& m : monomials_of_degree(3, d)) {
        auto g = Polynomial::monomial(r, m);
        CHECK(slice_contains(C, g) == slice_contains(I, g * f));
        CHECK(slice_contains(M, g) == (slice_contains(I, g) && slice_contains(J, g)));
      }
    }
    // Sums of monomials probe the vector-space structure, not just monomials.
    auto basis = monomials_of_degree(3, 2);
    for (int k = 0; k < 5; ++k) {
      auto g = Polynomial::monomial(r, basis[rng() % basis.size()]) -
               Polynomial::monomial(r, basis[rng() % basis.size()]) * r.field().from_int(2);
      CHECK(slice_contains(C, g) == slice_contains(I, g * f));
    }
    (void)df;
  }
}

TEST_CASE("elimination") {
  auto r = make_ring("t,x,y");
  auto E = eliminate(ideal(r, {"x-t^2", "y-t^3"}), 1);
  CHECK(E.ring().names() == std::vector<std::string>{"x", "y"});
  REQUIRE(E.generators().size() == 1);
  CHECK(E.generators()[0] == poly(E.ring(), "x^3-y^2"));
}

TEST_CASE("toric ideals") {
  Field q = Field::rationals();
  auto I = toric_ideal({Monomial{2, 0}, Monomial{1, 1}, Monomial{0, 2}}, 2, q);
  REQUIRE(I.generators().size() == 1);
  auto g = I.generators()[0];
  CHECK((g == poly(I.ring(), "t1*t3-t2^2") || g == poly(I.ring(), "t2^2-t1*t3")));
  CHECK(toric_ideal({Monomial{1, 1}}, 2, q).is_zero());
  CHECK_THROWS_AS(toric_ideal({Monomial{1, 1}, Monomial{3, 0}}, 2, q), InputError);

  auto pv = pinched_veronese(3, 3, 2);
  auto T = toric_ideal(pv, 3, q);
  auto degs = minimal_generator_degrees(T);
  CHECK(!degs.empty());
  CHECK(std::all_of(degs.begin(), degs.end(), [](unsigned d) { return d == 2; }));
  CHECK(is_quadratic_ideal(T));
}

TEST_CASE("toric generators by fibers agree with elimination") {
  Field q = Field::rationals();
  std::vector<std::pair<std::size_t, std::vector<Monomial>>> configs{
      {2, {Monomial{3, 0}, Monomial{2, 1}, Monomial{1, 2}, Monomial{0, 3}}},
      {2, {Monomial{4, 0}, Monomial{3, 1}, Monomial{1, 3}, Monomial{0, 4}}},  // needs a cubic
      {3, {Monomial{2, 0, 0}, Monomial{0, 2, 0}, Monomial{0, 0, 2}, Monomial{1, 1, 0}, Monomial{1, 0, 1}, Monomial{0, 1, 1}}},
      {3, pinched_veronese(3, 3, 2)},
  };
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 6; ++trial) {
    auto all = monomials_of_degree(3, 3);
    std::shuffle(all.begin(), all.end(), rng);
    configs.emplace_back(3, std::vector<Monomial>(all.begin(), all.begin() + 4 + static_cast<long>(rng() % 3)));
  }
  bool saw_cubic = false;
  for (const auto& [n, monos] : configs) {
    const Ideal T = toric_ideal(monos, n, q);
    const auto degs = minimal_generator_degrees(T);
    const unsigned top = degs.empty() ? 2 : degs.back();
    const GroebnerBasis gb = buchberger(T, TermOrder::degrevlex(monos.size()));
    for (unsigned d = 2; d <= top; ++d) {
      const auto gens = toric_generators_in_degree(monos, n, q, d);
      CHECK(gens.size() == static_cast<std::size_t>(std::count(degs.begin(), degs.end(), d)));
      for (const auto& g : gens) {
        CHECK(g.is_homogeneous());
        CHECK(ideal_contains(gb, g.map_variables(T.ring(), [&] {
          std::vector<std::size_t> id(monos.size());
          std::iota(id.begin(), id.end(), 0);
          return id;
        }())));
      }
      saw_cubic = saw_cubic || (d == 3 && !gens.empty());
    }
  }
  CHECK(saw_cubic);
  CHECK_THROWS_AS(toric_generators_in_degree({Monomial{1, 1}}, 2, q, 1), InputError);
}

TEST_CASE("exact division") {
  auto r = make_ring("x,y");
  CHECK(divide_exact(poly(r, "x^3-x*y^2"), poly(r, "x+y")) == poly(r, "x^2-x*y"));
  CHECK_THROWS_AS(divide_exact(poly(r, "x^2+y"), poly(r, "x")), InternalError);
}
