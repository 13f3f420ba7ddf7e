#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "koszul/errors.hpp"
#include "koszul/polyring/constructions.hpp"
#include "koszul/polyring/graded.hpp"
#include "koszul/polyring/points.hpp"

using namespace testing;

namespace {

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Monomial random_monomial(std::mt19937_64& rng, std::size_t n, unsigned max_exp) {
  std::vector<unsigned> e(n);
  for (auto& v : e) v = static_cast<unsigned>(rng() % (max_exp + 1));
  return Monomial(std::span<const unsigned>(e));
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  auto r = make_ring("x,y");
  CHECK((poly(r, "x+y") * poly(r, "x-y")) == poly(r, "x^2-y^2"));
  auto r2 = make_ring("x,y", Field::prime(2));
  CHECK(power(poly(r2, "x+y"), 2) == poly(r2, "x^2+y^2"));
  auto f = poly(r, "3*x^2*y - 1/2*y^3 + x");
  CHECK(f.substitute_linear(DenseMatrix::identity(r.field(), 2)) == f);
  CHECK_THROWS_AS(f.substitute_linear(DenseMatrix::from_ints(r.field(), {{1, 2}, {2, 4}})), InputError);
  auto other = make_ring("a,b");
  CHECK_THROWS_AS(poly(r, "x") + poly(other, "a"), InputError);
  CHECK(f.degree() == 3);
  CHECK_FALSE(f.is_homogeneous());
  CHECK(Polynomial(r).degree() == -1);
  CHECK(poly(r, "x^3*y").partial_derivative(0) == poly(r, "3*x^2*y"));
}

TEST_CASE("linear substitution then its inverse is the identity") {
  std::mt19937_64 rng(17);
  auto r = make_ring("x,y,z");
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::vector<long>> rows(3, std::vector<long>(3));
    for (auto& row : rows)
      for (auto& v : row) v = static_cast<long>(rng() % 7) - 3;
    auto m = DenseMatrix::from_ints(r.field(), rows);
    auto inv = inverse(m);
    if (!inv) continue;
    auto f = generic_form(r, 3, rng(), 5) + generic_form(r, 1, rng(), 5);
    CHECK(f.substitute_linear(m).substitute_linear(*inv) == f);
  }
}

TEST_CASE("term orders are multiplicative") {
  std::mt19937_64 rng(23);
  const std::size_t n = 4;
  std::vector<TermOrder> orders{TermOrder::lex(n), TermOrder::degrevlex(n), TermOrder::degrevlex({3, 0, 1, 2}),
                                TermOrder::block_elimination(n, 1), TermOrder::block_elimination(n, 2)};
  for (const auto& order : orders) {
    for (int trial = 0; trial < 300; ++trial) {
      Monomial a = random_monomial(rng, n, 3), b = random_monomial(rng, n, 3), m = random_monomial(rng, n, 2);
      int c = order.compare(a, b);
      CHECK(order.compare(m * a, m * b) == c);
      CHECK(order.compare(b, a) == -c);
      if (!m.is_one()) CHECK(order.greater(m, Monomial()));
    }
  }
}

TEST_CASE("term order text round trip") {
  std::vector<std::string> names{"x", "y", "z", "t"};
  auto o = TermOrder::parse("revlex-perm:4,1,2,3", names);
  CHECK(o == TermOrder::degrevlex({3, 0, 1, 2}));
  CHECK(TermOrder::parse(o.to_string(), names) == o);
  CHECK(TermOrder::parse("lex", names) == TermOrder::lex(4));
  CHECK(TermOrder::parse("degrevlex", names) == TermOrder::degrevlex(4));
  CHECK_THROWS_AS(TermOrder::parse("revlex-perm:1,1,2,3", names), InputError);
  // degrevlex t > x > y > z: xz < y^2 and yt > x^2? compare degree 2 monomials.
  Monomial y2{0, 2, 0, 0}, xz{1, 0, 1, 0};
  CHECK(o.greater(y2, xz));
}

TEST_CASE("graded slices") {
  auto r1 = make_ring("x");
  CHECK(graded_slice(ideal(r1, {"x^2"}), 3).dim() == 1);
  auto r2 = make_ring("x,y");
  auto s = graded_slice(ideal(r2, {"x", "y"}), 1);
  CHECK(s.dim() == 2);
  CHECK(s.codim() == 0);
  auto r3 = make_ring("x,y,z");
  auto exc = graded_slice(ideal(r3, {"x^2", "x*y", "y^2-x*z", "y*z"}), 2);
  CHECK(exc.dim() == 4);
  CHECK(exc.monomials.size() == 6);
  CHECK_THROWS_AS(graded_slice(ideal(r2, {"x^2+y"}), 2), InputError);
}

TEST_CASE("S_1 * I_d lies in I_{d+1}") {
  auto r = make_ring("x,y,z");
  auto gens = generic_forms(r, 2, 2, 9, 5);
  Ideal I(r, gens);
  auto slices = graded_slices(I, 5);
  for (unsigned d = 2; d < 5; ++d) {
    EchelonBasis next(r.field(), slices[d + 1].monomials.size());
    for (std::size_t i = 0; i < slices[d + 1].dim(); ++i) next.insert(slices[d + 1].rows.row_vector(i));
    for (const auto& g : slices[d].polynomials(r))
      for (std::size_t k = 0; k < 3; ++k)
        CHECK(next.contains((g * Polynomial::variable(r, k)).coordinates(slices[d + 1].monomials)));
  }
}

TEST_CASE("minimal generators") {
  auto r = make_ring("x,y");
  auto I = ideal(r, {"x^2", "x^3+x*y^2", "x*y", "y^3"});
  CHECK(minimal_generator_degrees(I) == std::vector<unsigned>{2, 2, 3});
  CHECK(homogeneous_ideals_equal(I, ideal(r, {"x*y", "x^2", "y^3"})));
  CHECK_FALSE(homogeneous_ideals_equal(I, ideal(r, {"x*y", "x^2"})));
}

TEST_CASE("pinched Veronese") {
  auto pv = pinched_veronese(3, 3, 2);
  CHECK(pv.size() == 9);
  for (const auto& m : pv) CHECK(m != Monomial{1, 1, 1});
  for (std::size_t n = 1; n <= 4; ++n)
    for (unsigned d = 1; d <= 4; ++d) CHECK(pinched_veronese(n, d, n).size() == binomial(n + d - 1, d));
  // 4 pure powers, C(4,2) pairs times 4 splits a+b=5 with a,b>0.
  CHECK(pinched_veronese(4, 5, 2).size() == 4 + 6 * 4);
  CHECK_THROWS_AS(pinched_veronese(3, 3, 4), InputError);
}

TEST_CASE("structured forms") {
  Polynomial det = symmetric_det_cubic();
  const auto& r = det.ring();
  CHECK(det == poly(r, "x1*x4*x6 - x1*x5^2 - x2^2*x6 + 2*x2*x3*x5 - x3^2*x4"));
  auto k1 = make_ring("x");
  auto g = generic_form(k1, 2, 42);
  REQUIRE(g.size() == 1);
  CHECK(g.terms()[0].monomial == Monomial{2});
  auto k3 = make_ring("x,y,z");
  auto c = generic_form(k3, 3, 42);
  CHECK(c.size() == 10);
  for (const auto& t : c.terms()) {
    CHECK_FALSE(t.coeff.is_zero());
    CHECK(abs(t.coeff.rational()) <= 50);
  }
  CHECK(generic_form(k3, 3, 42) == c);
  CHECK_FALSE(generic_form(k3, 3, 43) == c);
}

TEST_CASE("points ideals") {
  auto r = make_ring("x,y");
  Field q = r.field();
  CHECK(homogeneous_ideals_equal(points_ideal(r, {{q.one(), q.zero()}}), ideal(r, {"y"})));
  CHECK(homogeneous_ideals_equal(points_ideal(r, {{q.one(), q.zero()}, {q.zero(), q.one()}}), ideal(r, {"x*y"})));
  CHECK_THROWS_AS(points_ideal(r, {{q.one(), q.zero()}, {q.from_int(2), q.zero()}}), InputError);

  auto p2 = make_ring("x,y,z");
  auto pts = generic_points(q, 2, 4, 7);
  auto I = points_ideal(p2, pts);
  CHECK(minimal_generator_degrees(I) == std::vector<unsigned>{2, 2});
  for (const auto& g : I.generators())
    for (const auto& p : pts) CHECK(g.evaluate(p).is_zero());
}

TEST_CASE("points ideal slices have the expected codimension") {
  Field q = Field::rationals();
  auto r = make_ring("a,b,c,d");
  for (std::size_t s : {3, 5, 6, 7}) {
    auto pts = generic_points(q, 3, s, 100 + s);
    auto I = points_ideal(r, pts);
    for (const auto& g : I.generators())
      for (const auto& p : pts) CHECK(g.evaluate(p).is_zero());
    for (unsigned d = 1; d <= 3; ++d) CHECK(graded_slice(I, d).codim() == std::min(s, count_monomials(4, d)));
  }
}

TEST_CASE("general linear position") {
  Field q = Field::rationals();
  auto pts = generic_points(q, 2, 5, 1);
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      for (std::size_t k = j + 1; k < pts.size(); ++k)
        CHECK(determinant(DenseMatrix::from_rows(q, 3, {pts[i], pts[j], pts[k]})) != q.zero());
}
