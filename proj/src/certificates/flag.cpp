#include "koszul/certificates/flag.hpp"

#include <algorithm>
#include <numeric>

#include "koszul/certificates/linear_ideals.hpp"
#include "koszul/errors.hpp"
#include "koszul/groebner/groebner.hpp"
#include "koszul/polyring/constructions.hpp"
#include "koszul/polyring/graded.hpp"
#include "koszul/workbench/format.hpp"

namespace koszul {

namespace {

Verdict flag_failure(const std::string& condition, std::optional<std::size_t> step, const std::string& note) {
  Verdict v;
  v.claim = "groebner-flag";
  v.outcome = Outcome::CertifiedNo;
  v.witness = Json{{"condition", condition}};
  if (step) v.witness["step"] = *step;
  v.note = note;
  return v;
}

LinearSpace prefix_space(const GroebnerFlag& flag, std::size_t i) {
  return LinearSpace::span(flag.defining.ring(),
                           std::vector<Polynomial>(flag.forms.begin(), flag.forms.begin() + static_cast<std::ptrdiff_t>(i)));
}

// Primitive integer vectors with entries in [-2, 2] and first nonzero entry positive.
void small_vectors(std::size_t n, std::vector<std::vector<long>>& out) {
  std::vector<long> v(n, -2);
  while (true) {
    auto first = std::find_if(v.begin(), v.end(), [](long c) { return c != 0; });
    if (first != v.end() && *first > 0) {
      long g = 0;
      for (long c : v) g = std::gcd(g, std::labs(c));
      if (g == 1) out.push_back(v);
    }
    std::size_t k = 0;
    while (k < n && v[k] == 2) v[k++] = -2;
    if (k == n) break;
    ++v[k];
  }
}

// Search state over R_1 coordinates.
class FlagSearcher {
 public:
  FlagSearcher(const QuotientRing& q) : q_(q), gq_(q, 2), r_(gq_.dim(1)) {
    // Products of degree-1 standard monomials, as R_2 coordinate vectors.
    const auto& basis1 = gq_.basis(1);
    products_.assign(r_, std::vector<Vector>(r_));
    for (std::size_t a = 0; a < r_; ++a)
      for (std::size_t b = 0; b < r_; ++b) {
        std::size_t var = 0;
        while (basis1[b][var] == 0) ++var;
        Vector v(gq_.dim(2), field().zero());
        for (const auto& [idx, c] : gq_.multiply_variable(var, 1, a)) v[idx] = c;
        products_[a][b] = std::move(v);
      }
  }

  std::size_t rank() const { return r_; }
  const Field& field() const { return gq_.field(); }
  Vector coords(const Polynomial& form) const { return gq_.coordinates(form, 1); }

  Vector product(const Vector& u, const Vector& l) const {
    Vector out(gq_.dim(2), field().zero());
    for (std::size_t a = 0; a < r_; ++a) {
      if (u[a].is_zero()) continue;
      for (std::size_t b = 0; b < r_; ++b) {
        if (l[b].is_zero()) continue;
        const FieldElem c = u[a] * l[b];
        for (std::size_t k = 0; k < out.size(); ++k)
          if (!products_[a][b][k].is_zero()) out[k] += c * products_[a][b][k];
      }
    }
    return out;
  }

  // Degree-1 part of (V) : l, as an echelon basis of R_1 coordinates.
  EchelonBasis screen(const std::vector<Vector>& chain, const Vector& l) const {
    EchelonBasis w(field(), gq_.dim(2));
    for (const auto& v : chain)
      for (std::size_t b = 0; b < r_; ++b) {
        Vector e(r_, field().zero());
        e[b] = field().one();
        w.insert(product(v, e));
      }
    DenseMatrix m(field(), gq_.dim(2), r_);
    for (std::size_t a = 0; a < r_; ++a) {
      Vector e(r_, field().zero());
      e[a] = field().one();
      Vector col = w.reduce(product(e, l));
      for (std::size_t k = 0; k < col.size(); ++k) m(k, a) = col[k];
    }
    EchelonBasis c(field(), r_);
    for (const auto& v : kernel_basis(m)) c.insert(v);
    return c;
  }

  Polynomial form_of(const Vector& coords) const { return gq_.polynomial(coords, 1); }

 private:
  const QuotientRing& q_;
  GradedQuotient gq_;
  std::size_t r_;
  std::vector<std::vector<Vector>> products_;
};

bool space_contains(const EchelonBasis& big, const EchelonBasis& small) {
  return std::all_of(small.rows().begin(), small.rows().end(), [&](const Vector& v) { return big.contains(v); });
}

EchelonBasis span_of(const Field& field, std::size_t dim, const std::vector<Vector>& vs, std::size_t count) {
  EchelonBasis e(field, dim);
  for (std::size_t i = 0; i < count; ++i) e.insert(vs[i]);
  return e;
}

}  // namespace

Verdict verify_flag(const GroebnerFlag& flag) {
  const Ideal& I = flag.defining;
  if (!I.is_homogeneous()) throw InputError("flag over a non-homogeneous quotient");
  const RingDescriptor& ring = I.ring();
  for (const auto& f : flag.forms)
    if (!(f.ring() == ring)) throw InputError("flag form in a different ring");
  const std::size_t top = dim_in_quotient(LinearSpace::whole(ring), I);
  if (flag.forms.size() != top) return flag_failure("complete", std::nullopt, "number of forms differs from dim R_1");
  if (flag.colon_map.size() != top) return flag_failure("colon-map", std::nullopt, "colon map has the wrong length");
  for (std::size_t i = 0; i < top; ++i)
    if (flag.forms[i].degree() != 1 || !flag.forms[i].is_homogeneous())
      return flag_failure("linear", i, "flag element is not a linear form");
  for (std::size_t i = 1; i <= top; ++i)
    if (dim_in_quotient(prefix_space(flag, i), I) != i) return flag_failure("nesting", i, "V_i does not have dimension i");
  for (std::size_t i = 0; i < top; ++i) {
    const std::size_t j = flag.colon_map[i];
    if (j > top) return flag_failure("colon-map", i, "colon target out of range");
    Ideal colon = quotient_colon(I, prefix_space(flag, i), flag.forms[i]);
    if (!homogeneous_ideals_equal(colon, extend(prefix_space(flag, j), I)))
      return flag_failure("colon", i, "(V_i) : (V_{i+1}) differs from the named V_j");
  }
  Verdict v;
  v.claim = "groebner-flag";
  v.outcome = Outcome::CertifiedYes;
  v.witness = Json{{"length", top}};
  v.note = "Groebner flag verified: R is G-quadratic";
  return v;
}

KoszulFiltration flag_to_filtration(const GroebnerFlag& flag) {
  KoszulFiltration f{flag.defining, {}, {}};
  for (std::size_t i = 0; i <= flag.forms.size(); ++i) f.members.push_back(prefix_space(flag, i));
  for (std::size_t i = 0; i < flag.forms.size(); ++i) f.witnesses.push_back({i + 1, i, flag.forms[i], flag.colon_map.at(i)});
  return f;
}

std::vector<Polynomial> linear_form_pool(const RingDescriptor& ring, std::uint64_t seed, std::size_t rational_count) {
  const std::size_t n = ring.num_variables();
  const Field& field = ring.field();
  std::vector<Polynomial> pool;
  constexpr std::size_t kSmallCap = 4000;
  if (n <= 5) {
    std::vector<std::vector<long>> vs;
    small_vectors(n, vs);
    auto key = [](const std::vector<long>& v) {
      std::size_t support = 0;
      long height = 0;
      for (long c : v) {
        support += c != 0;
        height = std::max(height, std::labs(c));
      }
      return std::pair(support, height);
    };
    std::stable_sort(vs.begin(), vs.end(), [&](const auto& a, const auto& b) {
      if (key(a) != key(b)) return key(a) < key(b);
      return a > b;
    });
    if (vs.size() > kSmallCap) vs.resize(kSmallCap);
    for (const auto& v : vs) {
      Vector c;
      for (long x : v) c.push_back(field.from_int(x));
      pool.push_back(Polynomial::linear_form(ring, c));
    }
  } else {
    // Too many small vectors to list: variables, then seeded small forms.
    for (std::size_t i = 0; i < n; ++i) pool.push_back(Polynomial::variable(ring, i));
    Rng rng(seed ^ 0x5eedf1a9ULL);
    for (std::size_t k = 0; k < kSmallCap; ++k) {
      Vector c;
      for (std::size_t i = 0; i < n; ++i) c.push_back(field.from_int(uniform_int(rng, -2, 2)));
      if (is_zero_vector(c)) continue;
      pool.push_back(Polynomial::linear_form(ring, c));
    }
  }
  Rng rng(seed);
  for (std::size_t k = 0; k < rational_count; ++k) {
    Vector c;
    for (std::size_t i = 0; i < n; ++i) {
      mpq_class v(uniform_int(rng, -9, 9), uniform_int(rng, 1, 5));
      v.canonicalize();
      c.push_back(field.from_rational(v));
    }
    if (is_zero_vector(c)) continue;
    pool.push_back(Polynomial::linear_form(ring, c));
  }
  return pool;
}

FlagSearchResult search_flag(const QuotientRing& q, std::uint64_t seed, std::size_t attempts) {
  FlagSearchResult result;
  const Ideal& I = q.ideal();
  if (!q.is_graded()) throw InputError("flag search needs a homogeneous defining ideal");
  for (unsigned d : minimal_generator_degrees(I))
    if (d != 2 && d != 1) {
      result.transcript.push_back("defining ideal is not quadratic; no flag can exist");
      return result;
    }
  FlagSearcher s(q);
  const std::size_t r = s.rank();
  const Field& field = s.field();
  const RingDescriptor& ring = q.ring();

  std::vector<Polynomial> pool_forms;
  std::vector<Vector> pool;
  for (const auto& f : linear_form_pool(ring, seed)) {
    Vector c = s.coords(f);
    if (is_zero_vector(c)) continue;
    pool.push_back(std::move(c));
    pool_forms.push_back(f);
  }
  if (pool.empty() && r > 0) throw InternalError("empty linear form pool");

  for (std::size_t a = 0; a < attempts; ++a) {
    result.attempts_used = a + 1;
    Rng rng(seed + 0x9e3779b97f4a7c15ULL * (a + 1));
    std::vector<std::size_t> order(pool.size());
    std::iota(order.begin(), order.end(), 0);
    for (std::size_t k = order.size(); k > 1; --k) std::swap(order[k - 1], order[uniform_int(rng, 0, static_cast<std::int64_t>(k - 1))]);

    std::vector<Vector> chain;
    std::vector<Polynomial> forms;
    std::vector<std::size_t> colon_map;
    std::vector<EchelonBasis> pending;
    std::string line = "attempt " + std::to_string(a) + ":";

    auto try_extend = [&](std::size_t idx) -> bool {
      const Vector& l = pool[idx];
      const std::size_t i = chain.size();
      EchelonBasis current = span_of(field, r, chain, i);
      if (current.contains(l)) return false;
      for (const auto& p : pending)
        if (!p.contains(l)) return false;
      EchelonBasis c = s.screen(chain, l);
      const std::size_t dim = c.rank();
      if (dim <= i) {
        if (!space_contains(span_of(field, r, chain, dim), c)) return false;
      } else {
        if (!c.contains(l)) return false;
        if (dim > i + 1) {
          for (const auto& p : pending) {
            if (p.rank() <= dim && !space_contains(c, p)) return false;
            if (p.rank() >= dim && !space_contains(p, c)) return false;
          }
        }
      }
      // Exact colon check in S.
      std::vector<Polynomial> prefix(forms);
      LinearSpace v = LinearSpace::span(ring, prefix);
      std::vector<Polynomial> target;
      for (const auto& row : c.rows()) target.push_back(s.form_of(row));
      Ideal colon = quotient_colon(I, v, pool_forms[idx]);
      if (!homogeneous_ideals_equal(colon, extend(LinearSpace::span(ring, target), I))) return false;
      chain.push_back(l);
      forms.push_back(pool_forms[idx]);
      colon_map.push_back(dim);
      if (dim > i + 1) pending.push_back(c);
      pending.erase(std::remove_if(pending.begin(), pending.end(), [&](const EchelonBasis& p) { return p.rank() <= chain.size(); }),
                    pending.end());
      line += " " + pool_forms[idx].to_string() + "[" + std::to_string(dim) + "]";
      return true;
    };

    bool stuck = false;
    if (r > 0 && !try_extend(a % pool.size())) {
      line += " V1=" + pool_forms[a % pool.size()].to_string() + " rejected";
      stuck = true;
    }
    while (!stuck && chain.size() < r) {
      bool grown = false;
      for (std::size_t idx : order)
        if (try_extend(idx)) {
          grown = true;
          break;
        }
      if (!grown) {
        line += " stuck at step " + std::to_string(chain.size() + 1);
        stuck = true;
      }
    }
    if (!stuck) {
      GroebnerFlag flag{I, forms, colon_map};
      if (verify_flag(flag).outcome == Outcome::CertifiedYes) {
        line += " flag verified";
        result.transcript.push_back(line);
        result.flag = std::move(flag);
        return result;
      }
      line += " final verification failed";
    }
    result.transcript.push_back(line);
  }
  return result;
}

Json to_json(const GroebnerFlag& flag) {
  Json j;
  j["kind"] = "groebner-flag";
  j["ring"] = flag.defining.ring().header();
  Json defining = Json::array();
  for (const auto& g : flag.defining.generators()) defining.push_back(g.to_string());
  j["defining"] = defining;
  Json forms = Json::array();
  for (const auto& f : flag.forms) forms.push_back(f.to_string());
  j["forms"] = forms;
  j["colon_map"] = flag.colon_map;
  return j;
}

GroebnerFlag flag_from_json(const Json& j) {
  try {
    if (j.at("kind").get<std::string>() != "groebner-flag") throw InputError("not a Groebner flag");
    RingDescriptor ring = parse_ring_header(j.at("ring").get<std::string>());
    std::vector<Polynomial> defining, forms;
    for (const auto& s : j.at("defining")) defining.push_back(parse_polynomial(ring, s.get<std::string>()));
    for (const auto& s : j.at("forms")) forms.push_back(parse_polynomial(ring, s.get<std::string>()));
    return GroebnerFlag{Ideal(ring, defining), forms, j.at("colon_map").get<std::vector<std::size_t>>()};
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed flag: ") + e.what());
  }
}

}  // namespace koszul
