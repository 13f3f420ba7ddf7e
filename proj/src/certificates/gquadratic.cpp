#include "koszul/certificates/gquadratic.hpp"

#include "koszul/errors.hpp"
#include "koszul/polyring/constructions.hpp"
#include "koszul/polyring/graded.hpp"

namespace koszul {

std::string to_string(ChangeProvenance p) {
  switch (p) {
    case ChangeProvenance::Identity: return "identity";
    case ChangeProvenance::SeededRandom: return "seeded-random";
    case ChangeProvenance::User: return "user";
  }
  return "user";
}

namespace {

ChangeProvenance parse_provenance(const std::string& s) {
  if (s == "identity") return ChangeProvenance::Identity;
  if (s == "seeded-random") return ChangeProvenance::SeededRandom;
  if (s == "user") return ChangeProvenance::User;
  throw InputError("unknown change provenance '" + s + "'");
}

Json basis_strings(const GroebnerBasis& gb) {
  Json out = Json::array();
  for (const auto& g : gb.elements()) out.push_back(g.to_string());
  return out;
}

}  // namespace

CoordinateChange::CoordinateChange(DenseMatrix matrix, ChangeProvenance provenance)
    : matrix_(std::move(matrix)), provenance_(provenance) {
  if (matrix_.rows() != matrix_.cols()) throw InputError("coordinate change must be square");
  if (determinant(matrix_).is_zero()) throw InputError("coordinate change must be invertible");
}

CoordinateChange CoordinateChange::identity(const Field& field, std::size_t n) {
  return CoordinateChange(DenseMatrix::identity(field, n), ChangeProvenance::Identity);
}

CoordinateChange CoordinateChange::random(const Field& field, std::size_t n, Rng& rng, std::int64_t bound) {
  while (true) {
    DenseMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = field.from_int(uniform_int(rng, -bound, bound));
    if (!determinant(m).is_zero()) return CoordinateChange(std::move(m), ChangeProvenance::SeededRandom);
  }
}

Ideal CoordinateChange::apply(const Ideal& ideal) const {
  if (matrix_.rows() != ideal.ring().num_variables()) throw InputError("coordinate change has the wrong size");
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.substitute_linear(matrix_));
  return Ideal(ideal.ring(), gens);
}

Json CoordinateChange::to_json() const {
  Json rows = Json::array();
  for (std::size_t i = 0; i < matrix_.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < matrix_.cols(); ++j) row.push_back(matrix_(i, j).to_string());
    rows.push_back(row);
  }
  return Json{{"provenance", to_string(provenance_)}, {"matrix", rows}};
}

CoordinateChange CoordinateChange::from_json(const Json& j, const Field& field) {
  try {
    std::vector<Vector> rows;
    for (const auto& row : j.at("matrix")) {
      Vector v;
      for (const auto& e : row) {
        mpq_class q(e.get<std::string>());
        q.canonicalize();
        v.push_back(field.from_rational(q));
      }
      rows.push_back(std::move(v));
    }
    const std::size_t n = rows.size();
    return CoordinateChange(DenseMatrix::from_rows(field, n, rows), parse_provenance(j.at("provenance").get<std::string>()));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed coordinate change: ") + e.what());
  }
}

Verdict gquadratic_search(const Ideal& ideal, const std::vector<TermOrder>& orders, std::size_t changes,
                          std::uint64_t seed) {
  Verdict v;
  v.claim = "g-quadratic";
  v.bounds = Json{{"orders", orders.size()}, {"changes", changes}, {"seed", seed}};
  if (!ideal.is_homogeneous() || ideal.is_zero()) {
    if (ideal.is_zero()) {
      v.outcome = Outcome::CertifiedYes;
      v.witness = Json{{"change", CoordinateChange::identity(ideal.ring().field(), ideal.ring().num_variables()).to_json()},
                       {"order", TermOrder::degrevlex(ideal.ring().num_variables()).to_string()},
                       {"basis", Json::array()}};
      v.note = "zero ideal";
      return v;
    }
    throw InputError("G-quadratic search needs a homogeneous ideal");
  }
  const auto degrees = minimal_generator_degrees(ideal);
  for (unsigned d : degrees)
    if (d != 2) {
      v.outcome = Outcome::CertifiedNo;
      v.witness = Json{{"generator_degree", d}};
      v.note = "a minimal generator is not a quadric, so no initial ideal is quadratic";
      return v;
    }
  const std::size_t n = ideal.ring().num_variables();
  const Field& field = ideal.ring().field();
  Rng rng(seed);
  for (std::size_t c = 0; c <= changes; ++c) {
    CoordinateChange change = c == 0 ? CoordinateChange::identity(field, n) : CoordinateChange::random(field, n, rng);
    const Ideal moved = change.apply(ideal);
    for (const auto& order : orders) {
      // Cheap screen: a degree-3 element already rules this pair out.
      GroebnerBasis capped = buchberger(moved, order, 3);
      bool cubic = false;
      for (const auto& g : capped.elements()) cubic = cubic || g.degree() > 2;
      if (cubic) continue;
      GroebnerBasis full = buchberger(moved, order);
      if (!is_quadratic_gb(full)) continue;
      v.outcome = Outcome::CertifiedYes;
      v.witness = Json{{"change", change.to_json()}, {"order", order.to_string()}, {"basis", basis_strings(full)}};
      v.note = "quadratic reduced Groebner basis found";
      return v;
    }
  }
  v.outcome = Outcome::UndeterminedAtBound;
  v.note = "no quadratic Groebner basis among the tried coordinates and orders";
  return v;
}

GroebnerBasis replay_gquadratic(const Ideal& ideal, const Json& witness) {
  const RingDescriptor& ring = ideal.ring();
  CoordinateChange change = CoordinateChange::from_json(witness.at("change"), ring.field());
  TermOrder order = TermOrder::parse(witness.at("order").get<std::string>(), ring.names());
  return buchberger(change.apply(ideal), order);
}

}  // namespace koszul
