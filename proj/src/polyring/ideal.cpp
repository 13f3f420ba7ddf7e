#include "koszul/polyring/ideal.hpp"

#include <algorithm>

#include "koszul/errors.hpp"

namespace koszul {

Ideal::Ideal(RingDescriptor ring, std::vector<Polynomial> generators) : ring_(std::move(ring)) {
  for (auto& g : generators) {
    if (!(g.ring() == ring_)) throw InputError("ideal generator from a different ring");
    if (g.is_zero()) continue;
    homogeneous_ = homogeneous_ && g.is_homogeneous();
    generators_.push_back(std::move(g));
  }
}

int Ideal::max_degree() const {
  int d = -1;
  for (const auto& g : generators_) d = std::max(d, g.degree());
  return d;
}

Ideal Ideal::operator+(const Ideal& other) const {
  if (!(ring_ == other.ring_)) throw InputError("ideal sum across different rings");
  std::vector<Polynomial> gens = generators_;
  gens.insert(gens.end(), other.generators_.begin(), other.generators_.end());
  return Ideal(ring_, std::move(gens));
}

std::string Ideal::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < generators_.size(); ++i) out += (i ? ", " : "") + generators_[i].to_string();
  return out + ")";
}

Vector linear_coordinates(const Polynomial& form) {
  const RingDescriptor& ring = form.ring();
  Vector v(ring.num_variables(), ring.field().zero());
  for (const auto& t : form.terms()) {
    if (t.monomial.degree() != 1) throw InputError("not a linear form: " + form.to_string());
    for (std::size_t i = 0; i < ring.num_variables(); ++i)
      if (t.monomial[i] == 1) v[i] = t.coeff;
  }
  return v;
}

LinearSpace::LinearSpace(RingDescriptor ring, std::vector<Polynomial> basis) : ring_(std::move(ring)) {
  EchelonBasis echelon(ring_.field(), ring_.num_variables());
  for (auto& form : basis) {
    if (!(form.ring() == ring_)) throw InputError("linear form from a different ring");
    if (form.is_zero()) throw InputError("zero vector in a linear space basis");
    if (!echelon.insert(linear_coordinates(form))) throw InputError("linear space basis is dependent");
    basis_.push_back(std::move(form));
  }
}

LinearSpace LinearSpace::span(const RingDescriptor& ring, const std::vector<Polynomial>& forms) {
  EchelonBasis echelon(ring.field(), ring.num_variables());
  for (const auto& f : forms) {
    if (!(f.ring() == ring)) throw InputError("linear form from a different ring");
    echelon.insert(linear_coordinates(f));
  }
  DenseMatrix m = echelon.matrix();
  std::vector<Polynomial> basis;
  for (std::size_t r = 0; r < m.rows(); ++r) basis.push_back(Polynomial::linear_form(ring, m.row_vector(r)));
  return LinearSpace(ring, std::move(basis));
}

LinearSpace LinearSpace::whole(const RingDescriptor& ring) {
  std::vector<Polynomial> basis;
  for (std::size_t i = 0; i < ring.num_variables(); ++i) basis.push_back(Polynomial::variable(ring, i));
  return LinearSpace(ring, std::move(basis));
}

bool LinearSpace::contains(const Polynomial& form) const {
  if (form.is_zero()) return true;
  EchelonBasis echelon(ring_.field(), ring_.num_variables());
  for (const auto& b : basis_) echelon.insert(linear_coordinates(b));
  return echelon.contains(linear_coordinates(form));
}

bool LinearSpace::contains(const LinearSpace& other) const {
  EchelonBasis echelon(ring_.field(), ring_.num_variables());
  for (const auto& b : basis_) echelon.insert(linear_coordinates(b));
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [&](const Polynomial& f) { return echelon.contains(linear_coordinates(f)); });
}

LinearSpace LinearSpace::plus(const Polynomial& form) const {
  std::vector<Polynomial> forms = basis_;
  forms.push_back(form);
  return span(ring_, forms);
}

std::vector<Polynomial> LinearSpace::canonical_basis() const { return span(ring_, basis_).basis_; }

bool operator==(const LinearSpace& a, const LinearSpace& b) {
  return a.ring_ == b.ring_ && a.dim() == b.dim() && a.canonical_basis() == b.canonical_basis();
}

}  // namespace koszul
