#include "koszul/polyring/polynomial.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "koszul/errors.hpp"

namespace koszul {

bool canonical_before(const Monomial& a, const Monomial& b, std::size_t n) {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  for (std::size_t i = n; i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

RingDescriptor::RingDescriptor(std::size_t n, Field field, std::vector<std::string> names) {
  if (n == 0) throw InputError("a ring needs at least one variable");
  if (n > kMaxVariables) throw InputError("at most 48 variables are supported");
  if (names.empty()) {
    for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  }
  if (names.size() != n) throw InputError("variable name count does not match n");
  std::set<std::string> distinct(names.begin(), names.end());
  if (distinct.size() != n) throw InputError("variable names must be distinct");
  for (const auto& name : names)
    if (name.empty()) throw InputError("empty variable name");
  data_ = std::make_shared<const Data>(Data{field, std::move(names)});
}

std::optional<std::size_t> RingDescriptor::index_of(const std::string& name) const {
  const auto& names = data_->names;
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names.begin());
}

std::string RingDescriptor::header() const {
  std::string out = "ring n=" + std::to_string(num_variables()) + " field=" + field().to_string() + " vars=";
  for (std::size_t i = 0; i < num_variables(); ++i) out += (i ? "," : "") + name(i);
  return out;
}

bool operator==(const RingDescriptor& a, const RingDescriptor& b) {
  if (a.data_ == b.data_) return true;
  return a.data_->field == b.data_->field && a.data_->names == b.data_->names;
}

Polynomial Polynomial::constant(const RingDescriptor& ring, const FieldElem& c) {
  return monomial(ring, Monomial(), c);
}

Polynomial Polynomial::variable(const RingDescriptor& ring, std::size_t index) {
  if (index >= ring.num_variables()) throw InputError("variable index out of range");
  return monomial(ring, Monomial::variable(index), ring.field().one());
}

Polynomial Polynomial::monomial(const RingDescriptor& ring, const Monomial& m) {
  return monomial(ring, m, ring.field().one());
}

Polynomial Polynomial::monomial(const RingDescriptor& ring, const Monomial& m, const FieldElem& c) {
  Polynomial p(ring);
  if (c.characteristic() != ring.field().characteristic()) throw InputError("coefficient from a different field");
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(const RingDescriptor& ring, std::vector<Term> terms) {
  const std::size_t n = ring.num_variables();
  for (const auto& t : terms) {
    if (t.coeff.characteristic() != ring.field().characteristic()) throw InputError("coefficient from a different field");
    for (std::size_t i = n; i < kMaxVariables; ++i)
      if (t.monomial[i] != 0) throw InputError("monomial uses a variable outside the ring");
  }
  std::sort(terms.begin(), terms.end(), [n](const Term& a, const Term& b) { return canonical_before(a.monomial, b.monomial, n); });
  Polynomial p(ring);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Polynomial Polynomial::linear_form(const RingDescriptor& ring, const Vector& coeffs) {
  if (coeffs.size() != ring.num_variables()) throw InputError("linear form has wrong number of coefficients");
  std::vector<Term> terms;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (!coeffs[i].is_zero()) terms.push_back({Monomial::variable(i), coeffs[i]});
  return from_terms(ring, std::move(terms));
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(terms_.front().monomial.degree());
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const unsigned d = terms_.front().monomial.degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const Term& t) { return t.monomial.degree() == d; });
}

FieldElem Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.monomial == m) return t.coeff;
  return ring_.field().zero();
}

const Term& Polynomial::leading_term(const TermOrder& order) const {
  if (terms_.empty()) throw InputError("leading term of the zero polynomial");
  const Term* best = &terms_.front();
  for (const auto& t : terms_)
    if (order.greater(t.monomial, best->monomial)) best = &t;
  return *best;
}

Polynomial Polynomial::homogeneous_component(unsigned d) const {
  Polynomial p(ring_);
  for (const auto& t : terms_)
    if (t.monomial.degree() == d) p.terms_.push_back(t);
  return p;
}

void Polynomial::check_ring(const Polynomial& other) const {
  if (!(ring_ == other.ring_)) throw InputError("polynomials from different rings");
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

namespace {

// Merge two canonically sorted term lists, a + sign*b.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract, std::size_t n) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && canonical_before(a[i].monomial, b[j].monomial, n))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || canonical_before(b[j].monomial, a[i].monomial, n)) {
      out.push_back({b[j].monomial, subtract ? -b[j].coeff : b[j].coeff});
      ++j;
    } else {
      FieldElem c = subtract ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
      if (!c.is_zero()) out.push_back({a[i].monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_ring(other);
  terms_ = merge_terms(terms_, other.terms_, false, ring_.num_variables());
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_ring(other);
  terms_ = merge_terms(terms_, other.terms_, true, ring_.num_variables());
  return *this;
}

Polynomial& Polynomial::operator*=(const FieldElem& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

Polynomial Polynomial::times_monomial(const Monomial& m, const FieldElem& c) const {
  Polynomial p(ring_);
  if (c.is_zero()) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.monomial * m, t.coeff * c});
  return p;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_ring(b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
  if (a.size() == 1) return b.times_monomial(a.terms_[0].monomial, a.terms_[0].coeff);
  if (b.size() == 1) return a.times_monomial(b.terms_[0].monomial, b.terms_[0].coeff);
  std::unordered_map<Monomial, FieldElem, MonomialHash> acc;
  acc.reserve(a.size() * b.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) {
      Monomial m = s.monomial * t.monomial;
      auto it = acc.find(m);
      if (it == acc.end()) {
        acc.emplace(m, s.coeff * t.coeff);
      } else {
        it->second += s.coeff * t.coeff;
      }
    }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!c.is_zero()) terms.push_back({m, std::move(c)});
  const std::size_t n = a.ring_.num_variables();
  std::sort(terms.begin(), terms.end(), [n](const Term& x, const Term& y) { return canonical_before(x.monomial, y.monomial, n); });
  Polynomial p(a.ring_);
  p.terms_ = std::move(terms);
  return p;
}

Polynomial power(const Polynomial& p, unsigned exponent) {
  Polynomial result = Polynomial::constant(p.ring(), p.ring().field().one());
  Polynomial base = p;
  while (exponent != 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1;
    if (exponent != 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  if (images.size() != ring_.num_variables()) throw InputError("substitution needs one image per variable");
  if (images.empty()) return *this;
  const RingDescriptor& target = images.front().ring();
  for (const auto& img : images)
    if (!(img.ring() == target)) throw InputError("substitution images from different rings");
  // Cache powers of each image.
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto image_power = [&](std::size_t i, unsigned e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial::constant(target, target.field().one()));
    while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };
  Polynomial result(target);
  for (const auto& t : terms_) {
    Polynomial term = Polynomial::constant(target, t.coeff);
    for (std::size_t i = 0; i < images.size(); ++i)
      if (t.monomial[i] != 0) term = term * image_power(i, t.monomial[i]);
    result += term;
  }
  return result;
}

Polynomial Polynomial::substitute_linear(const DenseMatrix& m) const {
  const std::size_t n = ring_.num_variables();
  if (m.rows() != n || m.cols() != n) throw InputError("substitution matrix must be n x n");
  if (!(m.field() == ring_.field())) throw InputError("substitution matrix over a different field");
  if (determinant(m).is_zero()) throw InputError("substitution matrix is singular");
  std::vector<Polynomial> images;
  images.reserve(n);
  for (std::size_t i = 0; i < n; ++i) images.push_back(linear_form(ring_, m.row_vector(i)));
  return substitute(images);
}

FieldElem Polynomial::evaluate(const Vector& point) const {
  if (point.size() != ring_.num_variables()) throw InputError("evaluation point has wrong dimension");
  FieldElem sum = ring_.field().zero();
  for (const auto& t : terms_) {
    FieldElem v = t.coeff;
    for (std::size_t i = 0; i < point.size(); ++i)
      if (t.monomial[i] != 0) v *= pow(point[i], t.monomial[i]);
    sum += v;
  }
  return sum;
}

Polynomial Polynomial::partial_derivative(std::size_t index) const {
  if (index >= ring_.num_variables()) throw InputError("variable index out of range");
  std::vector<Term> terms;
  for (const auto& t : terms_) {
    const unsigned e = t.monomial[index];
    if (e == 0) continue;
    terms.push_back({t.monomial.quotient(Monomial::variable(index)), t.coeff * ring_.field().from_int(e)});
  }
  return from_terms(ring_, std::move(terms));
}

Polynomial Polynomial::map_variables(const RingDescriptor& target, const std::vector<std::size_t>& var_map) const {
  const std::size_t n = ring_.num_variables();
  if (var_map.size() != n) throw InputError("variable map has wrong length");
  if (!(target.field() == ring_.field())) throw InputError("variable map across different fields");
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::vector<unsigned> e(target.num_variables(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (t.monomial[i] == 0) continue;
      if (var_map[i] >= target.num_variables()) throw InputError("variable map target out of range");
      e[var_map[i]] += t.monomial[i];
    }
    terms.push_back({Monomial(std::span<const unsigned>(e)), t.coeff});
  }
  return from_terms(target, std::move(terms));
}

Vector Polynomial::coordinates(const std::vector<Monomial>& basis) const {
  Vector v(basis.size(), ring_.field().zero());
  // basis is usually canonically sorted; fall back to a map otherwise.
  std::unordered_map<Monomial, std::size_t, MonomialHash> index;
  index.reserve(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
  for (const auto& t : terms_) {
    auto it = index.find(t.monomial);
    if (it == index.end()) throw InputError("polynomial term outside the coordinate basis");
    v[it->second] = t.coeff;
  }
  return v;
}

Polynomial Polynomial::from_coordinates(const RingDescriptor& ring, const std::vector<Monomial>& basis, const Vector& coords) {
  if (coords.size() != basis.size()) throw InputError("coordinate vector has wrong length");
  std::vector<Term> terms;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!coords[i].is_zero()) terms.push_back({basis[i], coords[i]});
  return from_terms(ring, std::move(terms));
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const Term& t = terms_[i];
    std::string c = t.coeff.to_string();
    bool negative = t.coeff.is_rational() && sgn(t.coeff.rational()) < 0;
    if (negative) c = c.substr(1);
    if (i == 0) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    if (t.monomial.is_one()) {
      out += c;
    } else {
      if (c != "1") out += c + "*";
      out += t.monomial.to_string(ring_.names());
    }
  }
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) { return a.ring_ == b.ring_ && a.terms_ == b.terms_; }

}  // namespace koszul
