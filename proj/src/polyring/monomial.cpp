#include "koszul/polyring/monomial.hpp"

#include <algorithm>

#include "koszul/errors.hpp"

namespace koszul {

Monomial::Monomial(std::span<const unsigned> exponents) {
  if (exponents.size() > kMaxVariables) throw InputError("too many variables for a monomial");
  unsigned deg = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] > kMaxExponent) throw InputError("exponent exceeds 255");
    exps_[i] = static_cast<std::uint8_t>(exponents[i]);
    deg += exponents[i];
  }
  if (deg > 0xffff) throw InputError("monomial degree overflow");
  degree_ = static_cast<std::uint16_t>(deg);
}

Monomial::Monomial(std::initializer_list<unsigned> exponents)
    : Monomial(std::span<const unsigned>(exponents.begin(), exponents.size())) {}

Monomial Monomial::variable(std::size_t index, unsigned power) {
  if (index >= kMaxVariables) throw InputError("variable index out of range");
  if (power > kMaxExponent) throw InputError("exponent exceeds 255");
  Monomial m;
  m.exps_[index] = static_cast<std::uint8_t>(power);
  m.degree_ = static_cast<std::uint16_t>(power);
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  Monomial q;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (divisor.exps_[i] > exps_[i]) throw InputError("monomial quotient by a non-divisor");
    q.exps_[i] = static_cast<std::uint8_t>(exps_[i] - divisor.exps_[i]);
  }
  q.degree_ = static_cast<std::uint16_t>(degree_ - divisor.degree_);
  return q;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial l;
  unsigned deg = 0;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    l.exps_[i] = std::max(exps_[i], other.exps_[i]);
    deg += l.exps_[i];
  }
  l.degree_ = static_cast<std::uint16_t>(deg);
  return l;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial g;
  unsigned deg = 0;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    g.exps_[i] = std::min(exps_[i], other.exps_[i]);
    deg += g.exps_[i];
  }
  g.degree_ = static_cast<std::uint16_t>(deg);
  return g;
}

Monomial Monomial::times_variable(std::size_t index) const {
  if (exps_[index] == kMaxExponent) throw InputError("exponent overflow");
  Monomial m = *this;
  ++m.exps_[index];
  ++m.degree_;
  return m;
}

std::size_t Monomial::support_size(std::size_t n) const {
  std::size_t s = 0;
  for (std::size_t i = 0; i < n; ++i) s += exps_[i] != 0;
  return s;
}

std::uint64_t Monomial::support_mask() const {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    if (exps_[i] != 0) mask |= std::uint64_t{1} << (i % 64);
  return mask;
}

std::vector<unsigned> Monomial::exponents(std::size_t n) const {
  return std::vector<unsigned>(exps_.begin(), exps_.begin() + n);
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    unsigned e = unsigned{a.exps_[i]} + b.exps_[i];
    if (e > kMaxExponent) throw InputError("exponent overflow in monomial product");
    m.exps_[i] = static_cast<std::uint8_t>(e);
  }
  m.degree_ = static_cast<std::uint16_t>(a.degree_ + b.degree_);
  return m;
}

std::size_t Monomial::hash() const {
  // FNV-1a over the exponent bytes.
  std::size_t h = 1469598103934665603ULL;
  for (std::uint8_t e : exps_) {
    h ^= e;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string Monomial::to_string(std::span<const std::string> names) const {
  if (degree_ == 0) return "1";
  std::string out;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += i < names.size() ? names[i] : "x" + std::to_string(i + 1);
    if (exps_[i] > 1) out += "^" + std::to_string(exps_[i]);
  }
  return out;
}

namespace {

void enumerate(std::size_t n, unsigned d, std::size_t var, std::vector<unsigned>& current, std::vector<Monomial>& out) {
  if (var + 1 == n) {
    current[var] = d;
    out.emplace_back(std::span<const unsigned>(current));
    return;
  }
  for (unsigned e = d + 1; e-- > 0;) {
    current[var] = e;
    enumerate(n, d - e, var + 1, current, out);
  }
  current[var] = 0;
}

// true when a > b in degrevlex with x1 > ... > xn, for equal degrees
bool grevlex_greater(const Monomial& a, const Monomial& b, std::size_t n) {
  for (std::size_t i = n; i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned d) {
  std::vector<Monomial> out;
  if (n == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  std::vector<unsigned> current(n, 0);
  enumerate(n, d, 0, current, out);
  std::sort(out.begin(), out.end(), [n](const Monomial& a, const Monomial& b) { return grevlex_greater(a, b, n); });
  return out;
}

std::size_t count_monomials(std::size_t n, unsigned d) {
  if (n == 0) return d == 0 ? 1 : 0;
  // C(n+d-1, d) computed incrementally; exact for desk-scale arguments.
  unsigned __int128 c = 1;
  for (unsigned i = 1; i <= d; ++i) c = c * (n - 1 + i) / i;
  return static_cast<std::size_t>(c);
}

}  // namespace koszul
