#include "koszul/scalars/field.hpp"

#include <charconv>

#include "koszul/errors.hpp"

namespace koszul {
namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  // Extended Euclid on signed 128-bit to avoid overflow for p < 2^63.
  __int128 t = 0, new_t = 1;
  __int128 r = p, new_r = a;
  while (new_r != 0) {
    __int128 q = r / new_r;
    __int128 tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint64_t>(t);
}

std::uint64_t reduce_mpz(const mpz_class& z, std::uint64_t p) {
  mpz_class m;
  mpz_class pm;
  mpz_import(pm.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
  mpz_fdiv_r(m.get_mpz_t(), z.get_mpz_t(), pm.get_mpz_t());
  std::uint64_t out = 0;
  std::size_t count = 0;
  mpz_export(&out, &count, 1, sizeof(out), 0, 0, m.get_mpz_t());
  return count == 0 ? 0 : out;
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p < 2 || p >= (std::uint64_t{1} << 63)) {
    throw InputError("field characteristic must be a prime below 2^63, got " + std::to_string(p));
  }
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
  if (mpz_probab_prime_p(z.get_mpz_t(), 40) == 0) {
    throw InputError("field characteristic " + std::to_string(p) + " is not prime");
  }
  return Field(p);
}

Field Field::parse(const std::string& text) {
  if (text == "q" || text == "Q") return rationals();
  if (text.rfind("fp:", 0) == 0) {
    std::uint64_t p = 0;
    const char* first = text.data() + 3;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, p);
    if (ec != std::errc() || ptr != last || first == last) {
      throw InputError("malformed field descriptor '" + text + "'");
    }
    return prime(p);
  }
  throw InputError("unknown field '" + text + "' (expected q or fp:<p>)");
}

FieldElem Field::zero() const { return from_int(0); }
FieldElem Field::one() const { return from_int(1); }

FieldElem Field::from_int(std::int64_t value) const {
  if (p_ == 0) return FieldElem::make_rational(mpq_class(static_cast<long>(value)));
  std::int64_t m = value % static_cast<std::int64_t>(p_);
  if (m < 0) m += static_cast<std::int64_t>(p_);
  return FieldElem::make_residue(static_cast<std::uint64_t>(m), p_);
}

FieldElem Field::from_rational(const mpq_class& value) const {
  if (p_ == 0) {
    mpq_class q(value);
    q.canonicalize();
    return FieldElem::make_rational(std::move(q));
  }
  std::uint64_t num = reduce_mpz(value.get_num(), p_);
  std::uint64_t den = reduce_mpz(value.get_den(), p_);
  if (den == 0) {
    throw InputError("denominator " + value.get_den().get_str() + " vanishes in " + to_string());
  }
  return FieldElem::make_residue(mul_mod(num, inverse_mod(den, p_), p_), p_);
}

std::string Field::to_string() const { return p_ == 0 ? "q" : "fp:" + std::to_string(p_); }

FieldElem FieldElem::make_rational(mpq_class q) {
  FieldElem e;
  e.p_ = 0;
  e.value_ = std::move(q);
  return e;
}

FieldElem FieldElem::make_residue(std::uint64_t r, std::uint64_t p) {
  FieldElem e;
  e.p_ = p;
  e.value_ = r;
  return e;
}

bool FieldElem::is_zero() const {
  if (p_ == 0) return sgn(rational()) == 0;
  return residue() == 0;
}

bool FieldElem::is_one() const {
  if (p_ == 0) return rational() == 1;
  return residue() == 1;
}

FieldElem FieldElem::operator-() const {
  if (p_ == 0) return make_rational(-rational());
  std::uint64_t r = residue();
  return make_residue(r == 0 ? 0 : p_ - r, p_);
}

FieldElem& FieldElem::operator+=(const FieldElem& other) {
  if (p_ != other.p_) throw InputError("field mismatch in addition");
  if (p_ == 0) {
    std::get<mpq_class>(value_) += other.rational();
  } else {
    std::uint64_t s = residue() + other.residue();
    if (s >= p_) s -= p_;
    value_ = s;
  }
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& other) {
  if (p_ != other.p_) throw InputError("field mismatch in subtraction");
  if (p_ == 0) {
    std::get<mpq_class>(value_) -= other.rational();
  } else {
    std::uint64_t a = residue();
    std::uint64_t b = other.residue();
    value_ = a >= b ? a - b : a + (p_ - b);
  }
  return *this;
}

FieldElem& FieldElem::operator*=(const FieldElem& other) {
  if (p_ != other.p_) throw InputError("field mismatch in multiplication");
  if (p_ == 0) {
    std::get<mpq_class>(value_) *= other.rational();
  } else {
    value_ = mul_mod(residue(), other.residue(), p_);
  }
  return *this;
}

FieldElem& FieldElem::operator/=(const FieldElem& other) {
  if (p_ != other.p_) throw InputError("field mismatch in division");
  if (other.is_zero()) throw InputError("division by zero");
  if (p_ == 0) {
    std::get<mpq_class>(value_) /= other.rational();
  } else {
    value_ = mul_mod(residue(), inverse_mod(other.residue(), p_), p_);
  }
  return *this;
}

FieldElem FieldElem::inverse() const {
  FieldElem one = p_ == 0 ? make_rational(mpq_class(1)) : make_residue(1, p_);
  return one /= *this;
}

bool operator==(const FieldElem& a, const FieldElem& b) {
  if (a.p_ != b.p_) return false;
  if (a.p_ == 0) return a.rational() == b.rational();
  return a.residue() == b.residue();
}

std::string FieldElem::to_string() const {
  if (p_ == 0) return rational().get_str();
  return std::to_string(residue());
}

std::size_t FieldElem::hash() const {
  if (p_ != 0) return std::hash<std::uint64_t>{}(residue() ^ (p_ << 1));
  const mpq_class& q = rational();
  std::size_t h = mpz_get_ui(q.get_num_mpz_t()) * 1000003u;
  h ^= mpz_get_ui(q.get_den_mpz_t()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  if (sgn(q) < 0) h = ~h;
  return h;
}

FieldElem pow(const FieldElem& base, unsigned exponent) {
  FieldElem result = base.field().one();
  FieldElem b = base;
  while (exponent != 0) {
    if (exponent & 1u) result *= b;
    exponent >>= 1;
    if (exponent != 0) b *= b;
  }
  return result;
}

}  // namespace koszul
