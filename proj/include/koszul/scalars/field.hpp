#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace koszul {

class FieldElem;

/// Coefficient field: the rationals, or F_p for a machine-word prime p < 2^63.
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field(); }
  /// Throws InputError unless p is a prime below 2^63.
  static Field prime(std::uint64_t p);
  /// Parses "q" or "fp:<p>".
  static Field parse(const std::string& text);

  bool is_rational() const { return p_ == 0; }
  std::uint64_t characteristic() const { return p_; }

  FieldElem zero() const;
  FieldElem one() const;
  FieldElem from_int(std::int64_t value) const;
  /// Over F_p the denominator must be invertible.
  FieldElem from_rational(const mpq_class& value) const;

  std::string to_string() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  friend class FieldElem;
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

/// An element of Q (kept in lowest terms, positive denominator) or of F_p
/// (residue in [0, p)).
class FieldElem {
 public:
  FieldElem() : p_(0), value_(mpq_class(0)) {}

  Field field() const { return Field(p_); }
  std::uint64_t characteristic() const { return p_; }
  bool is_rational() const { return p_ == 0; }

  bool is_zero() const;
  bool is_one() const;

  const mpq_class& rational() const { return std::get<mpq_class>(value_); }
  std::uint64_t residue() const { return std::get<std::uint64_t>(value_); }

  FieldElem operator-() const;
  FieldElem& operator+=(const FieldElem& other);
  FieldElem& operator-=(const FieldElem& other);
  FieldElem& operator*=(const FieldElem& other);
  /// Throws InputError on division by zero.
  FieldElem& operator/=(const FieldElem& other);
  FieldElem inverse() const;

  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
  friend FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }

  friend bool operator==(const FieldElem& a, const FieldElem& b);

  std::string to_string() const;
  std::size_t hash() const;

 private:
  friend class Field;
  static FieldElem make_rational(mpq_class q);
  static FieldElem make_residue(std::uint64_t r, std::uint64_t p);

  std::uint64_t p_;
  std::variant<mpq_class, std::uint64_t> value_;
};

/// Integer power of a field element; exponent must be nonnegative.
FieldElem pow(const FieldElem& base, unsigned exponent);

}  // namespace koszul
