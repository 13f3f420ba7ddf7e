#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace koszul {

inline constexpr std::size_t kMaxVariables = 48;
inline constexpr unsigned kMaxExponent = 255;

/// Exponent vector x^a with cached total degree. Exponents are 8-bit;
/// products that would overflow throw InputError.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::span<const unsigned> exponents);
  Monomial(std::initializer_list<unsigned> exponents);
  static Monomial variable(std::size_t index, unsigned power = 1);

  unsigned operator[](std::size_t i) const { return exps_[i]; }
  unsigned degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  /// Precondition: divisor divides *this.
  Monomial quotient(const Monomial& divisor) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  Monomial times_variable(std::size_t index) const;

  /// Number of variables (among the first n) with nonzero exponent.
  std::size_t support_size(std::size_t n) const;
  /// Bitmask of the support (variables beyond 63 are folded in).
  std::uint64_t support_mask() const;
  std::vector<unsigned> exponents(std::size_t n) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
  /// Storage order only (lexicographic on the exponent array).
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) { return a.exps_ <=> b.exps_; }

  std::size_t hash() const;
  std::string to_string(std::span<const std::string> names) const;

 private:
  std::array<std::uint8_t, kMaxVariables> exps_{};
  std::uint16_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// All monomials of degree d in n variables, in descending degrevlex order
/// (x1 > x2 > ... > xn).
std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned d);
/// Binomial count C(n+d-1, d).
std::size_t count_monomials(std::size_t n, unsigned d);

}  // namespace koszul
