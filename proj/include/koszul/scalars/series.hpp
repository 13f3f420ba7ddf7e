#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace koszul {

/// Power series c_0 + c_1 z + ... + c_D z^D modulo z^{D+1}, rational coefficients.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t truncation);
  /// Coefficients beyond the truncation are dropped; missing ones are zero.
  TruncatedSeries(std::vector<mpq_class> coeffs, std::size_t truncation);
  static TruncatedSeries from_ints(const std::vector<long>& coeffs, std::size_t truncation);
  static TruncatedSeries one(std::size_t truncation);

  std::size_t truncation() const { return coeffs_.size() - 1; }
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }
  const mpq_class& operator[](std::size_t i) const { return coeffs_[i]; }
  mpq_class& operator[](std::size_t i) { return coeffs_[i]; }

  /// f(z) -> f(-z).
  TruncatedSeries negate_variable() const;
  TruncatedSeries truncate(std::size_t truncation) const;

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string() const;

 private:
  std::vector<mpq_class> coeffs_;
};

/// Convolution truncated at the smaller of the two truncation degrees.
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
/// Throws InputError when the constant term is zero.
TruncatedSeries series_inverse(const TruncatedSeries& s);

}  // namespace koszul
