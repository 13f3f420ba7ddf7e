#include "koszul/scalars/series.hpp"

#include <algorithm>
#include <sstream>

#include "koszul/errors.hpp"

namespace koszul {

TruncatedSeries::TruncatedSeries(std::size_t truncation) : coeffs_(truncation + 1, mpq_class(0)) {}

TruncatedSeries::TruncatedSeries(std::vector<mpq_class> coeffs, std::size_t truncation)
    : coeffs_(std::move(coeffs)) {
  coeffs_.resize(truncation + 1, mpq_class(0));
}

TruncatedSeries TruncatedSeries::from_ints(const std::vector<long>& coeffs, std::size_t truncation) {
  std::vector<mpq_class> q;
  q.reserve(coeffs.size());
  for (long c : coeffs) q.emplace_back(c);
  return TruncatedSeries(std::move(q), truncation);
}

TruncatedSeries TruncatedSeries::one(std::size_t truncation) {
  TruncatedSeries s(truncation);
  s.coeffs_[0] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::negate_variable() const {
  TruncatedSeries s = *this;
  for (std::size_t i = 1; i < s.coeffs_.size(); i += 2) s.coeffs_[i] = -s.coeffs_[i];
  return s;
}

TruncatedSeries TruncatedSeries::truncate(std::size_t truncation) const {
  return TruncatedSeries(std::vector<mpq_class>(coeffs_.begin(), coeffs_.begin() + std::min(coeffs_.size(), truncation + 1)),
                         truncation);
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t d = std::min(a.truncation(), b.truncation());
  TruncatedSeries s(d);
  for (std::size_t i = 0; i <= d; ++i) s.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
  return s;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t d = std::min(a.truncation(), b.truncation());
  TruncatedSeries s(d);
  for (std::size_t i = 0; i <= d; ++i) s.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
  return s;
}

std::string TruncatedSeries::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out << (i ? "," : "") << coeffs_[i].get_str();
  return out.str();
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t d = std::min(a.truncation(), b.truncation());
  TruncatedSeries s(d);
  for (std::size_t i = 0; i <= d; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; i + j <= d; ++j) s[i + j] += a[i] * b[j];
  }
  return s;
}

TruncatedSeries series_inverse(const TruncatedSeries& s) {
  if (sgn(s[0]) == 0) throw InputError("series with zero constant term is not invertible");
  const std::size_t d = s.truncation();
  TruncatedSeries inv(d);
  inv[0] = 1 / s[0];
  for (std::size_t k = 1; k <= d; ++k) {
    mpq_class acc = 0;
    for (std::size_t j = 1; j <= k; ++j) acc += s[j] * inv[k - j];
    inv[k] = -acc / s[0];
  }
  return inv;
}

}  // namespace koszul
