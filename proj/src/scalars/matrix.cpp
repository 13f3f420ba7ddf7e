#include "koszul/scalars/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "koszul/errors.hpp"

namespace koszul {

DenseMatrix::DenseMatrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

DenseMatrix DenseMatrix::from_rows(Field field, std::size_t cols, const std::vector<Vector>& rows) {
  DenseMatrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InputError("ragged matrix rows");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

DenseMatrix DenseMatrix::from_ints(Field field, const std::vector<std::vector<long>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  DenseMatrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InputError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = field.from_int(rows[r][c]);
  }
  return m;
}

DenseMatrix DenseMatrix::identity(Field field, std::size_t n) {
  DenseMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

Vector DenseMatrix::row_vector(std::size_t r) const {
  auto s = row(r);
  return Vector(s.begin(), s.end());
}

Vector DenseMatrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

void DenseMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(data_.begin() + a * cols_, data_.begin() + (a + 1) * cols_, data_.begin() + b * cols_);
}

std::string DenseMatrix::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    out << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) out << (c ? ", " : "") << (*this)(r, c).to_string();
    out << ']';
  }
  out << ']';
  return out.str();
}

RowEchelon rref(const DenseMatrix& m) {
  RowEchelon out{m, {}, 0};
  DenseMatrix& a = out.reduced;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t pivot = lead;
    while (pivot < rows && a(pivot, c).is_zero()) ++pivot;
    if (pivot == rows) continue;
    a.swap_rows(pivot, lead);
    auto prow = a.row(lead);
    if (!prow[c].is_one()) {
      FieldElem inv = prow[c].inverse();
      for (std::size_t k = c; k < cols; ++k)
        if (!prow[k].is_zero()) prow[k] *= inv;
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || a(r, c).is_zero()) continue;
      FieldElem factor = a(r, c);
      auto row = a.row(r);
      for (std::size_t k = c; k < cols; ++k)
        if (!prow[k].is_zero()) row[k] -= factor * prow[k];
    }
    out.pivots.push_back(c);
    ++lead;
  }
  out.rank = lead;
  return out;
}

std::size_t rank(const DenseMatrix& m) { return rref(m).rank; }

std::vector<Vector> kernel_basis(const DenseMatrix& m) {
  RowEchelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols(), m.field().zero());
    v[free] = m.field().one();
    for (std::size_t r = 0; r < e.rank; ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) throw InputError("matrix dimension mismatch in product");
  DenseMatrix out(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero()) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

Vector multiply(const DenseMatrix& a, const Vector& v) {
  if (a.cols() != v.size()) throw InputError("matrix-vector dimension mismatch");
  Vector out(a.rows(), a.field().zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (!a(i, k).is_zero() && !v[k].is_zero()) out[i] += a(i, k) * v[k];
  return out;
}

FieldElem determinant(const DenseMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
  DenseMatrix a = m;
  const std::size_t n = a.rows();
  FieldElem det = a.field().one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a(pivot, c).is_zero()) ++pivot;
    if (pivot == n) return a.field().zero();
    if (pivot != c) {
      a.swap_rows(pivot, c);
      det = -det;
    }
    det *= a(c, c);
    FieldElem inv = a(c, c).inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a(r, c).is_zero()) continue;
      FieldElem factor = a(r, c) * inv;
      for (std::size_t k = c; k < n; ++k)
        if (!a(c, k).is_zero()) a(r, k) -= factor * a(c, k);
    }
  }
  return det;
}

std::optional<DenseMatrix> inverse(const DenseMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  DenseMatrix aug(m.field(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = m.field().one();
  }
  RowEchelon e = rref(aug);
  if (e.rank < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  DenseMatrix inv(m.field(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  return inv;
}

bool is_zero_vector(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const FieldElem& x) { return x.is_zero(); });
}

Vector EchelonBasis::reduce(Vector v) const {
  if (v.size() != dim_) throw InputError("vector length does not match echelon basis");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::size_t p = pivots_[i];
    if (v[p].is_zero()) continue;
    FieldElem factor = v[p];
    const Vector& row = rows_[i];
    for (std::size_t k = 0; k < dim_; ++k)
      if (!row[k].is_zero()) v[k] -= factor * row[k];
  }
  return v;
}

bool EchelonBasis::insert(const Vector& v) {
  Vector r = reduce(v);
  std::size_t p = 0;
  while (p < dim_ && r[p].is_zero()) ++p;
  if (p == dim_) return false;
  FieldElem inv = r[p].inverse();
  for (auto& x : r)
    if (!x.is_zero()) x *= inv;
  for (auto& row : rows_) {
    if (row[p].is_zero()) continue;
    FieldElem factor = row[p];
    for (std::size_t k = 0; k < dim_; ++k)
      if (!r[k].is_zero()) row[k] -= factor * r[k];
  }
  rows_.push_back(std::move(r));
  pivots_.push_back(p);
  return true;
}

DenseMatrix EchelonBasis::matrix() const {
  std::vector<std::size_t> order(rows_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
  DenseMatrix m(field_, rows_.size(), dim_);
  for (std::size_t i = 0; i < order.size(); ++i) std::copy(rows_[order[i]].begin(), rows_[order[i]].end(), m.row(i).begin());
  return m;
}

}  // namespace koszul
