#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "koszul/scalars/field.hpp"

namespace koszul {

using Vector = std::vector<FieldElem>;

/// Dense row-major matrix over a single field.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(Field field, std::size_t rows, std::size_t cols);
  /// Rows must all have length `cols`; an empty list gives a 0 x cols matrix.
  static DenseMatrix from_rows(Field field, std::size_t cols, const std::vector<Vector>& rows);
  static DenseMatrix from_ints(Field field, const std::vector<std::vector<long>>& rows);
  static DenseMatrix identity(Field field, std::size_t n);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const FieldElem& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  FieldElem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::span<const FieldElem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<FieldElem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  Vector row_vector(std::size_t r) const;
  Vector column(std::size_t c) const;

  DenseMatrix transpose() const;
  void swap_rows(std::size_t a, std::size_t b);

  std::string to_string() const;

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<FieldElem> data_;
};

struct RowEchelon {
  DenseMatrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

/// Reduced row echelon form. Pivots are chosen column by column, left to
/// right, taking the first remaining row with a nonzero entry.
RowEchelon rref(const DenseMatrix& m);
std::size_t rank(const DenseMatrix& m);

/// Basis of the right null space: one vector per free column (ascending),
/// with that coordinate set to 1 and the other free coordinates 0.
std::vector<Vector> kernel_basis(const DenseMatrix& m);

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b);
Vector multiply(const DenseMatrix& a, const Vector& v);
FieldElem determinant(const DenseMatrix& m);
/// Empty when the matrix is singular.
std::optional<DenseMatrix> inverse(const DenseMatrix& m);

bool is_zero_vector(const Vector& v);

/// Incrementally grown row space kept in reduced echelon form.
class EchelonBasis {
 public:
  EchelonBasis(Field field, std::size_t dim) : field_(field), dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<Vector>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Reduces v against the current rows (v ends with no pivot-column entries).
  Vector reduce(Vector v) const;
  bool contains(const Vector& v) const { return is_zero_vector(reduce(v)); }
  /// Adds v if independent; returns whether the rank grew.
  bool insert(const Vector& v);

  /// Rows sorted by pivot column, fully reduced against one another.
  DenseMatrix matrix() const;

 private:
  Field field_;
  std::size_t dim_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace koszul
