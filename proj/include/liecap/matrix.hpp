#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "liecap/field.hpp"

namespace liecap {

/// Dense coordinate vector. The field is carried by the owning matrix,
/// subspace or algebra.
using Vector = std::vector<mpq_class>;

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);

class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols);

  static Matrix identity(Field field, std::size_t n);
  static Matrix from_rows(Field field, std::size_t cols, std::vector<Vector> rows);
  static Matrix from_ints(Field field, std::initializer_list<std::initializer_list<long>> rows);
  /// Throws MixedFields unless every scalar shares one field.
  static Matrix from_scalars(const std::vector<std::vector<Scalar>>& rows);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }

  mpq_class& operator()(std::size_t r, std::size_t c) { return rows_[r][c]; }
  const mpq_class& operator()(std::size_t r, std::size_t c) const { return rows_[r][c]; }
  const Vector& row(std::size_t r) const { return rows_[r]; }
  const std::vector<Vector>& row_vectors() const noexcept { return rows_; }
  Vector column(std::size_t c) const;

  void set_column(std::size_t c, const Vector& v);

  Matrix transpose() const;
  Vector apply(const Vector& v) const;
  Matrix operator*(const Matrix& other) const;
  bool is_zero() const;

  bool operator==(const Matrix& other) const;

 private:
  Field field_;
  std::size_t cols_;
  std::vector<Vector> rows_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank;
};

/// Reduced row echelon form. Zero rows are kept at the bottom so the result
/// has the same shape as the input.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Incrementally maintained fully reduced echelon basis of a row space.
/// Rows are normalized (pivot entry 1) and every pivot column is zero in
/// every other row.
class EchelonBasis {
 public:
  EchelonBasis(Field field, std::size_t ambient);

  /// Adds v to the span. Returns true when the dimension grew.
  bool insert(Vector v);
  /// Residue of v after eliminating all pivot columns.
  Vector reduce(Vector v) const;
  bool contains(const Vector& v) const;

  std::size_t dim() const noexcept { return rows_.size(); }
  std::size_t ambient() const noexcept { return ambient_; }
  const Field& field() const noexcept { return field_; }

  /// Rows sorted by pivot column; this is the canonical RREF basis.
  std::vector<Vector> sorted_rows(std::vector<std::size_t>* pivots = nullptr) const;

 private:
  Field field_;
  std::size_t ambient_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivot_of_row_;
  std::vector<long> row_of_pivot_;  // -1 when the column carries no pivot
};

}  // namespace liecap

namespace liecap {

/// Inverse of a square matrix; throws DivisionByZero when singular.
Matrix inverse(const Matrix& m);

}  // namespace liecap
