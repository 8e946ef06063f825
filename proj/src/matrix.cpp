#include "liecap/matrix.hpp"

#include <algorithm>
#include <numeric>

namespace liecap {

Vector zero_vector(std::size_t n) { return Vector(n, mpq_class(0)); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n, mpq_class(0));
  v[i] = 1;
  return v;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const mpq_class& x) { return sgn(x) == 0; });
}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), cols_(cols), rows_(rows, zero_vector(cols)) {}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(Field field, std::size_t cols, std::vector<Vector> rows) {
  Matrix m(field, 0, cols);
  for (auto& r : rows) {
    if (r.size() != cols)
      throw Error(ErrorKind::DimensionMismatch, "row of length " + std::to_string(r.size()) +
                                                    ", expected " + std::to_string(cols));
    for (auto& x : r) field.reduce(x);
  }
  m.rows_ = std::move(rows);
  return m;
}

Matrix Matrix::from_ints(Field field, std::initializer_list<std::initializer_list<long>> rows) {
  std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
  std::vector<Vector> data;
  for (const auto& r : rows) {
    Vector v;
    for (long x : r) v.push_back(field.from_int(x));
    data.push_back(std::move(v));
  }
  return from_rows(field, cols, std::move(data));
}

Matrix Matrix::from_scalars(const std::vector<std::vector<Scalar>>& rows) {
  if (rows.empty() || rows.front().empty()) return Matrix(Field::rationals(), rows.size(), 0);
  Field field = rows.front().front().field();
  std::vector<Vector> data;
  for (const auto& r : rows) {
    Vector v;
    for (const auto& s : r) {
      if (!(s.field() == field))
        throw Error(ErrorKind::MixedFields, field.name() + " vs " + s.field().name());
      v.push_back(s.value());
    }
    data.push_back(std::move(v));
  }
  return from_rows(field, rows.front().size(), std::move(data));
}

Vector Matrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows());
  for (const auto& r : rows_) v.push_back(r[c]);
  return v;
}

void Matrix::set_column(std::size_t c, const Vector& v) {
  if (v.size() != rows()) throw Error(ErrorKind::DimensionMismatch, "column length");
  for (std::size_t r = 0; r < rows(); ++r) rows_[r][c] = v[r];
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows());
  for (std::size_t r = 0; r < rows(); ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = rows_[r][c];
  return t;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_)
    throw Error(ErrorKind::DimensionMismatch, "vector of length " + std::to_string(v.size()) +
                                                  " applied to " + std::to_string(rows()) + "x" +
                                                  std::to_string(cols_) + " matrix");
  std::vector<std::size_t> support;
  for (std::size_t c = 0; c < cols_; ++c)
    if (sgn(v[c]) != 0) support.push_back(c);
  Vector out = zero_vector(rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::size_t c : support)
      if (sgn(rows_[r][c]) != 0) out[r] += rows_[r][c] * v[c];
    field_.reduce(out[r]);
  }
  return out;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (!(field_ == other.field_)) throw Error(ErrorKind::MixedFields, "matrix product");
  if (cols_ != other.rows())
    throw Error(ErrorKind::DimensionMismatch, "matrix product shape");
  Matrix out(field_, rows(), other.cols());
  for (std::size_t r = 0; r < rows(); ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const mpq_class& a = rows_[r][k];
      if (sgn(a) == 0) continue;
      for (std::size_t c = 0; c < other.cols(); ++c)
        if (sgn(other(k, c)) != 0) out(r, c) += a * other(k, c);
    }
  for (auto& r : out.rows_)
    for (auto& x : r) field_.reduce(x);
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(rows_.begin(), rows_.end(), [](const Vector& r) { return liecap::is_zero(r); });
}

bool Matrix::operator==(const Matrix& other) const {
  return field_ == other.field_ && cols_ == other.cols_ && rows_ == other.rows_;
}

EchelonBasis::EchelonBasis(Field field, std::size_t ambient)
    : field_(field), ambient_(ambient), row_of_pivot_(ambient, -1) {}

Vector EchelonBasis::reduce(Vector v) const {
  if (v.size() != ambient_)
    throw Error(ErrorKind::DimensionMismatch, "vector of length " + std::to_string(v.size()) +
                                                  " in ambient " + std::to_string(ambient_));
  for (std::size_t c = 0; c < ambient_; ++c) {
    if (sgn(v[c]) == 0 || row_of_pivot_[c] < 0) continue;
    const Vector& row = rows_[static_cast<std::size_t>(row_of_pivot_[c])];
    mpq_class f = v[c];
    for (std::size_t j = c; j < ambient_; ++j)
      if (sgn(row[j]) != 0) field_.sub_mul(v[j], f, row[j]);
  }
  return v;
}

bool EchelonBasis::contains(const Vector& v) const { return is_zero(reduce(v)); }

bool EchelonBasis::insert(Vector v) {
  if (rows_.size() == ambient_) {
    if (v.size() != ambient_) throw Error(ErrorKind::DimensionMismatch, "insert");
    return false;
  }
  for (auto& x : v) field_.reduce(x);
  v = reduce(std::move(v));
  std::size_t lead = 0;
  while (lead < ambient_ && sgn(v[lead]) == 0) ++lead;
  if (lead == ambient_) return false;
  mpq_class scale = field_.inv(v[lead]);
  std::vector<std::size_t> support;
  for (std::size_t j = lead; j < ambient_; ++j) {
    if (sgn(v[j]) == 0) continue;
    v[j] = field_.mul(v[j], scale);
    support.push_back(j);
  }
  for (auto& row : rows_) {
    if (sgn(row[lead]) == 0) continue;
    mpq_class f = row[lead];
    for (std::size_t j : support) field_.sub_mul(row[j], f, v[j]);
  }
  row_of_pivot_[lead] = static_cast<long>(rows_.size());
  pivot_of_row_.push_back(lead);
  rows_.push_back(std::move(v));
  return true;
}

std::vector<Vector> EchelonBasis::sorted_rows(std::vector<std::size_t>* pivots) const {
  std::vector<Vector> out;
  if (pivots) pivots->clear();
  for (std::size_t c = 0; c < ambient_; ++c) {
    if (row_of_pivot_[c] < 0) continue;
    out.push_back(rows_[static_cast<std::size_t>(row_of_pivot_[c])]);
    if (pivots) pivots->push_back(c);
  }
  return out;
}

RrefResult rref(const Matrix& m) {
  EchelonBasis basis(m.field(), m.cols());
  for (const auto& r : m.row_vectors()) basis.insert(r);
  std::vector<std::size_t> pivots;
  auto rows = basis.sorted_rows(&pivots);
  std::size_t r = rows.size();
  while (rows.size() < m.rows()) rows.push_back(zero_vector(m.cols()));
  return {Matrix::from_rows(m.field(), m.cols(), std::move(rows)), std::move(pivots), r};
}

std::size_t rank(const Matrix& m) {
  EchelonBasis basis(m.field(), m.cols());
  for (const auto& r : m.row_vectors()) basis.insert(r);
  return basis.dim();
}

}  // namespace liecap

namespace liecap {

Matrix inverse(const Matrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw Error(ErrorKind::DimensionMismatch, "inverse of non-square matrix");
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < n; ++r) {
    Vector v = m.row(r);
    v.resize(2 * n, mpq_class(0));
    v[n + r] = 1;
    rows.push_back(std::move(v));
  }
  auto reduced = rref(Matrix::from_rows(m.field(), 2 * n, std::move(rows)));
  if (reduced.rank < n || (n > 0 && reduced.pivots[n - 1] != n - 1))
    throw Error(ErrorKind::DivisionByZero, "singular matrix");
  Matrix inv(m.field(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = reduced.reduced(r, n + c);
  return inv;
}

}  // namespace liecap
