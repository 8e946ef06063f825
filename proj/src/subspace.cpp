#include "liecap/subspace.hpp"

namespace liecap {

Subspace Subspace::from_echelon(const EchelonBasis& basis) {
  std::vector<std::size_t> pivots;
  auto rows = basis.sorted_rows(&pivots);
  return Subspace(Matrix::from_rows(basis.field(), basis.ambient(), std::move(rows)), std::move(pivots));
}

Subspace Subspace::zero(Field field, std::size_t ambient) {
  return Subspace(Matrix(field, 0, ambient), {});
}

Subspace Subspace::full(Field field, std::size_t ambient) {
  std::vector<std::size_t> pivots(ambient);
  for (std::size_t i = 0; i < ambient; ++i) pivots[i] = i;
  return Subspace(Matrix::identity(field, ambient), std::move(pivots));
}

Subspace Subspace::span(Field field, std::size_t ambient, const std::vector<Vector>& vectors) {
  EchelonBasis basis(field, ambient);
  for (const auto& v : vectors) basis.insert(v);
  return from_echelon(basis);
}

Subspace Subspace::row_space(const Matrix& m) { return span(m.field(), m.cols(), m.row_vectors()); }

std::vector<std::size_t> Subspace::non_pivots() const {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t c = 0; c < ambient_dim(); ++c) {
    if (k < pivots_.size() && pivots_[k] == c) {
      ++k;
      continue;
    }
    out.push_back(c);
  }
  return out;
}

Vector Subspace::reduce(Vector v) const {
  if (v.size() != ambient_dim())
    throw Error(ErrorKind::DimensionMismatch, "vector of length " + std::to_string(v.size()) +
                                                  " in ambient " + std::to_string(ambient_dim()));
  const Field& f = field();
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    std::size_t c = pivots_[k];
    if (sgn(v[c]) == 0) continue;
    mpq_class factor = v[c];
    const Vector& row = basis_.row(k);
    for (std::size_t j = c; j < v.size(); ++j)
      if (sgn(row[j]) != 0) f.sub_mul(v[j], factor, row[j]);
  }
  return v;
}

bool Subspace::contains(const Vector& v) const { return liecap::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim() != ambient_dim()) throw Error(ErrorKind::DimensionMismatch, "contains");
  for (const auto& r : other.basis_.row_vectors())
    if (!contains(r)) return false;
  return true;
}

Vector Subspace::coordinates(const Vector& v) const {
  if (!contains(v)) throw Error(ErrorKind::NotContained, "vector outside subspace");
  Vector out;
  out.reserve(dim());
  for (std::size_t c : pivots_) out.push_back(v[c]);
  return out;
}

Subspace sum(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim() || !(u.field() == v.field()))
    throw Error(ErrorKind::DimensionMismatch, "sum of subspaces in different ambients");
  EchelonBasis basis(u.field(), u.ambient_dim());
  for (const auto& r : u.basis().row_vectors()) basis.insert(r);
  for (const auto& r : v.basis().row_vectors()) basis.insert(r);
  return Subspace::from_echelon(basis);
}

// Zassenhaus: reduce the rows (u | u) and (v | 0); rows with vanishing left
// half carry a basis of the intersection in their right half.
Subspace intersect(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim() || !(u.field() == v.field()))
    throw Error(ErrorKind::DimensionMismatch, "intersection of subspaces in different ambients");
  const std::size_t n = u.ambient_dim();
  EchelonBasis basis(u.field(), 2 * n);
  for (const auto& r : u.basis().row_vectors()) {
    Vector w = r;
    w.insert(w.end(), r.begin(), r.end());
    basis.insert(std::move(w));
  }
  for (const auto& r : v.basis().row_vectors()) {
    Vector w = r;
    w.resize(2 * n, mpq_class(0));
    basis.insert(std::move(w));
  }
  std::vector<Vector> out;
  for (const auto& row : basis.sorted_rows()) {
    bool left_zero = true;
    for (std::size_t j = 0; j < n && left_zero; ++j) left_zero = sgn(row[j]) == 0;
    if (left_zero) out.emplace_back(row.begin() + static_cast<long>(n), row.end());
  }
  return Subspace::span(u.field(), n, out);
}

Subspace kernel(const Matrix& m) {
  auto reduced = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : reduced.pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(n);
    v[free] = 1;
    for (std::size_t k = 0; k < reduced.rank; ++k)
      v[reduced.pivots[k]] = m.field().neg(reduced.reduced(k, free));
    basis.push_back(std::move(v));
  }
  return Subspace::span(m.field(), n, basis);
}

Subspace image(const Matrix& m) { return Subspace::row_space(m.transpose()); }

QuotientCoords::QuotientCoords(const Subspace& sub, const Subspace& whole) : sub_(sub), whole_(whole) {
  if (sub.ambient_dim() != whole.ambient_dim())
    throw Error(ErrorKind::DimensionMismatch, "quotient of subspaces in different ambients");
  if (!whole.contains(sub)) throw Error(ErrorKind::NotContained, "U is not contained in W");
  EchelonBasis residues(whole.field(), whole.ambient_dim());
  for (const auto& w : whole.basis().row_vectors()) residues.insert(sub.reduce(w));
  complement_ = residues.sorted_rows(&complement_pivots_);
}

Vector QuotientCoords::operator()(const Vector& w) const {
  if (!whole_.contains(w)) throw Error(ErrorKind::NotContained, "vector outside W");
  Vector r = sub_.reduce(w);
  Vector out;
  out.reserve(complement_.size());
  for (std::size_t c : complement_pivots_) out.push_back(r[c]);
  return out;
}

QuotientCoords quotient_coords(const Subspace& sub, const Subspace& whole) {
  return QuotientCoords(sub, whole);
}

}  // namespace liecap
