#include "liecap/lie_algebra.hpp"

#include <algorithm>

namespace liecap {

namespace {

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("x" + std::to_string(i + 1));
  return out;
}

SparseVector to_sparse(const Vector& v) {
  SparseVector out;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (sgn(v[k]) != 0) out.emplace_back(k, v[k]);
  return out;
}

}  // namespace

LieAlgebra::LieAlgebra(Field field, std::size_t dim, std::vector<std::string> labels)
    : field_(field), dim_(dim), labels_(std::move(labels)), table_(dim < 2 ? 0 : dim * (dim - 1) / 2) {
  if (labels_.empty()) labels_ = default_labels(dim);
  if (labels_.size() != dim) throw Error(ErrorKind::DimensionMismatch, "label count");
}

LieAlgebra LieAlgebra::abelian(Field field, std::size_t dim) { return LieAlgebra(field, dim); }

void LieAlgebra::set_labels(std::vector<std::string> labels) {
  if (labels.size() != dim_) throw Error(ErrorKind::DimensionMismatch, "label count");
  labels_ = std::move(labels);
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, const Vector& out) {
  if (i >= dim_ || j >= dim_ || out.size() != dim_)
    throw Error(ErrorKind::DimensionMismatch, "bracket index out of range");
  if (i == j) {
    if (!is_zero(out)) throw Error(ErrorKind::JacobiViolation, "[e_i, e_i] must vanish");
    return;
  }
  Vector v = out;
  for (auto& x : v) field_.reduce(x);
  if (i > j) {
    std::swap(i, j);
    for (auto& x : v) x = field_.neg(x);
  }
  table_[pair_index(i, j)] = to_sparse(v);
}

void LieAlgebra::add_bracket_term(std::size_t i, std::size_t j, std::size_t k, const mpq_class& coeff) {
  Vector v = bracket_basis(i, j);
  v[k] = field_.add(v[k], field_.from_rational(coeff));
  set_bracket(i, j, v);
}

Vector LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  Vector out = zero_vector(dim_);
  if (i == j) return out;
  bool flip = i > j;
  for (const auto& [k, c] : table_[flip ? pair_index(j, i) : pair_index(i, j)])
    out[k] = flip ? field_.neg(c) : c;
  return out;
}

Vector LieAlgebra::bracket(const Vector& u, const Vector& v) const {
  if (u.size() != dim_ || v.size() != dim_)
    throw Error(ErrorKind::DimensionMismatch, "bracket operands must have length " + std::to_string(dim_));
  std::vector<std::size_t> su, sv;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (sgn(u[i]) != 0) su.push_back(i);
    if (sgn(v[i]) != 0) sv.push_back(i);
  }
  Vector out = zero_vector(dim_);
  mpq_class coeff;
  for (std::size_t i : su)
    for (std::size_t j : sv) {
      if (i == j) continue;
      const SparseVector& entry = i < j ? table_[pair_index(i, j)] : table_[pair_index(j, i)];
      if (entry.empty()) continue;
      coeff = u[i] * v[j];
      if (i > j) coeff = -coeff;
      for (const auto& [k, c] : entry) out[k] += coeff * c;
    }
  for (auto& x : out) field_.reduce(x);
  return out;
}

bool LieAlgebra::is_abelian() const {
  return std::all_of(table_.begin(), table_.end(), [](const SparseVector& e) { return e.empty(); });
}

std::size_t LieAlgebra::nonzero_entries() const {
  std::size_t n = 0;
  for (const auto& e : table_) n += e.empty() ? 0 : 1;
  return n;
}

bool LieAlgebra::operator==(const LieAlgebra& other) const {
  return field_ == other.field_ && dim_ == other.dim_ && table_ == other.table_;
}

ValidationReport validate(const LieAlgebra& algebra) {
  const std::size_t n = algebra.dim();
  const Field& f = algebra.field();
  std::vector<Vector> basis;
  for (std::size_t i = 0; i < n; ++i) basis.push_back(unit_vector(n, i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector a = algebra.bracket(basis[i], algebra.bracket_basis(j, k));
        Vector b = algebra.bracket(basis[j], algebra.bracket_basis(k, i));
        Vector c = algebra.bracket(basis[k], algebra.bracket_basis(i, j));
        for (std::size_t t = 0; t < n; ++t) a[t] = f.add(f.add(a[t], b[t]), c[t]);
        if (!is_zero(a)) {
          ValidationReport r;
          r.ok = false;
          r.i = i + 1;
          r.j = j + 1;
          r.k = k + 1;
          r.residual = a;
          r.message = "Jacobi identity fails on (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
                      std::to_string(k + 1) + ")";
          return r;
        }
      }
  return {};
}

IdealSubspace IdealSubspace::checked(const LieAlgebra& algebra, Subspace space) {
  if (space.ambient_dim() != algebra.dim()) throw Error(ErrorKind::DimensionMismatch, "ideal ambient");
  if (!is_ideal(algebra, space)) throw Error(ErrorKind::NotAnIdeal, "subspace is not closed under [L, -]");
  return IdealSubspace(std::move(space));
}

bool AlgebraMap::preserves_brackets(const LieAlgebra& source, const LieAlgebra& target) const {
  const std::size_t n = source.dim();
  std::vector<Vector> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(matrix.column(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (matrix.apply(source.bracket_basis(i, j)) != target.bracket(images[i], images[j])) return false;
  return true;
}

bool is_ideal(const LieAlgebra& algebra, const Subspace& space) {
  const std::size_t n = algebra.dim();
  for (const auto& s : space.basis().row_vectors())
    for (std::size_t i = 0; i < n; ++i)
      if (!space.contains(algebra.bracket(unit_vector(n, i), s))) return false;
  return true;
}

Subspace bracket_span(const LieAlgebra& algebra, const Subspace& a, const Subspace& b) {
  EchelonBasis out(algebra.field(), algebra.dim());
  for (const auto& u : a.basis().row_vectors())
    for (const auto& v : b.basis().row_vectors()) out.insert(algebra.bracket(u, v));
  return Subspace::from_echelon(out);
}

IdealSubspace derived_subalgebra(const LieAlgebra& algebra) {
  EchelonBasis out(algebra.field(), algebra.dim());
  for (std::size_t i = 0; i < algebra.dim(); ++i)
    for (std::size_t j = i + 1; j < algebra.dim(); ++j)
      if (!algebra.table_entry(i, j).empty()) out.insert(algebra.bracket_basis(i, j));
  return IdealSubspace::trusted(Subspace::from_echelon(out));
}

Subspace centralizer(const LieAlgebra& algebra, const Subspace& s) {
  // x |-> ([x, s_1], ..., [x, s_m]) stacked row by row.
  const std::size_t n = algebra.dim();
  EchelonBasis rows(algebra.field(), n);
  for (const auto& sv : s.basis().row_vectors()) {
    std::vector<Vector> images;
    for (std::size_t i = 0; i < n; ++i) images.push_back(algebra.bracket(unit_vector(n, i), sv));
    for (std::size_t k = 0; k < n; ++k) {
      Vector row(n);
      bool any = false;
      for (std::size_t i = 0; i < n; ++i) {
        row[i] = images[i][k];
        any = any || sgn(row[i]) != 0;
      }
      if (any) rows.insert(std::move(row));
    }
  }
  return kernel(Matrix::from_rows(algebra.field(), n, rows.sorted_rows()));
}

IdealSubspace center(const LieAlgebra& algebra) {
  return IdealSubspace::trusted(centralizer(algebra, Subspace::full(algebra.field(), algebra.dim())));
}

std::vector<IdealSubspace> lower_central_series(const LieAlgebra& algebra) {
  const Subspace whole = Subspace::full(algebra.field(), algebra.dim());
  std::vector<IdealSubspace> series{IdealSubspace::trusted(whole)};
  while (!series.back().space().is_zero()) {
    Subspace next = bracket_span(algebra, series.back().space(), whole);
    if (next.dim() == series.back().dim()) break;
    series.push_back(IdealSubspace::trusted(std::move(next)));
  }
  return series;
}

std::vector<IdealSubspace> upper_central_series(const LieAlgebra& algebra) {
  // zeta_{i+1} / zeta_i = Z(L / zeta_i), pulled back through the projection.
  const std::size_t n = algebra.dim();
  std::vector<IdealSubspace> series{IdealSubspace::trusted(Subspace::zero(algebra.field(), n))};
  while (series.back().dim() < n) {
    const Subspace& current = series.back().space();
    // x is in the next term iff [x, e_i] lies in current for all i.
    EchelonBasis rows(algebra.field(), n);
    auto complement = current.non_pivots();
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Vector> images;
      for (std::size_t j = 0; j < n; ++j)
        images.push_back(current.reduce(algebra.bracket(unit_vector(n, j), unit_vector(n, i))));
      for (std::size_t k : complement) {
        Vector row(n);
        for (std::size_t j = 0; j < n; ++j) row[j] = images[j][k];
        if (!is_zero(row)) rows.insert(std::move(row));
      }
    }
    Subspace next = kernel(Matrix::from_rows(algebra.field(), n, rows.sorted_rows()));
    if (next.dim() == current.dim()) break;
    series.push_back(IdealSubspace::trusted(std::move(next)));
  }
  return series;
}

std::size_t nilpotency_class(const LieAlgebra& algebra) {
  auto series = lower_central_series(algebra);
  if (!series.back().space().is_zero())
    throw Error(ErrorKind::NotNilpotent, "lower central series stabilizes in dimension " +
                                             std::to_string(series.back().dim()));
  return series.size() - 1;
}

bool is_nilpotent(const LieAlgebra& algebra) { return lower_central_series(algebra).back().space().is_zero(); }

std::size_t minimal_generator_count(const LieAlgebra& algebra) {
  nilpotency_class(algebra);
  return algebra.dim() - derived_subalgebra(algebra).dim();
}

LieAlgebra direct_sum(const LieAlgebra& h, const LieAlgebra& k) {
  if (!(h.field() == k.field())) throw Error(ErrorKind::MixedFields, "direct sum");
  std::vector<std::string> labels;
  for (const auto& l : h.labels()) labels.push_back("h." + l);
  for (const auto& l : k.labels()) labels.push_back("k." + l);
  const std::size_t n = h.dim() + k.dim();
  LieAlgebra out(h.field(), n, std::move(labels));
  for (std::size_t i = 0; i < h.dim(); ++i)
    for (std::size_t j = i + 1; j < h.dim(); ++j)
      for (const auto& [t, c] : h.table_entry(i, j)) out.add_bracket_term(i, j, t, c);
  const std::size_t off = h.dim();
  for (std::size_t i = 0; i < k.dim(); ++i)
    for (std::size_t j = i + 1; j < k.dim(); ++j)
      for (const auto& [t, c] : k.table_entry(i, j)) out.add_bracket_term(off + i, off + j, off + t, c);
  return out;
}

Quotient quotient(const LieAlgebra& algebra, const Subspace& ideal) {
  if (ideal.ambient_dim() != algebra.dim()) throw Error(ErrorKind::DimensionMismatch, "quotient ambient");
  if (!is_ideal(algebra, ideal)) throw Error(ErrorKind::NotAnIdeal, "cannot form quotient by a non-ideal");
  const auto keep = ideal.non_pivots();
  const std::size_t m = keep.size();
  std::vector<std::string> labels;
  for (std::size_t c : keep) labels.push_back(algebra.labels()[c]);
  LieAlgebra out(algebra.field(), m, std::move(labels));
  auto project = [&](const Vector& v) {
    Vector r = ideal.reduce(v);
    Vector coords(m);
    for (std::size_t a = 0; a < m; ++a) coords[a] = r[keep[a]];
    return coords;
  };
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      const auto& entry = algebra.table_entry(keep[a], keep[b]);
      if (entry.empty()) continue;
      out.set_bracket(a, b, project(algebra.bracket_basis(keep[a], keep[b])));
    }
  Matrix proj(algebra.field(), m, algebra.dim());
  for (std::size_t i = 0; i < algebra.dim(); ++i) proj.set_column(i, project(unit_vector(algebra.dim(), i)));
  return {std::move(out), AlgebraMap{std::move(proj)}};
}

LieAlgebra subalgebra(const LieAlgebra& algebra, const Subspace& s) {
  const std::size_t m = s.dim();
  LieAlgebra out(algebra.field(), m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      Vector w = algebra.bracket(s.basis_vector(a), s.basis_vector(b));
      if (!s.contains(w)) throw Error(ErrorKind::NotAnIdeal, "subspace is not a subalgebra");
      out.set_bracket(a, b, s.coordinates(w));
    }
  return out;
}

LieAlgebra change_basis(const LieAlgebra& algebra, const Matrix& basis) {
  const std::size_t n = algebra.dim();
  if (basis.rows() != n || basis.cols() != n) throw Error(ErrorKind::DimensionMismatch, "change of basis");
  // Column i of basis^T is the i-th new basis vector; coordinates come from its inverse.
  Matrix to_new = inverse(basis.transpose());
  LieAlgebra out(algebra.field(), n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      out.set_bracket(a, b, to_new.apply(algebra.bracket(basis.row(a), basis.row(b))));
  return out;
}

}  // namespace liecap
