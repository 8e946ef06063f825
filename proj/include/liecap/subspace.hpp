#pragma once

#include <vector>

#include "liecap/matrix.hpp"

namespace liecap {

/// A linear subspace of F^n held in canonical reduced row echelon form, so
/// two equal subspaces have identical basis matrices.
class Subspace {
 public:
  static Subspace zero(Field field, std::size_t ambient);
  static Subspace full(Field field, std::size_t ambient);
  static Subspace span(Field field, std::size_t ambient, const std::vector<Vector>& vectors);
  static Subspace row_space(const Matrix& m);
  static Subspace from_echelon(const EchelonBasis& basis);

  const Field& field() const noexcept { return basis_.field(); }
  std::size_t ambient_dim() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  bool is_zero() const noexcept { return dim() == 0; }

  const Matrix& basis() const noexcept { return basis_; }
  const Vector& basis_vector(std::size_t i) const { return basis_.row(i); }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  /// Columns that carry no pivot; their unit vectors span a complement.
  std::vector<std::size_t> non_pivots() const;

  Vector reduce(Vector v) const;
  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v (which must lie in the subspace) in the RREF basis.
  Vector coordinates(const Vector& v) const;

  bool operator==(const Subspace& other) const { return basis_ == other.basis_; }

 private:
  explicit Subspace(Matrix basis, std::vector<std::size_t> pivots)
      : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace sum(const Subspace& u, const Subspace& v);
Subspace intersect(const Subspace& u, const Subspace& v);

/// {v : m v = 0}
Subspace kernel(const Matrix& m);
/// Column space of m.
Subspace image(const Matrix& m);

/// Coordinates on W/U for U a subspace of W. The complement of U inside W
/// is chosen by pivoting on W reduced modulo U, so the result is
/// deterministic.
class QuotientCoords {
 public:
  QuotientCoords(const Subspace& sub, const Subspace& whole);

  std::size_t dim() const noexcept { return complement_.size(); }
  /// Representatives in W of the quotient basis.
  const std::vector<Vector>& complement() const noexcept { return complement_; }
  /// Coordinates of w + U. Throws NotContained when w is outside W.
  Vector operator()(const Vector& w) const;

 private:
  Subspace sub_;
  Subspace whole_;
  std::vector<Vector> complement_;
  std::vector<std::size_t> complement_pivots_;
};

QuotientCoords quotient_coords(const Subspace& sub, const Subspace& whole);

}  // namespace liecap
