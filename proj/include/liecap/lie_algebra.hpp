#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liecap/subspace.hpp"

namespace liecap {

using SparseVector = std::vector<std::pair<std::size_t, mpq_class>>;

/// Finite-dimensional Lie algebra given by structure constants on a basis
/// e_0 .. e_{n-1}. Only [e_i, e_j] with i < j is stored; the opposite order is
/// obtained by sign.
class LieAlgebra {
 public:
  LieAlgebra(Field field, std::size_t dim, std::vector<std::string> labels = {});

  static LieAlgebra abelian(Field field, std::size_t dim);

  const Field& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return dim_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  void set_labels(std::vector<std::string> labels);

  /// Sets [e_i, e_j] = out (and implicitly [e_j, e_i] = -out). i != j.
  void set_bracket(std::size_t i, std::size_t j, const Vector& out);
  /// Convenience for relation lists: [e_i, e_j] = coeff * e_k, added to any
  /// existing value.
  void add_bracket_term(std::size_t i, std::size_t j, std::size_t k, const mpq_class& coeff);

  /// Sparse stored vector for i < j.
  const SparseVector& table_entry(std::size_t i, std::size_t j) const { return table_[pair_index(i, j)]; }
  Vector bracket_basis(std::size_t i, std::size_t j) const;
  Vector bracket(const Vector& u, const Vector& v) const;

  bool is_abelian() const;
  std::size_t nonzero_entries() const;

  bool operator==(const LieAlgebra& other) const;

 private:
  std::size_t pair_index(std::size_t i, std::size_t j) const {
    return i * (2 * dim_ - i - 1) / 2 + (j - i - 1);
  }

  Field field_;
  std::size_t dim_;
  std::vector<std::string> labels_;
  std::vector<SparseVector> table_;
};

struct ValidationReport {
  bool ok = true;
  /// 1-based failing triple (i, j, k) when !ok.
  std::size_t i = 0, j = 0, k = 0;
  Vector residual;
  std::string message;
};

/// Recomputes the Jacobi identity on every basis triple.
ValidationReport validate(const LieAlgebra& algebra);

/// A subspace known to be closed under bracketing with the whole algebra.
class IdealSubspace {
 public:
  /// Throws NotAnIdeal unless [L, space] is contained in space.
  static IdealSubspace checked(const LieAlgebra& algebra, Subspace space);
  /// For spaces that are ideals by construction (derived algebra, center, ...).
  static IdealSubspace trusted(Subspace space) { return IdealSubspace(std::move(space)); }

  const Subspace& space() const noexcept { return space_; }
  std::size_t dim() const noexcept { return space_.dim(); }

  bool operator==(const IdealSubspace& o) const { return space_ == o.space_; }

 private:
  explicit IdealSubspace(Subspace s) : space_(std::move(s)) {}
  Subspace space_;
};

/// Linear map between algebras; matrix is target_dim x source_dim.
struct AlgebraMap {
  Matrix matrix;

  Vector operator()(const Vector& v) const { return matrix.apply(v); }
  bool preserves_brackets(const LieAlgebra& source, const LieAlgebra& target) const;
  Subspace kernel() const { return liecap::kernel(matrix); }
  Subspace image() const { return liecap::image(matrix); }
};

bool is_ideal(const LieAlgebra& algebra, const Subspace& space);
/// span{[u, v] : u in a, v in b}
Subspace bracket_span(const LieAlgebra& algebra, const Subspace& a, const Subspace& b);

IdealSubspace derived_subalgebra(const LieAlgebra& algebra);
IdealSubspace center(const LieAlgebra& algebra);
/// Centralizer of a subspace: {x : [x, s] = 0 for all s}.
Subspace centralizer(const LieAlgebra& algebra, const Subspace& s);
/// gamma_1 = L, gamma_{i+1} = [gamma_i, L]; ends with the zero ideal for
/// nilpotent algebras, otherwise with the stable nonzero term.
std::vector<IdealSubspace> lower_central_series(const LieAlgebra& algebra);
std::vector<IdealSubspace> upper_central_series(const LieAlgebra& algebra);
/// Throws NotNilpotent when the lower central series stalls above zero.
std::size_t nilpotency_class(const LieAlgebra& algebra);
bool is_nilpotent(const LieAlgebra& algebra);
std::size_t minimal_generator_count(const LieAlgebra& algebra);

LieAlgebra direct_sum(const LieAlgebra& h, const LieAlgebra& k);

struct Quotient {
  LieAlgebra algebra;
  AlgebraMap projection;
};

/// L/N on the basis given by the non-pivot coordinates of N's RREF.
Quotient quotient(const LieAlgebra& algebra, const Subspace& ideal);
inline Quotient quotient(const LieAlgebra& algebra, const IdealSubspace& ideal) {
  return quotient(algebra, ideal.space());
}

/// Subalgebra on the RREF basis of s. Throws NotAnIdeal (reused for
/// "not closed") when s is not a subalgebra.
LieAlgebra subalgebra(const LieAlgebra& algebra, const Subspace& s);

/// Structure constants in the basis whose i-th vector is row i of `basis`
/// (coordinates in the old basis). The rows must be independent.
LieAlgebra change_basis(const LieAlgebra& algebra, const Matrix& basis);

}  // namespace liecap
