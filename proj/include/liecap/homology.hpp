#pragma once

#include <array>
#include <vector>

#include "liecap/lie_algebra.hpp"

namespace liecap {

/// Lexicographic coordinates on the exterior powers of an n-dimensional space.
class ExteriorBasis {
 public:
  explicit ExteriorBasis(std::size_t n);

  std::size_t n() const noexcept { return n_; }
  const std::vector<std::array<std::size_t, 2>>& pairs() const noexcept { return pairs_; }
  const std::vector<std::array<std::size_t, 3>>& triples() const noexcept { return triples_; }
  std::size_t pair_index(std::size_t i, std::size_t j) const;  // i < j

  /// a ^ b in pair coordinates.
  Vector wedge(const Field& field, const Vector& a, const Vector& b) const;

 private:
  std::size_t n_;
  std::vector<std::array<std::size_t, 2>> pairs_;
  std::vector<std::array<std::size_t, 3>> triples_;
};

/// d2 : Λ²L -> L, e_i ^ e_j |-> [e_i, e_j]; an n x C(n,2) matrix.
Matrix ce_d2(const LieAlgebra& algebra);
/// d3 : Λ³L -> Λ²L, x^y^z |-> [x,y]^z - [x,z]^y + [y,z]^x.
Matrix ce_d3(const LieAlgebra& algebra);

/// H_2(L) = ker d2 / im d3 with a chosen complement of im d3 in ker d2.
struct MultiplierResult {
  std::size_t dim = 0;
  /// Representatives in Λ²L coordinates, chosen by pivoting in pair order.
  std::vector<Vector> basis;
  Subspace cycles;      // ker d2
  Subspace boundaries;  // im d3
};

MultiplierResult schur_multiplier(const LieAlgebra& algebra);
std::size_t multiplier_dim(const LieAlgebra& algebra);

/// Matrix (dim M(L/N) x dim M(L)) of M(L) -> M(L/N) induced by the
/// projection. Throws NotCentral unless N lies in Z(L).
Matrix induced_multiplier_map(const LieAlgebra& algebra, const Subspace& central_ideal);

/// dim(H^H) + dim(K^K) + dim(H/H²)·dim(K/K²), each exterior square measured
/// through dim M + dim L².
std::size_t kunneth_exterior_dim(const LieAlgebra& h, const LieAlgebra& k);
/// dim(H⊗H) + dim(K⊗K) + 2·dim(H/H²)·dim(K/K²).
std::size_t kunneth_tensor_dim(const LieAlgebra& h, const LieAlgebra& k);

}  // namespace liecap
