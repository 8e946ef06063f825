#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liecap/lie_algebra.hpp"

namespace liecap {

/// Isomorphism invariants used to tell apart algebras outside the
/// recognized families.
struct Fingerprint {
  std::size_t dim = 0;
  std::size_t derived_dim = 0;
  std::size_t center_dim = 0;
  std::size_t nilpotency_class = 0;  // 0 also for non-nilpotent input
  bool nilpotent = true;
  std::vector<std::size_t> lower_central;  // dims of gamma_1, gamma_2, ...
  std::vector<std::size_t> upper_central;  // dims of zeta_0, zeta_1, ...
  std::size_t derived_center_dim = 0;      // dim L² ∩ Z(L)
  std::vector<std::size_t> centralizers;   // dim C_L(gamma_i) along the lower central series
  std::size_t multiplier_dim = 0;

  std::string to_string() const;
  bool operator==(const Fingerprint&) const = default;
};

Fingerprint fingerprint(const LieAlgebra& algebra);

struct IsoType {
  enum class Kind { Abelian, HeisenbergSum, L58Sum, Unrecognized };

  Kind kind = Kind::Unrecognized;
  std::size_t m = 0;  // HeisenbergSum only
  std::size_t k = 0;  // abelian summand (total dim for Abelian)
  std::optional<Fingerprint> fingerprint;  // Unrecognized only
  /// Rows are the new basis (old coordinates) exhibiting the decomposition;
  /// empty for Unrecognized.
  std::optional<Matrix> witness;

  /// A(6), H(1)+A(3), L5_8+A(1), UNRECOGNIZED[...]
  std::string label() const;
  bool operator==(const IsoType& o) const { return label() == o.label(); }
};

/// Model algebra for a label: A(k), H(m) ⊕ A(k), L5,8 ⊕ A(k).
LieAlgebra model_algebra(const IsoType& type, Field field);

IsoType recognize(const LieAlgebra& algebra);

struct HeisenbergDecomposition {
  std::size_t m = 0;
  std::size_t k = 0;
  /// Basis x1, y1, ..., xm, ym, z, a1, ..., ak with [x_i, y_i] = z.
  Matrix basis;
};

/// L ≅ H(m) ⊕ A(n - 2m - 1) when dim L² = 1 and L² is central.
/// Throws NotApplicable otherwise.
HeisenbergDecomposition heisenberg_decomposition(const LieAlgebra& algebra);

}  // namespace liecap
