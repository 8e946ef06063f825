#pragma once

#include <optional>
#include <vector>

#include "liecap/hall.hpp"
#include "liecap/lie_algebra.hpp"

namespace liecap {

/// Basis-word cap for free nilpotent algebras: LIECAP_RESOURCE_LIMIT when
/// set, otherwise 5000.
std::size_t default_resource_limit();

/// L* = F/[R,F] for a free presentation 0 -> R -> F -> L -> 0 built from a
/// minimal generating set of L.
struct Cover {
  LieAlgebra star;
  AlgebraMap pi;                  // star -> L
  IdealSubspace multiplier_part;  // (R ∩ F²)/[R,F] = ker pi
  IdealSubspace derived_part;     // F²/[R,F], which realizes L ∧ L
  std::size_t free_dim = 0;       // dim F(d, class + extra)
};

struct CoverOptions {
  /// The free algebra has class nilpotency_class(L) + extra_class. Any value
  /// >= 1 gives the same cover.
  std::size_t extra_class = 1;
  /// Images of the free generators; defaults to the unit vectors on the
  /// non-pivot coordinates of L²'s RREF. Must generate L modulo L².
  std::optional<std::vector<Vector>> lift;
  std::size_t resource_limit = default_resource_limit();
};

/// Default lift: unit vectors complementing L² in label order.
std::vector<Vector> default_lift(const LieAlgebra& algebra);

/// dim F(d, class + extra_class) for the minimal generator count d; the
/// number of Hall words exterior_cover has to build.
std::size_t cover_free_dim(const LieAlgebra& algebra, std::size_t extra_class = 1);

Cover exterior_cover(const LieAlgebra& algebra, const CoverOptions& options = {});

/// L ∧ L as a standalone algebra (dim M(L) + dim L²).
LieAlgebra exterior_square(const LieAlgebra& algebra);
LieAlgebra exterior_square(const Cover& cover);

/// Z∧(L) = pi(Z(L*)).
IdealSubspace exterior_center(const LieAlgebra& algebra);
IdealSubspace exterior_center(const LieAlgebra& algebra, const Cover& cover);

/// (n - m)(n - m + 1)/2 with n = dim L, m = dim L².
std::size_t diagonal_square_dim(const LieAlgebra& algebra);

/// L ⊗ L = (L ∧ L) ⊕ A(dim L □ L).
LieAlgebra tensor_square(const LieAlgebra& algebra);

}  // namespace liecap
