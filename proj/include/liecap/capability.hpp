#pragma once

#include <string>
#include <vector>

#include "liecap/catalog.hpp"
#include "liecap/covers.hpp"
#include "liecap/recognize.hpp"

namespace liecap {

struct CapabilityReport {
  std::size_t exterior_center_dim = 0;
  bool capable = false;
  /// Basis of Z∧(L); empty exactly when L is capable.
  std::vector<Vector> witnesses;
};

/// L is capable iff Z∧(L) = 0.
CapabilityReport is_capable(const LieAlgebra& algebra);

/// dim M(L) = dim M(L/K) - dim(L² ∩ K) for a one-dimensional central K.
/// Throws WrongDimension, NotCentral.
bool dagger_test(const LieAlgebra& algebra, const Subspace& line);

/// M(L) -> M(L/K) is a monomorphism.
bool multiplier_map_injective(const LieAlgebra& algebra, const Subspace& central_ideal);

/// One-dimensional central ideals spanned by the RREF basis of Z(L), all
/// pairwise sums and the total sum.
std::vector<Subspace> central_test_lines(const LieAlgebra& algebra);

/// Catalog keys of dimension <= max_dim (<= 6) whose algebras are not capable.
std::vector<CatalogKey> noncapable_census(std::size_t max_dim,
                                          const std::vector<mpq_class>& samples = default_epsilon_samples());

struct SquareCapabilityRow {
  CatalogKey key;
  std::string wedge_label;
  std::size_t wedge_exterior_center_dim = 0;
  bool capable = false;
};

/// For every nonabelian catalog entry in [min_dim, max_dim]: Z∧(L ∧ L).
std::vector<SquareCapabilityRow> exterior_square_capability_sweep(
    std::size_t min_dim, std::size_t max_dim, const std::vector<mpq_class>& samples = default_epsilon_samples());

struct SubalgebraBoundReport {
  std::size_t wedge_exterior_center_dim = 0;  // dim Z∧(L ∧ L)
  std::size_t quotient_multiplier_dim = 0;    // dim M(L / Z∧(L))
  bool holds = false;
};

/// dim Z∧(L ∧ L) <= dim M(L / Z∧(L)) for nonabelian nilpotent L of dim >= 3
/// with L²/Z∧(L) capable. Throws SkippedHypothesisFailed when the hypothesis
/// is unmet.
SubalgebraBoundReport theorem2_bound_check(const LieAlgebra& algebra);

}  // namespace liecap
