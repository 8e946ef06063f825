#include "liecap/capability.hpp"

#include "liecap/homology.hpp"

namespace liecap {

CapabilityReport is_capable(const LieAlgebra& algebra) {
  IdealSubspace zw = exterior_center(algebra);
  CapabilityReport r;
  r.exterior_center_dim = zw.dim();
  r.capable = zw.dim() == 0;
  r.witnesses = zw.space().basis().row_vectors();
  return r;
}

namespace {

void require_central_line(const LieAlgebra& algebra, const Subspace& line) {
  if (line.ambient_dim() != algebra.dim()) throw Error(ErrorKind::DimensionMismatch, "ideal ambient");
  if (line.dim() != 1) throw Error(ErrorKind::WrongDimension, "expected a one-dimensional ideal");
  if (!center(algebra).space().contains(line)) throw Error(ErrorKind::NotCentral, "ideal is not central");
}

}  // namespace

bool dagger_test(const LieAlgebra& algebra, const Subspace& line) {
  require_central_line(algebra, line);
  const std::size_t m_l = multiplier_dim(algebra);
  const std::size_t m_q = multiplier_dim(quotient(algebra, line).algebra);
  const std::size_t meet = intersect(derived_subalgebra(algebra).space(), line).dim();
  return m_q >= meet && m_l == m_q - meet;
}

bool multiplier_map_injective(const LieAlgebra& algebra, const Subspace& central_ideal) {
  Matrix induced = induced_multiplier_map(algebra, central_ideal);
  return rank(induced) == induced.cols();
}

std::vector<Subspace> central_test_lines(const LieAlgebra& algebra) {
  const Subspace z = center(algebra).space();
  const Field& f = algebra.field();
  const std::size_t n = algebra.dim();
  std::vector<Vector> generators = z.basis().row_vectors();
  for (std::size_t a = 0; a < z.dim(); ++a)
    for (std::size_t b = a + 1; b < z.dim(); ++b) {
      Vector v = z.basis_vector(a);
      for (std::size_t i = 0; i < n; ++i) v[i] = f.add(v[i], z.basis_vector(b)[i]);
      generators.push_back(std::move(v));
    }
  if (z.dim() > 2) {
    Vector all = zero_vector(n);
    for (const auto& row : z.basis().row_vectors())
      for (std::size_t i = 0; i < n; ++i) all[i] = f.add(all[i], row[i]);
    generators.push_back(std::move(all));
  }
  std::vector<Subspace> lines;
  for (const auto& g : generators) lines.push_back(Subspace::span(f, n, {g}));
  return lines;
}

std::vector<CatalogKey> noncapable_census(std::size_t max_dim, const std::vector<mpq_class>& samples) {
  if (max_dim > 6) throw Error(ErrorKind::UnsupportedDimension, "census is limited to dimension <= 6");
  std::vector<CatalogKey> out;
  for (const auto& key : all_keys(max_dim, samples))
    if (!is_capable(build(key).algebra).capable) out.push_back(key);
  return out;
}

std::vector<SquareCapabilityRow> exterior_square_capability_sweep(std::size_t min_dim, std::size_t max_dim,
                                                                  const std::vector<mpq_class>& samples) {
  if (max_dim > 6) throw Error(ErrorKind::UnsupportedDimension, "sweep is limited to dimension <= 6");
  std::vector<SquareCapabilityRow> rows;
  for (std::size_t d = std::max<std::size_t>(min_dim, 1); d <= max_dim; ++d)
    for (const auto& key : list_keys(d, samples)) {
      LieAlgebra l = build(key).algebra;
      if (l.is_abelian()) continue;
      LieAlgebra w = exterior_square(l);
      std::size_t zdim = exterior_center(w).dim();
      rows.push_back({key, recognize(w).label(), zdim, zdim == 0});
    }
  return rows;
}

SubalgebraBoundReport theorem2_bound_check(const LieAlgebra& algebra) {
  if (algebra.dim() < 3 || algebra.is_abelian())
    throw Error(ErrorKind::SkippedHypothesisFailed, "needs a nonabelian algebra of dimension >= 3");
  const Subspace derived = derived_subalgebra(algebra).space();
  const Subspace zw = exterior_center(algebra).space();
  if (!derived.contains(zw))
    throw Error(ErrorKind::SkippedHypothesisFailed, "exterior center is not inside L²");

  // L²/Z∧(L), with Z∧(L) written in the coordinates of L²'s RREF basis.
  LieAlgebra d_alg = subalgebra(algebra, derived);
  std::vector<Vector> coords;
  for (const auto& v : zw.basis().row_vectors()) coords.push_back(derived.coordinates(v));
  Subspace zw_in_d = Subspace::span(algebra.field(), derived.dim(), coords);
  if (!is_capable(quotient(d_alg, zw_in_d).algebra).capable)
    throw Error(ErrorKind::SkippedHypothesisFailed, "L²/Z∧(L) is not capable");

  SubalgebraBoundReport r;
  r.wedge_exterior_center_dim = exterior_center(exterior_square(algebra)).dim();
  r.quotient_multiplier_dim = multiplier_dim(quotient(algebra, zw).algebra);
  r.holds = r.wedge_exterior_center_dim <= r.quotient_multiplier_dim;
  return r;
}

}  // namespace liecap
