#include "liecap/covers.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace liecap {

std::size_t default_resource_limit() {
  if (const char* env = std::getenv("LIECAP_RESOURCE_LIMIT")) {
    try {
      long v = std::stol(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return 5000;
}

std::vector<Vector> default_lift(const LieAlgebra& algebra) {
  std::vector<Vector> lift;
  for (std::size_t c : derived_subalgebra(algebra).space().non_pivots())
    lift.push_back(unit_vector(algebra.dim(), c));
  return lift;
}

std::size_t cover_free_dim(const LieAlgebra& algebra, std::size_t extra_class) {
  const std::size_t d = minimal_generator_count(algebra);
  const std::size_t c = std::max<std::size_t>(nilpotency_class(algebra), 1) + extra_class;
  std::size_t total = 0;
  for (std::size_t k = 1; k <= c; ++k) total += witt_dimension(d, k);
  return total;
}

Cover exterior_cover(const LieAlgebra& algebra, const CoverOptions& options) {
  const Field& field = algebra.field();
  const std::size_t n = algebra.dim();
  const std::size_t cls = nilpotency_class(algebra);
  const Subspace derived = derived_subalgebra(algebra).space();
  const std::vector<Vector> lift = options.lift ? *options.lift : default_lift(algebra);
  const std::size_t d = lift.size();
  if (d != n - derived.dim())
    throw Error(ErrorKind::WrongDimension, "lift has " + std::to_string(d) + " vectors, need " +
                                               std::to_string(n - derived.dim()));
  {
    EchelonBasis span(field, n);
    for (const auto& v : derived.basis().row_vectors()) span.insert(v);
    for (const auto& v : lift) span.insert(v);
    if (span.dim() != n) throw Error(ErrorKind::WrongDimension, "lift does not generate L modulo L²");
  }

  FreeNilpotent free = free_nilpotent(d, std::max<std::size_t>(cls, 1) + options.extra_class, field,
                                      options.resource_limit);
  const LieAlgebra& f_alg = free.algebra;
  const std::size_t big = f_alg.dim();

  // phi : F -> L, extended multiplicatively along the Hall words.
  std::vector<Vector> phi(big);
  for (std::size_t w = 0; w < big; ++w) {
    const HallWord& word = free.words[w];
    phi[w] = word.is_generator() ? lift[word.generator] : algebra.bracket(phi[word.left], phi[word.right]);
  }

  // Words of degree > cls map into gamma_{cls+1}(L) = 0, so
  // R = ker(phi on the low words) + span(high words), and [R, F] is spanned
  // by [r, x_i] for r in either part. [w, x_i] vanishes once deg w = top.
  const std::size_t top = std::max<std::size_t>(cls, 1) + options.extra_class;
  std::vector<std::size_t> low;
  for (std::size_t w = 0; w < big; ++w)
    if (free.words[w].degree <= cls) low.push_back(w);
  Matrix phi_low(field, n, low.size());
  for (std::size_t a = 0; a < low.size(); ++a) phi_low.set_column(a, phi[low[a]]);
  const Subspace low_relations = kernel(phi_low);
  if (low_relations.dim() != low.size() - n) throw std::logic_error("free presentation is not surjective");

  EchelonBasis rf(field, big);
  for (const auto& coeffs : low_relations.basis().row_vectors()) {
    Vector r = zero_vector(big);
    for (std::size_t a = 0; a < low.size(); ++a) r[low[a]] = coeffs[a];
    for (std::size_t g = 0; g < d; ++g) rf.insert(f_alg.bracket(r, unit_vector(big, g)));
  }
  for (std::size_t w = 0; w < big; ++w) {
    const std::size_t deg = free.words[w].degree;
    if (deg <= cls || deg >= top) continue;
    for (std::size_t g = 0; g < d; ++g) rf.insert(f_alg.bracket_basis(w, g));
  }
  const Subspace rf_space = Subspace::from_echelon(rf);

  // Quotient F/[R,F] on the non-pivot Hall words.
  const auto keep = rf_space.non_pivots();
  const std::size_t m = keep.size();
  std::vector<std::string> labels;
  for (std::size_t w : keep) labels.push_back(f_alg.labels()[w]);
  LieAlgebra star(field, m, std::move(labels));
  std::vector<std::size_t> position(big, HallWord::kNone);
  for (std::size_t a = 0; a < m; ++a) position[keep[a]] = a;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      if (f_alg.table_entry(keep[a], keep[b]).empty()) continue;
      Vector r = rf_space.reduce(f_alg.bracket_basis(keep[a], keep[b]));
      Vector coords(m);
      for (std::size_t t = 0; t < m; ++t) coords[t] = r[keep[t]];
      star.set_bracket(a, b, coords);
    }

  Matrix pi(field, n, m);
  for (std::size_t a = 0; a < m; ++a) pi.set_column(a, phi[keep[a]]);
  AlgebraMap pi_map{std::move(pi)};

  Subspace mult = pi_map.kernel();
  if (m != n + mult.dim()) throw std::logic_error("cover projection is not surjective");
  if (!center(star).space().contains(mult)) throw std::logic_error("ker pi is not central in the cover");
  Cover cover{std::move(star), std::move(pi_map), IdealSubspace::trusted(std::move(mult)),
              IdealSubspace::trusted(Subspace::zero(field, m)), big};
  cover.derived_part = derived_subalgebra(cover.star);
  return cover;
}

LieAlgebra exterior_square(const Cover& cover) {
  return subalgebra(cover.star, cover.derived_part.space());
}

LieAlgebra exterior_square(const LieAlgebra& algebra) { return exterior_square(exterior_cover(algebra)); }

IdealSubspace exterior_center(const LieAlgebra& algebra, const Cover& cover) {
  EchelonBasis image(algebra.field(), algebra.dim());
  const IdealSubspace star_center = center(cover.star);
  for (const auto& z : star_center.space().basis().row_vectors()) image.insert(cover.pi(z));
  return IdealSubspace::trusted(Subspace::from_echelon(image));
}

IdealSubspace exterior_center(const LieAlgebra& algebra) {
  return exterior_center(algebra, exterior_cover(algebra));
}

std::size_t diagonal_square_dim(const LieAlgebra& algebra) {
  const std::size_t ab = algebra.dim() - derived_subalgebra(algebra).dim();
  return ab * (ab + 1) / 2;
}

LieAlgebra tensor_square(const LieAlgebra& algebra) {
  LieAlgebra wedge = exterior_square(algebra);
  return direct_sum(wedge, LieAlgebra::abelian(algebra.field(), diagonal_square_dim(algebra)));
}

}  // namespace liecap
