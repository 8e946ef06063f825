#include "liecap/homology.hpp"

#include <algorithm>

namespace liecap {

ExteriorBasis::ExteriorBasis(std::size_t n) : n_(n) {
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      pairs_.push_back({i, j});
      for (std::size_t k = j + 1; k < n; ++k) triples_.push_back({i, j, k});
    }
  std::sort(triples_.begin(), triples_.end());
}

std::size_t ExteriorBasis::pair_index(std::size_t i, std::size_t j) const {
  return i * (2 * n_ - i - 1) / 2 + (j - i - 1);
}

Vector ExteriorBasis::wedge(const Field& field, const Vector& a, const Vector& b) const {
  Vector out = zero_vector(pairs_.size());
  for (std::size_t i = 0; i < n_; ++i) {
    if (sgn(a[i]) == 0 && sgn(b[i]) == 0) continue;
    for (std::size_t j = i + 1; j < n_; ++j) {
      mpq_class c = a[i] * b[j] - a[j] * b[i];
      if (sgn(c) == 0) continue;
      field.reduce(c);
      out[pair_index(i, j)] = c;
    }
  }
  return out;
}

Matrix ce_d2(const LieAlgebra& algebra) {
  const std::size_t n = algebra.dim();
  ExteriorBasis ext(n);
  Matrix d2(algebra.field(), n, ext.pairs().size());
  for (std::size_t p = 0; p < ext.pairs().size(); ++p) {
    auto [i, j] = ext.pairs()[p];
    for (const auto& [k, c] : algebra.table_entry(i, j)) d2(k, p) = c;
  }
  return d2;
}

Matrix ce_d3(const LieAlgebra& algebra) {
  const std::size_t n = algebra.dim();
  const Field& f = algebra.field();
  ExteriorBasis ext(n);
  Matrix d3(f, ext.pairs().size(), ext.triples().size());
  // Adds coeff * (e_k ^ e_z) to column t.
  auto add_wedge = [&](std::size_t t, std::size_t k, std::size_t z, const mpq_class& coeff) {
    if (k == z) return;
    std::size_t row = k < z ? ext.pair_index(k, z) : ext.pair_index(z, k);
    d3(row, t) = k < z ? f.add(d3(row, t), coeff) : f.sub(d3(row, t), coeff);
  };
  for (std::size_t t = 0; t < ext.triples().size(); ++t) {
    auto [x, y, z] = ext.triples()[t];
    for (const auto& [k, c] : algebra.table_entry(x, y)) add_wedge(t, k, z, c);
    for (const auto& [k, c] : algebra.table_entry(x, z)) add_wedge(t, k, y, f.neg(c));
    for (const auto& [k, c] : algebra.table_entry(y, z)) add_wedge(t, k, x, c);
  }
  return d3;
}

MultiplierResult schur_multiplier(const LieAlgebra& algebra) {
  MultiplierResult r{0, {}, kernel(ce_d2(algebra)), image(ce_d3(algebra))};
  QuotientCoords coords(r.boundaries, r.cycles);
  r.dim = coords.dim();
  r.basis = coords.complement();
  return r;
}

std::size_t multiplier_dim(const LieAlgebra& algebra) {
  const std::size_t pairs = algebra.dim() < 2 ? 0 : algebra.dim() * (algebra.dim() - 1) / 2;
  return pairs - rank(ce_d2(algebra)) - rank(ce_d3(algebra));
}

Matrix induced_multiplier_map(const LieAlgebra& algebra, const Subspace& central_ideal) {
  if (!center(algebra).space().contains(central_ideal))
    throw Error(ErrorKind::NotCentral, "ideal is not contained in the center");
  const Field& f = algebra.field();
  auto source = schur_multiplier(algebra);
  auto q = quotient(algebra, central_ideal);
  auto target = schur_multiplier(q.algebra);
  QuotientCoords target_coords(target.boundaries, target.cycles);

  const std::size_t n = algebra.dim();
  ExteriorBasis ext(n), ext_q(q.algebra.dim());
  std::vector<Vector> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(q.projection(unit_vector(n, i)));

  Matrix out(f, target.dim, source.dim);
  for (std::size_t s = 0; s < source.dim; ++s) {
    Vector w = zero_vector(ext_q.pairs().size());
    const Vector& v = source.basis[s];
    for (std::size_t p = 0; p < v.size(); ++p) {
      if (sgn(v[p]) == 0) continue;
      auto [i, j] = ext.pairs()[p];
      Vector term = ext_q.wedge(f, images[i], images[j]);
      for (std::size_t t = 0; t < term.size(); ++t)
        if (sgn(term[t]) != 0) w[t] = f.add(w[t], f.mul(v[p], term[t]));
    }
    out.set_column(s, target_coords(w));
  }
  return out;
}

namespace {

std::size_t exterior_dim_via_multiplier(const LieAlgebra& l) {
  return multiplier_dim(l) + derived_subalgebra(l).dim();
}

}  // namespace

std::size_t kunneth_exterior_dim(const LieAlgebra& h, const LieAlgebra& k) {
  const std::size_t ab_h = h.dim() - derived_subalgebra(h).dim();
  const std::size_t ab_k = k.dim() - derived_subalgebra(k).dim();
  return exterior_dim_via_multiplier(h) + exterior_dim_via_multiplier(k) + ab_h * ab_k;
}

std::size_t kunneth_tensor_dim(const LieAlgebra& h, const LieAlgebra& k) {
  auto tensor_dim = [](const LieAlgebra& l) {
    const std::size_t ab = l.dim() - derived_subalgebra(l).dim();
    return exterior_dim_via_multiplier(l) + ab * (ab + 1) / 2;
  };
  const std::size_t ab_h = h.dim() - derived_subalgebra(h).dim();
  const std::size_t ab_k = k.dim() - derived_subalgebra(k).dim();
  return tensor_dim(h) + tensor_dim(k) + 2 * ab_h * ab_k;
}

}  // namespace liecap
