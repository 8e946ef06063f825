#include "liecap/recognize.hpp"

#include <sstream>
#include <stdexcept>

#include "liecap/catalog.hpp"
#include "liecap/homology.hpp"

namespace liecap {

namespace {

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "/" : "") + std::to_string(v[i]);
  return s;
}

// Returns the basis witness if change_basis(L, basis) reproduces model exactly.
std::optional<Matrix> confirm(const LieAlgebra& algebra, const Matrix& basis, const LieAlgebra& model) {
  if (rank(basis) != algebra.dim()) return std::nullopt;
  if (change_basis(algebra, basis) == model) return basis;
  return std::nullopt;
}

std::optional<IsoType> try_l58(const LieAlgebra& algebra, const Subspace& derived, const Subspace& z) {
  const std::size_t n = algebra.dim();
  const Field& f = algebra.field();
  if (derived.dim() != 2 || !z.contains(derived) || n < 5 || n - z.dim() != 3) return std::nullopt;

  std::vector<Vector> w;
  for (std::size_t c : z.non_pivots()) w.push_back(unit_vector(n, c));
  for (std::size_t lead = 0; lead < 3; ++lead) {
    const Vector& x1 = w[lead];
    Vector y2 = w[(lead + 1) % 3], y3 = w[(lead + 2) % 3];
    Vector x4 = algebra.bracket(x1, y2), x5 = algebra.bracket(x1, y3);
    Subspace image = Subspace::span(f, n, {x4, x5});
    if (image.dim() != 2) continue;
    // [y2, y3] = a x4 + b x5; shift y2 -= b x1, y3 += a x1 to kill it.
    Vector r = algebra.bracket(y2, y3);
    Vector coords;
    {
      // Solve via coordinates in the echelon basis of span{x4, x5}.
      Matrix m = Matrix::from_rows(f, n, {x4, x5});
      Matrix t = m.transpose();  // n x 2
      std::vector<Vector> aug;
      for (std::size_t i = 0; i < n; ++i) aug.push_back({t(i, 0), t(i, 1), r[i]});
      auto red = rref(Matrix::from_rows(f, 3, aug));
      if (red.rank != 2 || red.pivots[1] != 1) continue;
      coords = {red.reduced(0, 2), red.reduced(1, 2)};
    }
    for (std::size_t i = 0; i < n; ++i) {
      y2[i] = f.sub(y2[i], f.mul(coords[1], x1[i]));
      y3[i] = f.add(y3[i], f.mul(coords[0], x1[i]));
    }
    std::vector<Vector> rows{x1, y2, y3, x4, x5};
    EchelonBasis used(f, n);
    for (const auto& v : {x4, x5}) used.insert(v);
    for (const auto& zv : z.basis().row_vectors())
      if (used.insert(zv)) rows.push_back(zv);
    IsoType type{IsoType::Kind::L58Sum, 0, n - 5, std::nullopt, std::nullopt};
    if (auto witness = confirm(algebra, Matrix::from_rows(f, n, rows), model_algebra(type, f))) {
      type.witness = std::move(witness);
      return type;
    }
  }
  return std::nullopt;
}

}  // namespace

std::string Fingerprint::to_string() const {
  std::ostringstream out;
  out << "n=" << dim << ",L2=" << derived_dim << ",Z=" << center_dim << ",cls="
      << (nilpotent ? std::to_string(nilpotency_class) : "inf") << ",lcs=" << join(lower_central)
      << ",ucs=" << join(upper_central) << ",L2nZ=" << derived_center_dim << ",cent=" << join(centralizers)
      << ",M=" << multiplier_dim;
  return out.str();
}

Fingerprint fingerprint(const LieAlgebra& algebra) {
  Fingerprint fp;
  fp.dim = algebra.dim();
  const Subspace derived = derived_subalgebra(algebra).space();
  const Subspace z = center(algebra).space();
  fp.derived_dim = derived.dim();
  fp.center_dim = z.dim();
  auto lcs = lower_central_series(algebra);
  fp.nilpotent = lcs.back().space().is_zero();
  fp.nilpotency_class = fp.nilpotent ? lcs.size() - 1 : 0;
  for (const auto& term : lcs) {
    fp.lower_central.push_back(term.dim());
    fp.centralizers.push_back(centralizer(algebra, term.space()).dim());
  }
  for (const auto& term : upper_central_series(algebra)) fp.upper_central.push_back(term.dim());
  fp.derived_center_dim = intersect(derived, z).dim();
  fp.multiplier_dim = multiplier_dim(algebra);
  return fp;
}

std::string IsoType::label() const {
  auto abelian_suffix = [&] { return k == 0 ? std::string() : "+A(" + std::to_string(k) + ")"; };
  switch (kind) {
    case Kind::Abelian: return "A(" + std::to_string(k) + ")";
    case Kind::HeisenbergSum: return "H(" + std::to_string(m) + ")" + abelian_suffix();
    case Kind::L58Sum: return "L5_8" + abelian_suffix();
    case Kind::Unrecognized: return "UNRECOGNIZED[" + (fingerprint ? fingerprint->to_string() : "") + "]";
  }
  return "?";
}

LieAlgebra model_algebra(const IsoType& type, Field field) {
  switch (type.kind) {
    case IsoType::Kind::Abelian: return LieAlgebra::abelian(field, type.k);
    case IsoType::Kind::HeisenbergSum:
      return direct_sum(build(CatalogKey::heisenberg(type.m), field).algebra, LieAlgebra::abelian(field, type.k));
    case IsoType::Kind::L58Sum:
      return direct_sum(build(CatalogKey::indexed(5, 8), field).algebra, LieAlgebra::abelian(field, type.k));
    case IsoType::Kind::Unrecognized: break;
  }
  throw Error(ErrorKind::NotApplicable, "no model for " + type.label());
}

HeisenbergDecomposition heisenberg_decomposition(const LieAlgebra& algebra) {
  const std::size_t n = algebra.dim();
  const Field& f = algebra.field();
  const Subspace derived = derived_subalgebra(algebra).space();
  if (derived.dim() != 1) throw Error(ErrorKind::NotApplicable, "dim L² = " + std::to_string(derived.dim()));
  const Vector& z = derived.basis_vector(0);
  const std::size_t p = derived.pivots()[0];  // z[p] == 1
  for (std::size_t i = 0; i < n; ++i)
    if (!is_zero(algebra.bracket(unit_vector(n, i), z)))
      throw Error(ErrorKind::NotApplicable, "L² is not central");

  auto form = [&](const Vector& a, const Vector& b) { return algebra.bracket(a, b)[p]; };
  std::vector<Vector> pool;
  for (std::size_t c : derived.non_pivots()) pool.push_back(unit_vector(n, c));

  std::vector<Vector> rows;
  std::vector<Vector> symplectic;
  while (true) {
    std::size_t ui = pool.size(), wi = pool.size();
    for (std::size_t a = 0; a < pool.size() && ui == pool.size(); ++a)
      for (std::size_t b = a + 1; b < pool.size(); ++b)
        if (sgn(form(pool[a], pool[b])) != 0) {
          ui = a;
          wi = b;
          break;
        }
    if (ui == pool.size()) break;
    Vector u = pool[ui], w = pool[wi];
    mpq_class scale = f.inv(form(u, w));
    for (auto& x : w) x = f.mul(x, scale);
    std::vector<Vector> rest;
    for (std::size_t t = 0; t < pool.size(); ++t) {
      if (t == ui || t == wi) continue;
      Vector v = pool[t];
      mpq_class bw = form(v, w), bu = form(v, u);
      for (std::size_t i = 0; i < n; ++i) {
        f.sub_mul(v[i], bw, u[i]);
        v[i] = f.add(v[i], f.mul(bu, w[i]));
      }
      rest.push_back(std::move(v));
    }
    symplectic.push_back(std::move(u));
    symplectic.push_back(std::move(w));
    pool = std::move(rest);
  }
  rows = symplectic;
  rows.push_back(z);
  for (auto& v : pool) rows.push_back(std::move(v));
  HeisenbergDecomposition out{symplectic.size() / 2, pool.size(), Matrix::from_rows(f, n, std::move(rows))};
  IsoType type{IsoType::Kind::HeisenbergSum, out.m, out.k, std::nullopt, std::nullopt};
  if (out.m == 0 || !confirm(algebra, out.basis, model_algebra(type, f)))
    throw std::logic_error("symplectic reduction did not reproduce H(m) + A(k)");
  return out;
}

IsoType recognize(const LieAlgebra& algebra) {
  const Field& f = algebra.field();
  if (algebra.is_abelian()) {
    IsoType t{IsoType::Kind::Abelian, 0, algebra.dim(), std::nullopt, std::nullopt};
    t.witness = Matrix::identity(f, algebra.dim());
    return t;
  }
  const Subspace derived = derived_subalgebra(algebra).space();
  const Subspace z = center(algebra).space();
  if (derived.dim() == 1 && z.contains(derived)) {
    auto h = heisenberg_decomposition(algebra);
    IsoType t{IsoType::Kind::HeisenbergSum, h.m, h.k, std::nullopt, std::move(h.basis)};
    return t;
  }
  if (auto l58 = try_l58(algebra, derived, z)) return *l58;
  return IsoType{IsoType::Kind::Unrecognized, 0, 0, fingerprint(algebra), std::nullopt};
}

}  // namespace liecap
