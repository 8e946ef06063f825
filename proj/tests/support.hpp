#pragma once

// Independent oracles and random generators shared by the test binaries.
// The oracles avoid the free-algebra machinery: they work directly with the
// presentation L∧L = Λ²L / im d3 and with fraction-free elimination.

#include <gmpxx.h>

#include <random>
#include <vector>

#include "liecap/capability.hpp"
#include "liecap/catalog.hpp"
#include "liecap/covers.hpp"
#include "liecap/homology.hpp"
#include "liecap/recognize.hpp"

namespace testsupport {

using namespace liecap;

inline std::vector<CatalogEntry> catalog(std::size_t max_dim = 6, Field field = Field::rationals()) {
  std::vector<CatalogEntry> out;
  for (const auto& key : all_keys(max_dim)) out.push_back(build(key, field));
  return out;
}

// Rank of an integer matrix by Bareiss elimination over Z.
inline std::size_t bareiss_rank(std::vector<std::vector<mpz_class>> a) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::size_t r = 0;
  mpz_class prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) a[i][j] = (a[i][j] * a[r][c] - a[i][c] * a[r][j]) / prev;
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

// Same, with every entry reduced mod p first (plain long arithmetic).
inline std::size_t modular_rank(const std::vector<std::vector<long>>& m, long p) {
  auto a = m;
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  auto mod = [p](long x) { return ((x % p) + p) % p; };
  auto inv = [&](long x) {
    long r = 1, b = mod(x), e = p - 2;
    for (; e; e >>= 1, b = b * b % p)
      if (e & 1) r = r * b % p;
    return r;
  };
  for (auto& row : a)
    for (auto& x : row) x = mod(x);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    long s = inv(a[r][c]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      long f = a[i][c] * s % p;
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = mod(a[i][j] - f * a[r][j]);
    }
    ++r;
  }
  return r;
}

// Λ²L / im d3 with (a∧b, c∧d) ↦ [a,b]∧[c,d].
struct Presented {
  ExteriorBasis ext;
  QuotientCoords coords;
  LieAlgebra algebra;
};

inline Presented presented_wedge(const LieAlgebra& L) {
  const Field& f = L.field();
  ExteriorBasis ext(L.dim());
  const std::size_t np = ext.pairs().size();
  QuotientCoords q(image(ce_d3(L)), Subspace::full(f, np));
  LieAlgebra W(f, q.dim());
  const auto& reps = q.complement();
  for (std::size_t a = 0; a < reps.size(); ++a)
    for (std::size_t b = a + 1; b < reps.size(); ++b) {
      Vector acc = zero_vector(np);
      for (std::size_t p = 0; p < np; ++p) {
        if (sgn(reps[a][p]) == 0) continue;
        for (std::size_t r = 0; r < np; ++r) {
          if (sgn(reps[b][r]) == 0) continue;
          auto [i, j] = ext.pairs()[p];
          auto [k, l] = ext.pairs()[r];
          Vector t = ext.wedge(f, L.bracket_basis(i, j), L.bracket_basis(k, l));
          const mpq_class c = f.mul(reps[a][p], reps[b][r]);
          for (std::size_t s = 0; s < np; ++s) acc[s] = f.add(acc[s], f.mul(c, t[s]));
        }
      }
      W.set_bracket(a, b, q(acc));
    }
  return {std::move(ext), std::move(q), std::move(W)};
}

// Z∧(L) = {l : l∧x ∈ im d3 for all x}, read off the presentation.
inline Subspace presented_exterior_center(const LieAlgebra& L) {
  const Field& f = L.field();
  const std::size_t n = L.dim();
  Presented P = presented_wedge(L);
  const std::size_t qd = P.coords.dim();
  Matrix m(f, n * qd, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector c = P.coords(P.ext.wedge(f, unit_vector(n, i), unit_vector(n, j)));
      for (std::size_t t = 0; t < qd; ++t) m(j * qd + t, i) = c[t];
    }
  return kernel(m);
}

inline mpq_class random_scalar(const Field& f, std::mt19937& rng, long lo = -3, long hi = 3) {
  std::uniform_int_distribution<long> d(lo, hi);
  return f.from_int(d(rng));
}

inline Matrix random_invertible(const Field& f, std::size_t n, std::mt19937& rng) {
  for (;;) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = random_scalar(f, rng);
    if (rank(m) == n) return m;
  }
}

// Random permutation followed by a random unit upper-triangular change.
inline Matrix random_relabeling(const Field& f, std::size_t n, std::mt19937& rng) {
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  Matrix upper = Matrix::identity(f, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) upper(i, j) = random_scalar(f, rng);
  Matrix p(f, n, n);
  for (std::size_t i = 0; i < n; ++i) p(i, perm[i]) = 1;
  return upper * p;
}

// Central extension of L by `extra` new basis vectors using random 2-cocycles
// (functionals on Λ²L that vanish on im d3).
inline LieAlgebra random_central_extension(const LieAlgebra& L, std::size_t extra, std::mt19937& rng) {
  const Field& f = L.field();
  const std::size_t n = L.dim();
  ExteriorBasis ext(n);
  const Subspace cocycles = kernel(ce_d3(L).transpose());
  LieAlgebra E(f, n + extra);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector out = L.bracket_basis(i, j);
      out.resize(n + extra, mpq_class(0));
      E.set_bracket(i, j, out);
    }
  for (std::size_t z = 0; z < extra; ++z) {
    Vector phi = zero_vector(ext.pairs().size());
    for (std::size_t b = 0; b < cocycles.dim(); ++b) {
      const mpq_class c = random_scalar(f, rng);
      for (std::size_t s = 0; s < phi.size(); ++s) phi[s] = f.add(phi[s], f.mul(c, cocycles.basis_vector(b)[s]));
    }
    for (std::size_t p = 0; p < phi.size(); ++p)
      if (sgn(phi[p]) != 0) E.add_bracket_term(ext.pairs()[p][0], ext.pairs()[p][1], n + z, phi[p]);
  }
  return E;
}

// Random alternative generating set: an invertible mix of the default lift
// plus random elements of L².
inline std::vector<Vector> random_lift(const LieAlgebra& L, std::mt19937& rng) {
  const Field& f = L.field();
  const auto base = default_lift(L);
  const Subspace derived = derived_subalgebra(L).space();
  const Matrix mix = random_invertible(f, base.size(), rng);
  std::vector<Vector> lift;
  for (std::size_t i = 0; i < base.size(); ++i) {
    Vector v = zero_vector(L.dim());
    for (std::size_t j = 0; j < base.size(); ++j)
      for (std::size_t t = 0; t < v.size(); ++t) v[t] = f.add(v[t], f.mul(mix(i, j), base[j][t]));
    for (std::size_t b = 0; b < derived.dim(); ++b) {
      const mpq_class c = random_scalar(f, rng);
      for (std::size_t t = 0; t < v.size(); ++t) v[t] = f.add(v[t], f.mul(c, derived.basis_vector(b)[t]));
    }
    lift.push_back(std::move(v));
  }
  return lift;
}

}  // namespace testsupport
