#include "doctest.h"

#include <random>

#include "support.hpp"

using namespace liecap;
using testsupport::bareiss_rank;
using testsupport::modular_rank;

namespace {

const Field Q = Field::rationals();

std::vector<std::vector<long>> random_int_matrix(std::mt19937& rng, std::size_t r, std::size_t c, long span = 4) {
  std::uniform_int_distribution<long> d(-span, span);
  std::vector<std::vector<long>> m(r, std::vector<long>(c));
  for (auto& row : m)
    for (auto& x : row) x = d(rng);
  return m;
}

// Forces rank deficiency by overwriting rows with combinations of others.
void make_dependent(std::vector<std::vector<long>>& m, std::mt19937& rng) {
  if (m.size() < 3) return;
  std::uniform_int_distribution<long> d(-2, 2);
  long a = d(rng), b = d(rng);
  for (std::size_t j = 0; j < m[0].size(); ++j) m.back()[j] = a * m[0][j] + b * m[1][j];
}

Matrix to_matrix(Field f, const std::vector<std::vector<long>>& m) {
  Matrix out(f, m.size(), m.empty() ? 0 : m[0].size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) out(i, j) = f.from_int(m[i][j]);
  return out;
}

std::vector<std::vector<mpz_class>> to_mpz(const std::vector<std::vector<long>>& m) {
  std::vector<std::vector<mpz_class>> out;
  for (const auto& row : m) out.emplace_back(row.begin(), row.end());
  return out;
}

}  // namespace

TEST_CASE("field arithmetic") {
  const Field f7 = Field::prime(7);
  CHECK(f7.from_int(-1) == 6);
  CHECK(f7.from_rational(mpq_class(1, 2)) == 4);
  CHECK(f7.mul(f7.inv(3), 3) == 1);
  CHECK(Q.parse("-2/4") == mpq_class(-1, 2));
  CHECK(Q.parse("0.25") == mpq_class(1, 4));
  CHECK(Q.format(mpq_class(6, -4)) == "-3/2");
  CHECK(f7.parse("3/2") == f7.div(3, 2));
  CHECK(Q.is_square(mpq_class(4, 9)));
  CHECK_FALSE(Q.is_square(2));
  CHECK(f7.is_square(2));  // 3² = 2 mod 7
  CHECK_FALSE(f7.is_square(3));
  CHECK_THROWS_AS(Field::prime(4), Error);
  CHECK_THROWS_AS(Field::prime(2), Error);
  CHECK_THROWS_AS(Q.inv(0), Error);
  CHECK_THROWS_AS(Q.parse("x"), Error);
}

TEST_CASE("mixed fields are rejected") {
  Scalar a(Q, 1), b(Field::prime(5), 1);
  try {
    (void)(a + b);
    FAIL("expected MixedFields");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MixedFields);
  }
  CHECK_THROWS_AS(Matrix::from_scalars({{a, b}}), Error);
  CHECK(Matrix::from_scalars({{a, a}}).cols() == 2);
}

TEST_CASE("rref examples") {
  auto id = rref(Matrix::identity(Q, 3));
  CHECK(id.reduced == Matrix::identity(Q, 3));
  CHECK(id.rank == 3);

  auto z = rref(Matrix(Q, 2, 4));
  CHECK(z.rank == 0);
  CHECK(z.reduced.is_zero());

  auto r = rref(Matrix::from_ints(Q, {{1, 2}, {2, 4}}));
  CHECK(r.rank == 1);
  CHECK(r.reduced == Matrix::from_ints(Q, {{1, 2}, {0, 0}}));
  CHECK(r.pivots == std::vector<std::size_t>{0});

  auto fr = rref(Matrix::from_ints(Q, {{0, 2, 4}, {3, 0, 1}}));
  CHECK(fr.reduced(0, 0) == 1);
  CHECK(fr.reduced(0, 2) == mpq_class(1, 3));
  CHECK(fr.reduced(1, 2) == 2);
}

TEST_CASE("kernel examples") {
  CHECK(kernel(Matrix::identity(Q, 4)).dim() == 0);
  CHECK(kernel(Matrix(Q, 5, 5)).dim() == 5);
  // d2 of A(3) is the zero map on Λ², which has dimension 3.
  CHECK(kernel(ce_d2(LieAlgebra::abelian(Q, 3))).dim() == 3);
  auto k = kernel(Matrix::from_ints(Q, {{1, 1, 0}, {0, 1, 1}}));
  REQUIRE(k.dim() == 1);
  CHECK(Matrix::from_ints(Q, {{1, 1, 0}, {0, 1, 1}}).apply(k.basis_vector(0)) == zero_vector(2));
}

TEST_CASE("subspace operations") {
  auto e = [](std::size_t n, std::size_t i) { return unit_vector(n, i); };
  Subspace U = Subspace::span(Q, 4, {e(4, 0), e(4, 1)});
  Subspace V = Subspace::span(Q, 4, {e(4, 2), e(4, 3)});
  CHECK(sum(U, U) == U);
  CHECK(intersect(U, U) == U);
  CHECK(sum(U, V).dim() == 4);
  CHECK(intersect(U, V).dim() == 0);

  Subspace a = Subspace::span(Q, 2, {Vector{1, 1}});
  Subspace b = Subspace::span(Q, 2, {Vector{0, 1}});
  CHECK(sum(a, b).dim() == 2);
  CHECK(intersect(a, b).dim() == 0);

  Subspace diag = Subspace::span(Q, 3, {Vector{1, 1, 0}, Vector{0, 1, 1}});
  Subspace plane = Subspace::span(Q, 3, {Vector{1, 0, 0}, Vector{0, 1, 0}});
  Subspace line = intersect(diag, plane);
  REQUIRE(line.dim() == 1);
  CHECK(line.contains(Vector{1, 1, 0}));

  CHECK(U.contains(Vector{3, -2, 0, 0}));
  CHECK_FALSE(U.contains(Vector{0, 0, 1, 0}));
  CHECK_THROWS_AS(sum(U, Subspace::zero(Q, 3)), Error);

  QuotientCoords q(a, Subspace::full(Q, 2));
  CHECK(q.dim() == 1);
  CHECK(is_zero(q(Vector{2, 2})));
  CHECK_FALSE(is_zero(q(Vector{0, 1})));
  try {
    QuotientCoords bad(V, U);
    FAIL("expected NotContained");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::NotContained);
  }
}

TEST_CASE("echelon basis stays fully reduced") {
  EchelonBasis eb(Q, 3);
  CHECK(eb.insert(Vector{0, 2, 4}));
  CHECK(eb.insert(Vector{1, 1, 1}));
  CHECK_FALSE(eb.insert(Vector{2, 4, 6}));
  std::vector<std::size_t> piv;
  auto rows = eb.sorted_rows(&piv);
  CHECK(piv == std::vector<std::size_t>{0, 1});
  CHECK(rows[0] == Vector{1, 0, -1});
  CHECK(rows[1] == Vector{0, 1, 2});
}

TEST_CASE("inverse") {
  Matrix m = Matrix::from_ints(Q, {{2, 1}, {1, 1}});
  CHECK(inverse(m) * m == Matrix::identity(Q, 2));
  CHECK_THROWS_AS(inverse(Matrix::from_ints(Q, {{1, 2}, {2, 4}})), Error);
}

TEST_CASE("property: rref idempotent, rank of transpose, rank-nullity") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::size_t> dim(1, 7);
  for (int trial = 0; trial < 200; ++trial) {
    auto ints = random_int_matrix(rng, dim(rng), dim(rng));
    if (trial % 2) make_dependent(ints, rng);
    for (Field f : {Q, Field::prime(3), Field::prime(5)}) {
      Matrix m = to_matrix(f, ints);
      auto once = rref(m);
      CHECK(rref(once.reduced).reduced == once.reduced);
      CHECK(rank(m) == rank(m.transpose()));
      CHECK(kernel(m).dim() + rank(m) == m.cols());
      CHECK(image(m).dim() == rank(m));
    }
  }
}

TEST_CASE("property: rank agrees with fraction-free and modular oracles") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  for (int trial = 0; trial < 150; ++trial) {
    auto ints = random_int_matrix(rng, dim(rng), dim(rng), 9);
    if (trial % 3 == 0) make_dependent(ints, rng);
    CHECK(rank(to_matrix(Q, ints)) == bareiss_rank(to_mpz(ints)));
    for (long p : {3L, 5L, 7L})
      CHECK(rank(to_matrix(Field::prime(static_cast<std::uint32_t>(p)), ints)) == modular_rank(ints, p));
  }
  // Rank 3 over Q; determinant 6 makes it drop exactly at p = 3.
  std::vector<std::vector<long>> m = {{1, 0, 0}, {0, 2, 0}, {0, 0, 3}};
  CHECK(rank(to_matrix(Q, m)) == 3);
  CHECK(rank(to_matrix(Field::prime(3), m)) == 2);
  CHECK(rank(to_matrix(Field::prime(5), m)) == 3);
  CHECK(rank(to_matrix(Field::prime(7), m)) == 3);
}

TEST_CASE("property: subspace canonical form") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    auto a = random_int_matrix(rng, 3, 5, 2), b = random_int_matrix(rng, 2, 5, 2);
    Subspace U = Subspace::row_space(to_matrix(Q, a)), V = Subspace::row_space(to_matrix(Q, b));
    CHECK(sum(U, V).basis() == sum(V, U).basis());
    CHECK(intersect(U, V) == intersect(V, U));
    CHECK(sum(U, V).dim() + intersect(U, V).dim() == U.dim() + V.dim());
    CHECK(sum(U, V).contains(U));
    CHECK(U.contains(intersect(U, V)));
    QuotientCoords q(intersect(U, V), U);
    CHECK(q.dim() == U.dim() - intersect(U, V).dim());
  }
}
