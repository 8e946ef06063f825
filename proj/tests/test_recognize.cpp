#include "doctest.h"

#include "support.hpp"

using namespace liecap;

namespace {
const Field Q = Field::rationals();
LieAlgebra key(const char* k) { return build(parse_key(k)).algebra; }
}  // namespace

TEST_CASE("recognize examples") {
  CHECK(recognize(LieAlgebra::abelian(Q, 7)).label() == "A(7)");
  auto t = recognize(exterior_square(key("L5_7")));
  CHECK(t.kind == IsoType::Kind::HeisenbergSum);
  CHECK(t.m == 1);
  CHECK(t.k == 3);
  auto u = recognize(exterior_square(key("L6_21(e=2)")));
  CHECK(u.kind == IsoType::Kind::L58Sum);
  CHECK(u.k == 3);
  CHECK(u.label() == "L5_8+A(3)");
}

TEST_CASE("heisenberg decomposition") {
  auto h2 = heisenberg_decomposition(build(CatalogKey::heisenberg(2)).algebra);
  CHECK(h2.m == 2);
  CHECK(h2.k == 0);
  auto l42 = heisenberg_decomposition(key("L4_2"));
  CHECK(l42.m == 1);
  CHECK(l42.k == 1);
  try {
    heisenberg_decomposition(key("L5_8"));
    FAIL("expected NotApplicable");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotApplicable);
  }
}

TEST_CASE("unrecognized algebras carry their fingerprint") {
  auto t = recognize(key("L5_6"));
  CHECK(t.kind == IsoType::Kind::Unrecognized);
  REQUIRE(t.fingerprint);
  CHECK(t.label().rfind("UNRECOGNIZED[", 0) == 0);
  CHECK(*t.fingerprint == fingerprint(key("L5_6")));
  CHECK_FALSE(t.witness);
}

TEST_CASE("property: round trips") {
  std::mt19937 rng(41);
  for (std::size_t m = 1; m <= 3; ++m)
    for (std::size_t k = 0; k <= 4; ++k) {
      auto L = build(CatalogKey::heisenberg(m)).algebra;
      if (k) L = direct_sum(L, LieAlgebra::abelian(Q, k));
      L = change_basis(L, testsupport::random_relabeling(Q, L.dim(), rng));
      auto t = recognize(L);
      CHECK(t.kind == IsoType::Kind::HeisenbergSum);
      CHECK(t.m == m);
      CHECK(t.k == k);
    }
  for (std::size_t k = 0; k <= 3; ++k) {
    auto L = key("L5_8");
    if (k) L = direct_sum(L, LieAlgebra::abelian(Q, k));
    L = change_basis(L, testsupport::random_relabeling(Q, L.dim(), rng));
    auto t = recognize(L);
    CHECK(t.kind == IsoType::Kind::L58Sum);
    CHECK(t.k == k);
  }
}

TEST_CASE("property: witnesses reproduce the model") {
  std::mt19937 rng(43);
  for (const auto& e : testsupport::catalog()) {
    for (const LieAlgebra& X : {exterior_square(e.algebra), tensor_square(e.algebra)}) {
      auto t = recognize(X);
      CAPTURE(e.key.to_string());
      REQUIRE(t.kind != IsoType::Kind::Unrecognized);
      REQUIRE(t.witness);
      CHECK(change_basis(X, *t.witness) == model_algebra(t, Q));
      CHECK(fingerprint(model_algebra(t, Q)) == fingerprint(X));
      auto moved = change_basis(X, testsupport::random_relabeling(Q, X.dim(), rng));
      CHECK(recognize(moved).label() == t.label());
    }
  }
}

TEST_CASE("property: fingerprints ignore relabeling") {
  std::mt19937 rng(47);
  for (const auto& e : testsupport::catalog()) {
    const auto fp = fingerprint(e.algebra);
    for (int t = 0; t < 3; ++t) {
      auto moved = change_basis(e.algebra, testsupport::random_relabeling(Q, e.algebra.dim(), rng));
      CAPTURE(e.key.to_string());
      CHECK(fingerprint(moved) == fp);
    }
  }
}

TEST_CASE("recognition over GF(p)") {
  const Field f5 = Field::prime(5);
  auto W = exterior_square(build(parse_key("L6_21(e=1)"), f5).algebra);
  auto t = recognize(W);
  CHECK(t.label() == "L5_8+A(3)");
  REQUIRE(t.witness);
  CHECK(change_basis(W, *t.witness) == model_algebra(t, f5));
}
