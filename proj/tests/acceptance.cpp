// Acceptance run: one PASS/FAIL line per criterion. Expected values are
// typed in here independently of the golden data files.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "support.hpp"

using namespace liecap;

namespace {

const Field Q = Field::rationals();

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  void fail(const std::string& what) {
    if (ok) detail << what;
    else if (detail.tellp() < 400) detail << "; " << what;
    ok = false;
  }
  void expect(const std::string& what, const std::string& expected, const std::string& computed) {
    if (expected != computed) fail(what + ": expected " + expected + ", computed " + computed);
  }
  void expect(const std::string& what, std::size_t expected, std::size_t computed) {
    expect(what, std::to_string(expected), std::to_string(computed));
  }
};

std::string A(std::size_t k) { return "A(" + std::to_string(k) + ")"; }
LieAlgebra alg(const CatalogKey& k) { return build(k).algebra; }
CatalogKey L(std::size_t d, std::size_t i) { return CatalogKey::indexed(d, i); }

// Members of L_{6,k}: the epsilon samples for the four families, else itself.
std::vector<CatalogKey> members6(std::size_t k) {
  if (!is_parameterized(6, k)) return {L(6, k)};
  std::vector<CatalogKey> out;
  for (const auto& e : default_epsilon_samples()) out.push_back(CatalogKey::indexed(6, k, e));
  return out;
}

void c1(Outcome& o) {
  const std::size_t M[] = {6, 4, 2}, W[] = {6, 5, 4}, T[] = {16, 11, 7}, D[] = {10, 6, 3};
  for (std::size_t k = 1; k <= 3; ++k) {
    const auto X = alg(L(4, k));
    const std::string n = L(4, k).to_string();
    o.expect(n + " M", A(M[k - 1]), A(multiplier_dim(X)));
    o.expect(n + " wedge", A(W[k - 1]), recognize(exterior_square(X)).label());
    o.expect(n + " tensor", A(T[k - 1]), recognize(tensor_square(X)).label());
    o.expect(n + " diagonal", A(D[k - 1]), A(diagonal_square_dim(X)));
  }
}

void c2(Outcome& o) {
  const std::map<std::size_t, std::size_t> M = {{1, 10}, {2, 7}, {3, 4}, {4, 5}, {5, 4},
                                                {6, 3},  {7, 3}, {8, 6}, {9, 3}};
  for (auto [k, m] : M) o.expect(L(5, k).to_string(), m, multiplier_dim(alg(L(5, k))));
}

void c3(Outcome& o) {
  const char* W[] = {"A(10)", "A(8)", "A(6)", "A(6)", "A(6)", "H(1)+A(3)", "H(1)+A(3)", "A(8)", "A(6)"};
  for (std::size_t k = 1; k <= 9; ++k)
    o.expect(L(5, k).to_string(), W[k - 1], recognize(exterior_square(alg(L(5, k)))).label());
}

void c4(Outcome& o) {
  const std::size_t D[] = {15, 10, 6, 10, 6, 3, 3, 6, 3};
  const char* T[] = {"A(25)", "A(18)", "A(12)", "A(16)", "A(12)", "H(1)+A(6)", "H(1)+A(6)", "A(14)", "A(9)"};
  for (std::size_t k = 1; k <= 9; ++k) {
    const auto X = alg(L(5, k));
    o.expect(L(5, k).to_string() + " diagonal", D[k - 1], diagonal_square_dim(X));
    o.expect(L(5, k).to_string() + " tensor", T[k - 1], recognize(tensor_square(X)).label());
  }
}

void c5(Outcome& o) {
  const std::map<std::size_t, std::vector<std::size_t>> classes = {
      {2, {14, 16}},      {3, {15, 17, 18}},  {4, {13, 21, 28}}, {5, {6, 7, 9, 11, 12, 19, 20, 24}},
      {6, {10, 23, 25, 27}}, {7, {3, 5}},     {8, {22, 26}},     {9, {4, 8}},
      {11, {2}},          {15, {1}}};
  std::size_t covered = 0;
  for (const auto& [m, ks] : classes)
    for (auto k : ks) {
      ++covered;
      for (const auto& key : members6(k)) o.expect(key.to_string(), m, multiplier_dim(alg(key)));
    }
  o.expect("indices covered", 28, covered);
}

void c6(Outcome& o) {
  const std::map<std::string, std::vector<std::size_t>> classes = {
      {"A(7)", {13}},        {"A(8)", {9, 10, 19, 20, 24}}, {"A(9)", {3, 5, 23, 25, 27}},
      {"A(10)", {4, 22}},    {"A(11)", {8, 26}},            {"A(12)", {2}},
      {"A(15)", {1}},        {"H(1)+A(3)", {16}},           {"H(1)+A(4)", {15, 17, 18}},
      {"H(1)+A(5)", {6, 7, 11, 12, 28}},                    {"L5_8+A(1)", {14}}};
  for (const auto& [label, ks] : classes)
    for (auto k : ks)
      for (const auto& key : members6(k)) o.expect(key.to_string(), label, recognize(exterior_square(alg(key))).label());
  for (const auto& key : members6(21)) {
    const bool zero = sgn(*key.epsilon) == 0;
    o.expect(key.to_string(), zero ? "H(1)+A(5)" : "L5_8+A(3)", recognize(exterior_square(alg(key))).label());
  }
}

void c7(Outcome& o) {
  std::vector<CatalogKey> expected = {CatalogKey::abelian(1), L(5, 4), L(6, 4), L(6, 10), L(6, 14), L(6, 16)};
  for (const auto& k : members6(19)) expected.push_back(k);
  expected.push_back(L(6, 20));
  std::vector<std::string> want, got;
  for (const auto& k : expected) want.push_back(k.to_string());
  for (const auto& k : noncapable_census(6)) got.push_back(k.to_string());
  std::sort(want.begin(), want.end());
  std::sort(got.begin(), got.end());
  auto join = [](const std::vector<std::string>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : ",") + x;
    return s;
  };
  o.expect("census", join(want), join(got));
  for (const auto& key : all_keys(6)) {
    if (std::binary_search(want.begin(), want.end(), key.to_string())) continue;
    o.expect(key.to_string() + " Z^", 0, exterior_center(alg(key)).dim());
  }
}

void c8(Outcome& o) {
  for (const auto& key : all_keys(6)) {
    const auto X = alg(key);
    o.expect(key.to_string(), multiplier_dim(X), exterior_cover(X).multiplier_part.dim());
  }
  std::mt19937 rng(8080);
  const auto pool = all_keys(6);
  for (int t = 0; t < 100; ++t) {
    const auto& key = pool[rng() % pool.size()];
    const std::size_t room = 8 - std::min<std::size_t>(key.dim(), 7);
    const auto E = testsupport::random_central_extension(alg(key), 1 + rng() % room, rng);
    if (!validate(E).ok) {
      o.fail("extension of " + key.to_string() + " is not a Lie algebra");
      continue;
    }
    o.expect("extension #" + std::to_string(t) + " of " + key.to_string(), multiplier_dim(E),
             exterior_cover(E).multiplier_part.dim());
  }
}

void c9(Outcome& o) {
  std::size_t lines = 0;
  for (const auto& key : all_keys(6)) {
    const auto X = alg(key);
    const Subspace zw = exterior_center(X).space();
    for (const auto& K : central_test_lines(X)) {
      ++lines;
      const bool in = zw.contains(K), dagger = dagger_test(X, K), mono = multiplier_map_injective(X, K);
      if (in != dagger || in != mono)
        o.fail(key.to_string() + ": K⊆Z^=" + std::to_string(in) + " dagger=" + std::to_string(dagger) +
               " injective=" + std::to_string(mono));
    }
  }
  if (lines == 0) o.fail("no central lines tested");
}

void c10(Outcome& o) {
  // Pairs whose free algebra F(d, c+1) has more than 1500 words are redrawn.
  std::mt19937 rng(1010);
  const auto pool = all_keys(6);
  std::size_t redrawn = 0;
  for (int t = 0; t < 50;) {
    const auto& a = pool[rng() % pool.size()];
    const auto& b = pool[rng() % pool.size()];
    const auto H = alg(a), K = alg(b);
    const auto S = direct_sum(H, K);
    if (cover_free_dim(S) > std::min<std::size_t>(1500, default_resource_limit())) {
      ++redrawn;
      continue;
    }
    ++t;
    o.expect(a.to_string() + "+" + b.to_string(), kunneth_exterior_dim(H, K), exterior_square(S).dim());
  }
  if (redrawn > 200) o.fail(std::to_string(redrawn) + " pairs too large for the cover");
  for (std::size_t n = 1; n <= 8; ++n)
    o.expect("M(A" + std::to_string(n) + ")", n * (n - 1) / 2,
             exterior_cover(LieAlgebra::abelian(Q, n)).multiplier_part.dim());
  for (std::size_t m = 1; m <= 4; ++m)
    o.expect("M(H" + std::to_string(m) + ")", m == 1 ? 2 : 2 * m * m - m - 1,
             exterior_cover(alg(CatalogKey::heisenberg(m))).multiplier_part.dim());
}

void c11(Outcome& o) {
  for (const auto& key : all_keys(6)) {
    const auto X = alg(key);
    if (X.is_abelian()) continue;
    o.expect(key.to_string() + " Z^(L^L)", 0, exterior_center(exterior_square(X)).dim());
  }
}

void c12(Outcome& o) {
  std::size_t checked = 0;
  for (const auto& key : all_keys(6)) {
    try {
      const auto r = theorem2_bound_check(alg(key));
      ++checked;
      if (!r.holds)
        o.fail(key.to_string() + ": " + std::to_string(r.wedge_exterior_center_dim) + " > " +
               std::to_string(r.quotient_multiplier_dim));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::SkippedHypothesisFailed) throw;
    }
  }
  if (checked == 0) o.fail("no entry met the hypothesis");
}

void c13(Outcome& o) {
  std::mt19937 rng(1313);
  for (const auto& key : all_keys(6)) {
    const auto X = alg(key);
    const Cover base = exterior_cover(X);
    const std::string label = recognize(exterior_square(base)).label();
    const auto zw = exterior_center(X, base);
    for (int t = 0; t < 20; ++t) {
      CoverOptions opt;
      opt.lift = testsupport::random_lift(X, rng);
      const Cover alt = exterior_cover(X, opt);
      o.expect(key.to_string() + " lift M", base.multiplier_part.dim(), alt.multiplier_part.dim());
      o.expect(key.to_string() + " lift wedge", label, recognize(exterior_square(alt)).label());
      if (!(exterior_center(X, alt) == zw)) o.fail(key.to_string() + " lift changed Z^");
    }
    if (key.dim() <= 5) {
      CoverOptions two;
      two.extra_class = 2;
      const Cover wide = exterior_cover(X, two);
      o.expect(key.to_string() + " class+2 star", base.star.dim(), wide.star.dim());
      o.expect(key.to_string() + " class+2 M", base.multiplier_part.dim(), wide.multiplier_part.dim());
      o.expect(key.to_string() + " class+2 wedge", base.derived_part.dim(), wide.derived_part.dim());
    }
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria = {
      {"dim-4 multipliers, exterior, tensor and diagonal squares", c1},
      {"dim-5 multiplier table", c2},
      {"dim-5 exterior squares with types", c3},
      {"dim-5 diagonal dims and tensor squares", c4},
      {"dim-6 multiplier table over epsilon samples", c5},
      {"dim-6 exterior squares with types", c6},
      {"noncapable census up to dimension 6", c7},
      {"CE multiplier equals Hopf multiplier (catalog + 100 central extensions)", c8},
      {"consistency triangle on central lines", c9},
      {"Kunneth formula on 50 random pairs and closed forms", c10},
      {"exterior squares of nonabelian entries are capable", c11},
      {"Z^(L^L) bounded by M(L/Z^(L)) where the hypothesis holds", c12},
      {"random lifts and extra class leave invariants unchanged", c13},
  };
  const auto start = std::chrono::steady_clock::now();
  std::size_t passed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    passed += o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first;
    if (!o.ok) std::cout << "  [" << o.detail.str() << "]";
    std::cout << std::endl;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << passed << "/" << criteria.size() << " criteria passed in " << std::fixed;
  std::cout.precision(1);
  std::cout << secs << " s" << std::endl;
  return passed == criteria.size() ? 0 : 1;
}
