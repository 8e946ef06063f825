#include "liecap/catalog.hpp"

#include <cctype>
#include <map>

namespace liecap {

namespace {

// [x_i, x_j] = coeff * x_k (times epsilon when scaled_by_epsilon), 1-based.
struct Relation {
  int i, j, k;
  int coeff;
  bool scaled_by_epsilon;
};

struct Presentation {
  std::vector<Relation> relations;
  const char* note;
};

constexpr Relation rel(int i, int j, int k, int c = 1) { return {i, j, k, c, false}; }
constexpr Relation eps(int i, int j, int k) { return {i, j, k, 1, true}; }

const std::map<std::pair<std::size_t, std::size_t>, Presentation>& presentations() {
  static const std::map<std::pair<std::size_t, std::size_t>, Presentation> table = {
      {{3, 1}, {{}, "A(3)"}},
      {{3, 2}, {{rel(1, 2, 3)}, "H(1) = A(1) ⋉ A(2)"}},
      {{4, 1}, {{}, "A(4)"}},
      {{4, 2}, {{rel(1, 2, 3)}, "H(1) ⊕ A(1)"}},
      {{4, 3}, {{rel(1, 2, 3), rel(1, 3, 4)}, "A(1) ⋉ A(3)"}},
      {{5, 1}, {{}, "A(5)"}},
      {{5, 2}, {{rel(1, 2, 3)}, "H(1) ⊕ A(2)"}},
      {{5, 3}, {{rel(1, 2, 3), rel(1, 3, 4)}, "L4,3 ⊕ A(1)"}},
      {{5, 4}, {{rel(1, 2, 5), rel(3, 4, 5)}, "H(2)"}},
      {{5, 5}, {{rel(1, 2, 3), rel(1, 3, 5), rel(2, 4, 5)}, "A(1) ⋉ L4,3"}},
      {{5, 6}, {{rel(1, 2, 3), rel(1, 3, 4), rel(1, 4, 5), rel(2, 3, 5)}, ""}},
      {{5, 7}, {{rel(1, 2, 3), rel(1, 3, 4), rel(1, 4, 5)}, ""}},
      {{5, 8}, {{rel(1, 2, 4), rel(1, 3, 5)}, ""}},
      {{5, 9}, {{rel(1, 2, 3), rel(1, 3, 4), rel(2, 3, 5)}, ""}},
      {{6, 10}, {{rel(1, 2, 3), rel(1, 3, 6), rel(4, 5, 6)}, ""}},
      {{6, 11},
       {{rel(1, 2, 3), rel(1, 3, 4), rel(1, 4, 6), rel(2, 3, 6), rel(2, 5, 6)}, "A(1) ⋉ L5,6"}},
      {{6, 12}, {{rel(1, 2, 3), rel(1, 3, 4), rel(1, 4, 6), rel(2, 5, 6)}, "A(1) ⋉ L5,7"}},
      {{6, 13},
       {{rel(1, 2, 3), rel(1, 3, 5), rel(2, 4, 5), rel(1, 5, 6), rel(3, 4, 6)}, "A(1) ⋉ L5,7"}},
      {{6, 14},
       {{rel(1, 2, 3), rel(1, 3, 4), rel(1, 4, 5), rel(2, 3, 5), rel(2, 5, 6), rel(3, 4, 6, -1)}, ""}},
      {{6, 15},
       {{rel(1, 2, 3), rel(1, 3, 4), rel(1, 4, 5), rel(2, 3, 5), rel(1, 5, 6), rel(2, 4, 6)}, ""}},
      {{6, 16}, {{rel(1, 2, 3), rel(1, 3, 4), rel(1, 4, 5), rel(2, 5, 6), rel(3, 4, 6, -1)}, ""}},
      {{6, 17}, {{rel(1, 2, 3), rel(1, 3, 4), rel(1, 4, 5), rel(1, 5, 6), rel(2, 3, 6)}, ""}},
      {{6, 18}, {{rel(1, 2, 3), rel(1, 3, 4), rel(1, 4, 5), rel(1, 5, 6)}, ""}},
      {{6, 19}, {{rel(1, 2, 4), rel(1, 3, 5), rel(1, 5, 6), rel(2, 4, 6), eps(3, 5, 6)}, ""}},
      {{6, 20}, {{rel(1, 2, 4), rel(1, 3, 5), rel(1, 5, 6), rel(2, 4, 6)}, ""}},
      {{6, 21}, {{rel(1, 2, 3), rel(1, 3, 4), rel(2, 3, 5), rel(1, 4, 6), eps(2, 5, 6)}, ""}},
      {{6, 22}, {{rel(1, 2, 5), rel(1, 3, 6), eps(2, 4, 6), rel(3, 4, 5)}, ""}},
      {{6, 23}, {{rel(1, 2, 3), rel(1, 3, 5), rel(1, 4, 6), rel(2, 4, 5)}, ""}},
      {{6, 24}, {{rel(1, 2, 3), rel(1, 3, 5), eps(1, 4, 6), rel(2, 3, 6), rel(2, 4, 5)}, ""}},
      {{6, 25}, {{rel(1, 2, 3), rel(1, 3, 5), rel(1, 4, 6)}, ""}},
      {{6, 26}, {{rel(1, 2, 4), rel(1, 3, 5), rel(2, 3, 6)}, ""}},
      {{6, 27}, {{rel(1, 2, 3), rel(1, 3, 5), rel(2, 4, 6)}, ""}},
      {{6, 28}, {{rel(1, 2, 3), rel(1, 3, 4), rel(1, 4, 5), rel(2, 3, 6)}, ""}},
  };
  return table;
}

std::string format_rational(const mpq_class& q) { return q.get_str(10); }

}  // namespace

bool is_parameterized(std::size_t dim, std::size_t index) {
  return dim == 6 && (index == 19 || index == 21 || index == 22 || index == 24);
}

std::size_t indexed_count(std::size_t dim) {
  switch (dim) {
    case 3: return 2;
    case 4: return 3;
    case 5: return 9;
    case 6: return 28;
    default: return 0;
  }
}

std::size_t CatalogKey::dim() const {
  switch (kind) {
    case Kind::Abelian: return n;
    case Kind::Heisenberg: return 2 * n + 1;
    case Kind::Indexed: return n;
  }
  return 0;
}

std::string CatalogKey::to_string() const {
  switch (kind) {
    case Kind::Abelian: return "A" + std::to_string(n);
    case Kind::Heisenberg: return "H" + std::to_string(n);
    case Kind::Indexed: {
      std::string s = "L" + std::to_string(n) + "_" + std::to_string(index);
      if (epsilon) s += "(e=" + format_rational(*epsilon) + ")";
      return s;
    }
  }
  return "?";
}

std::string CatalogKey::pretty() const {
  switch (kind) {
    case Kind::Abelian: return "A(" + std::to_string(n) + ")";
    case Kind::Heisenberg: return "H(" + std::to_string(n) + ")";
    case Kind::Indexed: {
      std::string s = "L" + std::to_string(n) + "," + std::to_string(index);
      if (epsilon) s += "(" + format_rational(*epsilon) + ")";
      return s;
    }
  }
  return "?";
}

CatalogKey parse_key(std::string_view text) {
  std::string s(text);
  auto fail = [&](const std::string& why) { return Error(ErrorKind::ParseError, "key '" + s + "': " + why); };
  auto parse_count = [&](std::string_view digits) {
    if (digits.empty() || digits.size() > 6) throw fail("expected a number");
    std::size_t v = 0;
    for (char c : digits) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw fail("expected a number");
      v = v * 10 + static_cast<std::size_t>(c - '0');
    }
    return v;
  };
  if (s.empty()) throw fail("empty");
  if (s[0] == 'A' || s[0] == 'H') {
    std::size_t v = parse_count(std::string_view(s).substr(1));
    if (v == 0) throw Error(ErrorKind::UnknownKey, s);
    return s[0] == 'A' ? CatalogKey::abelian(v) : CatalogKey::heisenberg(v);
  }
  if (s[0] != 'L') throw fail("must start with A, H or L");
  auto underscore = s.find('_');
  if (underscore == std::string::npos) throw fail("expected L<dim>_<index>");
  auto paren = s.find('(', underscore);
  std::size_t dim = parse_count(std::string_view(s).substr(1, underscore - 1));
  std::size_t index = parse_count(std::string_view(s).substr(underscore + 1, paren == std::string::npos
                                                                                 ? std::string::npos
                                                                                 : paren - underscore - 1));
  std::optional<mpq_class> eps;
  if (paren != std::string::npos) {
    if (s.back() != ')' || s.compare(paren, 3, "(e=") != 0) throw fail("expected (e=<value>)");
    std::string value = s.substr(paren + 3, s.size() - paren - 4);
    eps = Field::rationals().parse(value);
  }
  CatalogKey key = CatalogKey::indexed(dim, index, eps);
  if (index == 0 || index > indexed_count(dim)) throw Error(ErrorKind::UnknownKey, s);
  return key;
}

std::vector<mpq_class> default_epsilon_samples() { return {mpq_class(0), mpq_class(1), mpq_class(-1), mpq_class(2)}; }

CatalogEntry build(const CatalogKey& key, Field field) {
  switch (key.kind) {
    case CatalogKey::Kind::Abelian: {
      if (key.n == 0) throw Error(ErrorKind::UnknownKey, key.to_string());
      return {key, LieAlgebra::abelian(field, key.n), "A(" + std::to_string(key.n) + ")"};
    }
    case CatalogKey::Kind::Heisenberg: {
      const std::size_t m = key.n;
      if (m == 0) throw Error(ErrorKind::UnknownKey, key.to_string());
      std::vector<std::string> labels;
      for (std::size_t i = 0; i < 2 * m; ++i) labels.push_back("x" + std::to_string(i + 1));
      labels.push_back("x");
      LieAlgebra h(field, 2 * m + 1, std::move(labels));
      for (std::size_t i = 0; i < m; ++i) h.add_bracket_term(2 * i, 2 * i + 1, 2 * m, 1);
      return {key, std::move(h), "H(" + std::to_string(m) + ")"};
    }
    case CatalogKey::Kind::Indexed: break;
  }

  const std::size_t dim = key.n;
  if (key.index == 0 || key.index > indexed_count(dim)) throw Error(ErrorKind::UnknownKey, key.to_string());
  const bool param = is_parameterized(dim, key.index);
  if (param && !key.epsilon) throw Error(ErrorKind::EpsilonRequired, key.to_string());
  if (!param && key.epsilon) throw Error(ErrorKind::EpsilonForbidden, key.to_string());

  // L6,k = L5,k + A(1) for k <= 9.
  std::size_t source_dim = dim;
  std::string note;
  if (dim == 6 && key.index <= 9) {
    source_dim = 5;
    note = "L5," + std::to_string(key.index) + " ⊕ A(1)";
  }
  const Presentation& p = presentations().at({source_dim, key.index});
  if (note.empty()) note = p.note;

  LieAlgebra algebra(field, dim);
  const mpq_class e = key.epsilon ? field.from_rational(*key.epsilon) : mpq_class(0);
  for (const auto& r : p.relations) {
    mpq_class c = field.from_int(r.coeff);
    if (r.scaled_by_epsilon) c = field.mul(c, e);
    if (sgn(c) == 0) continue;
    algebra.add_bracket_term(static_cast<std::size_t>(r.i - 1), static_cast<std::size_t>(r.j - 1),
                             static_cast<std::size_t>(r.k - 1), c);
  }
  return {key, std::move(algebra), note};
}

std::string relation_text(std::size_t dim, std::size_t index) {
  if (index == 0 || index > indexed_count(dim))
    throw Error(ErrorKind::UnknownKey, "L" + std::to_string(dim) + "_" + std::to_string(index));
  const std::size_t source_dim = dim == 6 && index <= 9 ? 5 : dim;
  std::string out;
  for (const auto& r : presentations().at({source_dim, index}).relations) {
    if (!out.empty()) out += ", ";
    out += "[x" + std::to_string(r.i) + ", x" + std::to_string(r.j) + "] = ";
    if (r.coeff == -1) out += "-";
    else if (r.coeff != 1) out += std::to_string(r.coeff) + " ";
    if (r.scaled_by_epsilon) out += "e ";
    out += "x" + std::to_string(r.k);
  }
  return out.empty() ? "abelian" : out;
}

std::vector<CatalogFamily> list(std::size_t dim, const std::vector<mpq_class>& samples) {
  if (dim == 0) throw Error(ErrorKind::UnsupportedDimension, "dimension must be positive");
  if (dim >= 7)
    throw Error(ErrorKind::UnsupportedDimension,
                "no finite classification from dimension 7 on: one-parameter families of mutually "
                "non-isomorphic nilpotent Lie algebras exist");
  std::vector<CatalogFamily> out;
  if (dim <= 2) {
    out.push_back({dim, 0, false, {CatalogKey::abelian(dim)}});
    return out;
  }
  for (std::size_t k = 1; k <= indexed_count(dim); ++k) {
    CatalogFamily fam{dim, k, is_parameterized(dim, k), {}};
    if (fam.parameterized)
      for (const auto& e : samples) fam.members.push_back(CatalogKey::indexed(dim, k, e));
    else
      fam.members.push_back(CatalogKey::indexed(dim, k));
    out.push_back(std::move(fam));
  }
  return out;
}

std::vector<CatalogKey> list_keys(std::size_t dim, const std::vector<mpq_class>& samples) {
  std::vector<CatalogKey> out;
  for (auto& fam : list(dim, samples))
    for (auto& k : fam.members) out.push_back(std::move(k));
  return out;
}

std::vector<CatalogKey> all_keys(std::size_t max_dim, const std::vector<mpq_class>& samples) {
  std::vector<CatalogKey> out;
  for (std::size_t d = 1; d <= max_dim; ++d)
    for (auto& k : list_keys(d, samples)) out.push_back(std::move(k));
  return out;
}

bool epsilon_equivalent(const CatalogKey& a, const CatalogKey& b, Field field) {
  auto parameterized_key = [](const CatalogKey& k) {
    return k.kind == CatalogKey::Kind::Indexed && is_parameterized(k.n, k.index) && k.epsilon;
  };
  if (!parameterized_key(a) || !parameterized_key(b) || a.n != b.n || a.index != b.index)
    throw Error(ErrorKind::NotParameterized, a.to_string() + " vs " + b.to_string());
  mpq_class ea = field.from_rational(*a.epsilon);
  mpq_class eb = field.from_rational(*b.epsilon);
  if (sgn(ea) == 0 || sgn(eb) == 0)
    throw Error(ErrorKind::ZeroEpsilonComparison,
                "the square criterion needs nonzero parameters; eps = 0 is its own class");
  return field.is_square(field.div(eb, ea));
}

}  // namespace liecap
