#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "liecap/lie_algebra.hpp"

namespace liecap {

/// Identifier of a nilpotent Lie algebra in the classification of
/// dimension <= 6, or of an abelian / Heisenberg algebra of any size.
struct CatalogKey {
  enum class Kind { Abelian, Heisenberg, Indexed };

  Kind kind = Kind::Abelian;
  std::size_t n = 0;       // dimension for Abelian/Indexed, m for Heisenberg
  std::size_t index = 0;   // Indexed only
  std::optional<mpq_class> epsilon;

  static CatalogKey abelian(std::size_t n) { return {Kind::Abelian, n, 0, std::nullopt}; }
  static CatalogKey heisenberg(std::size_t m) { return {Kind::Heisenberg, m, 0, std::nullopt}; }
  static CatalogKey indexed(std::size_t dim, std::size_t index, std::optional<mpq_class> eps = std::nullopt) {
    return {Kind::Indexed, dim, index, std::move(eps)};
  }

  std::size_t dim() const;
  /// A3, H2, L5_4, L6_19(e=2)
  std::string to_string() const;
  /// Human label: A(3), H(2), L5,4, L6,19(2)
  std::string pretty() const;

  bool operator==(const CatalogKey& o) const {
    return kind == o.kind && n == o.n && index == o.index && epsilon == o.epsilon;
  }
};

/// Parses the CLI key syntax; throws ParseError / UnknownKey.
CatalogKey parse_key(std::string_view text);

/// True for (6,19), (6,21), (6,22), (6,24).
bool is_parameterized(std::size_t dim, std::size_t index);
/// Number of indexed entries in a dimension (3 -> 2, 4 -> 3, 5 -> 9, 6 -> 28); 0 otherwise.
std::size_t indexed_count(std::size_t dim);

/// Defining relations of L_{dim,index} as printed in the classification,
/// with "e" for the parameter: "[x1, x2] = x4, ..., [x3, x5] = e x6".
/// Throws UnknownKey.
std::string relation_text(std::size_t dim, std::size_t index);

struct CatalogEntry {
  CatalogKey key;
  LieAlgebra algebra;
  std::string structure_note;
};

/// Transcribes the relation list for key into structure constants.
/// Throws UnknownKey, EpsilonRequired, EpsilonForbidden.
CatalogEntry build(const CatalogKey& key, Field field = Field::rationals());

std::vector<mpq_class> default_epsilon_samples();

struct CatalogFamily {
  std::size_t dim;
  std::size_t index;  // 0 for the dimension 1, 2 abelian entries
  bool parameterized;
  std::vector<CatalogKey> members;  // one key, or one per epsilon sample
};

/// Complete enumeration of dimension dim (1..6). Throws UnsupportedDimension
/// for dim >= 7, where one-parameter families of pairwise non-isomorphic
/// algebras appear and no finite list exists.
std::vector<CatalogFamily> list(std::size_t dim, const std::vector<mpq_class>& samples = default_epsilon_samples());
/// Flattened keys of list(dim).
std::vector<CatalogKey> list_keys(std::size_t dim, const std::vector<mpq_class>& samples = default_epsilon_samples());
/// Flattened keys for every dimension in [1, max_dim].
std::vector<CatalogKey> all_keys(std::size_t max_dim = 6, const std::vector<mpq_class>& samples = default_epsilon_samples());

/// L(eps) ~ L(delta) iff delta / eps is a square in the field.
/// Throws NotParameterized, ZeroEpsilonComparison.
bool epsilon_equivalent(const CatalogKey& a, const CatalogKey& b, Field field = Field::rationals());

}  // namespace liecap
