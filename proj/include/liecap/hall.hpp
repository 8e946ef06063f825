#pragma once

#include <limits>
#include <string>
#include <vector>

#include "liecap/lie_algebra.hpp"

namespace liecap {

/// Basic commutator: a generator, or [left, right] of earlier words with
/// left > right and, when left = [a, b], b <= right. Words are ordered by
/// degree and then by position of creation; `left`/`right` are indices into
/// the same sequence.
struct HallWord {
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  std::size_t left = kNone;
  std::size_t right = kNone;
  std::size_t generator = kNone;
  std::size_t degree = 1;

  bool is_generator() const noexcept { return generator != kNone; }
};

/// Dimension of the degree-n component of the free Lie algebra on d
/// generators (Witt's formula).
std::size_t witt_dimension(std::size_t d, std::size_t n);

/// Hall words of degree <= c on d generators. Throws ResourceLimit when the
/// count would exceed `limit`.
std::vector<HallWord> hall_basis(std::size_t d, std::size_t c, std::size_t limit);
std::string format_word(const std::vector<HallWord>& words, std::size_t index);

/// Free nilpotent Lie algebra F(d, c) on the Hall basis.
struct FreeNilpotent {
  std::size_t generators;
  std::size_t nilpotency_class;
  std::vector<HallWord> words;
  LieAlgebra algebra;
};

FreeNilpotent free_nilpotent(std::size_t d, std::size_t c, Field field, std::size_t limit);

}  // namespace liecap
