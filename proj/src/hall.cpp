#include "liecap/hall.hpp"

#include <map>
#include <unordered_map>

namespace liecap {

namespace {

int moebius(std::size_t n) {
  int result = 1;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

using IntVector = std::map<std::size_t, long>;  // word index -> coefficient

void add_scaled(IntVector& acc, const IntVector& v, long scale) {
  for (const auto& [w, c] : v) {
    long& slot = acc[w];
    slot += scale * c;
    if (slot == 0) acc.erase(w);
  }
}

// Rewrites brackets of Hall words into the Hall basis.
class HallRewriter {
 public:
  HallRewriter(const std::vector<HallWord>& words, std::size_t c) : words_(words), class_(c) {
    for (std::size_t i = 0; i < words.size(); ++i)
      if (!words[i].is_generator()) index_[key(words[i].left, words[i].right)] = i;
  }

  IntVector bracket(std::size_t u, std::size_t v) {
    if (u == v || words_[u].degree + words_[v].degree > class_) return {};
    auto it = memo_.find(key(u, v));
    if (it != memo_.end()) return it->second;
    IntVector result;
    if (u < v) {
      add_scaled(result, bracket(v, u), -1);
    } else if (words_[u].is_generator() || words_[u].right <= v) {
      result[index_.at(key(u, v))] = 1;
    } else {
      // [[a, b], v] = [[a, v], b] + [a, [b, v]]
      const std::size_t a = words_[u].left, b = words_[u].right;
      for (const auto& [w, c] : bracket(a, v)) add_scaled(result, bracket(w, b), c);
      for (const auto& [w, c] : bracket(b, v)) add_scaled(result, bracket(a, w), c);
    }
    memo_.emplace(key(u, v), result);
    return result;
  }

 private:
  static std::uint64_t key(std::size_t u, std::size_t v) { return (static_cast<std::uint64_t>(u) << 32) | v; }

  const std::vector<HallWord>& words_;
  std::size_t class_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
  std::unordered_map<std::uint64_t, IntVector> memo_;
};

}  // namespace

std::size_t witt_dimension(std::size_t d, std::size_t n) {
  if (n == 0) return 0;
  long double total = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    if (n % k != 0) continue;
    int mu = moebius(k);
    if (mu == 0) continue;
    long double power = 1;
    for (std::size_t e = 0; e < n / k; ++e) power *= static_cast<long double>(d);
    total += mu * power;
  }
  return static_cast<std::size_t>(total / static_cast<long double>(n) + 0.5L);
}

std::vector<HallWord> hall_basis(std::size_t d, std::size_t c, std::size_t limit) {
  std::size_t expected = 0;
  for (std::size_t n = 1; n <= c; ++n) {
    expected += witt_dimension(d, n);
    if (expected > limit)
      throw Error(ErrorKind::ResourceLimit, "free nilpotent algebra F(" + std::to_string(d) + "," +
                                                std::to_string(c) + ") exceeds " + std::to_string(limit) +
                                                " basis words");
  }
  std::vector<HallWord> words;
  std::vector<std::size_t> degree_start{0, 0};
  for (std::size_t g = 0; g < d; ++g) words.push_back({HallWord::kNone, HallWord::kNone, g, 1});
  degree_start.push_back(words.size());  // degree_start[n] = first index of degree n
  for (std::size_t n = 2; n <= c; ++n) {
    for (std::size_t v = 0; v < degree_start[n]; ++v) {
      const std::size_t need = n - words[v].degree;
      if (need == 0 || need >= n) continue;
      for (std::size_t u = degree_start[need]; u < degree_start[need + 1]; ++u) {
        if (u <= v) continue;
        if (!words[u].is_generator() && words[u].right > v) continue;
        words.push_back({u, v, HallWord::kNone, n});
      }
    }
    degree_start.push_back(words.size());
  }
  return words;
}

std::string format_word(const std::vector<HallWord>& words, std::size_t index) {
  const HallWord& w = words[index];
  if (w.is_generator()) return "x" + std::to_string(w.generator + 1);
  return "[" + format_word(words, w.left) + "," + format_word(words, w.right) + "]";
}

FreeNilpotent free_nilpotent(std::size_t d, std::size_t c, Field field, std::size_t limit) {
  auto words = hall_basis(d, c, limit);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < words.size(); ++i) labels.push_back(format_word(words, i));
  LieAlgebra algebra(field, words.size(), std::move(labels));
  HallRewriter rewriter(words, c);
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      if (words[i].degree + words[j].degree > c) continue;
      IntVector v = rewriter.bracket(i, j);
      if (v.empty()) continue;
      Vector dense = zero_vector(words.size());
      for (const auto& [w, coeff] : v) dense[w] = field.from_int(coeff);
      algebra.set_bracket(i, j, dense);
    }
  return {d, c, std::move(words), std::move(algebra)};
}

}  // namespace liecap
