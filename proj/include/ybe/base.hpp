#pragma once

// Shared primitives: generator words, point transformations, resource limits.

#include <cstdint>
#include <string>
#include <vector>

namespace ybe {

// A word over the generator set {0,...,n-1}; the empty word is the identity
// element of whichever monoid the word lives in.
using Word = std::vector<int>;

inline constexpr int kDefaultMaxDegree = 6;
inline constexpr std::int64_t kMaxWordsPerDegree = 10'000'000;

// A map {0,...,n-1} -> {0,...,n-1} stored by images.
struct Transformation {
  std::vector<int> image;

  Transformation() = default;
  explicit Transformation(std::vector<int> img) : image(std::move(img)) {}

  int size() const { return static_cast<int>(image.size()); }
  int operator()(int x) const { return image[x]; }
  bool operator==(const Transformation&) const = default;

  static Transformation identity(int n);
};

// f after g: (f * g)(x) = f(g(x)).
Transformation compose(const Transformation& f, const Transformation& g);
bool is_permutation(const Transformation& t);
Transformation inverse(const Transformation& t);  // requires is_permutation

std::int64_t pow_i64(int base, int exp);

// "e" for the empty word, digit string for alphabets up to 10 letters,
// dot-separated otherwise.
std::string word_to_string(const Word& w);

}  // namespace ybe
