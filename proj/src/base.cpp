#include "ybe/base.hpp"

#include <numeric>
#include <stdexcept>

namespace ybe {

Transformation Transformation::identity(int n) {
  Transformation t;
  t.image.resize(n);
  std::iota(t.image.begin(), t.image.end(), 0);
  return t;
}

Transformation compose(const Transformation& f, const Transformation& g) {
  Transformation out;
  out.image.resize(g.image.size());
  for (std::size_t x = 0; x < g.image.size(); ++x) out.image[x] = f.image[g.image[x]];
  return out;
}

bool is_permutation(const Transformation& t) {
  std::vector<bool> seen(t.image.size(), false);
  for (int v : t.image) {
    if (v < 0 || v >= t.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

Transformation inverse(const Transformation& t) {
  if (!is_permutation(t)) throw std::domain_error("inverse: transformation is not a permutation");
  Transformation out;
  out.image.resize(t.image.size());
  for (int x = 0; x < t.size(); ++x) out.image[t.image[x]] = x;
  return out;
}

std::int64_t pow_i64(int base, int exp) {
  std::int64_t out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

std::string word_to_string(const Word& w) {
  if (w.empty()) return "e";
  bool digits = true;
  for (int c : w) digits = digits && c >= 0 && c <= 9;
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!digits && i > 0) out += '.';
    out += std::to_string(w[i]);
  }
  return out;
}

}  // namespace ybe
