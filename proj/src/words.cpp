#include "ybe/words.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ybe {

namespace {

struct DisjointSets {
  std::vector<std::int64_t> parent;
  std::vector<std::int32_t> size;

  explicit DisjointSets(std::int64_t count) : parent(count), size(count, 1) {
    std::iota(parent.begin(), parent.end(), std::int64_t{0});
  }

  std::int64_t find(std::int64_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  void unite(std::int64_t a, std::int64_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size[a] < size[b]) std::swap(a, b);
    parent[b] = a;
    size[a] += size[b];
  }
};

}  // namespace

const char* to_string(PresentationKind k) {
  switch (k) {
    case PresentationKind::M: return "M";
    case PresentationKind::A: return "A";
    case PresentationKind::Ap: return "Ap";
  }
  return "?";
}

RelationSet relations(PresentationKind kind, const FiniteSolution& s) {
  const int n = s.n();
  std::vector<std::pair<std::array<int, 2>, std::array<int, 2>>> pairs;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      std::array<int, 2> u{}, v{};
      switch (kind) {
        case PresentationKind::M:
          // x.y = sigma_x(y).gamma_y(x)
          u = {x, y};
          v = {s.sigma(x, y), s.gamma(y, x)};
          break;
        case PresentationKind::A: {
          // x + sigma_x(y) = sigma_x(y) + sigma_{sigma_x(y)}(gamma_y(x))
          int t = s.sigma(x, y);
          u = {x, t};
          v = {t, s.sigma(t, s.gamma(y, x))};
          break;
        }
        case PresentationKind::Ap: {
          // gamma_y(x) (+) y = gamma_{gamma_y(x)}(sigma_x(y)) (+) gamma_y(x)
          int t = s.gamma(y, x);
          u = {t, y};
          v = {s.gamma(t, s.sigma(x, y)), t};
          break;
        }
      }
      if (u == v) continue;
      if (v < u) std::swap(u, v);
      pairs.emplace_back(u, v);
    }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return RelationSet{std::move(pairs)};
}

GradedQuotient::GradedQuotient(PresentationKind kind, const FiniteSolution& s, int max_degree)
    : kind_(kind), solution_(s), max_degree_(max_degree) {
  if (max_degree < 0) throw std::invalid_argument("GradedQuotient: negative max degree");
  const int n = s.n();
  if (pow_i64(n, max_degree) > kMaxWordsPerDegree)
    throw std::length_error("GradedQuotient: n^degree exceeds the per-degree word limit; lower the degree");

  RelationSet rel = relations(kind, s);
  cls_.resize(max_degree + 1);
  reps_.resize(max_degree + 1);

  for (int d = 0; d <= max_degree; ++d) {
    const std::int64_t total = pow_i64(n, d);
    DisjointSets dsu(total);
    // Relations preserve length, so the degree-d closure stays inside X^d:
    // seed every single-position rewrite and let union-find do the rest.
    for (const auto& [u, v] : rel.pairs) {
      const std::int64_t pu = u[0] * n + u[1];
      const std::int64_t pv = v[0] * n + v[1];
      for (int p = 0; p + 2 <= d; ++p) {
        const std::int64_t stride = pow_i64(n, d - p - 2);
        const std::int64_t hi_count = pow_i64(n, p);
        for (std::int64_t hi = 0; hi < hi_count; ++hi) {
          const std::int64_t base_u = (hi * n * n + pu) * stride;
          const std::int64_t base_v = (hi * n * n + pv) * stride;
          for (std::int64_t lo = 0; lo < stride; ++lo) dsu.unite(base_u + lo, base_v + lo);
        }
      }
    }
    // Class ids in increasing order of least member; with the big-endian
    // encoding below, least index == lexicographically least word.
    std::vector<std::int32_t> ids(total, -1);
    std::vector<std::int64_t> reps;
    std::vector<std::int32_t> root_id(total, -1);
    for (std::int64_t i = 0; i < total; ++i) {
      std::int64_t r = dsu.find(i);
      if (root_id[r] < 0) {
        root_id[r] = static_cast<std::int32_t>(reps.size());
        reps.push_back(i);
      }
      ids[i] = root_id[r];
    }
    cls_[d] = std::move(ids);
    reps_[d] = std::move(reps);
  }
}

void GradedQuotient::check_degree(int degree) const {
  if (degree < 0 || degree > max_degree_)
    throw std::out_of_range("degree " + std::to_string(degree) + " outside window [0, " +
                            std::to_string(max_degree_) + "]");
}

std::int64_t GradedQuotient::encode(const Word& w) const {
  std::int64_t idx = 0;
  for (int c : w) {
    if (c < 0 || c >= solution_.n()) throw std::invalid_argument("word letter out of range");
    idx = idx * solution_.n() + c;
  }
  return idx;
}

Word GradedQuotient::decode(int degree, std::int64_t index) const {
  Word w(degree);
  for (int p = degree - 1; p >= 0; --p) {
    w[p] = static_cast<int>(index % solution_.n());
    index /= solution_.n();
  }
  return w;
}

int GradedQuotient::class_count(int degree) const {
  check_degree(degree);
  return static_cast<int>(reps_[degree].size());
}

int GradedQuotient::class_of(const Word& w) const {
  check_degree(static_cast<int>(w.size()));
  return cls_[w.size()][encode(w)];
}

Word GradedQuotient::normal_form(const Word& w) const {
  const int d = static_cast<int>(w.size());
  check_degree(d);
  return decode(d, reps_[d][cls_[d][encode(w)]]);
}

bool GradedQuotient::equal(const Word& a, const Word& b) const {
  if (a.size() != b.size()) return false;
  return class_of(a) == class_of(b);
}

Word GradedQuotient::multiply(const Word& a, const Word& b) const {
  Word c = a;
  c.insert(c.end(), b.begin(), b.end());
  return normal_form(c);
}

Word GradedQuotient::rep(int degree, int cls) const {
  check_degree(degree);
  return decode(degree, reps_[degree].at(cls));
}

std::vector<Word> GradedQuotient::class_members(int degree, int cls) const {
  check_degree(degree);
  if (cls < 0 || cls >= class_count(degree)) throw std::out_of_range("class id out of range");
  std::vector<Word> out;
  const std::int64_t total = pow_i64(solution_.n(), degree);
  for (std::int64_t i = 0; i < total; ++i)
    if (cls_[degree][i] == cls) out.push_back(decode(degree, i));
  return out;
}

std::vector<int> GradedQuotient::growth() const {
  std::vector<int> out(max_degree_ + 1);
  for (int d = 0; d <= max_degree_; ++d) out[d] = static_cast<int>(reps_[d].size());
  return out;
}

std::vector<int> growth(PresentationKind kind, const FiniteSolution& s, int max_degree) {
  return GradedQuotient(kind, s, max_degree).growth();
}

}  // namespace ybe
