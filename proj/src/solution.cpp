#include "ybe/solution.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ybe {

namespace {

std::vector<int> flatten_checked(int n, const Table& t, const char* field) {
  if (static_cast<int>(t.size()) != n)
    throw std::invalid_argument(std::string(field) + ": dimension mismatch, expected " +
                                std::to_string(n) + " rows, got " + std::to_string(t.size()));
  std::vector<int> flat;
  flat.reserve(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    if (static_cast<int>(t[x].size()) != n)
      throw std::invalid_argument(std::string(field) + "[" + std::to_string(x) +
                                  "]: dimension mismatch, expected " + std::to_string(n) +
                                  " entries, got " + std::to_string(t[x].size()));
    for (int y = 0; y < n; ++y) {
      int v = t[x][y];
      if (v < 0 || v >= n)
        throw std::invalid_argument(std::string(field) + "[" + std::to_string(x) + "][" +
                                    std::to_string(y) + "]: entry out of range: " +
                                    std::to_string(v));
      flat.push_back(v);
    }
  }
  return flat;
}

bool row_is_permutation(int n, const int* row) {
  std::vector<char> seen(n, 0);
  for (int i = 0; i < n; ++i) {
    if (seen[row[i]]) return false;
    seen[row[i]] = 1;
  }
  return true;
}

}  // namespace

FiniteSolution::FiniteSolution(int n, std::vector<int> sigma_flat, std::vector<int> gamma_flat)
    : n_(n), sigma_(std::move(sigma_flat)), gamma_(std::move(gamma_flat)) {}

Transformation FiniteSolution::sigma_row(int x) const {
  return Transformation(std::vector<int>(sigma_.begin() + x * n_, sigma_.begin() + (x + 1) * n_));
}

Transformation FiniteSolution::gamma_row(int x) const {
  return Transformation(std::vector<int>(gamma_.begin() + x * n_, gamma_.begin() + (x + 1) * n_));
}

FiniteSolution validate(int n, const Table& sigma, const Table& gamma) {
  if (n <= 0) throw std::invalid_argument("n must be positive");
  return FiniteSolution(n, flatten_checked(n, sigma, "sigma"), flatten_checked(n, gamma, "gamma"));
}

bool same_flags(const PropertyReport& a, const PropertyReport& b) {
  return a.ybe1 == b.ybe1 && a.ybe2 == b.ybe2 && a.ybe3 == b.ybe3 && a.is_ybe == b.is_ybe &&
         a.left_nondegenerate == b.left_nondegenerate &&
         a.right_nondegenerate == b.right_nondegenerate && a.involutive == b.involutive &&
         a.r_bijective == b.r_bijective && a.irretractable_sigma == b.irretractable_sigma &&
         a.irretractable_gamma == b.irretractable_gamma;
}

std::array<bool, 3> ybe_conditions(const FiniteSolution& s) {
  const int n = s.n();
  bool c1 = true, c2 = true, c3 = true;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        c1 = c1 && s.sigma(x, s.sigma(y, z)) == s.sigma(s.sigma(x, y), s.sigma(s.gamma(y, x), z));
        c2 = c2 && s.sigma(s.gamma(s.sigma(x, y), z), s.gamma(y, x)) ==
                       s.gamma(s.sigma(s.gamma(x, z), y), s.sigma(z, x));
        c3 = c3 && s.gamma(x, s.gamma(y, z)) == s.gamma(s.gamma(x, y), s.gamma(s.sigma(y, x), z));
      }
  return {c1, c2, c3};
}

bool braid_direct_raw(int n, const int* sigma, const int* gamma) {
  auto r = [&](int& x, int& y) {
    int sx = sigma[x * n + y];
    int gy = gamma[y * n + x];
    x = sx;
    y = gy;
  };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        int a1 = x, b1 = y, c1 = z;
        r(a1, b1);
        r(b1, c1);
        r(a1, b1);
        int a2 = x, b2 = y, c2 = z;
        r(b2, c2);
        r(a2, b2);
        r(b2, c2);
        if (a1 != a2 || b1 != b2 || c1 != c2) return false;
      }
  return true;
}

bool check_braid_direct(const FiniteSolution& s) {
  return braid_direct_raw(s.n(), s.sigma_flat().data(), s.gamma_flat().data());
}

PropertyReport properties(const FiniteSolution& s) {
  const int n = s.n();
  PropertyReport rep;
  std::optional<Counterexample> cx;
  auto note = [&](const char* cond, std::vector<int> idx) {
    if (!cx) cx = Counterexample{cond, std::move(idx)};
  };

  rep.ybe1 = rep.ybe2 = rep.ybe3 = true;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        if (rep.ybe1 &&
            s.sigma(x, s.sigma(y, z)) != s.sigma(s.sigma(x, y), s.sigma(s.gamma(y, x), z))) {
          rep.ybe1 = false;
          note("ybe1", {x, y, z});
        }
        if (rep.ybe2 && s.sigma(s.gamma(s.sigma(x, y), z), s.gamma(y, x)) !=
                            s.gamma(s.sigma(s.gamma(x, z), y), s.sigma(z, x))) {
          rep.ybe2 = false;
          note("ybe2", {x, y, z});
        }
        if (rep.ybe3 &&
            s.gamma(x, s.gamma(y, z)) != s.gamma(s.gamma(x, y), s.gamma(s.sigma(y, x), z))) {
          rep.ybe3 = false;
          note("ybe3", {x, y, z});
        }
      }
  rep.is_ybe = rep.ybe1 && rep.ybe2 && rep.ybe3;

  rep.left_nondegenerate = true;
  for (int x = 0; x < n && rep.left_nondegenerate; ++x)
    if (!row_is_permutation(n, s.sigma_flat().data() + x * n)) {
      rep.left_nondegenerate = false;
      note("left_nondegenerate", {x});
    }
  rep.right_nondegenerate = true;
  for (int x = 0; x < n && rep.right_nondegenerate; ++x)
    if (!row_is_permutation(n, s.gamma_flat().data() + x * n)) {
      rep.right_nondegenerate = false;
      note("right_nondegenerate", {x});
    }

  rep.involutive = true;
  for (int x = 0; x < n && rep.involutive; ++x)
    for (int y = 0; y < n && rep.involutive; ++y) {
      auto [u, v] = s.r(x, y);
      if (s.r(u, v) != std::pair<int, int>(x, y)) {
        rep.involutive = false;
        note("involutive", {x, y});
      }
    }

  rep.r_bijective = true;
  {
    std::vector<int> hit(static_cast<std::size_t>(n) * n, -1);
    for (int x = 0; x < n && rep.r_bijective; ++x)
      for (int y = 0; y < n && rep.r_bijective; ++y) {
        auto [u, v] = s.r(x, y);
        int& slot = hit[u * n + v];
        if (slot >= 0) {
          rep.r_bijective = false;
          note("r_bijective", {slot / n, slot % n, x, y});
        } else {
          slot = x * n + y;
        }
      }
  }

  rep.irretractable_sigma = true;
  for (int x = 0; x < n && rep.irretractable_sigma; ++x)
    for (int y = x + 1; y < n && rep.irretractable_sigma; ++y)
      if (std::equal(s.sigma_flat().begin() + x * n, s.sigma_flat().begin() + (x + 1) * n,
                     s.sigma_flat().begin() + y * n)) {
        rep.irretractable_sigma = false;
        note("irretractable_sigma", {x, y});
      }
  rep.irretractable_gamma = true;
  for (int x = 0; x < n && rep.irretractable_gamma; ++x)
    for (int y = x + 1; y < n && rep.irretractable_gamma; ++y)
      if (std::equal(s.gamma_flat().begin() + x * n, s.gamma_flat().begin() + (x + 1) * n,
                     s.gamma_flat().begin() + y * n)) {
        rep.irretractable_gamma = false;
        note("irretractable_gamma", {x, y});
      }

  rep.counterexample = std::move(cx);
  return rep;
}

FiniteSolution derived_left(const FiniteSolution& s) {
  const int n = s.n();
  std::vector<Transformation> sigma_inv(n);
  for (int x = 0; x < n; ++x) {
    Transformation row = s.sigma_row(x);
    if (!is_permutation(row)) throw std::domain_error("derived_left: not left non-degenerate");
    sigma_inv[x] = inverse(row);
  }
  std::vector<int> sig(static_cast<std::size_t>(n) * n), gam(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      sig[x * n + y] = y;  // sigma'_x = id
      // gamma'_y(x) = sigma_y(gamma_{sigma_x^{-1}(y)}(x)); stored actor-first.
      gam[y * n + x] = s.sigma(y, s.gamma(sigma_inv[x](y), x));
    }
  return FiniteSolution(n, std::move(sig), std::move(gam));
}

FiniteSolution dual(const FiniteSolution& s) {
  return FiniteSolution(s.n(), s.gamma_flat(), s.sigma_flat());
}

bool rump_all_raw(int n, const int* sigma, const int* gamma_inv) {
  // x.y = gamma_x^{-1}(y), x:y = sigma_{gamma_y^{-1}(x)}(y)
  auto dot = [&](int x, int y) { return gamma_inv[x * n + y]; };
  auto col = [&](int x, int y) { return sigma[gamma_inv[y * n + x] * n + y]; };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        if (dot(dot(x, y), dot(x, z)) != dot(col(y, x), dot(y, z))) return false;
        if (col(col(x, y), col(x, z)) != col(dot(y, x), col(y, z))) return false;
        if (col(dot(x, y), dot(x, z)) != dot(col(y, x), col(y, z))) return false;
      }
  return true;
}

std::array<bool, 3> rump_conditions(const FiniteSolution& s) {
  const int n = s.n();
  std::vector<int> gamma_inv(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    Transformation row = s.gamma_row(x);
    if (!is_permutation(row)) throw std::domain_error("rump_conditions: some gamma row is not bijective");
    Transformation inv = inverse(row);
    for (int y = 0; y < n; ++y) gamma_inv[x * n + y] = inv(y);
  }
  auto dot = [&](int x, int y) { return gamma_inv[x * n + y]; };
  auto col = [&](int x, int y) { return s.sigma(gamma_inv[y * n + x], y); };
  bool r1 = true, r2 = true, r3 = true;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        r1 = r1 && dot(dot(x, y), dot(x, z)) == dot(col(y, x), dot(y, z));
        r2 = r2 && col(col(x, y), col(x, z)) == col(dot(y, x), col(y, z));
        r3 = r3 && col(dot(x, y), dot(x, z)) == dot(col(y, x), col(y, z));
      }
  return {r1, r2, r3};
}

Transformation h_map(const FiniteSolution& s) {
  const int n = s.n();
  Transformation h;
  h.image.resize(n);
  for (int x = 0; x < n; ++x) {
    Transformation row = s.sigma_row(x);
    if (!is_permutation(row)) throw std::domain_error("h_map: not left non-degenerate");
    h.image[x] = inverse(row)(x);
  }
  return h;
}

std::vector<std::pair<int, int>> fixed_pairs(const FiniteSolution& s) {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < s.n(); ++x)
    for (int y = 0; y < s.n(); ++y)
      if (s.r(x, y) == std::pair<int, int>(x, y)) out.emplace_back(x, y);
  return out;
}

}  // namespace ybe
