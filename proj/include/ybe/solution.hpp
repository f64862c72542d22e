#pragma once

// Finite set-theoretic solution candidates r(x,y) = (sigma_x(y), gamma_y(x))
// on X = {0,...,n-1}, with the pointwise predicates and transforms on them.

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ybe/base.hpp"

namespace ybe {

// Immutable after construction. Tables are stored row-major with the
// actor-first convention sigma[x][y] = sigma_x(y), gamma[x][y] = gamma_x(y),
// so r(x,y) = (sigma[x][y], gamma[y][x]).
class FiniteSolution {
 public:
  FiniteSolution(int n, std::vector<int> sigma_flat, std::vector<int> gamma_flat);

  int n() const { return n_; }
  int sigma(int x, int y) const { return sigma_[x * n_ + y]; }
  int gamma(int x, int y) const { return gamma_[x * n_ + y]; }
  std::pair<int, int> r(int x, int y) const { return {sigma(x, y), gamma(y, x)}; }

  const std::vector<int>& sigma_flat() const { return sigma_; }
  const std::vector<int>& gamma_flat() const { return gamma_; }
  Transformation sigma_row(int x) const;
  Transformation gamma_row(int x) const;

  bool operator==(const FiniteSolution&) const = default;

 private:
  int n_;
  std::vector<int> sigma_, gamma_;
};

using Table = std::vector<std::vector<int>>;

// Checks dimensions and entry ranges; throws std::invalid_argument with a
// message naming the offending field.
FiniteSolution validate(int n, const Table& sigma, const Table& gamma);

struct Counterexample {
  std::string condition;     // name of the first failed check
  std::vector<int> indices;  // witnessing tuple; meaning depends on condition
  bool operator==(const Counterexample&) const = default;
};

struct PropertyReport {
  bool ybe1 = false, ybe2 = false, ybe3 = false;
  bool is_ybe = false;
  bool left_nondegenerate = false, right_nondegenerate = false;
  bool involutive = false, r_bijective = false;
  bool irretractable_sigma = false, irretractable_gamma = false;
  std::optional<Counterexample> counterexample;
  bool operator==(const PropertyReport&) const = default;
};

// True when all property flags (counterexample ignored) coincide.
bool same_flags(const PropertyReport& a, const PropertyReport& b);

// The three conditions equivalent to the braid identity:
//   1: sigma_x sigma_y = sigma_{sigma_x(y)} sigma_{gamma_y(x)}
//   2: sigma_{gamma_{sigma_x(y)}(z)}(gamma_y(x)) = gamma_{sigma_{gamma_x(z)}(y)}(sigma_z(x))
//   3: gamma_x gamma_y = gamma_{gamma_x(y)} gamma_{sigma_y(x)}
std::array<bool, 3> ybe_conditions(const FiniteSolution& s);

// Braid identity on X^3 evaluated by composing r-applications; independent of
// ybe_conditions.
bool check_braid_direct(const FiniteSolution& s);

PropertyReport properties(const FiniteSolution& s);

// Left derived solution r'(x,y) = (y, sigma_y gamma_{sigma_x^{-1}(y)}(x));
// requires left non-degeneracy.
FiniteSolution derived_left(const FiniteSolution& s);

// Dual solution: swaps the sigma and gamma tables; an involution.
FiniteSolution dual(const FiniteSolution& s);

// Rump's conditions (R1)-(R3) over all triples, with x.y = gamma_x^{-1}(y)
// and x:y = sigma_{gamma_y^{-1}(x)}(y); requires every gamma_y bijective.
std::array<bool, 3> rump_conditions(const FiniteSolution& s);

// x -> sigma_x^{-1}(x); requires left non-degeneracy.
Transformation h_map(const FiniteSolution& s);

// All (x,y) with r(x,y) = (x,y), in lexicographic order.
std::vector<std::pair<int, int>> fixed_pairs(const FiniteSolution& s);

// Raw-table kernels shared with the enumeration campaigns. gamma_inv may be
// null when only the braid check is needed.
bool braid_direct_raw(int n, const int* sigma, const int* gamma);
bool rump_all_raw(int n, const int* sigma, const int* gamma_inv);

}  // namespace ybe
