#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "ybe/atlas.hpp"
#include "ybe/solution.hpp"

using namespace ybe;

namespace {

// Independent braid evaluator: builds the full maps on X^3 as tuples instead
// of composing coordinate updates.
bool braid_oracle(const FiniteSolution& s) {
  const int n = s.n();
  auto r12 = [&](std::array<int, 3> t) {
    auto [u, v] = s.r(t[0], t[1]);
    return std::array<int, 3>{u, v, t[2]};
  };
  auto r23 = [&](std::array<int, 3> t) {
    auto [u, v] = s.r(t[1], t[2]);
    return std::array<int, 3>{t[0], u, v};
  };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (r12(r23(r12({x, y, z}))) != r23(r12(r23({x, y, z})))) return false;
  return true;
}

FiniteSolution random_candidate(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> letter(0, n - 1);
  std::vector<int> sig(n * n), gam(n * n);
  for (int& v : sig) v = letter(rng);
  for (int& v : gam) v = letter(rng);
  return FiniteSolution(n, sig, gam);
}

// Re-evaluates the single named property condition at the witness indices.
bool condition_fails_at(const FiniteSolution& s, const Counterexample& cx) {
  const auto& ix = cx.indices;
  if (cx.condition == "ybe1") {
    int x = ix[0], y = ix[1], z = ix[2];
    return s.sigma(x, s.sigma(y, z)) != s.sigma(s.sigma(x, y), s.sigma(s.gamma(y, x), z));
  }
  if (cx.condition == "ybe2") {
    int x = ix[0], y = ix[1], z = ix[2];
    return s.sigma(s.gamma(s.sigma(x, y), z), s.gamma(y, x)) !=
           s.gamma(s.sigma(s.gamma(x, z), y), s.sigma(z, x));
  }
  if (cx.condition == "ybe3") {
    int x = ix[0], y = ix[1], z = ix[2];
    return s.gamma(x, s.gamma(y, z)) != s.gamma(s.gamma(x, y), s.gamma(s.sigma(y, x), z));
  }
  if (cx.condition == "left_nondegenerate") return !is_permutation(s.sigma_row(ix[0]));
  if (cx.condition == "right_nondegenerate") return !is_permutation(s.gamma_row(ix[0]));
  if (cx.condition == "involutive") {
    auto [u, v] = s.r(ix[0], ix[1]);
    return s.r(u, v) != std::pair<int, int>(ix[0], ix[1]);
  }
  if (cx.condition == "r_bijective")
    return s.r(ix[0], ix[1]) == s.r(ix[2], ix[3]) && !(ix[0] == ix[2] && ix[1] == ix[3]);
  if (cx.condition == "irretractable_sigma") return s.sigma_row(ix[0]) == s.sigma_row(ix[1]);
  if (cx.condition == "irretractable_gamma") return s.gamma_row(ix[0]) == s.gamma_row(ix[1]);
  return false;
}

}  // namespace

TEST_CASE("validate accepts well-formed tables") {
  CHECK_NOTHROW(validate(1, {{0}}, {{0}}));
  // r(x,y) = (x,y): every check passes, so validate must accept it.
  CHECK_NOTHROW(validate(2, {{0, 0}, {1, 1}}, {{0, 0}, {1, 1}}));
}

TEST_CASE("validate rejects malformed input") {
  CHECK_THROWS_WITH_AS(validate(2, {{0, 2}, {1, 1}}, {{0, 0}, {1, 1}}),
                       doctest::Contains("entry out of range"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(validate(2, {{0, 0}}, {{0, 0}, {1, 1}}),
                       doctest::Contains("dimension mismatch"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(validate(2, {{0, 0}, {1}}, {{0, 0}, {1, 1}}),
                       doctest::Contains("dimension mismatch"), std::invalid_argument);
  CHECK_THROWS_AS(validate(0, {}, {}), std::invalid_argument);
}

TEST_CASE("ybe conditions on named solutions") {
  auto flip3 = fixture("flip3").solution;
  CHECK(ybe_conditions(flip3) == std::array<bool, 3>{true, true, true});
  auto skew = fixture("skew_lattice").solution;
  CHECK(ybe_conditions(skew) == std::array<bool, 3>{true, true, true});

  FiniteSolution bad = validate(2, {{1, 0}, {0, 0}}, {{0, 1}, {1, 0}});
  auto [c1, c2, c3] = ybe_conditions(bad);
  CHECK_FALSE((c1 && c2 && c3));
  CHECK_FALSE(braid_oracle(bad));
}

TEST_CASE("braid checker agrees with the three conditions") {
  auto constant2 = fixture("constant2").solution;
  CHECK(check_braid_direct(constant2));
  CHECK(check_braid_direct(fixture("constant_dual2").solution));

  // Exhaustive at n = 2 (all 256 table pairs).
  for (int si = 0; si < 16; ++si)
    for (int gi = 0; gi < 16; ++gi) {
      std::vector<int> sig = {si >> 3 & 1, si >> 2 & 1, si >> 1 & 1, si & 1};
      std::vector<int> gam = {gi >> 3 & 1, gi >> 2 & 1, gi >> 1 & 1, gi & 1};
      FiniteSolution s(2, sig, gam);
      auto [c1, c2, c3] = ybe_conditions(s);
      CHECK((c1 && c2 && c3) == check_braid_direct(s));
      CHECK(check_braid_direct(s) == braid_oracle(s));
    }

  // Random tables at n = 3.
  std::mt19937_64 rng(20240);
  for (int t = 0; t < 10000; ++t) {
    FiniteSolution s = random_candidate(3, rng);
    auto [c1, c2, c3] = ybe_conditions(s);
    bool viaConditions = c1 && c2 && c3;
    CHECK(viaConditions == check_braid_direct(s));
    if (t % 10 == 0) CHECK(check_braid_direct(s) == braid_oracle(s));
  }
}

TEST_CASE("property report flags") {
  PropertyReport sym = properties(fixture("sym3_conj").solution);
  CHECK(sym.left_nondegenerate);
  CHECK(sym.right_nondegenerate);
  CHECK_FALSE(sym.involutive);
  CHECK(sym.irretractable_sigma);
  CHECK(sym.r_bijective);

  PropertyReport skew = properties(fixture("skew_lattice").solution);
  CHECK_FALSE(skew.left_nondegenerate);
  CHECK_FALSE(skew.irretractable_sigma);
  CHECK(skew.counterexample.has_value());

  PropertyReport flip = properties(fixture("flip3").solution);
  CHECK(flip.involutive);
  CHECK(flip.left_nondegenerate);
  CHECK(flip.right_nondegenerate);
}

TEST_CASE("counterexamples re-fail their condition") {
  std::mt19937_64 rng(77);
  int with_witness = 0;
  for (int t = 0; t < 2000; ++t) {
    FiniteSolution s = random_candidate(t % 2 ? 3 : 2, rng);
    PropertyReport rep = properties(s);
    bool all = rep.is_ybe && rep.left_nondegenerate && rep.right_nondegenerate &&
               rep.involutive && rep.r_bijective && rep.irretractable_sigma &&
               rep.irretractable_gamma;
    CHECK(rep.counterexample.has_value() == !all);
    if (rep.counterexample) {
      ++with_witness;
      CHECK(condition_fails_at(s, *rep.counterexample));
    }
    CHECK(rep.is_ybe == (rep.ybe1 && rep.ybe2 && rep.ybe3));
  }
  CHECK(with_witness > 0);
}

TEST_CASE("derived_left") {
  auto flip3 = fixture("flip3").solution;
  CHECK(derived_left(flip3) == flip3);

  auto sym = fixture("sym3_conj").solution;
  FiniteSolution der = derived_left(sym);
  CHECK(check_braid_direct(der));
  for (int x = 0; x < 6; ++x)
    for (int y = 0; y < 6; ++y) {
      CHECK(der.sigma(x, y) == y);                 // sigma' = id
      CHECK(der.gamma(y, x) == sym.sigma(y, x));   // gamma'_y(x) = sigma_y(x), gamma = id
    }

  CHECK_THROWS_AS(derived_left(fixture("constant2").solution), std::domain_error);
}

TEST_CASE("dual") {
  auto constant2 = fixture("constant2").solution;
  CHECK(dual(constant2) == fixture("constant_dual2").solution);
  CHECK(dual(dual(constant2)) == constant2);
  auto flip2 = fixture("flip2").solution;
  CHECK(dual(flip2) == flip2);
  CHECK(check_braid_direct(dual(fixture("skew_lattice").solution)));

  std::mt19937_64 rng(11);
  for (int t = 0; t < 500; ++t) {
    FiniteSolution s = random_candidate(3, rng);
    CHECK(dual(dual(s)) == s);
    CHECK(check_braid_direct(s) == check_braid_direct(dual(s)));
  }
}

TEST_CASE("rump conditions") {
  CHECK(rump_conditions(fixture("flip3").solution) == std::array<bool, 3>{true, true, true});
  auto sym = fixture("sym3_conj").solution;
  CHECK(rump_conditions(sym) == std::array<bool, 3>{true, true, true});
  CHECK(check_braid_direct(sym));

  // gamma rows of the constant-dual solution are constant maps.
  CHECK_THROWS_AS(rump_conditions(fixture("constant_dual2").solution), std::domain_error);

  // Equivalence with the braid identity over random bijective-gamma candidates.
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<int> letter(0, 2);
  std::vector<std::vector<int>> perms = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                         {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  std::uniform_int_distribution<int> pick(0, 5);
  int braid_failures = 0;
  for (int t = 0; t < 5000; ++t) {
    std::vector<int> sig(9), gam(9);
    for (int& v : sig) v = letter(rng);
    for (int x = 0; x < 3; ++x) {
      const auto& p = perms[pick(rng)];
      for (int y = 0; y < 3; ++y) gam[x * 3 + y] = p[y];
    }
    FiniteSolution s(3, sig, gam);
    auto [r1, r2, r3] = rump_conditions(s);
    bool braid = check_braid_direct(s);
    CHECK((r1 && r2 && r3) == braid);
    if (!braid) ++braid_failures;
  }
  CHECK(braid_failures > 0);
}

TEST_CASE("h map") {
  CHECK(h_map(fixture("flip3").solution) == Transformation::identity(3));

  auto sym = fixture("sym3_conj").solution;
  Transformation h = h_map(sym);
  CHECK(h == Transformation::identity(6));
  // Inverse relation h^-1(x) = gamma_x^-1(x); gamma = id here.
  for (int x = 0; x < 6; ++x) CHECK(h(inverse(sym.gamma_row(x))(x)) == x);

  CHECK_THROWS_AS(h_map(fixture("constant2").solution), std::domain_error);
}

TEST_CASE("fixed pairs") {
  using P = std::vector<std::pair<int, int>>;
  CHECK(fixed_pairs(fixture("flip2").solution) == P{{0, 0}, {1, 1}});
  CHECK(fixed_pairs(fixture("constant2").solution) == P{{0, 0}, {1, 1}});
  // r(a,b) = (a,b) forces sigma_a(b) = aba^-1 = a, i.e. b = a.
  CHECK(fixed_pairs(fixture("sym3_conj").solution) ==
        P{{0, 0}, {1, 1}, {2, 2}, {3, 3}, {4, 4}, {5, 5}});
}
