#pragma once

// Exhaustive enumeration of solutions on small X, canonical labeling up to
// relabeling, named fixtures, and the theorem-verification campaigns.

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ybe/base.hpp"
#include "ybe/solution.hpp"

namespace ybe {

struct Fixture {
  std::string name;
  FiniteSolution solution;
  std::string notes;
  PropertyReport expected;  // flags only; counterexample left empty
};

const std::vector<Fixture>& builtin_examples();
const Fixture& fixture(const std::string& name);  // throws std::invalid_argument
std::vector<std::string> fixture_names();

// All (sigma, gamma) with every row a permutation, filtered by the braid
// identity, in deterministic order. Exhaustive for n <= 3; n == 4 runs the
// pruned mode (sigma-families kept only when lex-minimal under simultaneous
// relabeling, gamma propagated through the braid constraint before
// filtering), so its stream covers each solution class but not each labeling.
std::vector<FiniteSolution> enumerate_nondegenerate(int n);

// All (sigma, gamma) with arbitrary sigma rows and permutation gamma rows,
// NOT filtered by the braid identity; n <= 3.
void enumerate_gamma_bijective(int n, const std::function<void(const FiniteSolution&)>& visit);
std::uint64_t gamma_bijective_count(int n);

struct SolutionClass {
  FiniteSolution canonical;  // lex-least table pair over all relabelings
  int orbit_size = 0;        // number of distinct relabeled table pairs
};

SolutionClass canonical_label(const FiniteSolution& s);  // n <= 6

struct CampaignReport {
  std::string name;
  int n = 0;
  int max_degree = 0;  // 0 when not applicable
  std::uint64_t seed = 0;
  std::uint64_t candidates = 0;
  std::uint64_t solutions = 0;
  std::vector<std::pair<std::string, std::uint64_t>> tallies;
  std::vector<std::string> violations;  // empty for the theorem campaigns
  double elapsed_seconds = 0.0;

  std::uint64_t tally(const std::string& key) const;
};

// Every irretractable non-degenerate solution has bijective r, a bijective
// h-map with inverse x -> gamma_x^{-1}(x), and one fixed pair per row/column.
CampaignReport campaign_main_irr(int n);

// braid identity <=> (R1) & (R2) & (R3) over all candidates with bijective
// gamma rows. jobs <= 0 means one worker per hardware thread.
CampaignReport campaign_rump(int n, int jobs = 0);

// left non-degenerate <=> pi bijective at degrees <= max_degree, and the
// degree-2 surjectivity criterion agrees (mirror for pi'/right). Exhaustive
// over all map pairs at n <= 2; at n == 3 exhaustive over the non-degenerate
// family plus seeded random map-pair samples.
CampaignReport campaign_cocycle(int n, int max_degree = 4, std::uint64_t seed = 0);

// Growth checks over the enumerated non-degenerate family: involutive
// solutions have free-abelian A-growth binom(n+d-1, d); every left
// non-degenerate solution has M-growth equal to A-growth.
CampaignReport campaign_growth(int n, int max_degree = 5);

}  // namespace ybe
