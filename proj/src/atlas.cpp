#include "ybe/atlas.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>

#include "ybe/actions.hpp"
#include "ybe/words.hpp"

namespace ybe {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<std::vector<int>> permutations_of(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

FiniteSolution table_solution(int n, const std::vector<int>& sigma, const std::vector<int>& gamma) {
  return FiniteSolution(n, sigma, gamma);
}

std::vector<int> constant_rows(int n, bool row_value) {
  // row_value: row x is constant x; otherwise every row is the identity.
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[x * n + y] = row_value ? x : y;
  return t;
}

FiniteSolution make_flip(int n) {
  return table_solution(n, constant_rows(n, false), constant_rows(n, false));
}

FiniteSolution make_identity_map(int n) {
  return table_solution(n, constant_rows(n, true), constant_rows(n, true));
}

FiniteSolution make_constant(int n) {
  return table_solution(n, constant_rows(n, true), constant_rows(n, false));
}

FiniteSolution make_constant_dual(int n) {
  return table_solution(n, constant_rows(n, false), constant_rows(n, true));
}

FiniteSolution make_skew_lattice() {
  // sigma_x(y) = x meet y, gamma_y(x) = y join x on S = {0,1,2}.
  std::vector<int> meet = {0, 0, 0, 0, 1, 2, 0, 1, 2};
  std::vector<int> join = {0, 1, 2, 1, 1, 1, 2, 2, 2};
  return table_solution(3, meet, join);
}

FiniteSolution make_sym3_conj() {
  // Labeling 0=e, 1=(1,2), 2=(1,3), 3=(2,3), 4=(1,2,3), 5=(1,3,2);
  // r(a,b) = (a b a^-1, a).
  const std::array<std::array<int, 3>, 6> perm = {{{0, 1, 2},
                                                   {1, 0, 2},
                                                   {2, 1, 0},
                                                   {0, 2, 1},
                                                   {1, 2, 0},
                                                   {2, 0, 1}}};
  auto index_of = [&](const std::array<int, 3>& q) {
    for (int i = 0; i < 6; ++i)
      if (perm[i] == q) return i;
    throw std::logic_error("sym3 table: not a permutation of the listed six");
  };
  auto conj = [&](int a, int b) {
    std::array<int, 3> inv_a{};
    for (int i = 0; i < 3; ++i) inv_a[perm[a][i]] = i;
    std::array<int, 3> q{};
    for (int i = 0; i < 3; ++i) q[i] = perm[a][perm[b][inv_a[i]]];
    return index_of(q);
  };
  std::vector<int> sigma(36), gamma(36);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      sigma[a * 6 + b] = conj(a, b);
      gamma[a * 6 + b] = b;  // gamma_a = id
    }
  return table_solution(6, sigma, gamma);
}

FiniteSolution make_nat_trunc(int cap) {
  const int n = cap + 1;
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[x * n + y] = std::max(0, y - 1);
  return table_solution(n, t, t);
}

PropertyReport flags(bool ybe, bool ln, bool rn, bool inv, bool rbij, bool irs, bool irg) {
  PropertyReport p;
  p.ybe1 = p.ybe2 = p.ybe3 = p.is_ybe = ybe;
  p.left_nondegenerate = ln;
  p.right_nondegenerate = rn;
  p.involutive = inv;
  p.r_bijective = rbij;
  p.irretractable_sigma = irs;
  p.irretractable_gamma = irg;
  return p;
}

std::vector<Fixture> build_fixtures() {
  std::vector<Fixture> out;
  out.push_back({"flip2", make_flip(2), "r(x,y) = (y,x) on two points",
                 flags(true, true, true, true, true, false, false)});
  out.push_back({"flip3", make_flip(3), "r(x,y) = (y,x) on three points",
                 flags(true, true, true, true, true, false, false)});
  out.push_back({"identity_map", make_identity_map(2),
                 "r = id on two points; M is the free monoid",
                 flags(true, false, false, true, true, true, true)});
  out.push_back({"constant2", make_constant(2), "r(x,y) = (x,x) on two points",
                 flags(true, false, true, false, false, true, false)});
  out.push_back({"constant3", make_constant(3), "r(x,y) = (x,x) on three points",
                 flags(true, false, true, false, false, true, false)});
  out.push_back({"constant_dual2", make_constant_dual(2), "r(x,y) = (y,y) on two points",
                 flags(true, true, false, false, false, false, true)});
  out.push_back({"constant_dual3", make_constant_dual(3), "r(x,y) = (y,y) on three points",
                 flags(true, true, false, false, false, false, true)});
  out.push_back({"skew_lattice", make_skew_lattice(),
                 "r(x,y) = (x meet y, y join x) for the skew lattice on {0,1,2}",
                 flags(true, false, false, false, false, false, true)});
  out.push_back({"sym3_conj", make_sym3_conj(),
                 "conjugation solution r(a,b) = (aba^-1, a) on Sym3; labeling "
                 "0=e 1=(1,2) 2=(1,3) 3=(2,3) 4=(1,2,3) 5=(1,3,2)",
                 flags(true, true, true, false, true, true, false)});
  out.push_back({"nat_trunc_4", make_nat_trunc(4),
                 "sigma_x = gamma_x = xi with xi(x) = max(0, x-1) on {0,...,4}",
                 flags(true, false, false, false, false, false, false)});
  return out;
}

}  // namespace

const std::vector<Fixture>& builtin_examples() {
  static const std::vector<Fixture> fixtures = build_fixtures();
  return fixtures;
}

const Fixture& fixture(const std::string& name) {
  for (const Fixture& f : builtin_examples())
    if (f.name == name) return f;
  throw std::invalid_argument("unknown fixture: " + name);
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const Fixture& f : builtin_examples()) out.push_back(f.name);
  return out;
}

namespace {

// Writes the sigma/gamma rows selected by a mixed-radix tuple of permutation
// indices into a flat table.
void fill_rows(int n, const std::vector<std::vector<int>>& perms, std::uint64_t tuple,
               std::vector<int>& table) {
  const std::uint64_t base = perms.size();
  for (int x = n - 1; x >= 0; --x) {
    const std::vector<int>& row = perms[tuple % base];
    std::copy(row.begin(), row.end(), table.begin() + x * n);
    tuple /= base;
  }
}

std::vector<FiniteSolution> enumerate_nondegenerate_pruned4();

}  // namespace

std::vector<FiniteSolution> enumerate_nondegenerate(int n) {
  if (n < 1 || n > 4)
    throw std::invalid_argument("enumerate_nondegenerate: supported range is 1 <= n <= 4");
  if (n == 4) return enumerate_nondegenerate_pruned4();
  const auto perms = permutations_of(n);
  const std::uint64_t tuples = pow_i64(static_cast<int>(perms.size()), n);
  std::vector<FiniteSolution> out;
  std::vector<int> sigma(n * n), gamma(n * n);
  for (std::uint64_t st = 0; st < tuples; ++st) {
    fill_rows(n, perms, st, sigma);
    for (std::uint64_t gt = 0; gt < tuples; ++gt) {
      fill_rows(n, perms, gt, gamma);
      if (braid_direct_raw(n, sigma.data(), gamma.data()))
        out.push_back(FiniteSolution(n, sigma, gamma));
    }
  }
  return out;
}

namespace {

std::vector<FiniteSolution> enumerate_nondegenerate_pruned4() {
  const int n = 4;
  const auto perms = permutations_of(n);
  const int np = static_cast<int>(perms.size());
  std::vector<FiniteSolution> out;
  const std::uint64_t tuples = pow_i64(np, n);
  std::vector<int> sigma(n * n), conj_sigma(n * n), gamma(n * n);
  for (std::uint64_t st = 0; st < tuples; ++st) {
    fill_rows(n, perms, st, sigma);
    // Keep only sigma-families that are lex-least under simultaneous
    // relabeling x -> p(x), sigma'_x = p sigma_{p^-1(x)} p^-1.
    bool canonical = true;
    for (int pi_idx = 0; pi_idx < np && canonical; ++pi_idx) {
      const std::vector<int>& p = perms[pi_idx];
      std::array<int, 4> pinv{};
      for (int i = 0; i < n; ++i) pinv[p[i]] = i;
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          conj_sigma[x * n + y] = p[sigma[pinv[x] * n + pinv[y]]];
      if (std::lexicographical_compare(conj_sigma.begin(), conj_sigma.end(), sigma.begin(),
                                       sigma.end()))
        canonical = false;
    }
    if (!canonical) continue;

    // The first braid condition pins sigma_{gamma_y(x)} = sigma_{sigma_x(y)}^-1
    // sigma_x sigma_y, so gamma_y(x) ranges over the fiber of that permutation.
    std::array<std::array<std::vector<int>, 4>, 4> fiber;  // [y][x]
    bool feasible = true;
    for (int x = 0; x < n && feasible; ++x)
      for (int y = 0; y < n && feasible; ++y) {
        const int* sx = sigma.data() + x * n;
        const int* sy = sigma.data() + y * n;
        const int* sxy = sigma.data() + sx[y] * n;
        std::array<int, 4> sxy_inv{};
        for (int i = 0; i < n; ++i) sxy_inv[sxy[i]] = i;
        std::array<int, 4> q{};
        for (int i = 0; i < n; ++i) q[i] = sxy_inv[sx[sy[i]]];
        std::vector<int> zs;
        for (int z = 0; z < n; ++z)
          if (std::equal(sigma.begin() + z * n, sigma.begin() + (z + 1) * n, q.begin())) zs.push_back(z);
        if (zs.empty()) feasible = false;
        fiber[y][x] = std::move(zs);
      }
    if (!feasible) continue;

    // Per-row candidates for gamma_y as a permutation hitting the fibers.
    std::array<std::vector<std::array<int, 4>>, 4> row_cands;
    for (int y = 0; y < n && feasible; ++y) {
      std::array<int, 4> row{};
      std::array<bool, 4> used{};
      auto dfs = [&](auto&& self, int x) -> void {
        if (x == n) {
          row_cands[y].push_back(row);
          return;
        }
        for (int z : fiber[y][x]) {
          if (used[z]) continue;
          used[z] = true;
          row[x] = z;
          self(self, x + 1);
          used[z] = false;
        }
      };
      dfs(dfs, 0);
      if (row_cands[y].empty()) feasible = false;
    }
    if (!feasible) continue;

    std::array<std::size_t, 4> pick{};
    while (true) {
      for (int y = 0; y < n; ++y)
        for (int x = 0; x < n; ++x) gamma[y * n + x] = row_cands[y][pick[y]][x];
      if (braid_direct_raw(n, sigma.data(), gamma.data()))
        out.push_back(FiniteSolution(n, sigma, gamma));
      int y = n - 1;
      while (y >= 0 && ++pick[y] == row_cands[y].size()) pick[y--] = 0;
      if (y < 0) break;
    }
  }
  return out;
}

}  // namespace

void enumerate_gamma_bijective(int n, const std::function<void(const FiniteSolution&)>& visit) {
  if (n < 1 || n > 3)
    throw std::invalid_argument("enumerate_gamma_bijective: supported range is 1 <= n <= 3");
  const auto perms = permutations_of(n);
  const std::uint64_t sigma_tables = pow_i64(n, n * n);
  const std::uint64_t gamma_tuples = pow_i64(static_cast<int>(perms.size()), n);
  std::vector<int> sigma(n * n), gamma(n * n);
  for (std::uint64_t si = 0; si < sigma_tables; ++si) {
    std::uint64_t s = si;
    for (int i = n * n - 1; i >= 0; --i) {
      sigma[i] = static_cast<int>(s % n);
      s /= n;
    }
    for (std::uint64_t gt = 0; gt < gamma_tuples; ++gt) {
      fill_rows(n, perms, gt, gamma);
      visit(FiniteSolution(n, sigma, gamma));
    }
  }
}

std::uint64_t gamma_bijective_count(int n) {
  if (n < 1 || n > 3)
    throw std::invalid_argument("enumerate_gamma_bijective: supported range is 1 <= n <= 3");
  std::uint64_t factorial = 1;
  for (int i = 2; i <= n; ++i) factorial *= i;
  return pow_i64(n, n * n) * pow_i64(static_cast<int>(factorial), n);
}

SolutionClass canonical_label(const FiniteSolution& s) {
  const int n = s.n();
  if (n > 6) throw std::invalid_argument("canonical_label: supported up to n = 6");
  const auto perms = permutations_of(n);
  std::vector<int> best;
  std::vector<std::vector<int>> seen;
  for (const auto& p : perms) {
    std::vector<int> pinv(n);
    for (int i = 0; i < n; ++i) pinv[p[i]] = i;
    std::vector<int> flat(2 * n * n);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        flat[x * n + y] = p[s.sigma(pinv[x], pinv[y])];
        flat[n * n + x * n + y] = p[s.gamma(pinv[x], pinv[y])];
      }
    if (best.empty() || flat < best) best = flat;
    if (std::find(seen.begin(), seen.end(), flat) == seen.end()) seen.push_back(flat);
  }
  FiniteSolution canon(n, std::vector<int>(best.begin(), best.begin() + n * n),
                       std::vector<int>(best.begin() + n * n, best.end()));
  return SolutionClass{canon, static_cast<int>(seen.size())};
}

std::uint64_t CampaignReport::tally(const std::string& key) const {
  for (const auto& [k, v] : tallies)
    if (k == key) return v;
  return 0;
}

namespace {

void bump(CampaignReport& rep, const std::string& key, std::uint64_t delta = 1) {
  for (auto& [k, v] : rep.tallies)
    if (k == key) {
      v += delta;
      return;
    }
  rep.tallies.emplace_back(key, delta);
}

std::string describe_tables(const FiniteSolution& s) {
  std::string out = "sigma=";
  for (int v : s.sigma_flat()) out += std::to_string(v);
  out += " gamma=";
  for (int v : s.gamma_flat()) out += std::to_string(v);
  return out;
}

}  // namespace

CampaignReport campaign_main_irr(int n) {
  if (n < 1 || n > 3) throw std::invalid_argument("campaign_main_irr: supported for n <= 3");
  auto t0 = Clock::now();
  CampaignReport rep;
  rep.name = "main_irr";
  rep.n = n;
  const auto perms = permutations_of(n);
  const std::uint64_t tuples = pow_i64(static_cast<int>(perms.size()), n);
  std::vector<int> sigma(n * n), gamma(n * n);
  for (std::uint64_t st = 0; st < tuples; ++st) {
    fill_rows(n, perms, st, sigma);
    for (std::uint64_t gt = 0; gt < tuples; ++gt) {
      fill_rows(n, perms, gt, gamma);
      ++rep.candidates;
      if (!braid_direct_raw(n, sigma.data(), gamma.data())) continue;
      ++rep.solutions;
      FiniteSolution s(n, sigma, gamma);
      PropertyReport props = properties(s);
      if (props.involutive) bump(rep, "involutive");
      if (!props.irretractable_sigma) continue;
      bump(rep, "irretractable");
      if (!props.r_bijective)
        rep.violations.push_back("irretractable solution with non-bijective r: " +
                                 describe_tables(s));
      Transformation h = h_map(s);
      if (!is_permutation(h))
        rep.violations.push_back("h map not bijective: " + describe_tables(s));
      else {
        bool inverse_ok = true;
        for (int x = 0; x < n && inverse_ok; ++x) {
          int ginv_x = inverse(s.gamma_row(x))(x);
          inverse_ok = h(ginv_x) == x;
        }
        if (!inverse_ok)
          rep.violations.push_back("h inverse is not x -> gamma_x^-1(x): " + describe_tables(s));
      }
      auto fixed = fixed_pairs(s);
      std::vector<int> row_count(n, 0), col_count(n, 0);
      for (auto [x, y] : fixed) {
        ++row_count[x];
        ++col_count[y];
      }
      for (int x = 0; x < n; ++x)
        if (row_count[x] != 1 || col_count[x] != 1) {
          rep.violations.push_back("fixed pairs not unique per row/column: " + describe_tables(s));
          break;
        }
    }
  }
  rep.elapsed_seconds = seconds_since(t0);
  return rep;
}

CampaignReport campaign_rump(int n, int jobs) {
  if (n < 1 || n > 3) throw std::invalid_argument("campaign_rump: supported for n <= 3");
  auto t0 = Clock::now();
  CampaignReport rep;
  rep.name = "rump";
  rep.n = n;

  const auto perms = permutations_of(n);
  const int np = static_cast<int>(perms.size());
  const std::uint64_t gamma_tuples = pow_i64(np, n);
  // Precompute every gamma table with its inverse rows.
  std::vector<std::vector<int>> gammas(gamma_tuples), gamma_invs(gamma_tuples);
  for (std::uint64_t gt = 0; gt < gamma_tuples; ++gt) {
    std::vector<int> g(n * n), ginv(n * n);
    fill_rows(n, perms, gt, g);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) ginv[x * n + g[x * n + y]] = y;
    gammas[gt] = std::move(g);
    gamma_invs[gt] = std::move(ginv);
  }

  const std::uint64_t sigma_tables = pow_i64(n, n * n);
  struct Chunk {
    std::uint64_t candidates = 0, solutions = 0;
    std::vector<std::string> violations;
  };
  const std::uint64_t chunk_size = 128;
  const std::uint64_t chunk_count = (sigma_tables + chunk_size - 1) / chunk_size;
  std::vector<Chunk> chunks(chunk_count);
  std::atomic<std::uint64_t> next{0};

  auto worker = [&]() {
    std::vector<int> sigma(n * n);
    for (;;) {
      std::uint64_t ci = next.fetch_add(1);
      if (ci >= chunk_count) return;
      Chunk& chunk = chunks[ci];
      const std::uint64_t lo = ci * chunk_size;
      const std::uint64_t hi = std::min(sigma_tables, lo + chunk_size);
      for (std::uint64_t si = lo; si < hi; ++si) {
        std::uint64_t sv = si;
        for (int i = n * n - 1; i >= 0; --i) {
          sigma[i] = static_cast<int>(sv % n);
          sv /= n;
        }
        for (std::uint64_t gt = 0; gt < gamma_tuples; ++gt) {
          ++chunk.candidates;
          bool braid = braid_direct_raw(n, sigma.data(), gammas[gt].data());
          bool rump = rump_all_raw(n, sigma.data(), gamma_invs[gt].data());
          if (braid) ++chunk.solutions;
          if (braid != rump) {
            std::string sig_str, gam_str;
            for (int v : sigma) sig_str += std::to_string(v);
            for (int v : gammas[gt]) gam_str += std::to_string(v);
            chunk.violations.push_back("braid=" + std::to_string(braid) +
                                       " rump=" + std::to_string(rump) + " sigma=" + sig_str +
                                       " gamma=" + gam_str);
          }
        }
      }
    }
  };

  int worker_count = jobs > 0 ? jobs : static_cast<int>(std::thread::hardware_concurrency());
  if (worker_count < 1) worker_count = 1;
  worker_count = static_cast<int>(std::min<std::uint64_t>(worker_count, chunk_count));
  std::vector<std::thread> pool;
  for (int i = 1; i < worker_count; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  for (const Chunk& chunk : chunks) {
    rep.candidates += chunk.candidates;
    rep.solutions += chunk.solutions;
    rep.violations.insert(rep.violations.end(), chunk.violations.begin(), chunk.violations.end());
  }
  bump(rep, "workers", static_cast<std::uint64_t>(worker_count));
  rep.elapsed_seconds = seconds_since(t0);
  return rep;
}

namespace {

// One solution's contribution to the cocycle campaign.
void cocycle_check_solution(CampaignReport& rep, const FiniteSolution& s, int max_degree) {
  BijectivityReport b = bijectivity_report(s, max_degree);
  auto all_bij = [](const std::vector<CocycleDegreeStatus>& v) {
    for (const auto& st : v)
      if (!st.injective || !st.surjective) return false;
    return true;
  };
  if (!b.consistent)
    rep.violations.push_back("inconsistent bijectivity report: " + describe_tables(s));
  if (all_bij(b.pi_status) != b.left_nondegenerate)
    rep.violations.push_back("pi bijectivity does not match left non-degeneracy: " +
                             describe_tables(s));
  if (all_bij(b.pi_prime_status) != b.right_nondegenerate)
    rep.violations.push_back("pi' bijectivity does not match right non-degeneracy: " +
                             describe_tables(s));
  if (b.left_nondegenerate) bump(rep, "left_nondegenerate");
  if (b.right_nondegenerate) bump(rep, "right_nondegenerate");
}

}  // namespace

CampaignReport campaign_cocycle(int n, int max_degree, std::uint64_t seed) {
  if (n < 1 || n > 3) throw std::invalid_argument("campaign_cocycle: supported for n <= 3");
  if (max_degree < 2) throw std::invalid_argument("campaign_cocycle: needs max degree >= 2");
  auto t0 = Clock::now();
  CampaignReport rep;
  rep.name = "cocycle";
  rep.n = n;
  rep.max_degree = max_degree;
  rep.seed = seed;

  if (n <= 2) {
    // Exhaustive over every map pair.
    const std::uint64_t tables = pow_i64(n, n * n);
    std::vector<int> sigma(n * n), gamma(n * n);
    for (std::uint64_t si = 0; si < tables; ++si) {
      std::uint64_t sv = si;
      for (int i = n * n - 1; i >= 0; --i) {
        sigma[i] = static_cast<int>(sv % n);
        sv /= n;
      }
      for (std::uint64_t gi = 0; gi < tables; ++gi) {
        std::uint64_t gv = gi;
        for (int i = n * n - 1; i >= 0; --i) {
          gamma[i] = static_cast<int>(gv % n);
          gv /= n;
        }
        ++rep.candidates;
        if (!braid_direct_raw(n, sigma.data(), gamma.data())) continue;
        ++rep.solutions;
        cocycle_check_solution(rep, FiniteSolution(n, sigma, gamma), max_degree);
      }
    }
  } else {
    // Exhaustive over the non-degenerate family.
    std::uint64_t factorial = 1;
    for (int i = 2; i <= n; ++i) factorial *= i;
    for (const FiniteSolution& s : enumerate_nondegenerate(n)) {
      ++rep.solutions;
      bump(rep, "nondegenerate_solutions");
      cocycle_check_solution(rep, s, max_degree);
    }
    rep.candidates += pow_i64(static_cast<int>(factorial), 2 * n);
    // Plus seeded random map pairs from the full space.
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> letter(0, n - 1);
    const int sample_count = 10000;
    std::vector<int> sigma(n * n), gamma(n * n);
    for (int t = 0; t < sample_count; ++t) {
      for (int& v : sigma) v = letter(rng);
      for (int& v : gamma) v = letter(rng);
      ++rep.candidates;
      bump(rep, "sampled");
      if (!braid_direct_raw(n, sigma.data(), gamma.data())) continue;
      ++rep.solutions;
      bump(rep, "sampled_solutions");
      cocycle_check_solution(rep, FiniteSolution(n, sigma, gamma), max_degree);
    }
  }
  rep.elapsed_seconds = seconds_since(t0);
  return rep;
}

CampaignReport campaign_growth(int n, int max_degree) {
  if (n < 1 || n > 3) throw std::invalid_argument("campaign_growth: supported for n <= 3");
  auto t0 = Clock::now();
  CampaignReport rep;
  rep.name = "growth";
  rep.n = n;
  rep.max_degree = max_degree;

  auto binomial = [](int top, int bottom) {
    std::uint64_t out = 1;
    for (int i = 1; i <= bottom; ++i) out = out * (top - bottom + i) / i;
    return out;
  };

  for (const FiniteSolution& s : enumerate_nondegenerate(n)) {
    ++rep.candidates;
    ++rep.solutions;
    std::vector<int> ga = growth(PresentationKind::A, s, max_degree);
    std::vector<int> gm = growth(PresentationKind::M, s, max_degree);
    PropertyReport props = properties(s);
    if (props.involutive) {
      bump(rep, "involutive");
      for (int d = 0; d <= max_degree; ++d)
        if (static_cast<std::uint64_t>(ga[d]) != binomial(n + d - 1, d)) {
          rep.violations.push_back("involutive A-growth not free abelian: " + describe_tables(s));
          break;
        }
    }
    if (gm != ga)
      rep.violations.push_back("M-growth differs from A-growth: " + describe_tables(s));
  }
  rep.elapsed_seconds = seconds_since(t0);
  return rep;
}

}  // namespace ybe
