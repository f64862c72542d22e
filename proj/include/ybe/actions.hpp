#pragma once

// The extended solution (M, r_M) on the structure monoid, the diagonal
// actions lambda'/rho' on the derived monoids, the 1-cocycles pi and pi',
// the semidirect embedding, and per-degree injectivity/surjectivity analysis
// of the cocycles.

#include <optional>
#include <utility>
#include <vector>

#include "ybe/base.hpp"
#include "ybe/solution.hpp"
#include "ybe/words.hpp"

namespace ybe {

// sigma_{a_1} o ... o sigma_{a_m} (rightmost applied first).
Transformation sigma_composite(const FiniteSolution& s, const Word& a);
// gamma_{a_m} o ... o gamma_{a_1} (leftmost applied first).
Transformation gamma_composite(const FiniteSolution& s, const Word& a);

// lambda_a(b) via the letterwise recursion
//   lambda_x(y_1...y_k) = sigma_x(y_1) . lambda_{gamma_{y_1}(x)}(y_2...y_k),
// extended multiplicatively (lambda_{a_m} applied to b first).
Word lambda_m(const FiniteSolution& s, const Word& a, const Word& b);
// rho_a(b), the right-action mirror (rho_{a_1} applied to b first).
Word rho_m(const FiniteSolution& s, const Word& a, const Word& b);

// Verifies, in the M-quotient, the product identity a.b = lambda_a(b).rho_b(a),
// the two mixed identities
//   rho_b(c.a) = rho_{lambda_a(b)}(c) . rho_b(a)
//   lambda_b(a.c) = lambda_b(a) . lambda_{rho_a(b)}(c)
// and the braid identity of r_M(a,b) = (lambda_a(b), rho_b(a)) on the triple.
bool r_m_check(const GradedQuotient& qm, const Word& a, const Word& b, const Word& c);

// lambda'_a applied to an A-word / rho'_a applied to an A'-word: the
// corresponding composite transformation acting letterwise.
Word lambda_prime(const FiniteSolution& s, const Word& a, const Word& w);
Word rho_prime(const FiniteSolution& s, const Word& a, const Word& w);

// The 1-cocycle values as literal words: pi by the telescoped closed form
//   pi(x_1...x_m) = x_1 + sigma_{x_1}(x_2) + ... + sigma_{x_1}...sigma_{x_{m-1}}(x_m),
// pi' by the mirror with gamma-composites.
Word pi(const FiniteSolution& s, const Word& w);
Word pi_prime(const FiniteSolution& s, const Word& w);

struct SemidirectElement {
  Word add_part;             // normal form of pi(w) in A
  Transformation act_part;   // sigma-composite of w
  bool operator==(const SemidirectElement&) const = default;
};

// f(w) = (pi(w), lambda'_w) in A x| Im(lambda'); qa must be the A-quotient of
// the same solution.
SemidirectElement f_semidirect(const FiniteSolution& s, const GradedQuotient& qa, const Word& w);

struct InjectivityCheck {
  bool injective = true;
  // Lex-least colliding pair of distinct M-class representatives.
  std::optional<std::pair<Word, Word>> witness;
};

struct SurjectivityCheck {
  bool surjective = true;
  // Lex-least representative of a target class outside the image.
  std::optional<Word> witness;
};

// Induced class maps {M-classes at degree d} -> {A- or A'-classes at degree d}.
// qa.kind() selects the cocycle: A checks pi, Ap checks pi'.
InjectivityCheck pi_injective_at(const GradedQuotient& qm, const GradedQuotient& qa, int degree);
SurjectivityCheck pi_surjective_at(const GradedQuotient& qm, const GradedQuotient& qa, int degree);

struct CocycleDegreeStatus {
  int degree = 0;
  bool injective = true, surjective = true;
  std::optional<std::pair<Word, Word>> collision;
  std::optional<Word> missed;
};

struct BijectivityReport {
  int max_degree = 0;
  bool left_nondegenerate = false, right_nondegenerate = false;
  bool sigma_all_surjective = false, gamma_all_surjective = false;
  std::vector<CocycleDegreeStatus> pi_status;        // degrees 0..max_degree
  std::vector<CocycleDegreeStatus> pi_prime_status;  // degrees 0..max_degree
  // Cross-checks: non-degeneracy implies bijectivity at every degree, and the
  // degree-2 surjectivity criterion matches sigma/gamma surjectivity.
  bool consistent = false;
};

BijectivityReport bijectivity_report(const FiniteSolution& s, int max_degree);

}  // namespace ybe
