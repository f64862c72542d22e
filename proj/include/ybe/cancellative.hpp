#pragma once

// Window-truncated left-cancellative congruence eta on the additive monoid of
// a left non-degenerate solution (the A-operation transported along pi), the
// quotient Mbar with its induced operations, the difference map c(a,b), and
// the induced solutions on Mbar.
//
// All eta results are lower approximations: a merge is definitive, a
// non-merge only means no witness exists inside the (D, W) window.

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ybe/actions.hpp"
#include "ybe/base.hpp"
#include "ybe/solution.hpp"
#include "ybe/words.hpp"

namespace ybe {

struct WindowError : std::runtime_error {
  explicit WindowError(const std::string& what) : std::runtime_error(what) {}
};
// c_of found no candidate inside the window.
struct WindowTooSmallError : WindowError {
  explicit WindowTooSmallError(const std::string& what) : WindowError(what) {}
};
// c_of found several candidates: the window is not yet left cancellative.
struct AmbiguousWithinWindowError : WindowError {
  explicit AmbiguousWithinWindowError(const std::string& what) : WindowError(what) {}
};

class EtaWindow {
 public:
  EtaWindow(const FiniteSolution& s, int window_degree, int witness_bound);

  const FiniteSolution& solution() const { return *solution_; }
  int window_degree() const { return window_degree_; }
  int witness_bound() const { return witness_bound_; }
  bool stable_within_window() const { return stable_; }

  const GradedQuotient& m_quotient() const { return *qm_; }
  const GradedQuotient& a_quotient() const { return *qa_; }

  int eta_class_count(int degree) const;
  int eta_class_of_a_class(int degree, int a_class) const;
  int eta_class_of(const Word& w) const;
  // The M-class mapping onto an A-class under pi (a bijection per degree).
  int m_class_of_a_class(int degree, int a_class) const;
  // Lex-least A-representative among the merged A-classes.
  Word rep(int degree, int eta_class) const;
  // The lambda-bar transformation attached to an eta class (the
  // sigma-composite of the M-preimage under pi; constant on the class).
  const Transformation& act(int degree, int eta_class) const;
  // Non-trivially merged A-class pairs (reps), per degree, deterministic order.
  std::vector<std::pair<Word, Word>> merged_pairs(int degree) const;

 private:
  void check_degree(int degree) const;

  std::shared_ptr<const FiniteSolution> solution_;
  std::shared_ptr<const GradedQuotient> qm_, qa_;
  int window_degree_, witness_bound_;
  bool stable_ = false;
  std::vector<std::vector<int>> a_to_eta_;           // degree -> A-class -> eta id
  std::vector<std::vector<int>> eta_reps_;           // degree -> eta id -> least A-class
  std::vector<std::vector<Transformation>> act_;     // degree -> eta id -> lambda-bar
  std::vector<std::vector<int>> m_to_a_, a_to_m_;    // pi bijection per degree
};

EtaWindow eta_window(const FiniteSolution& s, int window_degree, int witness_bound);

// An eta class, addressed by degree and per-degree id.
struct QClass {
  int degree = 0;
  int id = 0;
  bool operator==(const QClass&) const = default;
  auto operator<=>(const QClass&) const = default;
};

// The quotient Mbar within the window: class arithmetic for +, the circle
// operation a.b = a + lambda_bar_a(b), and the lambda-bar action.
class QuotientMonoid {
 public:
  explicit QuotientMonoid(EtaWindow window) : w_(std::move(window)) {}

  const EtaWindow& window() const { return w_; }
  const FiniteSolution& solution() const { return w_.solution(); }

  QClass cls(const Word& w) const;
  Word rep(QClass c) const { return w_.rep(c.degree, c.id); }
  QClass add(QClass a, QClass b) const;
  QClass lambda_bar(QClass a, QClass b) const;
  QClass lambda_bar_inverse(QClass a, QClass b) const;
  QClass circle(QClass a, QClass b) const;  // a + lambda_bar_a(b)

 private:
  EtaWindow w_;
};

// True when no further eta_0-style merge is possible inside the window; false
// signals the window must grow before the quotient can be trusted.
bool is_left_cancellative_within(const QuotientMonoid& qm);

struct CongruenceReport {
  bool lambda_stable = true;      // merged pairs share their transformation
  bool action_stable = true;      // eta closed under lambda'_z and its inverse
  bool circle_compatible = true;  // eta is a congruence for the circle operation
  std::optional<std::string> first_violation;
};

CongruenceReport congruence_checks(const EtaWindow& ew);

// The unique class c with a + b = b + c in Mbar, searched among classes of
// degree deg(a). Throws WindowTooSmallError / AmbiguousWithinWindowError.
QClass c_of(const QuotientMonoid& qm, QClass a, QClass b);

// r'(a,b) = (b, c(a,b)).
std::pair<QClass, QClass> r_prime_bar(const QuotientMonoid& qm, QClass a, QClass b);

// rbar(a,b) = (lambda_a(b), lambda^{-1}_{lambda_a(b)}(c(a, lambda_a(b)))).
std::pair<QClass, QClass> r_bar(const QuotientMonoid& qm, QClass a, QClass b);

// True when no two distinct generators are eta-merged at degree 1.
bool injective_solution(const FiniteSolution& s, const EtaWindow& ew);

struct SemiTrussReport {
  bool axiom_holds = true;        // a.(b+c) = (a.b) + lambda'_a(c)
  bool left_normality = true;     // for sampled (b,a): some c solves b+a = a+c
  bool right_normality = true;    // mirror, checked when r is bijective
  bool right_normality_checked = false;
  std::uint64_t triples_checked = 0;
  std::optional<std::string> first_violation;
};

SemiTrussReport semi_truss_checks(const FiniteSolution& s, const QuotientMonoid& qm,
                                  std::uint64_t seed = 0, int samples = 1000);

}  // namespace ybe
