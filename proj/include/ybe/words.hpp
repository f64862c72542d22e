#pragma once

// Degree-truncated word problem for the three graded monoids attached to a
// finite solution: the structure monoid M and the left/right derived monoids
// A and A'. All defining relations are homogeneous of degree 2, so the monoid
// congruence restricts exactly to each degree and is computed there by
// union-find closure over single-position rewrites.

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "ybe/base.hpp"
#include "ybe/solution.hpp"

namespace ybe {

enum class PresentationKind { M, A, Ap };

const char* to_string(PresentationKind k);

struct RelationSet {
  // Length-2 word pairs, lex-smaller side first, deduplicated and sorted.
  std::vector<std::pair<std::array<int, 2>, std::array<int, 2>>> pairs;
};

RelationSet relations(PresentationKind kind, const FiniteSolution& s);

class GradedQuotient {
 public:
  // Builds the class partition for every degree 0..max_degree.
  // Throws std::length_error when n^d would exceed kMaxWordsPerDegree.
  GradedQuotient(PresentationKind kind, const FiniteSolution& s, int max_degree);

  PresentationKind kind() const { return kind_; }
  const FiniteSolution& solution() const { return solution_; }
  int max_degree() const { return max_degree_; }

  int class_count(int degree) const;
  // Class ids are per degree, ordered by canonical representative.
  int class_of(const Word& w) const;
  // Lexicographically least member of the class of w.
  Word normal_form(const Word& w) const;
  bool equal(const Word& a, const Word& b) const;
  // normal_form of the concatenation; throws std::out_of_range past the window.
  Word multiply(const Word& a, const Word& b) const;
  Word rep(int degree, int cls) const;
  std::vector<Word> class_members(int degree, int cls) const;
  // Class counts for degrees 0..max_degree.
  std::vector<int> growth() const;

 private:
  void check_degree(int degree) const;
  std::int64_t encode(const Word& w) const;
  Word decode(int degree, std::int64_t index) const;

  PresentationKind kind_;
  FiniteSolution solution_;
  int max_degree_;
  std::vector<std::vector<std::int32_t>> cls_;   // degree -> word index -> class id
  std::vector<std::vector<std::int64_t>> reps_;  // degree -> class id -> least index
};

std::vector<int> growth(PresentationKind kind, const FiniteSolution& s, int max_degree);

}  // namespace ybe
