#include "ybe/actions.hpp"

#include <stdexcept>

namespace ybe {

Transformation sigma_composite(const FiniteSolution& s, const Word& a) {
  Transformation t = Transformation::identity(s.n());
  // sigma_{a_1} o ... o sigma_{a_m}: compose left to right, rightmost inner.
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    Transformation step = s.sigma_row(*it);
    t = compose(step, t);
  }
  return t;
}

Transformation gamma_composite(const FiniteSolution& s, const Word& a) {
  Transformation t = Transformation::identity(s.n());
  // gamma_{a_m} o ... o gamma_{a_1}: leftmost letter acts first.
  for (int letter : a) {
    Transformation step = s.gamma_row(letter);
    t = compose(step, t);
  }
  return t;
}

namespace {

Word lambda_letter(const FiniteSolution& s, int x, const Word& b) {
  Word out(b.size());
  int cur = x;
  for (std::size_t i = 0; i < b.size(); ++i) {
    out[i] = s.sigma(cur, b[i]);
    cur = s.gamma(b[i], cur);
  }
  return out;
}

Word rho_letter(const FiniteSolution& s, int x, const Word& b) {
  Word out(b.size());
  int cur = x;
  for (std::size_t i = b.size(); i-- > 0;) {
    out[i] = s.gamma(cur, b[i]);
    cur = s.sigma(b[i], cur);
  }
  return out;
}

}  // namespace

Word lambda_m(const FiniteSolution& s, const Word& a, const Word& b) {
  Word out = b;
  for (auto it = a.rbegin(); it != a.rend(); ++it) out = lambda_letter(s, *it, out);
  return out;
}

Word rho_m(const FiniteSolution& s, const Word& a, const Word& b) {
  Word out = b;
  for (int letter : a) out = rho_letter(s, letter, out);
  return out;
}

namespace {

Word concat(const Word& a, const Word& b) {
  Word c = a;
  c.insert(c.end(), b.begin(), b.end());
  return c;
}

}  // namespace

bool r_m_check(const GradedQuotient& qm, const Word& a, const Word& b, const Word& c) {
  if (qm.kind() != PresentationKind::M)
    throw std::invalid_argument("r_m_check: quotient must be the structure-monoid one");
  const FiniteSolution& s = qm.solution();
  const int D = qm.max_degree();
  const int la = static_cast<int>(a.size()), lb = static_cast<int>(b.size()),
            lc = static_cast<int>(c.size());
  if (la + lb > D || la + lc > D || lb + lc > D)
    throw std::out_of_range("r_m_check: pairwise degree sums exceed the window");

  // a.b = lambda_a(b) . rho_b(a)
  if (!qm.equal(concat(a, b), concat(lambda_m(s, a, b), rho_m(s, b, a)))) return false;
  // rho_b(c.a) = rho_{lambda_a(b)}(c) . rho_b(a)
  if (!qm.equal(rho_m(s, b, concat(c, a)),
                concat(rho_m(s, lambda_m(s, a, b), c), rho_m(s, b, a))))
    return false;
  // lambda_b(a.c) = lambda_b(a) . lambda_{rho_a(b)}(c)
  if (!qm.equal(lambda_m(s, b, concat(a, c)),
                concat(lambda_m(s, b, a), lambda_m(s, rho_m(s, a, b), c))))
    return false;

  // Braid identity of r_M on the triple, compared componentwise in M.
  auto rM = [&](Word& u, Word& v) {
    Word lu = lambda_m(s, u, v);
    Word rv = rho_m(s, v, u);
    u = std::move(lu);
    v = std::move(rv);
  };
  Word a1 = a, b1 = b, c1 = c;
  rM(a1, b1);
  rM(b1, c1);
  rM(a1, b1);
  Word a2 = a, b2 = b, c2 = c;
  rM(b2, c2);
  rM(a2, b2);
  rM(b2, c2);
  return qm.equal(a1, a2) && qm.equal(b1, b2) && qm.equal(c1, c2);
}

Word lambda_prime(const FiniteSolution& s, const Word& a, const Word& w) {
  Transformation t = sigma_composite(s, a);
  Word out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = t(w[i]);
  return out;
}

Word rho_prime(const FiniteSolution& s, const Word& a, const Word& w) {
  Transformation t = gamma_composite(s, a);
  Word out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = t(w[i]);
  return out;
}

Word pi(const FiniteSolution& s, const Word& w) {
  Word out(w.size());
  Transformation t = Transformation::identity(s.n());
  for (std::size_t i = 0; i < w.size(); ++i) {
    out[i] = t(w[i]);
    t = compose(t, s.sigma_row(w[i]));
  }
  return out;
}

Word pi_prime(const FiniteSolution& s, const Word& w) {
  const std::size_t m = w.size();
  Word out(m);
  // out[i] = gamma_{w_m} ... gamma_{w_{i+1}}(w_i); build from the right.
  Transformation t = Transformation::identity(s.n());
  for (std::size_t i = m; i-- > 0;) {
    out[i] = t(w[i]);
    t = compose(t, s.gamma_row(w[i]));
  }
  return out;
}

SemidirectElement f_semidirect(const FiniteSolution& s, const GradedQuotient& qa, const Word& w) {
  if (qa.kind() != PresentationKind::A)
    throw std::invalid_argument("f_semidirect: quotient must be the left derived one");
  return SemidirectElement{qa.normal_form(pi(s, w)), sigma_composite(s, w)};
}

namespace {

Word cocycle_word(const GradedQuotient& qa, const Word& w) {
  return qa.kind() == PresentationKind::A ? pi(qa.solution(), w) : pi_prime(qa.solution(), w);
}

void check_cocycle_pair(const GradedQuotient& qm, const GradedQuotient& qa) {
  if (qm.kind() != PresentationKind::M || qa.kind() == PresentationKind::M)
    throw std::invalid_argument("cocycle analysis needs the M-quotient and a derived quotient");
  if (!(qm.solution() == qa.solution()))
    throw std::invalid_argument("cocycle analysis: quotients built from different solutions");
}

}  // namespace

InjectivityCheck pi_injective_at(const GradedQuotient& qm, const GradedQuotient& qa, int degree) {
  check_cocycle_pair(qm, qa);
  InjectivityCheck out;
  std::vector<int> preimage(qa.class_count(degree), -1);
  for (int m = 0; m < qm.class_count(degree); ++m) {
    int a = qa.class_of(cocycle_word(qa, qm.rep(degree, m)));
    if (preimage[a] >= 0) {
      out.injective = false;
      out.witness = {qm.rep(degree, preimage[a]), qm.rep(degree, m)};
      return out;
    }
    preimage[a] = m;
  }
  return out;
}

SurjectivityCheck pi_surjective_at(const GradedQuotient& qm, const GradedQuotient& qa, int degree) {
  check_cocycle_pair(qm, qa);
  SurjectivityCheck out;
  std::vector<char> hit(qa.class_count(degree), 0);
  for (int m = 0; m < qm.class_count(degree); ++m)
    hit[qa.class_of(cocycle_word(qa, qm.rep(degree, m)))] = 1;
  for (int a = 0; a < qa.class_count(degree); ++a)
    if (!hit[a]) {
      out.surjective = false;
      out.witness = qa.rep(degree, a);
      return out;
    }
  return out;
}

BijectivityReport bijectivity_report(const FiniteSolution& s, int max_degree) {
  BijectivityReport rep;
  rep.max_degree = max_degree;
  const int n = s.n();

  auto row_surjective = [&](auto get) {
    for (int x = 0; x < n; ++x) {
      std::vector<char> seen(n, 0);
      for (int y = 0; y < n; ++y) seen[get(x, y)] = 1;
      for (int v = 0; v < n; ++v)
        if (!seen[v]) return false;
    }
    return true;
  };
  rep.sigma_all_surjective = row_surjective([&](int x, int y) { return s.sigma(x, y); });
  rep.gamma_all_surjective = row_surjective([&](int x, int y) { return s.gamma(x, y); });

  PropertyReport props = properties(s);
  rep.left_nondegenerate = props.left_nondegenerate;
  rep.right_nondegenerate = props.right_nondegenerate;

  GradedQuotient qm(PresentationKind::M, s, max_degree);
  GradedQuotient qa(PresentationKind::A, s, max_degree);
  GradedQuotient qap(PresentationKind::Ap, s, max_degree);

  auto analyze = [&](const GradedQuotient& target) {
    std::vector<CocycleDegreeStatus> out;
    for (int d = 0; d <= max_degree; ++d) {
      CocycleDegreeStatus st;
      st.degree = d;
      auto inj = pi_injective_at(qm, target, d);
      auto surj = pi_surjective_at(qm, target, d);
      st.injective = inj.injective;
      st.collision = inj.witness;
      st.surjective = surj.surjective;
      st.missed = surj.witness;
      out.push_back(std::move(st));
    }
    return out;
  };
  rep.pi_status = analyze(qa);
  rep.pi_prime_status = analyze(qap);

  auto all_bijective = [](const std::vector<CocycleDegreeStatus>& v) {
    for (const auto& st : v)
      if (!st.injective || !st.surjective) return false;
    return true;
  };
  bool ok = true;
  // Non-degeneracy forces per-degree bijectivity.
  if (rep.left_nondegenerate && !all_bijective(rep.pi_status)) ok = false;
  if (rep.right_nondegenerate && !all_bijective(rep.pi_prime_status)) ok = false;
  // The degree-2 criterion: row surjectivity == cocycle surjectivity there.
  if (max_degree >= 2) {
    if (rep.sigma_all_surjective != rep.pi_status[2].surjective) ok = false;
    if (rep.gamma_all_surjective != rep.pi_prime_status[2].surjective) ok = false;
  }
  // Injective rows force injective cocycles.
  auto all_injective = [](const std::vector<CocycleDegreeStatus>& v) {
    for (const auto& st : v)
      if (!st.injective) return false;
    return true;
  };
  if (rep.left_nondegenerate && !all_injective(rep.pi_status)) ok = false;
  if (rep.right_nondegenerate && !all_injective(rep.pi_prime_status)) ok = false;
  rep.consistent = ok;
  return rep;
}

}  // namespace ybe
