#pragma once

// Shared test helpers: the termwise-action oracle (independent of the
// normal-form multiplication it cross-checks) and deterministic random
// generators for property-style tests.

#include <map>
#include <random>
#include <vector>

#include "qheis/algebra.hpp"
#include "qheis/poly.hpp"

namespace qheis::test {

using Series = std::map<long, Scalar>; // finite sums of monomials a_n t^n

inline void series_add(Series& s, long n, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = s.find(n);
  if (it == s.end()) {
    s.emplace(n, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) s.erase(it);
  }
}

/// P acting on a finite Laurent sum, straight from the definition of the
/// module action: D_q^j t^k = {k}_q {k-1}_q ... {k-j+1}_q t^{k-j} (a literal
/// product of q-integers) and M^i shifts. No normal-ordering code involved.
inline Series oracle_act(const AlgebraElement& p, const Series& v) {
  const QParam& q = p.qparam();
  Series out;
  for (const auto& [k, a] : v) {
    for (const auto& [j, poly] : p.terms()) {
      Scalar w = a;
      for (int step = 0; step < j; ++step) w = w * q_int(q, k - step);
      if (w.is_zero()) continue;
      for (int i = 0; i <= poly.degree(); ++i)
        series_add(out, k - j + i, w * poly.coeff(i));
    }
  }
  return out;
}

inline Series monomial_series(const QParam& q, long k) {
  return Series{{k, Scalar::one(q.mode)}};
}

/// Fixed-seed RNG wrapper so every property test is reproducible.
struct Rng {
  std::mt19937 gen;
  explicit Rng(unsigned seed) : gen(seed) {}

  long pick(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen); }

  Rational rational(long bound = 5) {
    long num = pick(-bound, bound);
    long den = pick(1, bound);
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  Rational nonzero_rational(long bound = 5) {
    Rational r = rational(bound);
    while (r == 0) r = rational(bound);
    return r;
  }

  Scalar scalar(QMode mode, long bound = 5) {
    if (mode == QMode::numeric) return Scalar::rational(rational(bound));
    QLaurent l;
    const int nterms = static_cast<int>(pick(0, 2));
    for (int i = 0; i < nterms; ++i) l.add_term(pick(-2, 2), rational(bound));
    return Scalar::laurent(l);
  }

  UniPoly unipoly(QMode mode, int max_deg, long bound = 3) {
    std::vector<Scalar> cs;
    const int deg = static_cast<int>(pick(0, max_deg));
    for (int i = 0; i <= deg; ++i) cs.push_back(scalar(mode, bound));
    return UniPoly::from_coeffs(std::move(cs));
  }

  UniPoly integer_unipoly(QMode mode, int deg, long bound) {
    std::vector<Scalar> cs;
    for (int i = 0; i < deg; ++i) cs.push_back(Scalar::from_int(mode, pick(-bound, bound)));
    long lead = pick(1, bound);
    if (pick(0, 1)) lead = -lead;
    cs.push_back(Scalar::from_int(mode, lead)); // exact degree
    return UniPoly::from_coeffs(std::move(cs));
  }

  AlgebraElement element(const QParam& q, int max_order, int max_deg, long bound = 3) {
    AlgebraElement e(q);
    const int order = static_cast<int>(pick(0, max_order));
    for (int j = 0; j <= order; ++j)
      e = e + AlgebraElement::monomial(q, j, unipoly(q.mode, max_deg, bound));
    return e;
  }

  AlgebraElement nonzero_element(const QParam& q, int max_order, int max_deg, long bound = 3) {
    AlgebraElement e = element(q, max_order, max_deg, bound);
    while (e.is_zero()) e = element(q, max_order, max_deg, bound);
    return e;
  }

  /// Integer-coefficient element with prescribed exact order.
  AlgebraElement integer_element(const QParam& q, int order, int max_deg, long bound) {
    AlgebraElement e(q);
    for (int j = 0; j < order; ++j) {
      UniPoly p = unipoly_int_or_zero(q.mode, max_deg, bound);
      e = e + AlgebraElement::monomial(q, j, p);
    }
    return e + AlgebraElement::monomial(q, order, integer_unipoly(q.mode, static_cast<int>(pick(0, max_deg)), bound));
  }

  UniPoly unipoly_int_or_zero(QMode mode, int max_deg, long bound) {
    std::vector<Scalar> cs;
    const int deg = static_cast<int>(pick(0, max_deg));
    for (int i = 0; i <= deg; ++i) cs.push_back(Scalar::from_int(mode, pick(-bound, bound)));
    return UniPoly::from_coeffs(std::move(cs));
  }

  TriPoly tripoly(QMode mode, int max_deg = 2, long bound = 3) {
    TriPoly p;
    const int nterms = static_cast<int>(pick(0, 4));
    for (int i = 0; i < nterms; ++i)
      p.add_term(MonoXLM{static_cast<int>(pick(0, max_deg)), static_cast<int>(pick(0, 1)),
                         static_cast<int>(pick(0, 1))},
                 scalar(mode, bound));
    return p;
  }

  TriMatrix trimatrix(QMode mode, int n) {
    TriMatrix m(n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) m.at(r, c) = tripoly(mode);
    return m;
  }
};

/// Random commuting pair f(W), g(W) with W of exact order 1 or 2, integer
/// coefficients in [-3, 3], and nonconstant f, g of degree <= 2. The shared
/// recipe behind the verification corpus.
struct CorpusPair {
  AlgebraElement w, p, q;
  UniPoly f, g;
};

inline std::vector<QParam> numeric_qs() {
  return {QParam::numeric(Rational(2)), QParam::numeric(Rational(1, 2)),
          QParam::numeric(Rational(3)), QParam::numeric(Rational(1))};
}

inline std::vector<QParam> all_qs() {
  auto qs = numeric_qs();
  qs.push_back(QParam::symbolic());
  return qs;
}

inline std::vector<QParam> corpus_qs() {
  return {QParam::numeric(Rational(1)),    QParam::numeric(Rational(2)),
          QParam::numeric(Rational(1, 2)), QParam::numeric(Rational(3, 2)),
          QParam::numeric(Rational(5)),    QParam::symbolic()};
}

} // namespace qheis::test

#include "qheis/eliminant.hpp"

namespace qheis::test {

inline CorpusPair corpus_pair(Rng& rng, const QParam& q) {
  const AlgebraElement w = rng.integer_element(q, static_cast<int>(rng.pick(1, 2)), 2, 3);
  const UniPoly f = rng.integer_unipoly(q.mode, static_cast<int>(rng.pick(1, 2)), 3);
  const UniPoly g = rng.integer_unipoly(q.mode, static_cast<int>(rng.pick(1, 2)), 3);
  auto [p, qq] = make_commuting_pair(w, f, g);
  return CorpusPair{w, std::move(p), std::move(qq), f, g};
}

} // namespace qheis::test
