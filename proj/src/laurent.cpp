#include "qheis/laurent.hpp"

#include <algorithm>
#include <set>

namespace qheis {

LaurentWindow LaurentWindow::zeros(long lo, long hi) {
  if (hi < lo) fail(Errc::degenerate_window, "empty window range");
  LaurentWindow w;
  w.lo = lo;
  w.hi = hi;
  w.coeffs.assign(static_cast<size_t>(hi - lo + 1), Scalar());
  w.t_lo = lo;
  w.t_hi = hi;
  return w;
}

LaurentWindow LaurentWindow::monomial(long lo, long hi, long k, const Scalar& c) {
  LaurentWindow w = zeros(lo, hi);
  if (!w.in_window(k)) fail(Errc::degenerate_window, "monomial exponent outside window");
  w.set(k, c);
  return w;
}

Scalar LaurentWindow::at(long n) const {
  if (!in_window(n)) return Scalar();
  return coeffs[static_cast<size_t>(n - lo)];
}

void LaurentWindow::set(long n, const Scalar& c) {
  if (!in_window(n)) fail(Errc::bad_argument, "coefficient index outside window");
  coeffs[static_cast<size_t>(n - lo)] = c;
}

LaurentWindow LaurentWindow::scaled(const Scalar& s) const {
  LaurentWindow w = *this;
  for (auto& c : w.coeffs) c = c * s;
  return w;
}

LaurentWindow window_add(const LaurentWindow& a, const LaurentWindow& b) {
  if (a.lo != b.lo || a.hi != b.hi) fail(Errc::bad_argument, "window ranges differ");
  LaurentWindow w = a;
  for (size_t i = 0; i < w.coeffs.size(); ++i) w.coeffs[i] += b.coeffs[i];
  w.t_lo = std::max(a.t_lo, b.t_lo);
  w.t_hi = std::min(a.t_hi, b.t_hi);
  return w;
}

bool window_equal(const LaurentWindow& a, const LaurentWindow& b, long min_width) {
  const long lo = std::max(a.t_lo, b.t_lo);
  const long hi = std::min(a.t_hi, b.t_hi);
  if (hi - lo + 1 < min_width)
    fail(Errc::degenerate_window, "trusted overlap narrower than the configured minimum");
  for (long n = lo; n <= hi; ++n)
    if (a.at(n) != b.at(n)) return false;
  return true;
}

bool window_is_zero(const LaurentWindow& v, long min_width) {
  if (v.trusted_width() < min_width)
    fail(Errc::degenerate_window, "trusted interval narrower than the configured minimum");
  for (long n = v.t_lo; n <= v.t_hi; ++n)
    if (!v.at(n).is_zero()) return false;
  return true;
}

LaurentWindow apply_m(const QParam& q, const LaurentWindow& v) {
  (void)q;
  LaurentWindow w = LaurentWindow::zeros(v.lo, v.hi);
  for (long n = v.lo + 1; n <= v.hi; ++n) w.set(n, v.at(n - 1));
  w.t_lo = v.t_lo + 1;
  w.t_hi = std::min(v.t_hi + 1, v.hi);
  if (w.t_hi < w.t_lo) fail(Errc::degenerate_window, "trusted interval exhausted by M");
  return w;
}

LaurentWindow apply_dq(const QParam& q, const LaurentWindow& v) {
  LaurentWindow w = LaurentWindow::zeros(v.lo, v.hi);
  for (long n = v.lo; n < v.hi; ++n) w.set(n, v.at(n + 1) * q_int(q, n + 1));
  w.t_lo = std::max(v.t_lo - 1, v.lo);
  w.t_hi = v.t_hi - 1;
  if (w.t_hi < w.t_lo) fail(Errc::degenerate_window, "trusted interval exhausted by D_q");
  return w;
}

LaurentWindow act(const AlgebraElement& p, const LaurentWindow& v) {
  const QParam& q = p.qparam();
  LaurentWindow acc = LaurentWindow::zeros(v.lo, v.hi);
  LaurentWindow dq_v = v; // D_q^j v, advanced as j increases
  int current = 0;
  for (const auto& [j, pj] : p.terms()) {
    while (current < j) {
      dq_v = apply_dq(q, dq_v);
      ++current;
    }
    // pj(M) applied by Horner
    LaurentWindow term = dq_v.scaled(pj.leading());
    for (int i = pj.degree() - 1; i >= 0; --i)
      term = window_add(apply_m(q, term), dq_v.scaled(pj.coeff(i)));
    acc = window_add(acc, term);
  }
  if (acc.t_hi < acc.t_lo) fail(Errc::degenerate_window, "trusted interval exhausted");
  return acc;
}

namespace {
void require_numeric(const QParam& q, const char* what) {
  validate_q(q);
  if (q.mode != QMode::numeric)
    fail(Errc::symbolic_mode_unsupported, std::string(what) + " needs a numeric q");
}
} // namespace

std::vector<LaurentWindow> psi_chain(const QParam& q, const Rational& alpha, int s_max, long lo,
                                     long hi) {
  require_numeric(q, "psi_chain");
  if (alpha == 0) fail(Errc::bad_argument, "alpha must be nonzero");
  if (s_max < 1) fail(Errc::bad_argument, "s_max must be >= 1");
  if (hi - (s_max - 1) < lo)
    fail(Errc::degenerate_window, "window too narrow for the requested chain depth");

  std::vector<LaurentWindow> chain;
  LaurentWindow psi1 = LaurentWindow::zeros(lo, hi);
  for (long n = lo; n <= hi; ++n) psi1.set(n, Scalar::rational(rat_pow(alpha, -n)));
  chain.push_back(std::move(psi1));

  for (int s = 2; s <= s_max; ++s) {
    const LaurentWindow& b = chain.back();
    LaurentWindow w = LaurentWindow::zeros(lo, hi);
    // (M - alpha) w = b, solved downward from the normalization w(hi) = 0:
    // w(n-1) = b(n) + alpha w(n).
    w.set(hi, Scalar());
    for (long n = hi; n > lo; --n)
      w.set(n - 1, b.at(n) + Scalar::rational(alpha) * w.at(n));
    w.t_lo = lo;
    w.t_hi = hi - (s - 1);
    chain.push_back(std::move(w));
  }
  return chain;
}

std::vector<LaurentWindow> kernel_basis_factored(const QParam& q, const Rational& c, int e0,
                                                 const std::vector<std::pair<Rational, int>>& factors,
                                                 long lo, long hi) {
  require_numeric(q, "kernel_basis_factored");
  if (c == 0) fail(Errc::bad_argument, "leading coefficient must be nonzero");
  if (e0 < 0) fail(Errc::bad_argument, "negative multiplicity");
  std::set<Rational> seen;
  std::vector<LaurentWindow> basis;
  for (const auto& [alpha, e] : factors) {
    if (alpha == 0) fail(Errc::bad_argument, "factored roots must be nonzero (use e0)");
    if (e < 1) fail(Errc::bad_argument, "multiplicities must be >= 1");
    if (!seen.insert(alpha).second) fail(Errc::duplicate_root, "repeated root in factorization");
    auto chain = psi_chain(q, alpha, e, lo, hi);
    for (auto& w : chain) basis.push_back(std::move(w));
  }
  return basis;
}

bool pair_leq(const QParam& q, const PairIndex& a, const PairIndex& b) {
  require_numeric(q, "pair_leq");
  if (a.alpha == 0 || b.alpha == 0) fail(Errc::bad_argument, "indices need nonzero alpha");
  if (a.alpha == b.alpha) return a.s <= b.s;
  if (q.value == 1) return false;
  // beta = alpha / q^j for some j > 0
  auto j = exact_q_log(q.value, a.alpha / b.alpha);
  return j && *j > 0;
}

bool pair_comparable(const QParam& q, const PairIndex& a, const PairIndex& b) {
  require_numeric(q, "pair_comparable");
  if (a.alpha == b.alpha) return true;
  if (q.value == 1) return false;
  return exact_q_log(q.value, a.alpha / b.alpha).has_value();
}

namespace {
LaurentWindow apply_m_shift_poly(const QParam& q, const UniPoly& p, const LaurentWindow& v) {
  return act(AlgebraElement::in_b(q, p), v);
}

UniPoly linear_root(const QParam& q, const Rational& root) {
  return UniPoly::from_coeffs({Scalar::rational(-root), Scalar::one(q.mode)});
}
} // namespace

bool collapsed_identity_check(const QParam& q, const Rational& alpha, int s, long lo, long hi,
                              long min_width) {
  require_numeric(q, "collapsed_identity_check");
  if (alpha == 0) fail(Errc::bad_argument, "alpha must be nonzero");
  if (s < 1) fail(Errc::bad_argument, "s must be >= 1");

  auto chain = psi_chain(q, alpha, s, lo, hi);
  const LaurentWindow dq_psi = apply_dq(q, chain.back());

  if (q.value == 1) {
    const UniPoly op = linear_root(q, alpha).pow(s);
    const LaurentWindow lhs = apply_m_shift_poly(q, op, dq_psi);
    const LaurentWindow rhs = psi_chain(q, alpha, 1, lo, hi)[0].scaled(Scalar::rational(Rational(-s)));
    return window_equal(lhs, rhs, min_width);
  }

  const Rational alpha_over_q = alpha / q.value;
  const UniPoly op = linear_root(q, alpha).pow(s) * linear_root(q, alpha_over_q).pow(s - 1);
  const LaurentWindow lhs = apply_m_shift_poly(q, op, dq_psi);

  const Rational scale =
      rat_pow(q.value, 2 - s) / (alpha * (q.value - 1)) * rat_pow(alpha_over_q - alpha, s);
  const LaurentWindow rhs = psi_chain(q, alpha_over_q, 1, lo, hi)[0].scaled(Scalar::rational(scale));
  return window_equal(lhs, rhs, min_width);
}

LpdIndexSet lpd_index_set(const QParam& q, const std::vector<std::pair<Rational, int>>& roots,
                          int m, int d) {
  require_numeric(q, "lpd_index_set");
  if (m < 1 || d < 1) fail(Errc::bad_argument, "need m >= 1 and d >= 1");

  std::vector<Rational> alphas;
  for (const auto& [alpha, e] : roots) {
    if (alpha == 0) continue;
    if (std::find(alphas.begin(), alphas.end(), alpha) == alphas.end()) alphas.push_back(alpha);
  }
  LpdIndexSet out;
  if (alphas.empty()) {
    out.no_nonzero_roots = true;
    return out;
  }

  if (q.value == 1) {
    for (const auto& alpha : alphas)
      for (int s = 1; s <= d; ++s) out.indices.push_back(PairIndex{alpha, s});
    return out;
  }

  // Roots ordered by beta <= beta' iff beta = q^j beta' with j >= 0; pick the
  // maximal ones and the largest exponent J appearing in the factorizations.
  std::vector<Rational> maximal;
  for (const auto& beta : alphas) {
    bool dominated = false;
    for (const auto& other : alphas) {
      if (other == beta) continue;
      auto j = exact_q_log(q.value, beta / other);
      if (j && *j > 0) dominated = true;
    }
    if (!dominated) maximal.push_back(beta);
  }
  long big_j = 0;
  for (const auto& beta : alphas)
    for (const auto& bi : maximal) {
      auto j = exact_q_log(q.value, beta / bi);
      if (j && *j >= 0) big_j = std::max(big_j, *j);
    }

  const long bound = big_j + m + static_cast<long>(d - 1) * m;
  for (const auto& bi : maximal) {
    Rational qj(1);
    for (long j = 0; j <= bound; ++j) {
      for (int s = 1; s <= d; ++s) out.indices.push_back(PairIndex{qj * bi, s});
      qj *= q.value;
    }
  }
  return out;
}

} // namespace qheis
