#pragma once

#include "qheis/algebra.hpp"

namespace qheis {

inline constexpr long kMinTrustedWidth = 16;

/// Finite slice of a bi-infinite Laurent series. Coefficients are stored for
/// n in [lo, hi]; only those in [t_lo, t_hi] are guaranteed to equal the
/// intended global series. Operators shrink the trusted interval
/// deterministically instead of tracking convergence.
struct LaurentWindow {
  long lo = 0, hi = -1;
  std::vector<Scalar> coeffs;
  long t_lo = 0, t_hi = -1;

  static LaurentWindow zeros(long lo, long hi);
  /// t^k, trusted on the whole window.
  static LaurentWindow monomial(long lo, long hi, long k, const Scalar& c);

  bool in_window(long n) const { return n >= lo && n <= hi; }
  Scalar at(long n) const;
  void set(long n, const Scalar& c);
  long trusted_width() const { return t_hi - t_lo + 1; }

  LaurentWindow scaled(const Scalar& s) const;
};

/// Pointwise sum; the windows must cover the same range, trust intersects.
LaurentWindow window_add(const LaurentWindow& a, const LaurentWindow& b);

/// Equality of the trusted overlap, which must have width >= min_width
/// (DegenerateWindow otherwise).
bool window_equal(const LaurentWindow& a, const LaurentWindow& b, long min_width = kMinTrustedWidth);
bool window_is_zero(const LaurentWindow& v, long min_width = kMinTrustedWidth);

/// M shifts up (trusted bottom rises), D_q weights and shifts down (trusted
/// top drops).
LaurentWindow apply_m(const QParam& q, const LaurentWindow& v);
LaurentWindow apply_dq(const QParam& q, const LaurentWindow& v);

/// Action of a normal-form element on a window.
LaurentWindow act(const AlgebraElement& p, const LaurentWindow& v);

/// Jordan chain above the eigenvector Psi_{alpha,1} = sum (t/alpha)^n:
/// returns [Psi_{alpha,1}, ..., Psi_{alpha,s_max}] with
/// (M - alpha) Psi_{alpha,s} = Psi_{alpha,s-1}. Levels s >= 2 are fixed by
/// the normalization coeff(hi) = 0 and lose one trusted index at the top
/// per level. Numeric q only.
std::vector<LaurentWindow> psi_chain(const QParam& q, const Rational& alpha, int s_max, long lo,
                                     long hi);

/// Kernel basis of p(M) = c X^{e0} prod (X - alpha_i)^{e_i} on a window:
/// the chains Psi_{alpha_i, 1..e_i}. The pure M-power part contributes
/// nothing (it is invertible on Laurent series).
std::vector<LaurentWindow> kernel_basis_factored(const QParam& q, const Rational& c, int e0,
                                                 const std::vector<std::pair<Rational, int>>& factors,
                                                 long lo, long hi);

/// Index (alpha, s) of a chain vector, with the partial order
/// (alpha, r) <= (beta, s) iff beta = alpha/q^j for some j > 0, or
/// alpha = beta and r <= s (for q = 1 only the second clause).
struct PairIndex {
  Rational alpha;
  int s = 1;
  friend bool operator==(const PairIndex& a, const PairIndex& b) {
    return a.alpha == b.alpha && a.s == b.s;
  }
};

bool pair_leq(const QParam& q, const PairIndex& a, const PairIndex& b);
/// Same q-orbit (comparability is an equivalence here).
bool pair_comparable(const QParam& q, const PairIndex& a, const PairIndex& b);

/// Chain-independent collapse of the D_q action on Psi_{alpha,s}:
///   q != 1:  (M-a)^s (M-a/q)^{s-1} D_q Psi_{a,s}
///              = q^{2-s}/(a(q-1)) * (a/q - a)^s * Psi_{a/q,1}
///   q  = 1:  (M-a)^s D_1 Psi_{a,s} = -s * Psi_{a,1}
/// Exact on the trusted overlap.
bool collapsed_identity_check(const QParam& q, const Rational& alpha, int s, long lo, long hi,
                              long min_width = kMinTrustedWidth);

/// Spanning index set for the space L_{P,d} that contains every simultaneous
/// eigenvector of P (leading coefficient p_m) and a polynomial element of
/// degree <= d.
struct LpdIndexSet {
  std::vector<PairIndex> indices;
  bool no_nonzero_roots = false;
};

/// q = 1: roots of p_m crossed with s = 1..d. Otherwise the roots are
/// ordered by beta <= beta' iff beta = q^j beta' (j >= 0); with maximal
/// elements beta_1..beta_h and J the largest exponent needed, the set is
/// { (q^j beta_i, s) : 0 <= j <= J + m + (d-1)m, 1 <= s <= d }.
LpdIndexSet lpd_index_set(const QParam& q, const std::vector<std::pair<Rational, int>>& roots,
                          int m, int d);

} // namespace qheis
