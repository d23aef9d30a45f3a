#pragma once

#include "qheis/algebra.hpp"

namespace qheis {

/// The eliminant Delta and its X-coefficient curves delta_0..delta_s,
/// together with the a-priori bounds s (X-degree) and t (q-degree).
struct CurveSet {
  int m = 0, n = 0;
  int s = 0;
  long t = 0;
  std::vector<BiPoly> delta; // exactly s+1 entries
  TriPoly Delta;
};

struct CurveResidual {
  int i;
  BiPoly delta;
  AlgebraElement residual;
  bool zero;
};

struct StructureChecks {
  bool lambda_leading = false;      // deg_lambda == n with the predicted coefficient
  bool mu_leading = false;          // deg_mu == m with the predicted coefficient
  bool x_degree_le_s = false;
  bool some_delta_nonzero = false;
  // symbolic mode, q-free integer inputs: exponents within [0, t]
  std::optional<bool> q_degree_in_range;
  // symbolic mode, Z[q] inputs: curves stay over Z[q]
  std::optional<bool> coeffs_integral;
};

struct VerificationReport {
  bool commuting = false;
  CurveSet curves;
  std::vector<CurveResidual> residuals; // populated only for commuting inputs
  StructureChecks checks;
  bool pass = false;
};

/// The (m+n) x (m+n) matrix whose rows list the D_q-power coefficients of
/// D_q^k P - lambda D_q^k (k = 0..n-1) and D_q^l Q - mu D_q^l (l = 0..m-1).
/// Throws ZeroOrder unless both orders are >= 1.
TriMatrix build_matrix(const AlgebraElement& p, const AlgebraElement& q);

/// Determinant of build_matrix(P, Q).
TriPoly eliminant(const AlgebraElement& p, const AlgebraElement& q);

CurveSet curves(const AlgebraElement& p, const AlgebraElement& q);

/// Runs every checkable clause: commutativity, leading coefficients in
/// lambda and mu, the X-degree bound, the q-degree window (symbolic mode),
/// nontriviality, and annihilation delta_i(P, Q) = 0. Non-commuting inputs
/// yield a failing report rather than an exception.
VerificationReport verify(const AlgebraElement& p, const AlgebraElement& q);

/// (f(W), g(W)) — commuting by construction. Throws ZeroOrder when W has
/// order < 1 and ConstantPolynomial when f or g is constant.
std::pair<AlgebraElement, AlgebraElement> make_commuting_pair(const AlgebraElement& w,
                                                              const UniPoly& f, const UniPoly& g);

/// f(W) by Horner's rule.
AlgebraElement apply_poly(const UniPoly& f, const AlgebraElement& w);

} // namespace qheis
