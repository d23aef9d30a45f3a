#include "qheis/eliminant.hpp"

namespace qheis {

namespace {
int required_order(const AlgebraElement& e, const char* who) {
  auto o = e.order();
  if (!o || *o < 1) fail(Errc::zero_order, std::string(who) + " must have order >= 1");
  return *o;
}

int max_coeff_degree(const AlgebraElement& e) {
  int d = 0;
  for (const auto& [j, p] : e.terms()) d = std::max(d, p.degree());
  return d;
}
} // namespace

TriMatrix build_matrix(const AlgebraElement& p, const AlgebraElement& q) {
  const int m = required_order(p, "P");
  const int n = required_order(q, "Q");
  const QParam& qp = p.qparam();
  const AlgebraElement a = AlgebraElement::gen_a(qp);
  const int size = m + n;
  TriMatrix mat(size);

  const Scalar minus_one = -Scalar::one(qp.mode);
  AlgebraElement dq_p = p; // D_q^k P
  for (int k = 0; k < n; ++k) {
    if (k > 0) dq_p = multiply(a, dq_p);
    for (int j = 0; j < size; ++j) mat.at(k, j) = TriPoly::from_unipoly_x(dq_p.coeff(j));
    mat.at(k, k) = mat.at(k, k) + TriPoly::monomial(MonoXLM{0, 1, 0}, minus_one);
  }
  AlgebraElement dq_q = q; // D_q^l Q
  for (int l = 0; l < m; ++l) {
    if (l > 0) dq_q = multiply(a, dq_q);
    for (int j = 0; j < size; ++j) mat.at(n + l, j) = TriPoly::from_unipoly_x(dq_q.coeff(j));
    mat.at(n + l, l) = mat.at(n + l, l) + TriPoly::monomial(MonoXLM{0, 0, 1}, minus_one);
  }
  return mat;
}

TriPoly eliminant(const AlgebraElement& p, const AlgebraElement& q) {
  return determinant(build_matrix(p, q));
}

CurveSet curves(const AlgebraElement& p, const AlgebraElement& q) {
  CurveSet cs;
  cs.m = required_order(p, "P");
  cs.n = required_order(q, "Q");
  const int dp = max_coeff_degree(p);
  const int dq = max_coeff_degree(q);
  cs.s = cs.n * dp + cs.m * dq;
  cs.t = static_cast<long>(cs.n) * (cs.n - 1) / 2 * dp + static_cast<long>(cs.m) * (cs.m - 1) / 2 * dq;
  cs.Delta = eliminant(p, q);
  cs.delta = extract_x_coefficients(cs.Delta);
  cs.delta.resize(static_cast<size_t>(cs.s) + 1); // the theorem indexes i = 0..s
  return cs;
}

namespace {
bool leading_coefficient_matches(const QParam& qp, const TriPoly& delta, int var_degree,
                                 bool lambda_side, const UniPoly& opposite_leading,
                                 int scale_count, int sign_exponent) {
  // degree exactly var_degree, with coefficient (-1)^sign * prod p(q^k X)
  if ((lambda_side ? delta.deg_lambda() : delta.deg_mu()) != var_degree) return false;
  UniPoly prod = UniPoly::constant(Scalar::one(qp.mode));
  for (int k = 0; k < scale_count; ++k) prod = prod * scale_argument(qp, opposite_leading, k);
  if (sign_exponent % 2 != 0) prod = -prod;
  const TriPoly got = lambda_side ? delta.coeff_lambda(var_degree) : delta.coeff_mu(var_degree);
  return got == TriPoly::from_unipoly_x(prod);
}
} // namespace

VerificationReport verify(const AlgebraElement& p, const AlgebraElement& q) {
  VerificationReport rep;
  rep.curves = curves(p, q);
  const QParam& qp = p.qparam();
  const int m = rep.curves.m, n = rep.curves.n;

  rep.commuting = commutator(p, q).is_zero();
  // lambda^n picks the -lambda entries on the leading diagonal directly; the
  // mu^m expansion additionally carries the m-by-n block swap that moves the
  // mu rows up front, hence the extra (-1)^{mn}.
  rep.checks.lambda_leading = leading_coefficient_matches(
      qp, rep.curves.Delta, n, true, q.terms().rbegin()->second, m, n);
  rep.checks.mu_leading = leading_coefficient_matches(
      qp, rep.curves.Delta, m, false, p.terms().rbegin()->second, n, m * (n + 1));
  rep.checks.x_degree_le_s = rep.curves.Delta.deg_x() <= rep.curves.s;
  rep.checks.some_delta_nonzero = !rep.curves.Delta.is_zero();

  if (qp.mode == QMode::symbolic) {
    // Classify the inputs: coefficients that are plain integers (q-free)
    // admit the full q-degree window [0, t]; coefficients in Z[q] still
    // admit the Z[q]-membership claim.
    bool inputs_q_free = true, inputs_in_zq = true;
    for (const auto* e : {&p, &q})
      for (const auto& [j, poly] : e->terms())
        for (const auto& c : poly.coeffs()) {
          auto [lo, hi] = c.q_exponent_range();
          inputs_q_free = inputs_q_free && c.is_integral() && lo == 0 && hi == 0;
          inputs_in_zq = inputs_in_zq && c.is_integral() && lo >= 0;
        }
    if (inputs_q_free) {
      bool in_range = true;
      for (const auto& d : rep.curves.delta)
        for (const auto& [k, c] : d.terms()) {
          auto [lo, hi] = c.q_exponent_range();
          in_range = in_range && lo >= 0 && hi <= rep.curves.t;
        }
      rep.checks.q_degree_in_range = in_range;
    }
    if (inputs_in_zq) {
      bool integral = true;
      for (const auto& d : rep.curves.delta)
        for (const auto& [k, c] : d.terms()) {
          integral = integral && c.is_integral() && c.q_exponent_range().first >= 0;
        }
      rep.checks.coeffs_integral = integral;
    }
  }

  bool all_zero = true;
  if (rep.commuting) {
    for (int i = 0; i <= rep.curves.s; ++i) {
      const BiPoly& delta = rep.curves.delta[static_cast<size_t>(i)];
      AlgebraElement residual = substitute_unchecked(delta, p, q);
      const bool zero = residual.is_zero();
      all_zero = all_zero && zero;
      rep.residuals.push_back(CurveResidual{i, delta, std::move(residual), zero});
    }
  }

  rep.pass = rep.commuting && all_zero && rep.checks.lambda_leading && rep.checks.mu_leading &&
             rep.checks.x_degree_le_s && rep.checks.some_delta_nonzero &&
             rep.checks.q_degree_in_range.value_or(true) &&
             rep.checks.coeffs_integral.value_or(true);
  return rep;
}

AlgebraElement apply_poly(const UniPoly& f, const AlgebraElement& w) {
  const QParam& qp = w.qparam();
  AlgebraElement acc(qp);
  for (int i = f.degree(); i >= 0; --i)
    acc = multiply(acc, w) + AlgebraElement::constant(qp, f.coeff(i));
  return acc;
}

std::pair<AlgebraElement, AlgebraElement> make_commuting_pair(const AlgebraElement& w,
                                                              const UniPoly& f, const UniPoly& g) {
  required_order(w, "W");
  if (f.degree() < 1 || g.degree() < 1)
    fail(Errc::constant_polynomial, "f and g must be nonconstant");
  return {apply_poly(f, w), apply_poly(g, w)};
}

} // namespace qheis
