#pragma once

#include <map>
#include <vector>

#include "qheis/scalar.hpp"

namespace qheis {

/// Dense univariate polynomial over Scalar. Index = degree; trailing
/// coefficient nonzero, the zero polynomial is the empty list.
class UniPoly {
public:
  UniPoly() = default; // zero
  static UniPoly constant(Scalar c);
  static UniPoly monomial(int deg, Scalar c);
  static UniPoly from_coeffs(std::vector<Scalar> cs); // trims trailing zeros

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
  Scalar coeff(int i) const;
  const Scalar& leading() const;
  const std::vector<Scalar>& coeffs() const { return c_; }

  UniPoly operator-() const;
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  UniPoly scaled(const Scalar& s) const;
  Scalar eval(const Scalar& x) const;
  UniPoly compose(const UniPoly& inner) const; // p(inner)
  UniPoly pow(int e) const;

  std::string str(const char* var = "X") const;

private:
  std::vector<Scalar> c_;
  void trim();
};

/// p(q^k X): the X^i coefficient picks up a factor q^{k i}.
UniPoly scale_argument(const QParam& q, const UniPoly& p, long k);

/// r_j with r_j({k}_q) = {k}_q {k-1}_q ... {k-j+1}_q; exact degree j.
/// r_0 = 1 and r_j(Z) = Z * r_{j-1}((Z - 1)/q).
UniPoly q_falling(const QParam& q, int j);

struct MonoLM {
  int l = 0, m = 0;
  friend auto operator<=>(const MonoLM&, const MonoLM&) = default;
};

struct MonoXLM {
  int x = 0, l = 0, m = 0;
  friend auto operator<=>(const MonoXLM&, const MonoXLM&) = default;
};

/// Sparse polynomial in (lambda, mu); no zero coefficients stored.
class BiPoly {
public:
  BiPoly() = default;
  static BiPoly constant(Scalar c);
  static BiPoly monomial(int l, int m, Scalar c);

  bool is_zero() const { return t_.empty(); }
  const std::map<MonoLM, Scalar>& terms() const { return t_; }
  void add_term(MonoLM k, const Scalar& c);
  Scalar coeff(int l, int m) const;
  int total_degree() const; // -1 for zero

  BiPoly operator-() const;
  friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.t_ == b.t_; }
  friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

  BiPoly scaled(const Scalar& s) const;
  Scalar eval(const Scalar& lam, const Scalar& mu) const;

  std::string str() const;

private:
  std::map<MonoLM, Scalar> t_;
};

/// Sparse polynomial in (X, lambda, mu); canonical order is lexicographic
/// in (x-degree, lambda-degree, mu-degree).
class TriPoly {
public:
  TriPoly() = default;
  static TriPoly constant(Scalar c);
  static TriPoly monomial(MonoXLM k, Scalar c);
  static TriPoly from_unipoly_x(const UniPoly& p);
  static TriPoly from_bipoly(const BiPoly& b, int x_power = 0);

  bool is_zero() const { return t_.empty(); }
  const std::map<MonoXLM, Scalar>& terms() const { return t_; }
  void add_term(MonoXLM k, const Scalar& c);
  Scalar coeff(MonoXLM k) const;

  int deg_x() const; // -1 for zero
  int deg_lambda() const;
  int deg_mu() const;

  TriPoly operator-() const;
  friend TriPoly operator+(const TriPoly& a, const TriPoly& b);
  friend TriPoly operator-(const TriPoly& a, const TriPoly& b);
  friend TriPoly operator*(const TriPoly& a, const TriPoly& b);
  friend bool operator==(const TriPoly& a, const TriPoly& b) { return a.t_ == b.t_; }
  friend bool operator!=(const TriPoly& a, const TriPoly& b) { return !(a == b); }

  TriPoly scaled(const Scalar& s) const;
  Scalar eval(const Scalar& x, const Scalar& lam, const Scalar& mu) const;

  /// Coefficient of lambda^a as a polynomial in (X, mu) (still a TriPoly).
  TriPoly coeff_lambda(int a) const;
  TriPoly coeff_mu(int b) const;

  /// Exact quotient; throws NotDivisible if *this is not a multiple of d.
  TriPoly divide_exact(const TriPoly& d) const;

  std::string str() const;

private:
  std::map<MonoXLM, Scalar> t_;
};

/// result[i] = coefficient of X^i as a BiPoly; sum_i result[i] X^i rebuilds d.
/// Empty for the zero polynomial.
std::vector<BiPoly> extract_x_coefficients(const TriPoly& d);

/// Square matrix over the trivariate ring.
class TriMatrix {
public:
  explicit TriMatrix(int n) : n_(n), e_(static_cast<size_t>(n) * n) {}
  int size() const { return n_; }
  TriPoly& at(int r, int c) { return e_[static_cast<size_t>(r) * n_ + c]; }
  const TriPoly& at(int r, int c) const { return e_[static_cast<size_t>(r) * n_ + c]; }

private:
  int n_;
  std::vector<TriPoly> e_;
};

/// Minor expansion memoized on column subsets; no divisions. The default path.
TriPoly determinant(const TriMatrix& mat);

/// Fraction-free Bareiss elimination; kept as an independent cross-check.
TriPoly determinant_bareiss(const TriMatrix& mat);

/// Determinant after evaluating every entry at (x0, lam0, mu0) and, in
/// symbolic mode, q -> q0. Spot-check oracle for the symbolic paths.
Rational determinant_evaluated(const TriMatrix& mat, const Rational& x0, const Rational& lam0,
                               const Rational& mu0, const Rational& q0);

} // namespace qheis
