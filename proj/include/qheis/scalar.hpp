#pragma once

#include <map>
#include <string>
#include <variant>

#include "qheis/rational.hpp"

namespace qheis {

enum class QMode { numeric, symbolic };

/// The deformation parameter: an exact rational, or a formal symbol.
struct QParam {
  QMode mode = QMode::symbolic;
  Rational value; // numeric mode only

  static QParam numeric(Rational v) { return QParam{QMode::numeric, std::move(v)}; }
  static QParam symbolic() { return QParam{QMode::symbolic, Rational(0)}; }

  bool is_numeric() const { return mode == QMode::numeric; }
  bool is_one() const { return mode == QMode::numeric && value == 1; }

  friend bool operator==(const QParam& a, const QParam& b) {
    if (a.mode != b.mode) return false;
    return a.mode == QMode::symbolic || a.value == b.value;
  }
};

/// Throws InvalidQ unless q is admissible: numeric q must avoid 0 and -1
/// (the only rationals with {n}_q = 0 for some n != 0); symbolic q always is.
void validate_q(const QParam& q);
bool q_is_valid(const QParam& q);

/// Laurent polynomial in q over the rationals. Canonical: no zero coefficients.
class QLaurent {
public:
  QLaurent() = default; // zero
  static QLaurent constant(Rational c);
  static QLaurent monomial(long e, Rational c);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  const std::map<long, Rational>& terms() const { return terms_; }
  long min_exp() const; // nonzero only
  long max_exp() const;
  const Rational& leading() const;

  void add_term(long e, const Rational& c);

  QLaurent operator-() const;
  friend QLaurent operator+(const QLaurent& a, const QLaurent& b);
  friend QLaurent operator-(const QLaurent& a, const QLaurent& b);
  friend QLaurent operator*(const QLaurent& a, const QLaurent& b);
  friend bool operator==(const QLaurent& a, const QLaurent& b) { return a.terms_ == b.terms_; }

  QLaurent shifted(long k) const; // * q^k
  Rational eval(const Rational& q0) const;
  /// Exact quotient; throws NotDivisible when *this is not a multiple of d.
  QLaurent divide_exact(const QLaurent& d) const;

  std::string str() const;

private:
  std::map<long, Rational> terms_;
};

/// Coefficient-ring element: a rational (numeric mode) or a Laurent
/// polynomial in q (symbolic mode). Rational constants embed into the
/// Laurent ring, so mixed arithmetic lifts them; ambient-mode mismatches
/// are caught where the QParam is known (the algebra layer).
class Scalar {
public:
  Scalar() : v_(Rational(0)) {}
  static Scalar rational(Rational r) { return Scalar(std::move(r)); }
  static Scalar laurent(QLaurent l) { return Scalar(std::move(l)); }
  static Scalar zero(QMode m);
  static Scalar one(QMode m);
  static Scalar from_rational(QMode m, const Rational& r);
  static Scalar from_int(QMode m, long n) { return from_rational(m, Rational(n)); }
  /// q itself as a scalar (the numeric value, or the monomial q).
  static Scalar q_value(const QParam& q);

  QMode mode() const { return std::holds_alternative<Rational>(v_) ? QMode::numeric : QMode::symbolic; }
  bool is_zero() const;
  bool is_one() const;
  bool is_integral() const; // all rational parts have denominator 1

  const Rational& rat() const; // numeric only
  const QLaurent& laur() const; // symbolic only

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  /// Multiply by q^k (rational power in numeric mode, shift in symbolic mode).
  Scalar times_q_pow(const QParam& q, long k) const;
  /// Exact quotient; numeric mode is field division, symbolic mode requires
  /// divisibility in the Laurent ring.
  Scalar divide_exact(const Scalar& d) const;
  /// Substitute a rational value for q (identity in numeric mode).
  Rational eval_at_q(const Rational& q0) const;

  /// Exponent range of q in symbolic mode; {0,0} for numeric or zero values.
  std::pair<long, long> q_exponent_range() const;

  std::string str() const;

private:
  explicit Scalar(Rational r) : v_(std::move(r)) {}
  explicit Scalar(QLaurent l) : v_(std::move(l)) {}
  std::variant<Rational, QLaurent> v_;
};

/// The q-integer {n}_q: (q^n - 1)/(q - 1) for q != 1, n at q = 1.
/// Symbolic mode yields the Laurent polynomial (exact division, no remainder).
Scalar q_int(const QParam& q, long n);

/// {k}_q {k-1}_q ... {k-j+1}_q as a rational, straight from the definition.
Rational q_falling_product(const QParam& q, long k, int j);

} // namespace qheis
