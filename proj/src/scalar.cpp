#include "qheis/scalar.hpp"

#include <sstream>

namespace qheis {

void validate_q(const QParam& q) {
  if (q.mode == QMode::symbolic) return;
  if (q.value == 0) fail(Errc::invalid_q, "q = 0 is not admissible");
  if (q.value == -1) fail(Errc::invalid_q, "q = -1 is not admissible ({2}_q = 0)");
}

bool q_is_valid(const QParam& q) {
  if (q.mode == QMode::symbolic) return true;
  return q.value != 0 && q.value != -1;
}

// ---------------------------------------------------------------- QLaurent

QLaurent QLaurent::constant(Rational c) { return monomial(0, std::move(c)); }

QLaurent QLaurent::monomial(long e, Rational c) {
  QLaurent out;
  if (c != 0) out.terms_.emplace(e, std::move(c));
  return out;
}

bool QLaurent::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

bool QLaurent::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

long QLaurent::min_exp() const {
  if (is_zero()) fail(Errc::bad_argument, "min_exp of zero");
  return terms_.begin()->first;
}

long QLaurent::max_exp() const {
  if (is_zero()) fail(Errc::bad_argument, "max_exp of zero");
  return terms_.rbegin()->first;
}

const Rational& QLaurent::leading() const {
  if (is_zero()) fail(Errc::bad_argument, "leading of zero");
  return terms_.rbegin()->second;
}

void QLaurent::add_term(long e, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

QLaurent QLaurent::operator-() const {
  QLaurent out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

QLaurent operator+(const QLaurent& a, const QLaurent& b) {
  QLaurent out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, c);
  return out;
}

QLaurent operator-(const QLaurent& a, const QLaurent& b) {
  QLaurent out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, -c);
  return out;
}

QLaurent operator*(const QLaurent& a, const QLaurent& b) {
  QLaurent out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

QLaurent QLaurent::shifted(long k) const {
  QLaurent out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + k, c);
  return out;
}

Rational QLaurent::eval(const Rational& q0) const {
  Rational acc(0);
  for (const auto& [e, c] : terms_) acc += c * rat_pow(q0, e);
  return acc;
}

QLaurent QLaurent::divide_exact(const QLaurent& d) const {
  if (d.is_zero()) fail(Errc::bad_argument, "division by zero Laurent polynomial");
  if (is_zero()) return QLaurent();
  const long quot_min = min_exp() - d.min_exp();
  QLaurent q, r = *this;
  while (!r.is_zero()) {
    long e = r.max_exp() - d.max_exp();
    if (e < quot_min) fail(Errc::not_divisible, "inexact Laurent division");
    Rational c = r.leading() / d.leading();
    q.add_term(e, c);
    r = r - d.shifted(e) * QLaurent::constant(c);
  }
  return q;
}

std::string QLaurent::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Rational c = it->second;
    long e = it->first;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    Rational a = abs(c);
    if (e == 0) {
      os << rat_str(a);
    } else {
      if (a != 1) os << rat_str(a) << "*";
      os << "q";
      if (e != 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

// ------------------------------------------------------------------ Scalar

Scalar Scalar::zero(QMode m) {
  return m == QMode::numeric ? Scalar(Rational(0)) : Scalar(QLaurent());
}

Scalar Scalar::one(QMode m) { return from_rational(m, Rational(1)); }

Scalar Scalar::from_rational(QMode m, const Rational& r) {
  return m == QMode::numeric ? Scalar(r) : Scalar(QLaurent::constant(r));
}

Scalar Scalar::q_value(const QParam& q) {
  return q.mode == QMode::numeric ? Scalar(q.value) : Scalar(QLaurent::monomial(1, Rational(1)));
}

bool Scalar::is_zero() const {
  if (const auto* r = std::get_if<Rational>(&v_)) return *r == 0;
  return std::get<QLaurent>(v_).is_zero();
}

bool Scalar::is_one() const {
  if (const auto* r = std::get_if<Rational>(&v_)) return *r == 1;
  return std::get<QLaurent>(v_).is_one();
}

bool Scalar::is_integral() const {
  if (const auto* r = std::get_if<Rational>(&v_)) return rat_is_integer(*r);
  for (const auto& [e, c] : std::get<QLaurent>(v_).terms())
    if (!rat_is_integer(c)) return false;
  return true;
}

const Rational& Scalar::rat() const {
  if (!std::holds_alternative<Rational>(v_))
    fail(Errc::mode_mismatch, "expected a numeric-mode scalar");
  return std::get<Rational>(v_);
}

const QLaurent& Scalar::laur() const {
  if (!std::holds_alternative<QLaurent>(v_))
    fail(Errc::mode_mismatch, "expected a symbolic-mode scalar");
  return std::get<QLaurent>(v_);
}

Scalar Scalar::operator-() const {
  if (const auto* r = std::get_if<Rational>(&v_)) return Scalar(Rational(-*r));
  return Scalar(-std::get<QLaurent>(v_));
}

namespace {
// Rationals embed into the Laurent ring as constants, so mixed-mode
// arithmetic lifts the rational side rather than failing; the ambient-QParam
// mismatch guard lives at the algebra-element level.
QLaurent lift(const Scalar& s) {
  return s.mode() == QMode::symbolic ? s.laur() : QLaurent::constant(s.rat());
}
} // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.mode() == QMode::numeric && b.mode() == QMode::numeric)
    return Scalar::rational(a.rat() + b.rat());
  return Scalar::laurent(lift(a) + lift(b));
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.is_zero()) return a;
  if (b.is_zero()) return b;
  if (a.mode() == QMode::numeric && b.mode() == QMode::numeric)
    return Scalar::rational(a.rat() * b.rat());
  return Scalar::laurent(lift(a) * lift(b));
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.mode() == QMode::numeric && b.mode() == QMode::numeric) return a.rat() == b.rat();
  return lift(a) == lift(b);
}

Scalar Scalar::times_q_pow(const QParam& q, long k) const {
  if (k == 0 || is_zero()) return *this;
  if (q.mode == QMode::numeric) return Scalar::rational(rat() * rat_pow(q.value, k));
  return Scalar::laurent(lift(*this).shifted(k));
}

Scalar Scalar::divide_exact(const Scalar& d) const {
  if (d.is_zero()) fail(Errc::bad_argument, "scalar division by zero");
  if (is_zero()) return *this;
  if (mode() == QMode::numeric && d.mode() == QMode::numeric)
    return Scalar::rational(rat() / d.rat());
  return Scalar::laurent(lift(*this).divide_exact(lift(d)));
}

Rational Scalar::eval_at_q(const Rational& q0) const {
  if (const auto* r = std::get_if<Rational>(&v_)) return *r;
  return std::get<QLaurent>(v_).eval(q0);
}

std::pair<long, long> Scalar::q_exponent_range() const {
  if (is_zero() || mode() == QMode::numeric) return {0, 0};
  return {laur().min_exp(), laur().max_exp()};
}

std::string Scalar::str() const {
  if (const auto* r = std::get_if<Rational>(&v_)) return rat_str(*r);
  return std::get<QLaurent>(v_).str();
}

// ----------------------------------------------------------------- q_int

Scalar q_int(const QParam& q, long n) {
  validate_q(q);
  if (q.mode == QMode::numeric) {
    if (q.value == 1) return Scalar::rational(Rational(n));
    if (n == 0) return Scalar::rational(Rational(0));
    return Scalar::rational((rat_pow(q.value, n) - 1) / (q.value - 1));
  }
  // (q^n - 1)/(q - 1) in closed form: 1 + q + ... + q^{n-1} for n > 0 and
  // -(q^n + ... + q^{-1}) for n < 0.
  QLaurent out;
  if (n > 0)
    for (long e = 0; e < n; ++e) out.add_term(e, Rational(1));
  else
    for (long e = n; e < 0; ++e) out.add_term(e, Rational(-1));
  return Scalar::laurent(out);
}

Rational q_falling_product(const QParam& q, long k, int j) {
  if (q.mode != QMode::numeric) fail(Errc::symbolic_mode_unsupported, "numeric q required");
  Rational acc(1);
  for (int i = 0; i < j; ++i) acc *= q_int(q, k - i).rat();
  return acc;
}

} // namespace qheis
