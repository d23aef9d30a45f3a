#pragma once

#include <optional>

#include "qheis/poly.hpp"

namespace qheis {

/// Element of the q-deformed Heisenberg algebra in normal form
/// sum_j p_j(B) A^j, stored as j -> p_j with every stored p_j nonzero.
class AlgebraElement {
public:
  explicit AlgebraElement(QParam q) : q_(std::move(q)) { validate_q(q_); }

  static AlgebraElement zero(const QParam& q) { return AlgebraElement(q); }
  static AlgebraElement one(const QParam& q);
  static AlgebraElement gen_a(const QParam& q);
  static AlgebraElement gen_b(const QParam& q);
  static AlgebraElement constant(const QParam& q, const Scalar& c);
  /// p(B) as an order-zero element.
  static AlgebraElement in_b(const QParam& q, const UniPoly& p);
  /// p(B) A^j.
  static AlgebraElement monomial(const QParam& q, int j, const UniPoly& p);

  const QParam& qparam() const { return q_; }
  const std::map<int, UniPoly>& terms() const { return t_; }
  UniPoly coeff(int j) const;
  bool is_zero() const { return t_.empty(); }
  /// Scalar multiple of the identity (including zero)?
  bool is_constant() const;

  /// Highest power of A; disengaged for the zero element.
  std::optional<int> order() const;

  AlgebraElement operator-() const;
  friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);
  friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) { return !(a == b); }

  AlgebraElement scaled(const Scalar& s) const;
  AlgebraElement pow(int e) const;

  std::string str() const;

private:
  QParam q_;
  std::map<int, UniPoly> t_;
  void add_term(int j, const UniPoly& p);
  friend AlgebraElement multiply(const AlgebraElement& p, const AlgebraElement& q);
};

/// Coefficient rule of D_q on polynomials: X^i -> {i}_q X^{i-1}.
UniPoly q_derivative(const QParam& q, const UniPoly& p);

/// Normal form of the product, moving one factor of A at a time through the
/// rewrite A p(B) = p(qB) A + (D_q p)(B). Throws ModeMismatch when the
/// ambient parameters differ.
AlgebraElement multiply(const AlgebraElement& p, const AlgebraElement& q);

/// PQ - QP; zero exactly when P and Q commute.
AlgebraElement commutator(const AlgebraElement& p, const AlgebraElement& q);

/// sum c_{a,b} P^a Q^b for a curve in (lambda, mu). Requires commuting P, Q
/// (otherwise the monomial order would matter); throws NonCommuting.
AlgebraElement substitute(const BiPoly& curve, const AlgebraElement& p, const AlgebraElement& q);

/// Same evaluation with the fixed P^a Q^b order and no commutativity check;
/// used for negative controls.
AlgebraElement substitute_unchecked(const BiPoly& curve, const AlgebraElement& p,
                                    const AlgebraElement& q);

} // namespace qheis
