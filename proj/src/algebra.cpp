#include "qheis/algebra.hpp"

#include <sstream>

namespace qheis {

AlgebraElement AlgebraElement::one(const QParam& q) {
  return constant(q, Scalar::one(q.mode));
}

AlgebraElement AlgebraElement::gen_a(const QParam& q) {
  return monomial(q, 1, UniPoly::constant(Scalar::one(q.mode)));
}

AlgebraElement AlgebraElement::gen_b(const QParam& q) {
  return in_b(q, UniPoly::monomial(1, Scalar::one(q.mode)));
}

AlgebraElement AlgebraElement::constant(const QParam& q, const Scalar& c) {
  return in_b(q, UniPoly::constant(c));
}

AlgebraElement AlgebraElement::in_b(const QParam& q, const UniPoly& p) {
  return monomial(q, 0, p);
}

AlgebraElement AlgebraElement::monomial(const QParam& q, int j, const UniPoly& p) {
  if (j < 0) fail(Errc::bad_argument, "negative A power");
  AlgebraElement e(q);
  if (!p.is_zero()) e.t_.emplace(j, p);
  return e;
}

UniPoly AlgebraElement::coeff(int j) const {
  auto it = t_.find(j);
  return it == t_.end() ? UniPoly() : it->second;
}

bool AlgebraElement::is_constant() const {
  if (t_.empty()) return true;
  return t_.size() == 1 && t_.begin()->first == 0 && t_.begin()->second.degree() == 0;
}

std::optional<int> AlgebraElement::order() const {
  if (t_.empty()) return std::nullopt;
  return t_.rbegin()->first;
}

void AlgebraElement::add_term(int j, const UniPoly& p) {
  if (p.is_zero()) return;
  auto it = t_.find(j);
  if (it == t_.end()) {
    t_.emplace(j, p);
  } else {
    it->second = it->second + p;
    if (it->second.is_zero()) t_.erase(it);
  }
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement out(q_);
  for (const auto& [j, p] : t_) out.t_.emplace(j, -p);
  return out;
}

namespace {
void require_same_q(const AlgebraElement& a, const AlgebraElement& b) {
  if (!(a.qparam() == b.qparam()))
    fail(Errc::mode_mismatch, "elements live over different q parameters");
}
} // namespace

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_q(a, b);
  AlgebraElement out = a;
  for (const auto& [j, p] : b.terms()) out.add_term(j, p);
  return out;
}

AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) { return a + (-b); }

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  return multiply(a, b);
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  return a.qparam() == b.qparam() && a.t_ == b.t_;
}

AlgebraElement AlgebraElement::scaled(const Scalar& s) const {
  AlgebraElement out(q_);
  for (const auto& [j, p] : t_) out.add_term(j, p.scaled(s));
  return out;
}

AlgebraElement AlgebraElement::pow(int e) const {
  if (e < 0) fail(Errc::bad_argument, "negative element power");
  AlgebraElement acc = one(q_);
  for (int i = 0; i < e; ++i) acc = multiply(acc, *this);
  return acc;
}

UniPoly q_derivative(const QParam& q, const UniPoly& p) {
  validate_q(q);
  if (p.degree() < 1) return UniPoly();
  std::vector<Scalar> out(static_cast<size_t>(p.degree()));
  for (int i = 1; i <= p.degree(); ++i)
    out[static_cast<size_t>(i - 1)] = q_int(q, i) * p.coeff(i);
  return UniPoly::from_coeffs(std::move(out));
}

namespace {
// A * (sum_j t_j(B) A^j) = sum_j [ t_j(qB) A^{j+1} + (D_q t_j)(B) A^j ].
AlgebraElement left_multiply_by_a(const AlgebraElement& x) {
  const QParam& q = x.qparam();
  AlgebraElement out(q);
  for (const auto& [j, p] : x.terms()) {
    out = out + AlgebraElement::monomial(q, j + 1, scale_argument(q, p, 1));
    out = out + AlgebraElement::monomial(q, j, q_derivative(q, p));
  }
  return out;
}
} // namespace

AlgebraElement multiply(const AlgebraElement& p, const AlgebraElement& q) {
  require_same_q(p, q);
  const QParam& qp = p.qparam();
  AlgebraElement out(qp);
  if (p.is_zero() || q.is_zero()) return out;
  const int max_j = p.terms().rbegin()->first;
  // a_pow_q holds A^j * Q in normal form, advanced one factor at a time.
  AlgebraElement a_pow_q = q;
  int current = 0;
  for (const auto& [j, pj] : p.terms()) {
    while (current < j) {
      a_pow_q = left_multiply_by_a(a_pow_q);
      ++current;
    }
    for (const auto& [l, tl] : a_pow_q.terms()) out.add_term(l, pj * tl);
    if (j == max_j) break;
  }
  return out;
}

AlgebraElement commutator(const AlgebraElement& p, const AlgebraElement& q) {
  return multiply(p, q) - multiply(q, p);
}

AlgebraElement substitute_unchecked(const BiPoly& curve, const AlgebraElement& p,
                                    const AlgebraElement& q) {
  require_same_q(p, q);
  const QParam& qp = p.qparam();
  int max_a = 0, max_b = 0;
  for (const auto& [k, c] : curve.terms()) {
    max_a = std::max(max_a, k.l);
    max_b = std::max(max_b, k.m);
  }
  // ascending power caches, filled once per call
  std::vector<AlgebraElement> pa{AlgebraElement::one(qp)}, qb{AlgebraElement::one(qp)};
  for (int a = 1; a <= max_a; ++a) pa.push_back(multiply(pa.back(), p));
  for (int b = 1; b <= max_b; ++b) qb.push_back(multiply(qb.back(), q));
  AlgebraElement out(qp);
  for (const auto& [k, c] : curve.terms())
    out = out + multiply(pa[static_cast<size_t>(k.l)], qb[static_cast<size_t>(k.m)]).scaled(c);
  return out;
}

AlgebraElement substitute(const BiPoly& curve, const AlgebraElement& p, const AlgebraElement& q) {
  if (!commutator(p, q).is_zero())
    fail(Errc::non_commuting, "substitution requires commuting elements");
  return substitute_unchecked(curve, p, q);
}

std::string AlgebraElement::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const auto& [j, p] = *it;
    std::string ps = p.str("B");
    bool wrap = ps.find_first_of("+- ") != std::string::npos;
    if (!first) os << " + ";
    first = false;
    if (j == 0) {
      os << ps;
      continue;
    }
    if (ps == "1") {
      // bare power of A
    } else if (ps == "-1") {
      os << "-";
    } else {
      os << (wrap ? "(" + ps + ")" : ps) << "*";
    }
    os << "A";
    if (j != 1) os << "^" << j;
  }
  return os.str();
}

} // namespace qheis
