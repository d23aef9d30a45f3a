#include "qheis/poly.hpp"

#include <bit>
#include <cstdint>
#include <sstream>
#include <unordered_map>

namespace qheis {

// ----------------------------------------------------------------- UniPoly

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::constant(Scalar c) {
  UniPoly p;
  if (!c.is_zero()) p.c_.push_back(std::move(c));
  return p;
}

UniPoly UniPoly::monomial(int deg, Scalar c) {
  UniPoly p;
  if (!c.is_zero()) {
    p.c_.assign(static_cast<size_t>(deg) + 1, Scalar());
    p.c_.back() = std::move(c);
  }
  return p;
}

UniPoly UniPoly::from_coeffs(std::vector<Scalar> cs) {
  UniPoly p;
  p.c_ = std::move(cs);
  p.trim();
  return p;
}

Scalar UniPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Scalar();
  return c_[static_cast<size_t>(i)];
}

const Scalar& UniPoly::leading() const {
  if (is_zero()) fail(Errc::bad_argument, "leading coefficient of zero polynomial");
  return c_.back();
}

UniPoly UniPoly::operator-() const {
  UniPoly p = *this;
  for (auto& c : p.c_) c = -c;
  return p;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Scalar> out(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < out.size(); ++i)
    out[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  return UniPoly::from_coeffs(std::move(out));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<Scalar> out(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly::from_coeffs(std::move(out));
}

UniPoly UniPoly::scaled(const Scalar& s) const {
  if (s.is_zero()) return UniPoly();
  std::vector<Scalar> out(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) out[i] = c_[i] * s;
  return UniPoly::from_coeffs(std::move(out));
}

Scalar UniPoly::eval(const Scalar& x) const {
  Scalar acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::compose(const UniPoly& inner) const {
  UniPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * inner + UniPoly::constant(*it);
  return acc;
}

UniPoly UniPoly::pow(int e) const {
  if (e < 0) fail(Errc::bad_argument, "negative polynomial power");
  UniPoly acc = UniPoly::constant(Scalar::rational(Rational(1)));
  for (int i = 0; i < e; ++i) acc = acc * *this;
  return acc;
}

std::string UniPoly::str(const char* var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Scalar& c = c_[static_cast<size_t>(i)];
    if (c.is_zero()) continue;
    std::string cs = c.str();
    bool neg = cs.size() > 1 && cs[0] == '-' && cs.find_first_of("+- ", 1) == std::string::npos;
    if (first) {
      first = false;
    } else {
      if (neg) {
        os << " - ";
        cs = cs.substr(1);
      } else {
        os << " + ";
      }
    }
    bool wrap = cs.find_first_of("+- ") != std::string::npos;
    if (i == 0) {
      os << (wrap ? "(" + cs + ")" : cs);
    } else {
      if (!(cs == "1")) {
        if (cs == "-1")
          os << "-";
        else
          os << (wrap ? "(" + cs + ")" : cs) << "*";
      }
      os << var;
      if (i != 1) os << "^" << i;
    }
  }
  return os.str();
}

UniPoly scale_argument(const QParam& q, const UniPoly& p, long k) {
  validate_q(q);
  if (k == 0 || p.is_zero()) return p;
  std::vector<Scalar> out(p.coeffs().size());
  for (int i = 0; i <= p.degree(); ++i) out[static_cast<size_t>(i)] = p.coeff(i).times_q_pow(q, k * i);
  return UniPoly::from_coeffs(std::move(out));
}

UniPoly q_falling(const QParam& q, int j) {
  validate_q(q);
  if (j < 0) fail(Errc::bad_argument, "q_falling needs j >= 0");
  const QMode m = q.mode;
  UniPoly r = UniPoly::constant(Scalar::one(m));
  if (j == 0) return r;
  // (Z - 1)/q as the substitution argument.
  const Scalar inv_q = Scalar::one(m).times_q_pow(q, -1);
  const UniPoly arg = UniPoly::from_coeffs({-inv_q, inv_q});
  const UniPoly z = UniPoly::monomial(1, Scalar::one(m));
  for (int i = 1; i <= j; ++i) r = z * r.compose(arg);
  return r;
}

// ------------------------------------------------------------------ BiPoly

BiPoly BiPoly::constant(Scalar c) { return monomial(0, 0, std::move(c)); }

BiPoly BiPoly::monomial(int l, int m, Scalar c) {
  BiPoly b;
  if (!c.is_zero()) b.t_.emplace(MonoLM{l, m}, std::move(c));
  return b;
}

void BiPoly::add_term(MonoLM k, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = t_.find(k);
  if (it == t_.end()) {
    t_.emplace(k, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

Scalar BiPoly::coeff(int l, int m) const {
  auto it = t_.find(MonoLM{l, m});
  return it == t_.end() ? Scalar() : it->second;
}

int BiPoly::total_degree() const {
  int d = -1;
  for (const auto& [k, c] : t_) d = std::max(d, k.l + k.m);
  return d;
}

BiPoly BiPoly::operator-() const {
  BiPoly out;
  for (const auto& [k, c] : t_) out.t_.emplace(k, -c);
  return out;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
  BiPoly out = a;
  for (const auto& [k, c] : b.t_) out.add_term(k, c);
  return out;
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly out;
  for (const auto& [ka, ca] : a.t_)
    for (const auto& [kb, cb] : b.t_) out.add_term(MonoLM{ka.l + kb.l, ka.m + kb.m}, ca * cb);
  return out;
}

BiPoly BiPoly::scaled(const Scalar& s) const {
  BiPoly out;
  for (const auto& [k, c] : t_) out.add_term(k, c * s);
  return out;
}

Scalar BiPoly::eval(const Scalar& lam, const Scalar& mu) const {
  Scalar acc;
  for (const auto& [k, c] : t_) {
    Scalar term = c;
    for (int i = 0; i < k.l; ++i) term = term * lam;
    for (int i = 0; i < k.m; ++i) term = term * mu;
    acc += term;
  }
  return acc;
}

namespace {
void append_term(std::ostringstream& os, bool& first, const Scalar& c, const std::string& mono) {
  std::string cs = c.str();
  bool neg = cs.size() > 1 && cs[0] == '-' && cs.find_first_of("+- ", 1) == std::string::npos;
  if (first) {
    first = false;
  } else if (neg) {
    os << " - ";
    cs = cs.substr(1);
  } else {
    os << " + ";
  }
  bool wrap = cs.find_first_of("+- ") != std::string::npos;
  if (mono.empty()) {
    os << (wrap ? "(" + cs + ")" : cs);
    return;
  }
  if (cs == "1") {
    os << mono;
  } else if (cs == "-1") {
    os << "-" << mono;
  } else {
    os << (wrap ? "(" + cs + ")" : cs) << "*" << mono;
  }
}

std::string mono_str(int x, int l, int m) {
  std::ostringstream os;
  auto put = [&os](const char* v, int e) {
    if (e == 0) return;
    if (os.tellp() > 0) os << "*";
    os << v;
    if (e != 1) os << "^" << e;
  };
  put("X", x);
  put("lam", l);
  put("mu", m);
  return os.str();
}
} // namespace

std::string BiPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : t_) append_term(os, first, c, mono_str(0, k.l, k.m));
  return os.str();
}

// ----------------------------------------------------------------- TriPoly

TriPoly TriPoly::constant(Scalar c) { return monomial(MonoXLM{0, 0, 0}, std::move(c)); }

TriPoly TriPoly::monomial(MonoXLM k, Scalar c) {
  TriPoly p;
  if (!c.is_zero()) p.t_.emplace(k, std::move(c));
  return p;
}

TriPoly TriPoly::from_unipoly_x(const UniPoly& p) {
  TriPoly out;
  for (int i = 0; i <= p.degree(); ++i) out.add_term(MonoXLM{i, 0, 0}, p.coeff(i));
  return out;
}

TriPoly TriPoly::from_bipoly(const BiPoly& b, int x_power) {
  TriPoly out;
  for (const auto& [k, c] : b.terms()) out.add_term(MonoXLM{x_power, k.l, k.m}, c);
  return out;
}

void TriPoly::add_term(MonoXLM k, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = t_.find(k);
  if (it == t_.end()) {
    t_.emplace(k, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

Scalar TriPoly::coeff(MonoXLM k) const {
  auto it = t_.find(k);
  return it == t_.end() ? Scalar() : it->second;
}

int TriPoly::deg_x() const {
  int d = -1;
  for (const auto& [k, c] : t_) d = std::max(d, k.x);
  return d;
}

int TriPoly::deg_lambda() const {
  int d = -1;
  for (const auto& [k, c] : t_) d = std::max(d, k.l);
  return d;
}

int TriPoly::deg_mu() const {
  int d = -1;
  for (const auto& [k, c] : t_) d = std::max(d, k.m);
  return d;
}

TriPoly TriPoly::operator-() const {
  TriPoly out;
  for (const auto& [k, c] : t_) out.t_.emplace(k, -c);
  return out;
}

TriPoly operator+(const TriPoly& a, const TriPoly& b) {
  TriPoly out = a;
  for (const auto& [k, c] : b.t_) out.add_term(k, c);
  return out;
}

TriPoly operator-(const TriPoly& a, const TriPoly& b) { return a + (-b); }

TriPoly operator*(const TriPoly& a, const TriPoly& b) {
  TriPoly out;
  for (const auto& [ka, ca] : a.t_)
    for (const auto& [kb, cb] : b.t_)
      out.add_term(MonoXLM{ka.x + kb.x, ka.l + kb.l, ka.m + kb.m}, ca * cb);
  return out;
}

TriPoly TriPoly::scaled(const Scalar& s) const {
  TriPoly out;
  for (const auto& [k, c] : t_) out.add_term(k, c * s);
  return out;
}

Scalar TriPoly::eval(const Scalar& x, const Scalar& lam, const Scalar& mu) const {
  Scalar acc;
  for (const auto& [k, c] : t_) {
    Scalar term = c;
    for (int i = 0; i < k.x; ++i) term = term * x;
    for (int i = 0; i < k.l; ++i) term = term * lam;
    for (int i = 0; i < k.m; ++i) term = term * mu;
    acc += term;
  }
  return acc;
}

TriPoly TriPoly::coeff_lambda(int a) const {
  TriPoly out;
  for (const auto& [k, c] : t_)
    if (k.l == a) out.add_term(MonoXLM{k.x, 0, k.m}, c);
  return out;
}

TriPoly TriPoly::coeff_mu(int b) const {
  TriPoly out;
  for (const auto& [k, c] : t_)
    if (k.m == b) out.add_term(MonoXLM{k.x, k.l, 0}, c);
  return out;
}

TriPoly TriPoly::divide_exact(const TriPoly& d) const {
  if (d.is_zero()) fail(Errc::bad_argument, "division by zero polynomial");
  TriPoly quot, rem = *this;
  const auto& dlead = *d.t_.rbegin();
  while (!rem.is_zero()) {
    const auto& rlead = *rem.t_.rbegin();
    MonoXLM e{rlead.first.x - dlead.first.x, rlead.first.l - dlead.first.l,
              rlead.first.m - dlead.first.m};
    if (e.x < 0 || e.l < 0 || e.m < 0) fail(Errc::not_divisible, "inexact polynomial division");
    TriPoly term = TriPoly::monomial(e, rlead.second.divide_exact(dlead.second));
    quot = quot + term;
    rem = rem - term * d;
  }
  return quot;
}

std::string TriPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : t_) append_term(os, first, c, mono_str(k.x, k.l, k.m));
  return os.str();
}

std::vector<BiPoly> extract_x_coefficients(const TriPoly& d) {
  std::vector<BiPoly> out(static_cast<size_t>(d.deg_x() + 1));
  for (const auto& [k, c] : d.terms()) out[static_cast<size_t>(k.x)].add_term(MonoLM{k.l, k.m}, c);
  return out;
}

// ------------------------------------------------------------ determinants

TriPoly determinant(const TriMatrix& mat) {
  const int n = mat.size();
  if (n == 0) return TriPoly::constant(Scalar::rational(Rational(1)));
  if (n > 24) fail(Errc::bad_argument, "matrix too large for minor expansion");
  // det over rows [0, popcount(mask)) and the column set `mask`, expanding
  // along the last of those rows. The memo is local to this call.
  std::unordered_map<uint32_t, TriPoly> memo;
  auto rec = [&](auto&& self, uint32_t mask) -> TriPoly {
    if (mask == 0) return TriPoly::constant(Scalar::rational(Rational(1)));
    auto hit = memo.find(mask);
    if (hit != memo.end()) return hit->second;
    const int row = std::popcount(mask) - 1;
    TriPoly acc;
    int pos = 0;
    for (int col = 0; col < n; ++col) {
      if (!(mask & (1u << col))) continue;
      const TriPoly& entry = mat.at(row, col);
      if (!entry.is_zero()) {
        TriPoly sub = self(self, mask & ~(1u << col));
        TriPoly term = entry * sub;
        if ((row + pos) % 2 == 0)
          acc = acc + term;
        else
          acc = acc - term;
      }
      ++pos;
    }
    memo.emplace(mask, acc);
    return acc;
  };
  return rec(rec, (n == 32 ? 0xffffffffu : (1u << n) - 1));
}

TriPoly determinant_bareiss(const TriMatrix& mat) {
  const int n = mat.size();
  if (n == 0) return TriPoly::constant(Scalar::rational(Rational(1)));
  std::vector<std::vector<TriPoly>> m(static_cast<size_t>(n), std::vector<TriPoly>(static_cast<size_t>(n)));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m[static_cast<size_t>(r)][static_cast<size_t>(c)] = mat.at(r, c);

  bool negate = false;
  TriPoly prev = TriPoly::constant(Scalar::rational(Rational(1)));
  for (int k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (!m[i][k].is_zero()) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return TriPoly(); // singular
      std::swap(m[static_cast<size_t>(k)], m[static_cast<size_t>(swap_row)]);
      negate = !negate;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).divide_exact(prev);
      m[i][k] = TriPoly();
    }
    prev = m[k][k];
  }
  TriPoly det = m[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 1)];
  return negate ? -det : det;
}

Rational determinant_evaluated(const TriMatrix& mat, const Rational& x0, const Rational& lam0,
                               const Rational& mu0, const Rational& q0) {
  const int n = mat.size();
  std::vector<std::vector<Rational>> m(static_cast<size_t>(n), std::vector<Rational>(static_cast<size_t>(n)));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      Rational acc(0);
      for (const auto& [k, coef] : mat.at(r, c).terms())
        acc += coef.eval_at_q(q0) * rat_pow(x0, k.x) * rat_pow(lam0, k.l) * rat_pow(mu0, k.m);
      m[static_cast<size_t>(r)][static_cast<size_t>(c)] = acc;
    }
  // plain fraction-producing Gaussian elimination; exact over mpq
  Rational det(1);
  for (int k = 0; k < n; ++k) {
    int pivot = -1;
    for (int i = k; i < n; ++i)
      if (m[static_cast<size_t>(i)][static_cast<size_t>(k)] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) return Rational(0);
    if (pivot != k) {
      std::swap(m[static_cast<size_t>(k)], m[static_cast<size_t>(pivot)]);
      det = -det;
    }
    const Rational& pv = m[static_cast<size_t>(k)][static_cast<size_t>(k)];
    det *= pv;
    for (int i = k + 1; i < n; ++i) {
      Rational f = m[static_cast<size_t>(i)][static_cast<size_t>(k)] / pv;
      if (f == 0) continue;
      for (int j = k; j < n; ++j)
        m[static_cast<size_t>(i)][static_cast<size_t>(j)] -= f * m[static_cast<size_t>(k)][static_cast<size_t>(j)];
    }
  }
  return det;
}

} // namespace qheis
