#include "qheis/rational.hpp"

#include <cctype>

namespace qheis {

Rational rat_parse(std::string_view s) {
  std::string buf;
  buf.reserve(s.size());
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) buf.push_back(ch);
  if (buf.empty()) fail(Errc::bad_argument, "empty rational literal");
  auto check_part = [](std::string_view part, bool sign_ok) {
    if (part.empty()) return false;
    size_t i = 0;
    if (sign_ok && (part[0] == '+' || part[0] == '-')) i = 1;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
    return true;
  };
  auto slash = buf.find('/');
  bool ok;
  if (slash == std::string::npos) {
    ok = check_part(buf, true);
  } else {
    ok = check_part(std::string_view(buf).substr(0, slash), true) &&
         check_part(std::string_view(buf).substr(slash + 1), false);
  }
  if (!ok) fail(Errc::bad_argument, "malformed rational literal: " + std::string(s));
  Rational r(buf, 10);
  r.canonicalize();
  return r;
}

std::string rat_str(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_str();
}

Rational rat_pow(const Rational& r, long e) {
  if (e == 0) return Rational(1);
  if (r == 0) {
    if (e < 0) fail(Errc::bad_argument, "0 raised to a negative power");
    return Rational(0);
  }
  unsigned long ae = static_cast<unsigned long>(e < 0 ? -e : e);
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), r.get_num().get_mpz_t(), ae);
  mpz_pow_ui(den.get_mpz_t(), r.get_den().get_mpz_t(), ae);
  Rational out = (e > 0) ? Rational(num, den) : Rational(den, num);
  out.canonicalize();
  return out;
}

bool rat_is_integer(const Rational& r) { return r.get_den() == 1; }

std::optional<long> exact_q_log(const Rational& q, const Rational& v) {
  if (q == 0 || q == 1 || q == -1)
    fail(Errc::bad_argument, "exact_q_log requires |q| not in {0, 1}");
  if (v == 0) return std::nullopt;
  if (v == 1) return 0;

  // Normalize to a base of magnitude > 1 so powers grow monotonically.
  Rational base = q;
  long flip = 1;
  Rational abase = abs(base);
  if (abase < 1) {
    base = 1 / base;
    flip = -1;
    abase = abs(base);
  }
  Rational av = abs(v);
  if (av == 1) return std::nullopt; // |q^k| == 1 only at k == 0, handled above

  long dir = (av > 1) ? 1 : -1;
  Rational target = (dir == 1) ? v : 1 / v;
  Rational atarget = abs(target);
  Rational acc = base;
  for (long k = 1;; ++k) {
    if (acc == target) return flip * dir * k;
    if (abs(acc) > atarget) return std::nullopt;
    acc *= base;
  }
}

std::vector<BigInt> divisors(const BigInt& n) {
  BigInt a = abs(n);
  if (a == 0) fail(Errc::bad_argument, "divisors of zero");
  std::vector<BigInt> small, large;
  for (BigInt d = 1; d * d <= a; ++d) {
    if (a % d == 0) {
      small.push_back(d);
      if (d * d != a) large.push_back(a / d);
    }
  }
  for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
  return small;
}

} // namespace qheis
