#include "qheis/spectral.hpp"

#include <algorithm>

namespace qheis {

BandProfile band_profile(const AlgebraElement& p) {
  if (p.is_zero()) fail(Errc::zero_element, "band profile of the zero element");
  const QParam& q = p.qparam();
  BandProfile bp;
  for (const auto& [j, poly] : p.terms()) {
    const UniPoly rj = q_falling(q, j);
    for (int i = 0; i <= poly.degree(); ++i) {
      const Scalar c = poly.coeff(i);
      if (c.is_zero()) continue;
      const int d = i - j;
      bp.beta[d] = bp.beta[d] + rj.scaled(c);
      bp.occurring.insert(d);
      if (j >= 1) bp.with_differentiation[d] = true;
    }
  }
  // The r_j have exact degree j, so a degree cancels entirely iff all its
  // p_{j,i} vanish; still, drop any zero sums defensively against misuse.
  for (auto it = bp.beta.begin(); it != bp.beta.end();) {
    if (it->second.is_zero()) {
      bp.occurring.erase(it->first);
      bp.with_differentiation.erase(it->first);
      it = bp.beta.erase(it);
    } else {
      ++it;
    }
  }
  for (const auto& [d, b] : bp.beta) bp.with_differentiation.try_emplace(d, false);
  bp.d_max = *bp.occurring.rbegin();
  bp.d_min = *bp.occurring.begin();
  return bp;
}

Rational beta_value(const QParam& q, const BandProfile& bp, int d, long k) {
  auto it = bp.beta.find(d);
  if (it == bp.beta.end()) return Rational(0);
  return it->second.eval(q_int(q, k)).rat();
}

std::vector<Rational> rational_roots(const UniPoly& p) {
  if (p.is_zero()) fail(Errc::bad_argument, "roots of the zero polynomial");
  // clear denominators to an integer polynomial
  BigInt lcm(1);
  for (const auto& c : p.coeffs()) {
    BigInt den = c.rat().get_den();
    lcm = lcm / gcd(lcm, den) * den;
  }
  std::vector<BigInt> ic;
  for (const auto& c : p.coeffs()) {
    Rational scaled = c.rat() * Rational(lcm);
    ic.push_back(scaled.get_num());
  }
  std::vector<Rational> roots;
  size_t low = 0;
  while (low < ic.size() && ic[low] == 0) ++low;
  if (low > 0) roots.emplace_back(0);
  if (low + 1 == ic.size()) return roots; // c * Z^k

  const BigInt a0 = ic[low];
  const BigInt alead = ic.back();
  auto is_root = [&p](const Rational& r) { return p.eval(Scalar::rational(r)).is_zero(); };
  for (const BigInt& num : divisors(a0))
    for (const BigInt& den : divisors(alead)) {
      Rational cand(num, den);
      cand.canonicalize();
      if (is_root(cand)) roots.push_back(cand);
      if (is_root(-cand)) roots.push_back(-cand);
    }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

namespace {
void require_numeric(const QParam& q, const char* what) {
  validate_q(q);
  if (q.mode != QMode::numeric)
    fail(Errc::symbolic_mode_unsupported, std::string(what) + " needs a numeric q");
}

// Integer k with {k}_q equal to the given value, via q^k = 1 + z(q - 1).
std::optional<long> integer_with_q_int(const QParam& q, const Rational& z) {
  if (q.value == 1) {
    if (!rat_is_integer(z) || !z.get_num().fits_slong_p()) return std::nullopt;
    return z.get_num().get_si();
  }
  const Rational target = 1 + z * (q.value - 1);
  if (target == 0) return std::nullopt; // q^k never vanishes
  return exact_q_log(q.value, target);
}

std::vector<long> integer_zeros(const QParam& q, const UniPoly& beta) {
  std::vector<long> ks;
  if (beta.degree() == 0) return ks; // nonzero constant
  for (const Rational& z : rational_roots(beta)) {
    // z is a value of {k}_q; for q = 1 that is k itself (and the root must
    // fit in a long for the divisor test to make sense at this scale)
    if (auto k = integer_with_q_int(q, z)) ks.push_back(*k);
  }
  std::sort(ks.begin(), ks.end());
  return ks;
}
} // namespace

BoundaryZeros boundary_zeros(const AlgebraElement& p) {
  require_numeric(p.qparam(), "boundary_zeros");
  const BandProfile bp = band_profile(p);
  BoundaryZeros out;
  out.upper = integer_zeros(p.qparam(), bp.beta.at(bp.d_max));
  out.lower = integer_zeros(p.qparam(), bp.beta.at(bp.d_min));
  return out;
}

// ---------------------------------------------------------- RationalMatrix

namespace {
// reduced row echelon form in place; returns pivot columns
std::vector<int> rref(RationalMatrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int pr = -1;
    for (int i = row; i < m.rows(); ++i)
      if (m.at(i, col) != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pr, j), m.at(row, j));
    const Rational inv = 1 / m.at(row, col);
    for (int j = 0; j < m.cols(); ++j) m.at(row, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      const Rational f = m.at(i, col);
      for (int j = 0; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}
} // namespace

int RationalMatrix::rank() const {
  RationalMatrix copy = *this;
  return static_cast<int>(rref(copy).size());
}

std::vector<std::vector<Rational>> RationalMatrix::nullspace() const {
  RationalMatrix m = *this;
  const std::vector<int> pivots = rref(m);
  std::vector<bool> is_pivot(static_cast<size_t>(c_), false);
  for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;
  std::vector<std::vector<Rational>> basis;
  for (int free = 0; free < c_; ++free) {
    if (is_pivot[static_cast<size_t>(free)]) continue;
    std::vector<Rational> v(static_cast<size_t>(c_), Rational(0));
    v[static_cast<size_t>(free)] = 1;
    for (size_t r = 0; r < pivots.size(); ++r)
      v[static_cast<size_t>(pivots[r])] = -m.at(static_cast<int>(r), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

// --------------------------------------------------------- finite submatrix

FiniteSubmatrix finite_submatrix(const AlgebraElement& p, long pad) {
  require_numeric(p.qparam(), "finite_submatrix");
  const QParam& q = p.qparam();
  const BandProfile bp = band_profile(p);
  if (bp.d_max == bp.d_min)
    fail(Errc::bad_argument, "single-diagonal element has no finite submatrix");
  const BoundaryZeros bz = boundary_zeros(p);

  long zmin = 0, zmax = 0;
  for (long z : bz.upper) {
    zmin = std::min(zmin, z);
    zmax = std::max(zmax, z);
  }
  for (long z : bz.lower) {
    zmin = std::min(zmin, z);
    zmax = std::max(zmax, z);
  }
  FiniteSubmatrix fs;
  fs.col_lo = zmin - 1 - pad;
  fs.col_hi = zmax + 1 + (bp.d_max - bp.d_min) + pad;
  fs.row_lo = fs.col_lo + bp.d_max;
  fs.row_hi = fs.col_hi + bp.d_min;
  const int rows = static_cast<int>(fs.row_hi - fs.row_lo + 1);
  const int cols = static_cast<int>(fs.col_hi - fs.col_lo + 1);
  fs.m = RationalMatrix(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const long k = fs.row_lo + i;
    for (int j = 0; j < cols; ++j) {
      const long l = fs.col_lo + j;
      const int d = static_cast<int>(k - l);
      fs.m.at(i, j) = (d >= bp.d_min && d <= bp.d_max) ? beta_value(q, bp, d, l) : Rational(0);
    }
  }
  return fs;
}

KernelReport kernel_dimension(const AlgebraElement& p) {
  if (p.is_zero()) fail(Errc::zero_element, "kernel of the zero element");
  require_numeric(p.qparam(), "kernel_dimension");
  const BandProfile bp = band_profile(p);
  const BoundaryZeros bz = boundary_zeros(p);
  KernelReport rep;
  rep.d_max = bp.d_max;
  rep.d_min = bp.d_min;
  rep.n_max = static_cast<long>(bz.upper.size());
  rep.n_min = static_cast<long>(bz.lower.size());
  rep.lower = bp.d_max - bp.d_min;
  rep.upper = rep.lower + std::min(rep.n_max, rep.n_min);
  if (bp.d_max == bp.d_min) {
    rep.dim = rep.n_max; // one diagonal: a_l is free exactly at its zeros
  } else {
    const FiniteSubmatrix fs = finite_submatrix(p);
    rep.dim = fs.m.cols() - fs.m.rank();
  }
  return rep;
}

std::vector<LaurentWindow> kernel_basis_window(const AlgebraElement& p, long lo, long hi) {
  if (p.is_zero()) fail(Errc::zero_element, "kernel of the zero element");
  require_numeric(p.qparam(), "kernel_basis_window");
  const QParam& q = p.qparam();
  const BandProfile bp = band_profile(p);
  const BoundaryZeros bz = boundary_zeros(p);

  std::vector<LaurentWindow> basis;
  auto normalize = [](LaurentWindow& w) {
    Scalar ref = w.at(0);
    if (ref.is_zero())
      for (long n = w.lo; n <= w.hi; ++n)
        if (!w.at(n).is_zero()) {
          ref = w.at(n);
          break;
        }
    if (!ref.is_zero()) w = w.scaled(Scalar::rational(Rational(1) / ref.rat()));
  };

  if (bp.d_max == bp.d_min) {
    // kernel = span of the coordinate vectors at the diagonal's zeros
    for (long k : bz.upper) {
      if (k < lo || k > hi)
        fail(Errc::degenerate_window, "window does not contain a kernel coordinate");
      basis.push_back(LaurentWindow::monomial(lo, hi, k, Scalar::one(q.mode)));
    }
    return basis;
  }

  const FiniteSubmatrix fs = finite_submatrix(p);
  if (lo > fs.col_lo || hi < fs.col_hi)
    fail(Errc::degenerate_window, "window must contain the finite submatrix columns");
  for (const auto& vec : fs.m.nullspace()) {
    LaurentWindow w = LaurentWindow::zeros(lo, hi);
    for (long l = fs.col_lo; l <= fs.col_hi; ++l)
      w.set(l, Scalar::rational(vec[static_cast<size_t>(l - fs.col_lo)]));
    // downward extension along the top boundary diagonal: row k = l + d_max
    for (long l = fs.col_lo - 1; l >= lo; --l) {
      const long k = l + bp.d_max;
      Rational sum(0);
      for (int d = bp.d_min; d < bp.d_max; ++d) sum += beta_value(q, bp, d, k - d) * w.at(k - d).rat();
      const Rational pivot = beta_value(q, bp, bp.d_max, l);
      w.set(l, Scalar::rational(-sum / pivot));
    }
    // upward extension along the bottom boundary diagonal: row k = l + d_min
    for (long l = fs.col_hi + 1; l <= hi; ++l) {
      const long k = l + bp.d_min;
      Rational sum(0);
      for (int d = bp.d_min + 1; d <= bp.d_max; ++d)
        sum += beta_value(q, bp, d, k - d) * w.at(k - d).rat();
      const Rational pivot = beta_value(q, bp, bp.d_min, l);
      w.set(l, Scalar::rational(-sum / pivot));
    }
    normalize(w);
    basis.push_back(std::move(w));
  }
  return basis;
}

std::vector<Rational> spectrum_sample(const AlgebraElement& p, int count) {
  if (p.is_constant()) fail(Errc::constant_element, "spectrum sampling needs a nonconstant element");
  require_numeric(p.qparam(), "spectrum_sample");
  const QParam& q = p.qparam();
  const BandProfile bp = band_profile(p);
  const AlgebraElement one = AlgebraElement::one(q);
  std::vector<Rational> values;

  auto certified = [&](const Rational& lam) {
    const AlgebraElement shifted = p - one.scaled(Scalar::rational(lam));
    return !shifted.is_zero() && kernel_dimension(shifted).dim >= 1;
  };

  if (bp.occurring == std::set<int>{0}) {
    // purely degree 0: the spectrum is exactly the set of values beta_0(k)
    for (long k = 0; static_cast<int>(values.size()) < count; ++k) {
      Rational lam = beta_value(q, bp, 0, k);
      if (std::find(values.begin(), values.end(), lam) != values.end()) continue;
      if (certified(lam)) values.push_back(lam);
    }
    return values;
  }
  // some degree d != 0 occurs: every lambda works except at most one
  for (long i = 0; static_cast<int>(values.size()) < count; ++i) {
    Rational lam(i);
    if (certified(lam)) values.push_back(lam);
  }
  return values;
}

bool uniform_bound_check(const AlgebraElement& p, const std::vector<Rational>& lambdas) {
  if (p.is_constant()) fail(Errc::constant_element, "uniform bound needs a nonconstant element");
  require_numeric(p.qparam(), "uniform_bound_check");
  const BandProfile bp = band_profile(p);
  const int m = *p.order();
  const long bound = std::abs(static_cast<long>(bp.d_max)) + std::abs(static_cast<long>(bp.d_min)) + m;
  const AlgebraElement one = AlgebraElement::one(p.qparam());
  for (const Rational& lam : lambdas) {
    const AlgebraElement shifted = p - one.scaled(Scalar::rational(lam));
    if (shifted.is_zero()) continue; // cannot happen for nonconstant p
    if (kernel_dimension(shifted).dim > bound) return false;
  }
  return true;
}

} // namespace qheis
