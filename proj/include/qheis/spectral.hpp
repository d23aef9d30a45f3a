#pragma once

#include <set>

#include "qheis/laurent.hpp"

namespace qheis {

/// The beta_d data of an element: for each occurring homogeneous degree d,
/// the polynomial in Z with beta_d(k) = poly({k}_q), whether d occurs with a
/// differentiation, and the band boundaries.
struct BandProfile {
  std::map<int, UniPoly> beta; // only nonzero entries (d occurs iff present)
  std::set<int> occurring;
  std::map<int, bool> with_differentiation;
  int d_max = 0, d_min = 0;
};

/// Throws ZeroElement on the zero element. Works in both q modes.
BandProfile band_profile(const AlgebraElement& p);

/// beta_d(k) as an exact rational (numeric q).
Rational beta_value(const QParam& q, const BandProfile& bp, int d, long k);

/// All integer zeros of the two boundary diagonals, found exactly: rational
/// roots of the Z-polynomial, each pulled back through q^k = 1 + z(q-1)
/// (or a divisor test on the k-polynomial at q = 1). Numeric q only.
struct BoundaryZeros {
  std::vector<long> upper; // zeros of beta_{d_max}, sorted
  std::vector<long> lower; // zeros of beta_{d_min}, sorted
};
BoundaryZeros boundary_zeros(const AlgebraElement& p);

/// Dense exact rational matrix, just big enough for the finite submatrices
/// and window restrictions used here.
class RationalMatrix {
public:
  RationalMatrix(int rows, int cols) : r_(rows), c_(cols), d_(static_cast<size_t>(rows) * cols) {}
  int rows() const { return r_; }
  int cols() const { return c_; }
  Rational& at(int i, int j) { return d_[static_cast<size_t>(i) * c_ + j]; }
  const Rational& at(int i, int j) const { return d_[static_cast<size_t>(i) * c_ + j]; }

  int rank() const;
  /// Nullspace basis in the standard free-variable form.
  std::vector<std::vector<Rational>> nullspace() const;

private:
  int r_, c_;
  std::vector<Rational> d_;
};

/// A finite submatrix of the band matrix Gamma (gamma_{k,l} = beta_{k-l}(l))
/// whose nullity equals dim ker P: columns [col_lo, col_hi] chosen to trap
/// every boundary-diagonal zero, rows = all rows fully supported there.
struct FiniteSubmatrix {
  long col_lo = 0, col_hi = -1;
  long row_lo = 0, row_hi = -1;
  RationalMatrix m{0, 0};
};

/// Selection rule: col_lo = min(0, zeros) - 1 - pad,
/// col_hi = max(0, zeros) + 1 + (d_max - d_min) + pad. Requires d_max > d_min.
FiniteSubmatrix finite_submatrix(const AlgebraElement& p, long pad = 0);

struct KernelReport {
  long dim = 0;
  long lower = 0, upper = 0; // d_max - d_min <= dim <= lower + min(N_max, N_min)
  int d_max = 0, d_min = 0;
  long n_max = 0, n_min = 0; // boundary zero counts
};

/// Exact kernel dimension in the Laurent module plus the a-priori bounds.
/// Single-diagonal elements count boundary zeros; otherwise the nullity of
/// the finite submatrix. Numeric q only.
KernelReport kernel_dimension(const AlgebraElement& p);

/// Windowed kernel basis: nullspace vectors of the finite submatrix extended
/// along the boundary diagonals across [lo, hi]; trusted everywhere,
/// normalized to 1 at index 0 when possible. The window must contain the
/// submatrix column range.
std::vector<LaurentWindow> kernel_basis_window(const AlgebraElement& p, long lo, long hi);

/// At least `count` distinct certified eigenvalues of P. For elements
/// supported in homogeneous degree 0 these are the values beta_0(k); for
/// anything else every rational is an eigenvalue with at most one exception.
std::vector<Rational> spectrum_sample(const AlgebraElement& p, int count);

/// dim ker(P - lambda) <= |d_max| + |d_min| + m for every sample, with the
/// band boundaries taken from P itself.
bool uniform_bound_check(const AlgebraElement& p, const std::vector<Rational>& lambdas);

/// All rational roots of a numeric-mode polynomial (rational root theorem,
/// every candidate verified by evaluation).
std::vector<Rational> rational_roots(const UniPoly& p);

} // namespace qheis
