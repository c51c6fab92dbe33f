#include "origami/algebra.hpp"

#include <cmath>

#include "origami/numeric.hpp"

namespace origami {

IntPoly chebyshev_u(int k) {
  if (k < 0) raise(Errc::out_of_range, "chebyshev index must be non-negative");
  if (k > kChebyshevMaxK)
    raise(Errc::out_of_range, "chebyshev index exceeds the 64-bit-safe cap");

  IntPoly prev{{1}};      // U_0
  if (k == 0) return prev;
  IntPoly cur{{0, 2}};    // U_1
  for (int i = 2; i <= k; ++i) {
    IntPoly next;
    next.coeffs.assign(static_cast<std::size_t>(i) + 1, 0);
    for (std::size_t j = 0; j < cur.coeffs.size(); ++j)
      next.coeffs[j + 1] = 2 * cur.coeffs[j];
    for (std::size_t j = 0; j < prev.coeffs.size(); ++j)
      next.coeffs[j] -= prev.coeffs[j];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

bool chebyshev_parity_holds(int k) {
  const IntPoly u = chebyshev_u(k);
  for (std::size_t j = 0; j < u.coeffs.size(); ++j) {
    if (u.coeffs[j] == 0) continue;
    if ((j % 2) != (static_cast<std::size_t>(k) % 2)) return false;
  }
  return true;
}

double eval_poly(const IntPoly& p, double x) {
  // Extended-precision Horner: the integer coefficients reach 2^k and
  // cancel heavily near |x| = 1, which plain doubles cannot absorb within
  // the promised 1e-9.
  long double acc = 0.0L;
  const long double xl = x;
  for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it)
    acc = acc * xl + static_cast<long double>(*it);
  return static_cast<double>(acc);
}

double projection_xk(int n, int k) {
  if (n < 3) raise(Errc::out_of_range, "projection requires n >= 3");
  if (k < 0 || k > n - 2) raise(Errc::invalid_index, "projection index outside 0..n-2");

  // The table cosine keeps the pinned endpoints consistent: for n = 3 the
  // k = 1 and k = n-2 anchors are the same number and must agree exactly.
  const double c = Angle::rational_pi(1, n).cos_sin().first;
  if (k == 0) return 0.0;
  if (k == 1) return 1.0;
  if (k == n - 2) return 4.0 * c * c;
  return 2.0 * std::sin(k * kPi / n) * c / std::sin((k + 1) * kPi / n);
}

double projection_xk_rebased(int n, int k, int i, int j) {
  if (n < 3) raise(Errc::out_of_range, "projection requires n >= 3");
  if (i < 0 || j <= i || j > n - 2 || k < 0 || k > n - 2)
    raise(Errc::invalid_index, "rebase indices must satisfy 0 <= i < j <= n-2, 0 <= k <= n-2");

  const double xi = projection_xk(n, i);
  const double xj = projection_xk(n, j);
  const double denom = xj - xi;
  if (std::fabs(denom) < 1e-15)
    raise(Errc::degenerate_rebase, "coincident rebase anchors");
  return (projection_xk(n, k) - xi) / denom;
}

bool two_cos_in_M(int n) {
  if (n < 3) raise(Errc::out_of_range, "uniform angle sets start at n = 3");
  return n % 2 == 1;
}

}  // namespace origami
