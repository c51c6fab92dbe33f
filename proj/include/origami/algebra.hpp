#pragma once

#include <cstdint>
#include <vector>

#include "origami/errors.hpp"

namespace origami {

/// Integer-coefficient polynomial; coeffs[i] multiplies x^i, no trailing
/// zeros. The zero polynomial is the empty list.
struct IntPoly {
  std::vector<std::int64_t> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  std::int64_t leading() const { return coeffs.empty() ? 0 : coeffs.back(); }
};

// Coefficients exceed the 64-bit range not far past this; larger indices
// are rejected instead of overflowing silently.
inline constexpr int kChebyshevMaxK = 50;

// U_k, the k-th Chebyshev polynomial of the second kind, via the recursion
// U_k = 2x U_{k-1} - U_{k-2} with U_0 = 1, U_1 = 2x.
IntPoly chebyshev_u(int k);

// True iff every nonzero coefficient of U_k sits at an exponent with the
// same parity as k.
bool chebyshev_parity_holds(int k);

double eval_poly(const IntPoly& p, double x);

// x_k = 2 sin(k pi/n) cos(pi/n) / sin((k+1) pi/n): the projection of
// [[0,1]] at angles (pi/n, 2 pi/n) onto the real axis via the angle
// (k+1) pi/n. Requires n >= 3 and 0 <= k <= n-2. The endpoints are pinned:
// x_0 = 0, x_1 = 1, x_{n-2} = 4 cos^2(pi/n).
double projection_xk(int n, int k);

// Rebased sequence x'_k = (x_k - x_i) / (x_j - x_i): the projection of
// [[0,1]] at angles ((i+1) pi/n, (j+1) pi/n) via the angle (k+1) pi/n.
// Requires 0 <= i < j <= n-2 and 0 <= k <= n-2.
double projection_xk_rebased(int n, int k, int i, int j);

// Whether 2 cos(pi/n) lies in the origami set of the uniform n-angle set;
// holds exactly when n is odd.
bool two_cos_in_M(int n);

}  // namespace origami
