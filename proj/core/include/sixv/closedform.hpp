#pragma once

#include <string>
#include <vector>

#include "sixv/enumerate.hpp"
#include "sixv/poly.hpp"
#include "sixv/rational.hpp"
#include "sixv/trigpoly.hpp"

namespace sixv {

// Exact-arithmetic forms of the counting formulas, recursions, generating
// functions and differential equations for the refined ASM numbers, each
// cross-checkable against the enumerator.  Everything here that can be
// integer or rational is; floating point appears only where a trigonometric
// evaluation is inherent.

// Total number of order-n ASMs by the recursion
//   A_{n+1}/A_n = (3n+1)! n! / ((2n+1)! (2n)!),  A_1 = 1.
BigInt a_total(int n);

// Refined count A(n,r) = A(n,1)/(2n-2)! * (n+r-2)!(2n-r-1)!/((r-1)!(n-r)!)
// with A(n,1) = A_{n-1}; evaluated by exact factorial cancellation.
BigInt a_refined(int n, int r);

// Generating polynomial A(t) = sum_r A(n,r) t^{n-r}.
Poly gen_poly(int n);

// t(1-t) A'' + 2(1-n-t) A' + n(n-1) A, which must vanish identically.
Poly ode_residual_A(int n);

// (2n-r-1) r A(n,r+1) == (n-r)(n+r-1) A(n,r), exact, for 1 <= r <= n-1.
bool recursion_check(int n, int r);

// f(u) = sum_m C(n-4/3, m) C(n-2/3, n-m-1) sin((4-3n+6m) u), with exact
// rational coefficients (denominators are powers of 3 by construction).
struct SinSeries {
  std::vector<long> freqs;
  std::vector<Rational> coeffs;

  double eval(double u) const;
  double eval_d1(double u) const;
  double eval_d2(double u) const;

  // Exact l-th derivative at u = 0; zero for even l by parity.
  Rational derivative_at_zero(int l) const;

  // sum_m coeff_m * freq_m * p(freq_m^2) for a rational-coefficient p,
  // evaluated exactly; vanishes for all p of degree <= n-2.
  Rational odd_moment(const Poly& p) const;

  TrigPoly to_trigpoly() const;
};

SinSeries f_closed(int n);

// Relative residual of  f'' - 6(n-1) cot(3u) f' - (3n-2)(3n-4) f  at u,
// with f = f_closed(n).  Throws NearSingular when |sin 3u| is tiny.
double ode_residual_f(int n, double u);

// Outcome of an exact identity suite; `detail` names the first failing cell.
struct IdentityReport {
  bool pass = true;
  std::string detail;
  // Fitted proportionality constant, when the identity has one.
  Rational fitted_constant;
};

// The three coefficient relations linking B, C and A(n-1, .):
//   B(n;r,rt) = C(n;r,rt+1) + C(n;r+1,rt) - C(n;r+1,rt+1)      (r + rt > 2)
//   C(n;r,2) - C(n;r+1,2) = B(n;r,1) = A(n-1, r-1)             (r >= 2)
//   A(n,1) = C(n;2,2)
// with C extended by zero outside [2, n].  Tables come from the enumerator.
IdentityReport bc_relations(int n, const EnumOptions& opt = {});

// B(n;r+1,rt+1) - B(n;r,rt) ==
//   { A(n-1,r)[A(n,rt+1)-A(n,rt)] + A(n-1,rt)[A(n,r+1)-A(n,r)] } / A(n,1),
// exact in integers (the division must leave no remainder).
IdentityReport b_identity(int n, const EnumOptions& opt = {});

// The two-variable generating identity
//   sum B(n;r,rt) t^{n-r} tt^{rt-1} = const (H(t)G(tt) - H(tt)G(t))/(t - tt)
// with G = (1-t)A and H the first-order combination of A and A'; both sides
// are built as exact bivariate polynomials and the single constant is fitted
// from the first nonzero coefficient.
IdentityReport double_gen_check(int n, const EnumOptions& opt = {});

}  // namespace sixv
