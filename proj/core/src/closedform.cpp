#include "sixv/closedform.hpp"

#include <cmath>
#include <string>

namespace sixv {

namespace {
using cplx = std::complex<double>;
}

BigInt a_total(int n) {
  if (n < 0) throw OutOfRange("a_total: negative n");
  BigInt a = 1;
  for (int m = 1; m < n; ++m) {
    a = (a * factorial(3 * m + 1) * factorial(m))
            .divexact(factorial(2 * m + 1) * factorial(2 * m));
  }
  return a;
}

BigInt a_refined(int n, int r) {
  if (n < 1 || r < 1 || r > n) throw OutOfRange("a_refined: need 1 <= r <= n");
  const BigInt num = a_total(n - 1) * factorial(n + r - 2) * factorial(2 * n - r - 1);
  const BigInt den = factorial(2 * n - 2) * factorial(r - 1) * factorial(n - r);
  return num.divexact(den);
}

Poly gen_poly(int n) {
  std::vector<Rational> c(static_cast<size_t>(n));
  for (int r = 1; r <= n; ++r) {
    c[static_cast<size_t>(n - r)] = Rational(a_refined(n, r));
  }
  return Poly(std::move(c));
}

Poly ode_residual_A(int n) {
  const Poly a = gen_poly(n);
  const Poly a1 = a.derivative();
  const Poly a2 = a1.derivative();
  const Poly t_1mt({Rational(0), Rational(1), Rational(-1)});        // t(1-t)
  const Poly lin({Rational(2 * (1 - n)), Rational(-2)});             // 2(1-n-t)
  return t_1mt * a2 + lin * a1 + a * Rational(static_cast<long long>(n) * (n - 1));
}

bool recursion_check(int n, int r) {
  if (r < 1 || r > n - 1) throw OutOfRange("recursion_check: need 1 <= r <= n-1");
  const BigInt lhs = BigInt(2 * n - r - 1) * BigInt(r) * a_refined(n, r + 1);
  const BigInt rhs = BigInt(n - r) * BigInt(n + r - 1) * a_refined(n, r);
  return lhs == rhs;
}

// The sum cancels down to order u^(2n-1) near the origin, so accumulate in
// extended precision.
double SinSeries::eval(double u) const {
  long double s = 0;
  for (size_t m = 0; m < freqs.size(); ++m) {
    s += static_cast<long double>(coeffs[m].to_double()) *
         std::sin(static_cast<long double>(freqs[m]) * u);
  }
  return static_cast<double>(s);
}

double SinSeries::eval_d1(double u) const {
  long double s = 0;
  for (size_t m = 0; m < freqs.size(); ++m) {
    s += static_cast<long double>(coeffs[m].to_double()) * freqs[m] *
         std::cos(static_cast<long double>(freqs[m]) * u);
  }
  return static_cast<double>(s);
}

double SinSeries::eval_d2(double u) const {
  long double s = 0;
  for (size_t m = 0; m < freqs.size(); ++m) {
    s -= static_cast<long double>(coeffs[m].to_double()) * freqs[m] * freqs[m] *
         std::sin(static_cast<long double>(freqs[m]) * u);
  }
  return static_cast<double>(s);
}

Rational SinSeries::derivative_at_zero(int l) const {
  if (l < 0) throw OutOfRange("derivative_at_zero: negative order");
  if (l % 2 == 0) return Rational(0);  // sin-series parity
  Rational s(0);
  for (size_t m = 0; m < freqs.size(); ++m) {
    s += coeffs[m] * Rational(pow(BigInt(freqs[m]), static_cast<unsigned>(l)));
  }
  return l % 4 == 1 ? s : -s;
}

Rational SinSeries::odd_moment(const Poly& p) const {
  Rational s(0);
  for (size_t m = 0; m < freqs.size(); ++m) {
    const Rational nu(static_cast<long long>(freqs[m]));
    s += coeffs[m] * nu * p.eval(nu * nu);
  }
  return s;
}

TrigPoly SinSeries::to_trigpoly() const {
  int maxf = 0;
  for (long f : freqs) maxf = std::max(maxf, static_cast<int>(std::labs(f)));
  TrigPoly t(maxf, std::vector<cplx>(static_cast<size_t>(maxf) + 1, 0.0));
  for (size_t m = 0; m < freqs.size(); ++m) {
    // sin(fu) = (e^{ifu} - e^{-ifu}) / (2i)
    const double q = coeffs[m].to_double();
    const int f = static_cast<int>(freqs[m]);
    t.set_coeff_at_freq(f, t.coeff_at_freq(f) + cplx(0.0, -q / 2.0));
    t.set_coeff_at_freq(-f, t.coeff_at_freq(-f) + cplx(0.0, q / 2.0));
  }
  return t;
}

SinSeries f_closed(int n) {
  if (n < 1) throw OutOfRange("f_closed: n must be >= 1");
  // Binomial arguments n - 4/3 and n - 2/3, kept exact.
  const Rational top1(BigInt(3 * n - 4), BigInt(3));
  const Rational top2(BigInt(3 * n - 2), BigInt(3));
  SinSeries f;
  for (int m = 0; m < n; ++m) {
    f.freqs.push_back(4 - 3 * n + 6 * m);
    f.coeffs.push_back(generalized_binomial(top1, m) * generalized_binomial(top2, n - m - 1));
  }
  return f;
}

double ode_residual_f(int n, double u) {
  const double s3 = std::sin(3.0 * u);
  if (std::fabs(s3) < 1e-8) throw NearSingular("ode_residual_f: sin 3u ~ 0");
  const SinSeries f = f_closed(n);
  const double t1 = f.eval_d2(u);
  const double t2 = -6.0 * (n - 1) * (std::cos(3.0 * u) / s3) * f.eval_d1(u);
  const double t3 = -static_cast<double>(3 * n - 2) * (3 * n - 4) * f.eval(u);
  // Relative to the largest term, floored at the equation's global scale:
  // all three terms can vanish together at an interior zero of f, and the
  // local ratio would then measure nothing but roundoff.
  double floor = 0;
  for (const Rational& q : f.coeffs) floor += std::fabs(q.to_double());
  floor *= std::fabs(static_cast<double>(3 * n - 2) * (3 * n - 4));
  const double scale = std::max({std::fabs(t1), std::fabs(t2), std::fabs(t3), floor});
  if (scale == 0) return 0;
  return std::fabs(t1 + t2 + t3) / scale;
}

IdentityReport bc_relations(int n, const EnumOptions& opt) {
  IdentityReport rep;
  const CountTable b = double_top_bottom(n, opt);
  const CountTable c = double_top_left(n, opt);

  if (n >= 2 && c.corner != c.at(2, 2)) {
    rep.pass = false;
    rep.detail = "A(n,1) != C(n;2,2): " + c.corner.to_string() + " vs " + c.at(2, 2).to_string();
    return rep;
  }
  for (int r = 1; r <= n; ++r) {
    for (int rt = 1; rt <= n; ++rt) {
      if (r + rt <= 2) continue;
      const BigInt rhs =
          c.at_or_zero(r, rt + 1) + c.at_or_zero(r + 1, rt) - c.at_or_zero(r + 1, rt + 1);
      if (b.at(r, rt) != rhs) {
        rep.pass = false;
        rep.detail = "B(" + std::to_string(n) + ";" + std::to_string(r) + "," +
                     std::to_string(rt) + ") = " + b.at(r, rt).to_string() +
                     " but C-combination gives " + rhs.to_string();
        return rep;
      }
    }
  }
  for (int r = 2; r <= n; ++r) {
    const BigInt diff = c.at_or_zero(r, 2) - c.at_or_zero(r + 1, 2);
    const BigInt b_r1 = b.at(r, 1);
    const BigInt a_prev = a_refined(n - 1, r - 1);
    if (diff != b_r1 || b_r1 != a_prev) {
      rep.pass = false;
      rep.detail = "C(n;" + std::to_string(r) + ",2) recursion: " + diff.to_string() + " vs B=" +
                   b_r1.to_string() + " vs A(n-1," + std::to_string(r - 1) + ")=" +
                   a_prev.to_string();
      return rep;
    }
  }
  return rep;
}

IdentityReport b_identity(int n, const EnumOptions& opt) {
  IdentityReport rep;
  if (n < 2) return rep;
  const CountTable b = double_top_bottom(n, opt);
  const BigInt an1 = a_refined(n, 1);
  for (int r = 1; r <= n - 1; ++r) {
    for (int rt = 1; rt <= n - 1; ++rt) {
      const BigInt lhs = b.at(r + 1, rt + 1) - b.at(r, rt);
      const BigInt num = a_refined(n - 1, r) * (a_refined(n, rt + 1) - a_refined(n, rt)) +
                         a_refined(n - 1, rt) * (a_refined(n, r + 1) - a_refined(n, r));
      BigInt rhs;
      try {
        rhs = num.divexact(an1);
      } catch (const NonIntegerQuotient&) {
        rep.pass = false;
        rep.detail = "non-integer quotient at (r,rt)=(" + std::to_string(r) + "," +
                     std::to_string(rt) + ")";
        return rep;
      }
      if (lhs != rhs) {
        rep.pass = false;
        rep.detail = "mismatch at (r,rt)=(" + std::to_string(r) + "," + std::to_string(rt) +
                     "): " + lhs.to_string() + " vs " + rhs.to_string();
        return rep;
      }
    }
  }
  return rep;
}

namespace {

// Bivariate exact polynomial as a grid co[a][b] of coefficients of t^a tt^b.
using Grid = std::vector<std::vector<Rational>>;

Grid outer(const Poly& p, const Poly& q, int dim) {
  Grid g(static_cast<size_t>(dim), std::vector<Rational>(static_cast<size_t>(dim), Rational(0)));
  for (int a = 0; a <= p.degree(); ++a) {
    for (int b = 0; b <= q.degree(); ++b) {
      g[static_cast<size_t>(a)][static_cast<size_t>(b)] = p.coeff(a) * q.coeff(b);
    }
  }
  return g;
}

// Quotient of an antisymmetric S(t,tt) by (t - tt): synthetic division in t
// over the ring of tt-polynomials.  The remainder S(tt,tt) must vanish.
Grid divide_by_t_minus_tt(const Grid& s) {
  const size_t dim = s.size();
  Grid q(dim, std::vector<Rational>(dim, Rational(0)));
  // Walk top coefficient down: q_{a-1} = s_a + tt * q_a.
  std::vector<Rational> carry(dim, Rational(0));  // q_a as tt-poly, starts at a = dim-1 (zero)
  for (size_t a = dim; a-- > 1;) {
    std::vector<Rational> qa(dim, Rational(0));
    for (size_t b = 0; b < dim; ++b) qa[b] = s[a][b];
    for (size_t b = 0; b + 1 < dim; ++b) qa[b + 1] += carry[b];  // + tt * previous
    q[a - 1] = qa;
    carry = std::move(qa);
  }
  // Remainder = s_0 + tt * q_0.
  std::vector<Rational> rem(dim + 1, Rational(0));
  for (size_t b = 0; b < dim; ++b) rem[b] = s[0][b];
  for (size_t b = 0; b < dim; ++b) rem[b + 1] += carry[b];
  for (const Rational& x : rem) {
    if (!x.is_zero()) throw TableMismatch("divided difference left a remainder");
  }
  return q;
}

}  // namespace

IdentityReport double_gen_check(int n, const EnumOptions& opt) {
  IdentityReport rep;
  const CountTable b = double_top_bottom(n, opt);
  const Poly a = gen_poly(n);
  const Poly g = Poly({Rational(1), Rational(-1)}) * a;  // (1-t) A
  const Rational half(BigInt(1), BigInt(2));
  const Poly h = Poly({Rational(1), Rational(1)}) * a * (Rational(n) - half) +
                 Poly({half, Rational(BigInt(-3), BigInt(2)), Rational(1)}) * a *
                     Rational(1 - n) +  // (1-t)(1/2-t) = 1/2 - 3t/2 + t^2
                 Poly({Rational(-1), Rational(2), Rational(-2), Rational(1)}) *
                     a.derivative();  // -(1-t)(t^2-t+1) = -1+2t-2t^2+t^3

  const int dim = std::max(h.degree(), g.degree()) + 1;
  Grid s = outer(h, g, dim);
  const Grid gh = outer(g, h, dim);
  for (int x = 0; x < dim; ++x) {
    for (int y = 0; y < dim; ++y) {
      s[static_cast<size_t>(x)][static_cast<size_t>(y)] -= gh[static_cast<size_t>(x)][static_cast<size_t>(y)];
    }
  }
  Grid rhs;
  try {
    rhs = divide_by_t_minus_tt(s);
  } catch (const TableMismatch& e) {
    rep.pass = false;
    rep.detail = e.what();
    return rep;
  }

  // lhs[a][b] = B(n; n-a, b+1)
  auto lhs_at = [&](int x, int y) -> BigInt {
    if (x < 0 || x >= n || y < 0 || y >= n) return 0;
    return b.at(n - x, y + 1);
  };
  auto rhs_at = [&](int x, int y) -> Rational {
    if (x < 0 || x >= dim || y < 0 || y >= dim) return Rational(0);
    return rhs[static_cast<size_t>(x)][static_cast<size_t>(y)];
  };

  // Fit the one free constant from the first nonzero right-hand coefficient.
  Rational constant(0);
  const int span = std::max(dim, n);
  for (int x = 0; x < span && constant.is_zero(); ++x) {
    for (int y = 0; y < span && constant.is_zero(); ++y) {
      if (!rhs_at(x, y).is_zero()) {
        if (lhs_at(x, y).is_zero()) {
          rep.pass = false;
          rep.detail = "supports differ at t^" + std::to_string(x) + " tt^" + std::to_string(y);
          return rep;
        }
        constant = Rational(lhs_at(x, y)) / rhs_at(x, y);
      }
    }
  }
  if (constant.is_zero()) {
    rep.pass = false;
    rep.detail = "right-hand side is identically zero";
    return rep;
  }
  for (int x = 0; x < span; ++x) {
    for (int y = 0; y < span; ++y) {
      if (Rational(lhs_at(x, y)) != rhs_at(x, y) * constant) {
        rep.pass = false;
        rep.detail = "coefficient of t^" + std::to_string(x) + " tt^" + std::to_string(y) +
                     ": " + lhs_at(x, y).to_string() + " vs " +
                     (rhs_at(x, y) * constant).to_string();
        return rep;
      }
    }
  }
  rep.fitted_constant = constant;
  return rep;
}

}  // namespace sixv
