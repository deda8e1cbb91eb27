#include "sheun/families.hpp"

namespace sheun {

namespace {

// Pochhammer with a singularity check: used for factors that sit in a
// denominator, where a zero means the parameter tuple is inadmissible.
Rational poch_nonzero(const Rational& base, int n, const std::string& name) {
  Rational r = pochhammer(base, n);
  if (is_zero(r)) throw SingularPochhammer(name + "_" + std::to_string(n));
  return r;
}

// Single denominator factor base + k, reported as the Pochhammer symbol
// (name)_{k+1} that first vanishes with it.
Rational factor_nonzero(const Rational& base, int k, const std::string& name) {
  Rational v = base + k;
  if (is_zero(v)) throw SingularPochhammer(name + "_" + std::to_string(k + 1));
  return v;
}

LambdaPoly scale_lambda(const LambdaPoly& q, const Rational& factor) {
  std::vector<Rational> c(q.coeffs());
  Rational pow(1);
  for (size_t i = 0; i < c.size(); ++i) {
    c[i] *= pow;
    pow *= factor;
  }
  return LambdaPoly(std::move(c));
}

}  // namespace

Rational pochhammer(const Rational& a, int n) {
  if (n < 0) throw IndexOutOfRange("pochhammer order must be >= 0");
  Rational r(1);
  for (int i = 0; i < n; ++i) r *= a + i;
  return r;
}

LambdaPoly phi_poly(int k, const Rational& a) {
  LambdaPoly r{Rational(1)};
  for (int m = 0; m < k; ++m) {
    Rational sq = (a + m) * (a + m);
    r = r * (LambdaPoly::lambda() + LambdaPoly(sq));
  }
  return r;
}

LambdaPoly wilson(int n, const ParamSet& P) {
  if (n < 0) throw IndexOutOfRange("wilson degree must be >= 0");
  const Rational &a = P.a(), &b = P.b(), &c = P.c(), &d = P.d();
  // Series coefficient t_k on phi_k, starting from the Pochhammer prefactor.
  Rational t = pochhammer(a + b, n) * pochhammer(a + c, n) * pochhammer(a + d, n);
  LambdaPoly result;
  for (int k = 0; k <= n; ++k) {
    result = result + phi_poly(k, a) * t;
    if (k == n) break;
    t *= (Rational(-n) + k) * (Rational(n) + P.e1() - 1 + k);
    t /= factor_nonzero(a + b, k, "(a+b)") * factor_nonzero(a + c, k, "(a+c)") *
         factor_nonzero(a + d, k, "(a+d)") * (k + 1);
  }
  return result;
}

LambdaPoly wilson_scaled(int n, const ParamSet& P) {
  return scale_lambda(wilson(n, P), Rational(-1, 4));
}

LambdaPoly cont_dual_hahn(int n, const Rational& a, const Rational& b,
                          const Rational& c) {
  if (n < 0) throw IndexOutOfRange("cont_dual_hahn degree must be >= 0");
  Rational t = pochhammer(a + b, n) * pochhammer(a + c, n);
  LambdaPoly result;
  for (int k = 0; k <= n; ++k) {
    result = result + phi_poly(k, a) * t;
    if (k == n) break;
    t *= Rational(-n) + k;
    t /= factor_nonzero(a + b, k, "(a+b)") * factor_nonzero(a + c, k, "(a+c)") *
         (k + 1);
  }
  return result;
}

namespace {

// Combined coefficient eta_n * A_{n,k} with the singular Pochhammer factors
// of the two-branch tables cancelled, valid through n = N+1.
Rational para_racah_coeff(int n, int k, int N, const Rational& a,
                          const Rational& c, const Rational& w) {
  int j = N / 2;
  int p = N % 2;
  Rational g = a - c - j + 1 - p;  // the recurring fourth Pochhammer base
  auto rf = pochhammer;
  Rational ac = a + c;

  if (n <= j) {
    Rational eta = rf(Rational(1), n) * rf(Rational(-j), n) *
                   poch_nonzero(ac, n, "(a+c)") * poch_nonzero(g, n, "(a-c-j+1-p)") /
                   (rf(Rational(-n), n) * rf(Rational(n - N), n));
    Rational A = rf(Rational(-n), k) * rf(Rational(n - N), k) /
                 (rf(Rational(1), k) * rf(Rational(-j), k) *
                  poch_nonzero(ac, k, "(a+c)") * poch_nonzero(g, k, "(a-c-j+1-p)"));
    return eta * A;
  }
  if (k <= j) {
    // The limiting process that defines degrees beyond j kills the k <= j
    // terms entirely at n = N+1.
    if (n == N + 1) return Rational(0);
    Rational core = rf(Rational(1), n) * rf(Rational(-j), j) *
                    rf(Rational(1), n - j - 1) * poch_nonzero(ac, n, "(a+c)") *
                    poch_nonzero(g, n, "(a-c-j+1-p)") * rf(Rational(-n), k) *
                    rf(Rational(n - N), k) * w /
                    (rf(Rational(-n), n) * rf(Rational(1), 2 * n - 1 - N) *
                     rf(Rational(1), k) * rf(Rational(-j), k) *
                     poch_nonzero(ac, k, "(a+c)") *
                     poch_nonzero(g, k, "(a-c-j+1-p)"));
    return core / rf(Rational(n - N), N - n);
  }
  return rf(Rational(1), n) * rf(Rational(1), n - j - 1) *
         poch_nonzero(ac, n, "(a+c)") * poch_nonzero(g, n, "(a-c-j+1-p)") *
         rf(Rational(-n), k) * rf(Rational(1), n + k - 1 - N) /
         (rf(Rational(-n), n) * rf(Rational(1), 2 * n - 1 - N) *
          rf(Rational(1), k) * rf(Rational(1), k - j - 1) *
          poch_nonzero(ac, k, "(a+c)") * poch_nonzero(g, k, "(a-c-j+1-p)"));
}

}  // namespace

LambdaPoly para_racah(int n, int N, const Rational& a, const Rational& c,
                      const Rational& w) {
  if (N < 1) throw IndexOutOfRange("para_racah requires N >= 1");
  if (n < 0 || n > N + 1)
    throw IndexOutOfRange("para_racah degree " + std::to_string(n) +
                          " outside [0, N+1]");
  if (is_zero(w)) throw std::invalid_argument("para_racah requires w != 0");
  LambdaPoly result;
  for (int k = 0; k <= n; ++k) {
    Rational coeff = para_racah_coeff(n, k, N, a, c, w);
    if (!is_zero(coeff)) result = result + phi_poly(k, a) * coeff;
  }
  return result;
}

BiLattice para_racah_lattice(int N, const Rational& a, const Rational& c) {
  if (N < 1) throw IndexOutOfRange("para_racah_lattice requires N >= 1");
  BiLattice lat;
  lat.j = N / 2;
  lat.p = N % 2;
  lat.points.assign(static_cast<size_t>(N) + 1, Rational(0));
  for (int s = 0; s <= lat.j; ++s)
    lat.points[static_cast<size_t>(2 * s)] = -(a + s) * (a + s);
  for (int s = 0; s <= lat.j - 1 + lat.p; ++s)
    lat.points[static_cast<size_t>(2 * s + 1)] = -(c + s) * (c + s);
  for (size_t i = 0; i < lat.points.size(); ++i)
    for (size_t k = i + 1; k < lat.points.size(); ++k)
      if (lat.points[i] == lat.points[k])
        throw DegenerateLattice(static_cast<int>(i), static_cast<int>(k),
                                rat_str(lat.points[i]));
  return lat;
}

}  // namespace sheun
