#include "sheun/sheun_basis.hpp"

namespace sheun {

namespace {

// 1/(4x), the common normalization of the basis coefficients.
RatFunc norm4x() {
  return RatFunc(Poly(Rational(1)), Poly::monomial(1, Rational(4)));
}

Poly xpoly(std::initializer_list<long> ints) {
  std::vector<Rational> c;
  for (long v : ints) c.emplace_back(v);
  return Poly(std::move(c));
}

}  // namespace

SheunBasis sheun_basis() {
  RatFunc n = norm4x();
  SheunBasis b;
  b.L = DiffOp::term(1, n) + DiffOp::term(-1, -n);
  // lambda_x - lambda_{x-1} = 2x - 1, lambda_{x+1} - lambda_x = 2x + 1
  b.M1 = DiffOp::term(1, RatFunc(xpoly({-1, 2})) * n) +
         DiffOp::term(-1, RatFunc(xpoly({1, 2})) * n);
  // lambda_x + lambda_{x-1} = 2x^2 - 2x + 1, lambda_{x+1} + lambda_x = 2x^2 + 2x + 1
  b.M2 = DiffOp::term(1, RatFunc(xpoly({1, -2, 2})) * n) +
         DiffOp::term(-1, -(RatFunc(xpoly({1, 2, 2})) * n));
  b.R1 = compose(x_op(), b.M1);
  b.R2 = compose(x_op(), b.M2);
  return b;
}

DiffOp x_op() { return DiffOp::term(0, RatFunc(Poly::monomial(2))); }

DiffOp generic_sheun(const Rational& u0, const Rational& u1, const Rational& u2,
                     const Rational& u3, const Rational& u4) {
  // A(x; m) = u2 + u3 x^2 + u4 x^4 - u0 (x+m)^2 - u1 (x+m)^2 x^2 for m = -1, +1.
  auto a_num = [&](long m) {
    Poly lam = Poly::monomial(2);                       // x^2
    Poly lam_m = xpoly({m * m, 2 * m, 1});              // (x+m)^2
    return Poly(u2) + lam * u3 + lam * lam * u4 - lam_m * u0 - lam_m * lam * u1;
  };
  RatFunc n = norm4x();
  return DiffOp::term(1, RatFunc(a_num(-1)) * n) +
         DiffOp::term(-1, -(RatFunc(a_num(1)) * n));
}

DiffOp mult_x_identity() {
  SheunBasis b = sheun_basis();
  // (R1+R2)(M1-L) - R1 M2 / 2 - R2 M1 / 2 collapses to the diagonal {0 -> x^2}.
  DiffOp combo = compose(b.R1 + b.R2, b.M1 - b.L) -
                 compose(b.R1, b.M2) * Rational(1, 2) -
                 compose(b.R2, b.M1) * Rational(1, 2);
  DiffOp residual = combo - x_op();
  if (!residual.is_zero()) {
    const auto& [offset, coeff] = *residual.terms().begin();
    throw IdentityFailed(offset, coeff.str());
  }
  return combo;
}

std::pair<DiffOp, std::array<Rational, 9>> heun_racah_embed(
    const Rational& t0, const Rational& t1, const Rational& u0,
    const Rational& u1, const Rational& u2, const Rational& v0,
    const Rational& v1, const Rational& v2, const Rational& v3,
    int max_probe_degree) {
  std::array<Rational, 9> a;
  a[0] = (t1 + u2) / 4 - v3 / 16;
  a[1] = -t1 / 8 + 8 * u0 + u1 - 2 * v1 + v3 / 16;
  a[2] = (Rational(-8) * t0 - t1 - 64 * u0 - 3 * u2 + 16 * v1 + 2 * v2) / 4;
  a[3] = u2 / 4 - a[1];
  a[4] = v3 / 16;
  a[5] = a[2] - 2 * u1;
  a[6] = 8 * u0;
  a[7] = t0;
  a[8] = -t0 - 24 * u0 + 16 * v0;

  SheunBasis b = sheun_basis();
  DiffOp op = compose(b.R1, b.M1 * a[0] + b.M2 * a[1] + b.L * a[2]) +
              compose(b.R2, b.M1 * a[3] + b.M2 * a[4] + b.L * a[5]) +
              compose(b.L, b.M2) * a[6] + compose(b.M2, b.M2) * a[7] +
              compose(b.L, b.L) * a[8];

  for (int n = 0; n <= max_probe_degree; ++n) {
    LambdaPoly image = apply(op, LambdaPoly::monomial(n));
    if (image.degree() > n + 1)
      throw DegreeRaisingViolated(
          "degree " + std::to_string(image.degree()) + " on lambda^" +
          std::to_string(n));
  }
  return {op, a};
}

}  // namespace sheun
