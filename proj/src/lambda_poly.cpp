#include "sheun/lambda_poly.hpp"

namespace sheun {

Poly lambda_embed(const LambdaPoly& q) {
  if (q.is_zero()) return Poly();
  std::vector<Rational> c(2 * static_cast<size_t>(q.degree()) + 1, Rational(0));
  for (int i = 0; i <= q.degree(); ++i) c[2 * static_cast<size_t>(i)] = q.coeff(i);
  return Poly(std::move(c));
}

LambdaPoly lambda_extract(const Poly& p) {
  std::vector<Rational> c;
  for (int i = 0; i <= p.degree(); ++i) {
    Rational v = p.coeff(i);
    if (i % 2 == 1) {
      if (!is_zero(v))
        throw OddPartPresent("odd-degree coefficient at x^" + std::to_string(i) +
                             ": " + rat_str(v));
    } else {
      c.push_back(v);
    }
  }
  return LambdaPoly(std::move(c));
}

}  // namespace sheun
