#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "sheun/poly.hpp"

namespace sheun {

// A polynomial in x whose image under lambda -> x^2 extraction is requested
// has a nonzero odd-degree part.
struct OddPartPresent : std::runtime_error {
  explicit OddPartPresent(const std::string& what) : std::runtime_error(what) {}
};

// Polynomial in the grid variable lambda, coefficients lowest degree first.
// The grid is lambda_x = x^2, so embedding doubles exponents and extraction
// halves them (rejecting any odd-degree remainder).
class LambdaPoly {
 public:
  LambdaPoly() = default;
  explicit LambdaPoly(std::vector<Rational> coeffs) : p_(std::move(coeffs)) {}
  explicit LambdaPoly(const Rational& constant) : p_(constant) {}
  explicit LambdaPoly(Poly p) : p_(std::move(p)) {}

  static LambdaPoly lambda() { return LambdaPoly(Poly::x()); }
  static LambdaPoly monomial(int n, const Rational& coeff = Rational(1)) {
    return LambdaPoly(Poly::monomial(n, coeff));
  }

  int degree() const { return p_.degree(); }
  bool is_zero() const { return p_.is_zero(); }
  Rational coeff(int i) const { return p_.coeff(i); }
  Rational lead() const { return p_.lead(); }
  const std::vector<Rational>& coeffs() const { return p_.coeffs(); }
  Rational eval(const Rational& lambda_value) const { return p_.eval(lambda_value); }

  LambdaPoly operator-() const { return LambdaPoly(-p_); }
  LambdaPoly operator+(const LambdaPoly& o) const { return LambdaPoly(p_ + o.p_); }
  LambdaPoly operator-(const LambdaPoly& o) const { return LambdaPoly(p_ - o.p_); }
  LambdaPoly operator*(const LambdaPoly& o) const { return LambdaPoly(p_ * o.p_); }
  LambdaPoly operator*(const Rational& s) const { return LambdaPoly(p_ * s); }
  bool operator==(const LambdaPoly& o) const { return p_ == o.p_; }
  bool operator!=(const LambdaPoly& o) const { return !(*this == o); }

  std::string str() const { return p_.str("lambda"); }

 private:
  Poly p_;  // coefficients in lambda
};

// q(lambda) -> q(x^2) as a polynomial in x.
Poly lambda_embed(const LambdaPoly& q);
// p(x) -> q with p(x) = q(x^2); throws OddPartPresent otherwise.
LambdaPoly lambda_extract(const Poly& p);

}  // namespace sheun
