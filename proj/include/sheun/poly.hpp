#pragma once

#include <string>
#include <vector>

#include "sheun/rational.hpp"

namespace sheun {

// Dense univariate polynomial over Rational, coefficients lowest degree
// first.  Normal form: no trailing zero coefficients (zero poly has empty
// coefficient vector, degree -1).
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    trim();
  }
  explicit Poly(const Rational& constant) : c_{constant} { trim(); }

  static Poly x();                      // the monomial x
  static Poly monomial(int n, const Rational& coeff = Rational(1));

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rational(0);
  }
  Rational lead() const;                // leading coefficient; 0 for zero poly

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rational& s) const;
  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Rational eval(const Rational& x) const;
  Poly shifted(const Rational& c) const;   // p(x) -> p(x + c)
  Poly monic() const;                      // divide by leading coefficient

  std::string str(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

// Exact field division: q, r with a = q*b + r, deg r < deg b.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
// Monic gcd (1 for coprime inputs, 0 only when both inputs are 0).
Poly poly_gcd(Poly a, Poly b);

}  // namespace sheun
