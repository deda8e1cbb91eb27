#pragma once

#include <string>

#include "sheun/poly.hpp"

namespace sheun {

// Rational function in normal form: numerator and denominator coprime,
// denominator monic, zero represented as 0/1.  Every constructor and
// operation re-normalizes, so structural equality is semantic equality.
class RatFunc {
 public:
  RatFunc() : num_(), den_(Rational(1)) {}
  RatFunc(Poly num, Poly den);
  explicit RatFunc(const Poly& num) : RatFunc(num, Poly(Rational(1))) {}
  explicit RatFunc(const Rational& c) : RatFunc(Poly(c)) {}

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_poly() const { return den_.degree() == 0; }

  RatFunc operator-() const;
  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  bool operator==(const RatFunc& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  RatFunc shifted(const Rational& c) const;  // f(x) -> f(x + c)

  std::string str() const;

 private:
  Poly num_, den_;
};

enum class RatFuncOp { add, sub, mul, div };
RatFunc ratfunc_arith(const RatFunc& f, const RatFunc& g, RatFuncOp kind);

}  // namespace sheun
