#include "sheun/ratfunc.hpp"

#include <stdexcept>

namespace sheun {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero())
    throw std::invalid_argument("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = Poly(Rational(1));
    return;
  }
  Poly g = poly_gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = poly_divmod(num_, g).first;
    den_ = poly_divmod(den_, g).first;
  }
  Rational lc = den_.lead();
  if (lc != 1) {
    Rational inv = Rational(1) / lc;
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw std::invalid_argument("division by zero rational function");
  return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::shifted(const Rational& c) const {
  return RatFunc(num_.shifted(c), den_.shifted(c));
}

std::string RatFunc::str() const {
  if (is_poly()) return num_.str();
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

RatFunc ratfunc_arith(const RatFunc& f, const RatFunc& g, RatFuncOp kind) {
  switch (kind) {
    case RatFuncOp::add: return f + g;
    case RatFuncOp::sub: return f - g;
    case RatFuncOp::mul: return f * g;
    case RatFuncOp::div: return f / g;
  }
  throw std::logic_error("unknown ratfunc op");
}

}  // namespace sheun
