#include "sheun/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace sheun {

void Poly::trim() {
  while (!c_.empty() && sheun::is_zero(c_.back())) c_.pop_back();
}

Poly Poly::x() { return monomial(1); }

Poly Poly::monomial(int n, const Rational& coeff) {
  if (n < 0) throw std::invalid_argument("monomial degree must be >= 0");
  std::vector<Rational> c(static_cast<size_t>(n) + 1, Rational(0));
  c.back() = coeff;
  return Poly(std::move(c));
}

Rational Poly::lead() const { return c_.empty() ? Rational(0) : c_.back(); }

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (c_.empty() || o.c_.empty()) return Poly();
  std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return Poly(std::move(r));
}

Poly Poly::operator*(const Rational& s) const {
  Poly r = *this;
  for (auto& v : r.c_) v *= s;
  r.trim();
  return r;
}

Rational Poly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::shifted(const Rational& c) const {
  // Horner in the shifted variable keeps everything exact.
  Poly acc;
  Poly lin(std::vector<Rational>{c, Rational(1)});  // x + c
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * lin + Poly(*it);
  return acc;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Rational inv = Rational(1) / lead();
  return *this * inv;
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& v = c_[static_cast<size_t>(i)];
    if (sheun::is_zero(v)) continue;
    if (!first) os << (sgn(v) > 0 ? " + " : " - ");
    Rational a = first ? v : Rational(abs(v));
    first = false;
    if (i == 0) {
      os << rat_str(a);
    } else {
      if (a != 1) os << rat_str(a) << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
  Poly r = a;
  std::vector<Rational> q(
      a.degree() >= b.degree() ? static_cast<size_t>(a.degree() - b.degree()) + 1
                               : 0,
      Rational(0));
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int k = r.degree() - b.degree();
    Rational f = r.lead() / b.lead();
    q[static_cast<size_t>(k)] = f;
    r = r - Poly::monomial(k, f) * b;
  }
  return {Poly(std::move(q)), r};
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
    // Renormalizing each step keeps coefficient growth in check.
    if (!b.is_zero()) b = b.monic();
  }
  return a.monic();
}

}  // namespace sheun
