#include "sheun/diffop.hpp"

#include <sstream>

namespace sheun {

void DiffOp::insert(int offset, const RatFunc& coeff) {
  if (coeff.is_zero()) return;
  auto [it, fresh] = t_.emplace(offset, coeff);
  if (!fresh) {
    it->second = it->second + coeff;
    if (it->second.is_zero()) t_.erase(it);
  }
}

DiffOp DiffOp::term(int offset, RatFunc coeff) {
  DiffOp r;
  r.insert(offset, coeff);
  return r;
}

DiffOp DiffOp::operator-() const {
  DiffOp r;
  for (const auto& [k, c] : t_) r.t_.emplace(k, -c);
  return r;
}

DiffOp DiffOp::operator+(const DiffOp& o) const {
  DiffOp r = *this;
  for (const auto& [k, c] : o.t_) r.insert(k, c);
  return r;
}

DiffOp DiffOp::operator-(const DiffOp& o) const { return *this + (-o); }

DiffOp DiffOp::operator*(const Rational& s) const {
  DiffOp r;
  if (sheun::is_zero(s)) return r;
  for (const auto& [k, c] : t_) r.t_.emplace(k, c * RatFunc(s));
  return r;
}

std::string DiffOp::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : t_) {
    if (!first) os << " + ";
    first = false;
    os << "[" << c.str() << "]";
    if (k != 0) os << " T^" << (k > 0 ? "+" : "") << k;
  }
  return os.str();
}

DiffOp compose(const DiffOp& a, const DiffOp& b) {
  DiffOp r;
  for (const auto& [j, aj] : a.terms())
    for (const auto& [k, bk] : b.terms())
      r = r + DiffOp::term(j + k, aj * bk.shifted(Rational(j)));
  return r;
}

DiffOp bracket(const DiffOp& a, const DiffOp& b, BracketKind kind) {
  DiffOp ab = compose(a, b);
  DiffOp ba = compose(b, a);
  return kind == BracketKind::commutator ? ab - ba : ab + ba;
}

LambdaPoly apply(const DiffOp& op, const LambdaPoly& q) {
  Poly embedded = lambda_embed(q);
  RatFunc acc;
  for (const auto& [k, c] : op.terms())
    acc = acc + c * RatFunc(embedded.shifted(Rational(k)));
  if (!acc.is_poly())
    throw NotPolynomial("residual denominator " + acc.den().str());
  return lambda_extract(acc.num());  // denominator is monic 1 in normal form
}

}  // namespace sheun
