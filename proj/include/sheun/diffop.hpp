#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "sheun/lambda_poly.hpp"
#include "sheun/ratfunc.hpp"

namespace sheun {

// Applying an operator to a lambda-polynomial left a genuine rational
// function, so the image is not polynomial on the grid.
struct NotPolynomial : std::runtime_error {
  explicit NotPolynomial(const std::string& what) : std::runtime_error(what) {}
};

// Difference operator sum_k c_k(x) T^k on functions of x, with T^k the shift
// x -> x + k and rational-function coefficients.  Zero coefficients are
// pruned, so the term map is a normal form and equality is structural.
class DiffOp {
 public:
  DiffOp() = default;

  static DiffOp identity() { return term(0, RatFunc(Rational(1))); }
  static DiffOp term(int offset, RatFunc coeff);

  const std::map<int, RatFunc>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  RatFunc coeff(int offset) const {
    auto it = t_.find(offset);
    return it == t_.end() ? RatFunc() : it->second;
  }

  DiffOp operator-() const;
  DiffOp operator+(const DiffOp& o) const;
  DiffOp operator-(const DiffOp& o) const;
  DiffOp operator*(const Rational& s) const;
  bool operator==(const DiffOp& o) const { return t_ == o.t_; }
  bool operator!=(const DiffOp& o) const { return !(*this == o); }

  std::string str() const;

 private:
  void insert(int offset, const RatFunc& coeff);
  std::map<int, RatFunc> t_;
};

inline DiffOp operator*(const Rational& s, const DiffOp& op) { return op * s; }

// (A compose B): coefficients of A multiply shifted coefficients of B.
DiffOp compose(const DiffOp& a, const DiffOp& b);

enum class BracketKind { commutator, anticommutator };
DiffOp bracket(const DiffOp& a, const DiffOp& b, BracketKind kind);

inline DiffOp comm(const DiffOp& a, const DiffOp& b) {
  return bracket(a, b, BracketKind::commutator);
}
inline DiffOp acomm(const DiffOp& a, const DiffOp& b) {
  return bracket(a, b, BracketKind::anticommutator);
}

// Evaluates op on q(lambda) along the grid lambda_x = x^2 and reads the
// result back as a lambda-polynomial.  Throws NotPolynomial if coefficient
// denominators fail to cancel, OddPartPresent if an odd part in x survives.
LambdaPoly apply(const DiffOp& op, const LambdaPoly& q);

}  // namespace sheun
