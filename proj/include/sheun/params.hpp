#pragma once

#include <array>
#include <stdexcept>

#include "sheun/rational.hpp"

namespace sheun {

// sigma = 1/(a+b-c-d) was requested for a parameter set with a+b = c+d.
struct SigmaUndefined : std::runtime_error {
  explicit SigmaUndefined(const std::string& what) : std::runtime_error(what) {}
};

// The four polynomial parameters together with the derived symmetric
// quantities used throughout the operator constructions.
class ParamSet {
 public:
  ParamSet(Rational a, Rational b, Rational c, Rational d);

  const Rational& a() const { return p_[0]; }
  const Rational& b() const { return p_[1]; }
  const Rational& c() const { return p_[2]; }
  const Rational& d() const { return p_[3]; }
  const std::array<Rational, 4>& values() const { return p_; }

  const Rational& e1() const { return e1_; }
  const Rational& e2() const { return e2_; }
  const Rational& e3() const { return e3_; }
  const Rational& e4() const { return e4_; }

  bool has_sigma() const { return has_sigma_; }
  const Rational& sigma() const;  // throws SigmaUndefined when a+b = c+d

  Rational alpha() const;  // e1^2/2 - 4 e2/3
  Rational beta() const;   // -e1^3 + 4 e2 e1 - 8 e3
  Rational gamma() const;  // (3/4) alpha e1^2 - e1^2 e2 + 8 e1 e3 - 32 e4
  Rational xi() const;     // (1 - 2 e1^2 + e1^4 - 256 e4)/2

  ParamSet shifted(const Rational& da, const Rational& db, const Rational& dc,
                   const Rational& dd) const;
  // perm holds indices into (a,b,c,d); e.g. {2,3,0,1} swaps the pairs.
  ParamSet permuted(const std::array<int, 4>& perm) const;

 private:
  std::array<Rational, 4> p_;
  Rational e1_, e2_, e3_, e4_;
  Rational sigma_;
  bool has_sigma_;
};

}  // namespace sheun
