#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "sheun/lambda_poly.hpp"
#include "sheun/params.hpp"

namespace sheun {

// A Pochhammer factor in a series denominator vanished; carries the name of
// the offending factor for diagnostics.
struct SingularPochhammer : std::runtime_error {
  explicit SingularPochhammer(const std::string& factor)
      : std::runtime_error("vanishing Pochhammer factor " + factor),
        factor(factor) {}
  std::string factor;
};

struct IndexOutOfRange : std::out_of_range {
  explicit IndexOutOfRange(const std::string& what) : std::out_of_range(what) {}
};

// Two bi-lattice points collided; carries the colliding index pair.
struct DegenerateLattice : std::runtime_error {
  DegenerateLattice(int i, int k, const std::string& value)
      : std::runtime_error("lattice points " + std::to_string(i) + " and " +
                           std::to_string(k) + " coincide at " + value),
        first(i),
        second(k) {}
  int first, second;
};

// (a)_n = a(a+1)...(a+n-1); n must be >= 0.
Rational pochhammer(const Rational& a, int n);

// phi_k(lambda) = prod_{m=0}^{k-1} ((a+m)^2 + lambda), the shared expansion
// basis of every hypergeometric family below.
LambdaPoly phi_poly(int k, const Rational& a);

// Degree-n Wilson polynomial in lambda = x^2 for parameters (a,b,c,d).
LambdaPoly wilson(int n, const ParamSet& P);
// Same polynomial on the rescaled grid, lambda -> -lambda/4.
LambdaPoly wilson_scaled(int n, const ParamSet& P);
// Degree-n continuous dual Hahn polynomial in lambda = x^2.
LambdaPoly cont_dual_hahn(int n, const Rational& a, const Rational& b,
                          const Rational& c);

// Monic para-Racah polynomial of degree n for a chain of maximal degree N.
// Defined for 0 <= n <= N+1: degrees up to N form the finite family and
// P_{N+1} is the characteristic polynomial of the orthogonality lattice.
LambdaPoly para_racah(int n, int N, const Rational& a, const Rational& c,
                      const Rational& w);

// Quadratic bi-lattice carrying the discrete orthogonality measure; points
// are lambda-values ordered by the interleaved index 2s+t.
struct BiLattice {
  std::vector<Rational> points;  // size N+1
  int j;                         // N = 2j+p
  int p;                         // parity bit of N
};

BiLattice para_racah_lattice(int N, const Rational& a, const Rational& c);

}  // namespace sheun
