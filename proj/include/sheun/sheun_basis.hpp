#pragma once

#include <array>

#include "sheun/diffop.hpp"

namespace sheun {

// The multiplication-by-x^2 combination failed to reduce to {0 -> x^2}.
struct IdentityFailed : std::runtime_error {
  IdentityFailed(int offset, const std::string& residual)
      : std::runtime_error("residual at offset " + std::to_string(offset) +
                           ": " + residual),
        offset(offset),
        residual(residual) {}
  int offset;
  std::string residual;
};

// A claimed degree-raising bound was exceeded on a monomial probe.
struct DegreeRaisingViolated : std::runtime_error {
  explicit DegreeRaisingViolated(const std::string& what)
      : std::runtime_error(what) {}
};

// The five-operator basis of first-order shift operators on the quadratic
// grid lambda_x = x^2: L lowers lambda-degree by one, M1 and M2 preserve it,
// R1 and R2 raise it by one.
struct SheunBasis {
  DiffOp L, M1, M2, R1, R2;
};

SheunBasis sheun_basis();

// Multiplication by lambda (= x^2) as a diagonal operator.
DiffOp x_op();

// General first-order operator A1(x) T^+ + A2(x) T^- parametrized by the
// five-dimensional coefficient family (u0..u4); every member raises
// lambda-degree by at most one.
DiffOp generic_sheun(const Rational& u0, const Rational& u1, const Rational& u2,
                     const Rational& u3, const Rational& u4);

// Asserts that the distinguished quadratic combination of basis elements
// equals multiplication by x^2 exactly, and returns it.  Throws
// IdentityFailed with the offending offset and residual otherwise.
DiffOp mult_x_identity();

// Quadratic combination mapping the nine-parameter tridiagonalization data
// onto the basis; returns the assembled operator together with the nine
// derived coefficients a1..a9.  Verifies on monomial probes lambda^n,
// n <= max_probe_degree, that lambda-degree is raised by at most one, and
// throws DegreeRaisingViolated otherwise.
std::pair<DiffOp, std::array<Rational, 9>> heun_racah_embed(
    const Rational& t0, const Rational& t1, const Rational& u0,
    const Rational& u1, const Rational& u2, const Rational& v0,
    const Rational& v1, const Rational& v2, const Rational& v3,
    int max_probe_degree = 6);

}  // namespace sheun
