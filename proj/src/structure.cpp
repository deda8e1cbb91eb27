#include "sheun/structure.hpp"

#include <algorithm>

namespace sheun {

DiffOp p_op(const Rational& s, const Rational& t) {
  SheunBasis b = sheun_basis();
  Rational u = ((1 + 2 * s) * (1 + 2 * t) - 1) / 4;
  Rational v = (1 + s + t) / 2;
  Rational w(1, 2);
  return b.L * u + b.M1 * v + b.M2 * w;
}

DiffOp mu_op(const ParamSet& P) {
  return p_op(2 * P.a() - 1, 2 * P.b() - 1);
}

DiffOp mustar_op(const ParamSet& P) { return p_op(2 * P.c(), 2 * P.d()); }

DiffOp tau_op() { return sheun_basis().L * Rational(4); }

namespace {

DiffOp taustar_with_a5(const ParamSet& P, const Rational& a5) {
  SheunBasis b = sheun_basis();
  Rational a1 = 4 * P.e4() - P.e3() + (P.e1() - 1) / 4;
  Rational a2 = P.e3() - P.e2() / 2 + P.e1() / 8;
  Rational a3 = P.e2() / 2 - Rational(5) * P.e1() / 8 + Rational(1, 2);
  Rational a4 = P.e1() / 4 - Rational(3, 8);
  return b.L * a1 + b.M1 * a2 + b.M2 * a3 + b.R1 * a4 + b.R2 * a5;
}

}  // namespace

DiffOp taustar_stated(const ParamSet& P) {
  return taustar_with_a5(P, Rational(-1, 8));
}

DiffOp taustar_corrected(const ParamSet& P) {
  return taustar_with_a5(P, Rational(1, 8));
}

StructureSet structure_set(const ParamSet& P) {
  return StructureSet{mu_op(P), mustar_op(P), tau_op(), taustar_stated(P), P};
}

DiffOp symmetrized_mu(const Rational& u, const Rational& v, const ParamSet& P) {
  std::array<int, 4> perm{0, 1, 2, 3};
  DiffOp sum;
  do {
    ParamSet Q = P.permuted(perm);
    sum = sum + mu_op(Q) * u + mustar_op(Q) * v;
  } while (std::next_permutation(perm.begin(), perm.end()));
  DiffOp literal = sum * Rational(1, 24);

  // Closed form in the stabilizing generators; the sign is fixed by the
  // literal average itself (the display this derives from is globally
  // negated relative to it).
  SheunBasis b = sheun_basis();
  Rational e1 = P.e1(), e2 = P.e2();
  DiffOp closed = -(b.M1 * (((u - v) - e1 * (u + v)) / 2) -
                    b.M2 * ((u + v) / 2) +
                    b.L * (e1 / 2 * (u - v) - Rational(2) * e2 / 3 * (u + v)));
  if (literal != closed) {
    DiffOp residual = literal - closed;
    throw ClosedFormMismatch("symmetrized average differs from closed form: " +
                             residual.str());
  }
  return literal;
}

UniversalSet universal_set(const Rational& e1) {
  SheunBasis b = sheun_basis();
  UniversalSet s;
  s.e1 = e1;
  s.U = b.M1 + b.L * e1;
  s.V = b.M2 + b.M1 * e1 + b.L * (e1 * e1 / 2);
  s.Y = b.L;
  s.R = b.R2 + b.R1 * (2 * e1 - 3) +
        b.M2 * ((3 * e1 * e1 - 10 * e1 + 4) / 2) +
        b.M1 * ((e1 + 1) * (e1 * e1 - 4 * e1 + 2) / 2) +
        b.L * ((e1 * e1 * e1 * e1 - 4 * e1 * e1 * e1 - 8 * e1 * e1 +
                24 * e1 - 8) / 8);
  return s;
}

namespace {

DiffOp splus_direct_with_lead(const Rational& s, const Rational& lead) {
  SheunBasis b = sheun_basis();
  return b.L * lead + b.M1 * (Rational(-8) * (2 * s - 1) * (4 * s * s - 4 * s - 1)) +
         b.M2 * (Rational(8) * (2 * s - 1) * (6 * s + 1)) +
         b.R1 * (Rational(-16) * (4 * s - 1)) + b.R2 * Rational(16);
}

}  // namespace

DiffOp sklyanin_splus_direct_stated(const Rational& s) {
  return splus_direct_with_lead(
      s, Rational(-2) * (4 * s * s - 1) * (4 * s * s - 8 * s - 1));
}

DiffOp sklyanin_splus_direct_corrected(const Rational& s) {
  return splus_direct_with_lead(
      s, Rational(2) * (4 * s * s - 1) * (4 * s * s - 8 * s - 1));
}

SklyaninSet sklyanin_set(const Rational& s) {
  UniversalSet u = universal_set(2 - 2 * s);
  SklyaninSet k;
  k.s_param = s;
  k.S0 = u.Y * Rational(4) - u.U * Rational(4);
  k.S3 = u.U * Rational(4) - u.Y * Rational(2) - u.V * Rational(4);
  k.Splus = u.R * Rational(16) - u.Y * Rational(14) - u.U * Rational(8) +
            u.V * Rational(24);
  k.Sminus = u.Y * Rational(-2);

  SheunBasis b = sheun_basis();
  DiffOp s0_direct = b.L * (Rational(4) * (2 * s - 1)) - b.M1 * Rational(4);
  DiffOp s3_direct = b.L * (Rational(-2) * (2 * s - 1) * (2 * s - 1)) +
                     b.M1 * (Rational(4) * (2 * s - 1)) - b.M2 * Rational(4);
  DiffOp sminus_direct = b.L * Rational(-2);
  DiffOp splus_direct = sklyanin_splus_direct_corrected(s);

  auto check = [](const char* name, const DiffOp& lhs, const DiffOp& rhs) {
    DiffOp residual = lhs - rhs;
    if (!residual.is_zero()) throw RealizationMismatch(name, residual.str());
  };
  check("S0", k.S0, s0_direct);
  check("S3", k.S3, s3_direct);
  check("Sminus", k.Sminus, sminus_direct);
  check("Splus", k.Splus, splus_direct);
  return k;
}

}  // namespace sheun
