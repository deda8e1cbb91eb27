#include "sheun/verifier.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "sheun/linsolve.hpp"

namespace sheun {

namespace {

// Fixed per-suite salts keep the random streams of different suites
// independent, so a suite's tuples do not change when run alone or as part
// of the full battery.
constexpr std::uint64_t kSaltUniversal = 3;
constexpr std::uint64_t kSaltSklyanin = 4;
constexpr std::uint64_t kSaltCasimir = 5;
constexpr std::uint64_t kSaltRains = 6;
constexpr std::uint64_t kSaltWilson = 7;
constexpr std::uint64_t kSaltRepresentation = 8;
constexpr std::uint64_t kSaltParaRacah = 9;

std::uint64_t suite_seed(std::uint64_t seed, std::uint64_t salt) {
  return seed * 6364136223846793005ULL + salt * 1442695040888963407ULL +
         0x9E3779B97F4A7C15ULL;
}

const SheunBasis& basis() {
  static const SheunBasis b = sheun_basis();
  return b;
}

DiffOp sq(const DiffOp& a) { return compose(a, a); }

using Empirical = std::vector<std::pair<std::string, std::string>>;

std::vector<std::string> tuple_strs(std::initializer_list<Rational> vs) {
  std::vector<std::string> out;
  for (const auto& v : vs) out.push_back(rat_str(v));
  return out;
}

Report base_report(const std::string& suite, const std::string& id,
                   std::vector<std::string> params, bool ok) {
  Report r;
  r.suite = suite;
  r.relation_id = id;
  r.status = ok ? kStatusPass : kStatusFail;
  r.params = std::move(params);
  return r;
}

// Operator identity: residual is recorded at its lowest shift offset.
void check_op(std::vector<Report>& out, const std::string& suite,
              const std::string& id, std::vector<std::string> params,
              const DiffOp& lhs, const DiffOp& rhs, Empirical empirical = {}) {
  DiffOp residual = lhs - rhs;
  Report r = base_report(suite, id, std::move(params), residual.is_zero());
  r.empirical = std::move(empirical);
  if (!residual.is_zero()) {
    auto it = residual.terms().begin();
    r.residual_offset = it->first;
    r.residual_coeff = it->second.str();
  }
  out.push_back(std::move(r));
}

// Family of polynomial identities indexed by degree n; on failure the
// residual fields carry the first failing degree and the residual itself
// (its leading coefficient when the full string would be unwieldy).
void check_actions(std::vector<Report>& out, const std::string& suite,
                   const std::string& id, std::vector<std::string> params,
                   int n_lo, int n_hi,
                   const std::function<LambdaPoly(int)>& lhs,
                   const std::function<LambdaPoly(int)>& rhs,
                   Empirical empirical = {}) {
  Report r = base_report(suite, id, std::move(params), true);
  r.empirical = std::move(empirical);
  for (int n = n_lo; n <= n_hi; ++n) {
    LambdaPoly residual = lhs(n) - rhs(n);
    if (!residual.is_zero()) {
      r.status = kStatusFail;
      r.residual_offset = n;
      std::string full = residual.str();
      r.residual_coeff = full.size() <= 120
                             ? full
                             : rat_str(residual.lead()) + " at lambda^" +
                                   std::to_string(residual.degree());
      break;
    }
  }
  out.push_back(std::move(r));
}

struct Ratio {
  bool proportional;
  Rational constant;
};

// image == constant * target, exactly; a zero image is proportional with
// constant zero, a zero target only matches a zero image.
Ratio measure_ratio(const LambdaPoly& image, const LambdaPoly& target) {
  if (image.is_zero()) return {true, Rational(0)};
  if (target.is_zero() || image.degree() != target.degree())
    return {false, Rational(0)};
  Rational c = image.lead() / target.lead();
  return {(image - target * c).is_zero(), c};
}

std::string join_indexed(const std::vector<Rational>& vs) {
  std::string out;
  for (size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ";";
    out += std::to_string(i) + "=" + rat_str(vs[i]);
  }
  return out;
}

LambdaPoly flip_lambda(const LambdaPoly& q) {
  LambdaPoly out;
  for (int i = 0; i <= q.degree(); ++i) {
    Rational c = q.coeff(i);
    if (i % 2) c = -c;
    out = out + LambdaPoly::monomial(i, c);
  }
  return out;
}

const std::array<Rational, 4> kHalfUp{Rational(1, 2), Rational(1, 2),
                                      Rational(1, 2), Rational(1, 2)};

// ---------------------------------------------------------------------------
// stab / appendix: parameter-free quadratic relations of the basis.

std::vector<Report> suite_stab() {
  std::vector<Report> out;
  const SheunBasis& b = basis();
  check_op(out, "stab", "comm-L-M1", {}, comm(b.L, b.M1),
           sq(b.L) * Rational(2));
  check_op(out, "stab", "comm-L-M2", {}, comm(b.L, b.M2), acomm(b.M1, b.L));
  check_op(out, "stab", "comm-M1-M2", {}, comm(b.M1, b.M2),
           acomm(b.M2, b.L) - sq(b.L) * Rational(4));
  return out;
}

std::vector<Report> suite_appendix() {
  std::vector<Report> out;
  const SheunBasis& b = basis();
  const DiffOp& L = b.L;
  const DiffOp& M1 = b.M1;
  const DiffOp& M2 = b.M2;
  const DiffOp& R1 = b.R1;
  const DiffOp& R2 = b.R2;
  const DiffOp I = DiffOp::identity();
  const std::string su = "appendix";

  check_op(out, su, "comm-L-M1", {}, comm(L, M1), sq(L) * Rational(2));
  check_op(out, su, "comm-L-M2", {}, comm(L, M2), acomm(M1, L));
  check_op(out, su, "comm-M1-M2", {}, comm(M1, M2),
           acomm(M2, L) - sq(L) * Rational(4));

  check_op(out, su, "comm-L-R1", {}, comm(L, R1),
           sq(M1) + sq(L) + acomm(M1, L) + acomm(M2, L) * Rational(1, 2));
  check_op(out, su, "comm-L-R2", {}, comm(L, R2),
           sq(M1) + sq(L) + acomm(M1, L) + acomm(M2, L) * Rational(1, 2) +
               acomm(M1, M2));

  // Stated with -3L^2; the relation closes with +3L^2.
  check_op(out, su, "comm-M1-R1", {}, comm(M1, R1),
           sq(M1) * Rational(2) - sq(L) * Rational(3) + acomm(M1, M2) -
               acomm(M1, L) * Rational(1, 2) - acomm(M2, L));
  check_op(out, su, "comm-M1-R1.corrected", {}, comm(M1, R1),
           sq(M1) * Rational(2) + sq(L) * Rational(3) + acomm(M1, M2) -
               acomm(M1, L) * Rational(1, 2) - acomm(M2, L));

  check_op(out, su, "comm-M1-R2", {}, comm(M1, R2),
           sq(M1) + sq(M2) + sq(L) * Rational(7) + acomm(R2, L) * Rational(2) -
               acomm(M1, L) * Rational(5, 2) - acomm(M2, L) * Rational(5));
  check_op(out, su, "comm-R1-M2", {}, comm(R1, M2),
           sq(L) * Rational(3) - sq(M1) - sq(M2) +
               acomm(R1 + R2, L) * Rational(2) - acomm(R1, M1) -
               acomm(M1, M2) - acomm(M1, L) * Rational(5) -
               acomm(M2, L) * Rational(9, 2));
  check_op(out, su, "comm-R2-M2", {}, comm(R2, M2),
           sq(L) - sq(M1) - sq(M2) + acomm(R1, M1 - M2) - acomm(M1, M2) +
               acomm(M1, L) * Rational(1, 2));
  check_op(out, su, "comm-R2-R1", {}, comm(R2, R1),
           sq(R1) * Rational(2) + sq(M1) + sq(M2) * Rational(2) +
               sq(L) * Rational(3) + acomm(R2 - R1, L) * Rational(1, 2) -
               acomm(R1 + R2, M2) * Rational(3, 2) + acomm(M1, M2) +
               acomm(M1, L) * Rational(3, 2) -
               acomm(M2, L) * Rational(1, 2));

  // Stated with {M1,M2}; closes with {M2,L} (the Casimir combination).
  check_op(out, su, "scalar-1", {}, sq(M1) - acomm(M1, M2) + sq(L) * Rational(3),
           I);
  check_op(out, su, "scalar-1.corrected", {},
           sq(M1) - acomm(M2, L) + sq(L) * Rational(3), I);

  // Stated right-hand side -3; closes with +3.
  check_op(out, su, "scalar-2", {},
           acomm(R1 - R2, L) + sq(M2) + acomm(M2, L) - sq(L) * Rational(3),
           I * Rational(-3));
  check_op(out, su, "scalar-2.corrected", {},
           acomm(R1 - R2, L) + sq(M2) + acomm(M2, L) - sq(L) * Rational(3),
           I * Rational(3));

  // Stated -3L^2 = 4; closes as -2L^2 = -4.
  check_op(out, su, "scalar-3", {},
           acomm(R1, L) * Rational(-2) - sq(L) * Rational(3) + acomm(M1, M2) +
               acomm(M1 + M2, L) * Rational(2),
           I * Rational(4));
  check_op(out, su, "scalar-3.corrected", {},
           acomm(R1, L) * Rational(-2) - sq(L) * Rational(2) + acomm(M1, M2) +
               acomm(M1 + M2, L) * Rational(2),
           I * Rational(-4));

  // Stated with {R1+R2,M1}; closes with {R2,M1}.
  check_op(out, su, "scalar-4", {},
           sq(M1) + sq(L) * Rational(1, 2) + acomm(R1, M1 - M2) -
               acomm(R1, L) * Rational(5, 2) - acomm(R2, L) * Rational(2) +
               acomm(R1 + R2, M1) + acomm(M1, M2) * Rational(1, 4) +
               acomm(M1, L) * Rational(6) + acomm(M2, L) * Rational(4),
           DiffOp());
  check_op(out, su, "scalar-4.corrected", {},
           sq(M1) + sq(L) * Rational(1, 2) + acomm(R1, M1 - M2) -
               acomm(R1, L) * Rational(5, 2) - acomm(R2, L) * Rational(2) +
               acomm(R2, M1) + acomm(M1, M2) * Rational(1, 4) +
               acomm(M1, L) * Rational(6) + acomm(M2, L) * Rational(4),
           DiffOp());
  return out;
}

// ---------------------------------------------------------------------------
// universal: the four-generator presentation, the structure-operator
// expansions it is derived from, and the star-map checks.

void universal_for_tuple(std::vector<Report>& out, const ParamSet& P,
                         Sampler& smp) {
  const std::string su = "universal";
  const SheunBasis& b = basis();
  auto params = tuple_strs({P.a(), P.b(), P.c(), P.d()});

  const Rational& a = P.a();
  const Rational& bb = P.b();
  const Rational& c = P.c();
  const Rational& d = P.d();
  const Rational& e1 = P.e1();
  const Rational& e2 = P.e2();
  Rational sigma = P.sigma();
  Rational alpha = P.alpha();
  Rational beta = P.beta();
  Rational gamma = P.gamma();

  UniversalSet un = universal_set(e1);
  const DiffOp& U = un.U;
  const DiffOp& V = un.V;
  const DiffOp& Y = un.Y;
  const DiffOp& R = un.R;

  check_op(out, su, "star-comm-VY", params, comm(V, Y), -acomm(U, Y));
  check_op(out, su, "star-comm-UY", params, comm(U, Y), -acomm(Y, Y));
  check_op(out, su, "star-comm-UV", params, comm(U, V),
           acomm(V, Y) - acomm(Y, Y) * Rational(2));
  check_op(out, su, "star-comm-RY", params, comm(R, Y),
           acomm(U, U) - acomm(U, V) + acomm(V, Y));
  check_op(out, su, "star-comm-RV", params, comm(R, V),
           acomm(V, Y) * Rational(2) - acomm(Y, Y) - acomm(V, V) -
               acomm(U, R));
  check_op(out, su, "star-comm-RU", params, comm(R, U),
           acomm(U, V) + acomm(V, Y) * Rational(2) -
               acomm(U, Y) * Rational(2) - acomm(V, V) - acomm(Y, Y) -
               acomm(R, Y));

  DiffOp mu = mu_op(P);
  DiffOp mustar = mustar_op(P);
  DiffOp musw = mu_op(ParamSet(c, d, a, bb));
  DiffOp tau = tau_op();

  check_op(out, su, "mustar-shift", params, mustar,
           mu_op(ParamSet(c + Rational(1, 2), d + Rational(1, 2),
                          a - Rational(1, 2), bb - Rational(1, 2))));

  // Three-term decomposition of mustar; the tau coefficient closes with the
  // opposite sign from the stated bracket.
  Rational br = sigma * (a * bb - c * d) - (c + d) / 2 - Rational(1, 4);
  check_op(out, su, "mustar-decomp", params, mustar,
           mu * sigma + musw * (1 - sigma) + tau * br);
  check_op(out, su, "mustar-decomp.corrected", params, mustar,
           mu * sigma + musw * (1 - sigma) + tau * (-br));

  // Symmetrized average against its closed form at a drawn weight pair; the
  // stated closed form is the negative of the literal average.
  Rational uw = smp.rational();
  Rational vw = smp.rational();
  auto params_uv = params;
  params_uv.push_back(rat_str(uw));
  params_uv.push_back(rat_str(vw));
  DiffOp literal = symmetrized_mu(uw, vw, P);
  DiffOp closed_stated =
      b.M1 * (((uw - vw) - e1 * (uw + vw)) / 2) - b.M2 * ((uw + vw) / 2) +
      b.L * (e1 / 2 * (uw - vw) - Rational(2) * e2 / 3 * (uw + vw));
  check_op(out, su, "sym-average", params_uv, literal, closed_stated);
  check_op(out, su, "sym-average.corrected", params_uv, literal,
           -closed_stated);

  // Parameter-free part of the mu/mu-swap difference; the stated display
  // needs both the bracket completed to a difference of squares and the
  // right-hand side transposed.
  check_op(out, su, "sym-free-part", params,
           (mu - musw + tau * (a * bb - c * d)) * sigma, Y - U);
  Rational sqdiff = ((a - bb) * (a - bb) - (c - d) * (c - d)) / 4;
  check_op(out, su, "sym-free-part.corrected", params,
           (mu - musw + tau * sqdiff) * sigma, U - Y);

  // Star generators written through the structure operators.
  check_op(out, su, "staralg-U", params, U, symmetrized_mu(1, -1, P));
  check_op(out, su, "staralg-U.corrected", params, U, symmetrized_mu(-1, 1, P),
           {{"average_normalization", "1/24 mean, no extra 1/2"}});
  check_op(out, su, "staralg-V", params, V,
           symmetrized_mu(-1, -1, P) + Y * alpha);
  check_op(out, su, "staralg-V.corrected", params, V,
           symmetrized_mu(1, 1, P) + Y * alpha);
  check_op(out, su, "staralg-Y", params, Y, tau * Rational(1, 4));
  check_op(out, su, "staralg-R", params, R,
           taustar_stated(P) * Rational(8) - V * (2 - 3 * alpha) +
               U * (1 - 3 * alpha + beta) + Y * (1 - beta + gamma));
  check_op(out, su, "staralg-R.corrected", params, R,
           taustar_corrected(P) * Rational(8) - V * (2 - 3 * alpha) +
               U * (1 - 3 * alpha + beta) + Y * (1 - beta + gamma));

  // Expansions of the symmetrized averages back in (mu, mu-swap, tau); the
  // tau coefficients close with opposite signs.
  Rational diff_coef = (e1 + 1) / 4 - sigma * (a * bb - c * d);
  check_op(out, su, "avg-diff-expansion", params, symmetrized_mu(1, -1, P),
           musw * sigma - mu * sigma + tau * diff_coef);
  check_op(out, su, "avg-diff-expansion.corrected", params,
           symmetrized_mu(1, -1, P), musw * sigma - mu * sigma + tau * (-diff_coef));
  Rational sum_coef =
      (a * bb + c * d) + sigma * (a * bb - c * d) - e2 / 3 - (e1 + 1) / 4;
  check_op(out, su, "avg-sum-expansion", params, symmetrized_mu(1, 1, P),
           mu * (1 + sigma) + musw * (1 - sigma) + tau * sum_coef);
  check_op(out, su, "avg-sum-expansion.corrected", params,
           symmetrized_mu(1, 1, P),
           mu * (1 + sigma) + musw * (1 - sigma) + tau * (-sum_coef));

  // The permutation average of mu minus its pair-swapped variant cancels.
  {
    const std::array<Rational, 4> vals = P.values();
    const std::array<Rational, 4> swapped{vals[2], vals[3], vals[0], vals[1]};
    std::array<int, 4> perm{0, 1, 2, 3};
    DiffOp total;
    do {
      ParamSet p1(vals[perm[0]], vals[perm[1]], vals[perm[2]], vals[perm[3]]);
      ParamSet p2(swapped[perm[0]], swapped[perm[1]], swapped[perm[2]],
                  swapped[perm[3]]);
      total = total + mu_op(p1) - mu_op(p2);
    } while (std::next_permutation(perm.begin(), perm.end()));
    check_op(out, su, "avg-swap-cancellation", params,
             total * Rational(1, 24), DiffOp());
  }

  // The raising structure operator depends on the parameters only through
  // the symmetric functions, hence is permutation invariant.
  {
    std::array<int, 4> perm{0, 1, 2, 3};
    bool invariant = true;
    DiffOp ref = taustar_corrected(P);
    do {
      if (taustar_corrected(P.permuted(perm)) != ref) {
        invariant = false;
        break;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    out.push_back(base_report(su, "taustar-sym-invariance", params, invariant));
  }

  // Star-map images of the four generators, built from the structure
  // operators, against their displayed closed forms.
  DiffOp U_img = symmetrized_mu(1, -1, P);
  DiffOp Y_img = taustar_corrected(P) * Rational(1, 4);
  DiffOp V_img = symmetrized_mu(1, 1, P) + Y_img * alpha;
  DiffOp R_img = b.L * Rational(32) - V_img * (2 - 3 * alpha) +
                 U_img * (1 - 3 * alpha + beta) + Y_img * (1 - beta + gamma);
  check_op(out, su, "dagger-U", params, U_img, -U);
  check_op(out, su, "dagger-Y", params, Y_img,
           (R + V * (2 - 3 * alpha) - U * (1 - 3 * alpha + beta) -
            Y * (1 - beta + gamma)) *
               Rational(1, 32));
  check_op(out, su, "dagger-V", params, V_img, V + (Y_img - Y) * alpha);
  check_op(out, su, "dagger-R", params, R_img,
           Y * (32 + alpha * (2 - 3 * alpha)) - V * (2 - 3 * alpha) -
               U * (1 - 3 * alpha + beta) +
               Y_img * (1 - beta + gamma - alpha * (2 - 3 * alpha)));
}

// ---------------------------------------------------------------------------
// sklyanin: defining relations and the direct difference realization.

void sklyanin_for_tuple(std::vector<Report>& out, const Rational& s) {
  const std::string su = "sklyanin";
  const SheunBasis& b = basis();
  auto params = tuple_strs({s});
  SklyaninSet k = sklyanin_set(s);
  const DiffOp& S0 = k.S0;
  const DiffOp& S3 = k.S3;
  const DiffOp& Sp = k.Splus;
  const DiffOp& Sm = k.Sminus;

  check_op(out, su, "rdskly-S0-Sminus", params, comm(S0, Sm),
           acomm(Sm, Sm) * Rational(-2));
  check_op(out, su, "rdskly-S0-Splus", params, comm(S0, Sp),
           acomm(S3, Sm) * Rational(16) - acomm(Sm, Sm) * Rational(16) +
               acomm(Sp, Sm) * Rational(2) - acomm(S3, S3) * Rational(4));
  check_op(out, su, "rdskly-Splus-Sminus", params, comm(Sp, Sm),
           acomm(S0, S3) * Rational(2));
  check_op(out, su, "rdskly-S0-S3", params, comm(S0, S3),
           acomm(S3, Sm) * Rational(2) - acomm(Sm, Sm) * Rational(8));
  check_op(out, su, "rdskly-S3-Splus", params, comm(S3, Sp), acomm(S0, Sp));
  check_op(out, su, "rdskly-S3-Sminus", params, comm(S3, Sm), -acomm(S0, Sm));

  check_op(out, su, "direct-S0", params, S0,
           b.L * (Rational(4) * (2 * s - 1)) - b.M1 * Rational(4));
  check_op(out, su, "direct-S3", params, S3,
           b.L * (Rational(-2) * (2 * s - 1) * (2 * s - 1)) +
               b.M1 * (Rational(4) * (2 * s - 1)) - b.M2 * Rational(4));
  check_op(out, su, "direct-Sminus", params, Sm, b.L * Rational(-2));
  // The stated direct display of S+ carries the opposite sign on its L
  // coefficient; the corrected form agrees with the isomorphism route.
  check_op(out, su, "direct-Splus", params, Sp,
           sklyanin_splus_direct_stated(s));
  check_op(out, su, "direct-Splus.corrected", params, Sp,
           sklyanin_splus_direct_corrected(s));
}

// ---------------------------------------------------------------------------
// wilson: bispectral suite.

void wilson_for_tuple(std::vector<Report>& out, const ParamSet& P, int n_max,
                      Sampler& smp) {
  const std::string su = "wilson";
  auto params = tuple_strs({P.a(), P.b(), P.c(), P.d()});
  const Rational& a = P.a();
  const Rational& bb = P.b();
  const Rational& c = P.c();
  const Rational& d = P.d();
  const Rational& e1 = P.e1();
  const Rational& e2 = P.e2();
  Rational sigma = P.sigma();

  ParamSet Pb1 = P.shifted(Rational(-1, 2), Rational(-1, 2), Rational(1, 2),
                           Rational(1, 2));
  ParamSet Pb2 = P.shifted(Rational(1, 2), Rational(1, 2), Rational(-1, 2),
                           Rational(-1, 2));
  ParamSet Pup = P.shifted(kHalfUp[0], kHalfUp[1], kHalfUp[2], kHalfUp[3]);
  ParamSet Pdn = P.shifted(-kHalfUp[0], -kHalfUp[1], -kHalfUp[2], -kHalfUp[3]);

  std::vector<LambdaPoly> W, B1, B2, Bup, Bdn;
  for (int n = 0; n <= n_max + 1; ++n) {
    W.push_back(wilson_scaled(n, P));
    B1.push_back(wilson_scaled(n, Pb1));
    B2.push_back(wilson_scaled(n, Pb2));
    Bup.push_back(wilson_scaled(n, Pup));
    Bdn.push_back(wilson_scaled(n, Pdn));
  }

  DiffOp mu = mu_op(P);
  DiffOp mustar = mustar_op(P);
  DiffOp tau = tau_op();
  DiffOp tstat = taustar_stated(P);
  DiffOp tcorr = taustar_corrected(P);
  DiffOp Q = compose(mustar, mu);

  auto lower_coef = [&](int n, const Rational& factor) -> Rational {
    // coefficient factor * n(n+e1-1) on the degree-lowered target
    return factor * n * (n + e1 - 1);
  };
  auto lowered = [&](int n, const Rational& factor) {
    return n == 0 ? LambdaPoly()
                  : Bup[n - 1] * lower_coef(n, factor);
  };

  // Eigenvalue problem for the quadratic element.
  {
    std::vector<Rational> eigs;
    for (int n = 0; n <= n_max; ++n)
      eigs.push_back(Rational(n) * (n + e1 - 1) + (c + d) * (a + bb - 1));
    check_actions(out, su, "q-eigen", params, 0, n_max,
                  [&](int n) { return apply(Q, W[n]); },
                  [&](int n) { return W[n] * eigs[n]; },
                  {{"eigenvalues", join_indexed(eigs)}});
  }

  check_actions(out, su, "tau-action", params, 0, n_max,
                [&](int n) { return apply(tau, W[n]); },
                [&](int n) { return lowered(n, Rational(1)); });

  // Raising action; the stated coefficient table does not reproduce it, the
  // corrected one raises with constant exactly 1.
  check_actions(out, su, "taustar-action", params, 0, n_max,
                [&](int n) { return apply(tstat, W[n]); },
                [&](int n) { return Bdn[n + 1]; });
  check_actions(out, su, "taustar-action.corrected", params, 0, n_max,
                [&](int n) { return apply(tcorr, W[n]); },
                [&](int n) { return Bdn[n + 1]; },
                {{"raising_constant", "1"}});

  // mu acts by parameter shift with constant of stated modulus n+a+b-1; the
  // measured global sign is recorded rather than assumed.
  {
    Report r = base_report(su, "mu-action", params, true);
    int global_sign = 0;
    std::vector<Rational> consts;
    for (int n = 0; n <= n_max; ++n) {
      LambdaPoly img = apply(mu, W[n]);
      Ratio rr = measure_ratio(img, B1[n]);
      Rational stated = -(Rational(n) + a + bb - 1);
      if (!rr.proportional || (rr.constant != stated && rr.constant != -stated)) {
        r.status = kStatusFail;
        r.residual_offset = n;
        r.residual_coeff = rr.proportional ? rat_str(rr.constant) : "not proportional";
        break;
      }
      int sign_here = rr.constant == stated ? 1 : -1;
      if (global_sign == 0) global_sign = sign_here;
      if (sign_here != global_sign) {
        r.status = kStatusFail;
        r.residual_offset = n;
        r.residual_coeff = "inconsistent sign";
        break;
      }
      consts.push_back(rr.constant);
    }
    if (r.status == kStatusPass) {
      r.empirical.emplace_back("constant_modulus", "n+a+b-1");
      r.empirical.emplace_back("global_sign_vs_stated",
                               global_sign == 1 ? "+1" : "-1");
      r.empirical.emplace_back("constants", join_indexed(consts));
    }
    out.push_back(std::move(r));
  }

  // Three-term action of mustar; all three stated coefficients enter with
  // reversed sign.
  Rational m3 = sigma * (a * bb - c * d) - (c + d) / 2 - Rational(1, 4);
  auto mustar_rhs = [&](int n, int flip) {
    Rational f(flip);
    return B1[n] * (f * -sigma * (n + a + bb - 1)) +
           B2[n] * (f * -(1 - sigma) * (n + c + d - 1)) +
           lowered(n, f * m3);
  };
  check_actions(out, su, "mustar-action", params, 0, n_max,
                [&](int n) { return apply(mustar, W[n]); },
                [&](int n) { return mustar_rhs(n, 1); });
  check_actions(out, su, "mustar-action.corrected", params, 0, n_max,
                [&](int n) { return apply(mustar, W[n]); },
                [&](int n) { return mustar_rhs(n, -1); },
                {{"resolution", "all three stated coefficients negated"}});

  // Actions of the symmetrized averages; both displays close after a global
  // negation of the right-hand side.
  DiffOp avg_diff = symmetrized_mu(1, -1, P);
  DiffOp avg_sum = symmetrized_mu(1, 1, P);
  Rational diff_coef = (e1 + 1) / 4 - sigma * (a * bb - c * d);
  auto avg_diff_rhs = [&](int n, int flip) {
    Rational f(flip);
    return lowered(n, f * diff_coef) + B1[n] * (f * sigma * (n + a + bb - 1)) +
           B2[n] * (f * -sigma * (n + c + d - 1));
  };
  check_actions(out, su, "avg-diff-action", params, 0, n_max,
                [&](int n) { return apply(avg_diff, W[n]); },
                [&](int n) { return avg_diff_rhs(n, 1); });
  check_actions(out, su, "avg-diff-action.corrected", params, 0, n_max,
                [&](int n) { return apply(avg_diff, W[n]); },
                [&](int n) { return avg_diff_rhs(n, -1); });

  Rational sum_coef =
      (a * bb + c * d) + sigma * (a * bb - c * d) - e2 / 3 - (e1 + 1) / 4;
  auto avg_sum_rhs = [&](int n, int flip) {
    Rational f(flip);
    return lowered(n, f * sum_coef) +
           B2[n] * (f * (sigma - 1) * (n + c + d - 1)) +
           B1[n] * (f * -(sigma + 1) * (n + a + bb - 1));
  };
  check_actions(out, su, "avg-sum-action", params, 0, n_max,
                [&](int n) { return apply(avg_sum, W[n]); },
                [&](int n) { return avg_sum_rhs(n, 1); });
  check_actions(out, su, "avg-sum-action.corrected", params, 0, n_max,
                [&](int n) { return apply(avg_sum, W[n]); },
                [&](int n) { return avg_sum_rhs(n, -1); });

  // Degree bookkeeping on monomial probes: the quadratic element and the
  // stabilizing pair preserve degree, tau lowers and the corrected raising
  // operator raises by exactly one.
  {
    Report r = base_report(su, "degree-bookkeeping", params, true);
    for (int n = 0; n <= n_max; ++n) {
      LambdaPoly probe = LambdaPoly::monomial(n);
      bool ok = apply(mu, probe).degree() == n &&
                apply(mustar, probe).degree() == n &&
                apply(tau, probe).degree() == n - 1 &&
                apply(tcorr, probe).degree() == n + 1;
      if (!ok) {
        r.status = kStatusFail;
        r.residual_offset = n;
        break;
      }
    }
    out.push_back(std::move(r));
  }

  // Diagonalization of the generic stabilizing element by the continuous
  // dual Hahn family on the reflected argument; the stated eigenvalue rule
  // does not hold for either global sign, the measured rule is n+(s+t)/2.
  {
    Rational s_par, t_par;
    do {
      s_par = smp.rational();
    } while (s_par.get_den() == 2);
    do {
      t_par = smp.rational();
    } while (t_par.get_den() == 2);
    auto pe_params = tuple_strs({s_par, t_par});
    DiffOp Pst = p_op(s_par, t_par);
    const int pn_max = 5;
    std::vector<LambdaPoly> S;
    for (int n = 0; n <= pn_max; ++n)
      S.push_back(flip_lambda(cont_dual_hahn(n, Rational(1, 2), s_par, t_par)));

    std::vector<Rational> consts;
    bool proportional = true;
    for (int n = 0; n <= pn_max; ++n) {
      Ratio rr = measure_ratio(apply(Pst, S[n]), S[n]);
      if (!rr.proportional) {
        proportional = false;
        break;
      }
      consts.push_back(rr.constant);
    }
    bool stated_ok = proportional;
    if (proportional) {
      bool plus = true, minus = true;
      for (int n = 0; n <= pn_max; ++n) {
        Rational target = Rational(n) - (s_par + t_par) / 2;
        plus = plus && consts[n] == target;
        minus = minus && consts[n] == -target;
      }
      stated_ok = plus || minus;
    }
    Report r1 = base_report(su, "p-eigen", pe_params, stated_ok);
    if (!stated_ok) r1.residual_coeff = "measured " + join_indexed(consts);
    out.push_back(std::move(r1));

    bool corr_ok = proportional;
    if (proportional)
      for (int n = 0; n <= pn_max; ++n)
        corr_ok = corr_ok && consts[n] == Rational(n) + (s_par + t_par) / 2;
    Report r2 = base_report(su, "p-eigen.corrected", pe_params, corr_ok);
    r2.empirical.emplace_back("constant_rule", "n+(s+t)/2");
    r2.empirical.emplace_back("constants", join_indexed(consts));
    out.push_back(std::move(r2));
  }
}

// ---------------------------------------------------------------------------
// representation: Sklyanin generators acting on the scaled Wilson basis.

void representation_for_tuple(std::vector<Report>& out, const ParamSet& P,
                              int n_max) {
  const std::string su = "representation";
  auto params = tuple_strs({P.a(), P.b(), P.c(), P.d()});
  const Rational& a = P.a();
  const Rational& bb = P.b();
  const Rational& c = P.c();
  const Rational& d = P.d();
  const Rational& e1 = P.e1();
  Rational sigma = P.sigma();
  Rational alpha = P.alpha();
  Rational beta = P.beta();
  Rational xi = P.xi();

  SklyaninSet k = sklyanin_set((2 - e1) / 2);

  ParamSet Pb1 = P.shifted(Rational(-1, 2), Rational(-1, 2), Rational(1, 2),
                           Rational(1, 2));
  ParamSet Pb2 = P.shifted(Rational(1, 2), Rational(1, 2), Rational(-1, 2),
                           Rational(-1, 2));
  ParamSet Pup = P.shifted(kHalfUp[0], kHalfUp[1], kHalfUp[2], kHalfUp[3]);
  ParamSet Pdn = P.shifted(-kHalfUp[0], -kHalfUp[1], -kHalfUp[2], -kHalfUp[3]);

  std::vector<LambdaPoly> W, B1, B2, Bup, Bdn;
  for (int n = 0; n <= n_max + 1; ++n) {
    W.push_back(wilson_scaled(n, P));
    B1.push_back(wilson_scaled(n, Pb1));
    B2.push_back(wilson_scaled(n, Pb2));
    Bup.push_back(wilson_scaled(n, Pup));
    Bdn.push_back(wilson_scaled(n, Pdn));
  }
  auto lowered = [&](int n, const Rational& factor) {
    return n == 0 ? LambdaPoly() : Bup[n - 1] * (factor * n * (n + e1 - 1));
  };

  check_actions(out, su, "sminus-action", params, 0, n_max,
                [&](int n) { return apply(k.Sminus, W[n]); },
                [&](int n) { return lowered(n, Rational(-1, 2)); });

  check_actions(out, su, "s0-action", params, 0, n_max,
                [&](int n) { return apply(k.S0, W[n]); },
                [&](int n) {
                  return B2[n] * (4 * sigma * (n + c + d - 1)) +
                         lowered(n, 4 * sigma * (a * bb - c * d) - e1) -
                         B1[n] * (4 * sigma * (n + a + bb - 1));
                });

  check_actions(out, su, "s3-action", params, 0, n_max,
                [&](int n) { return apply(k.S3, W[n]); },
                [&](int n) {
                  return B1[n] * (Rational(-4) * (n + a + bb - 1)) +
                         lowered(n, (8 * (a * bb + c * d) - e1 * e1 - 1) / 2) -
                         B2[n] * (Rational(4) * (n + c + d - 1));
                });

  // Raising action of S+; the stated lowered-term coefficient carries xi
  // where the action closes with xi/8.
  auto splus_rhs = [&](int n, const Rational& xi_coef) {
    return Bdn[n + 1] * Rational(128) +
           B1[n] * (8 * (6 * alpha - 1 + 2 * beta * sigma) * (n + a + bb - 1)) +
           B2[n] * (8 * (6 * alpha - 1 - 2 * beta * sigma) * (n + c + d - 1)) +
           lowered(n, 8 * ((1 - 6 * alpha) * (a * bb + c * d) -
                           2 * beta * sigma * (a * bb - c * d) + xi_coef));
  };
  check_actions(out, su, "splus-action", params, 0, n_max,
                [&](int n) { return apply(k.Splus, W[n]); },
                [&](int n) { return splus_rhs(n, xi); });
  check_actions(out, su, "splus-action.corrected", params, 0, n_max,
                [&](int n) { return apply(k.Splus, W[n]); },
                [&](int n) { return splus_rhs(n, xi / 8); },
                {{"xi_coefficient", "xi/8"}, {"raising_constant", "128"}});
}

// ---------------------------------------------------------------------------
// truncation: degree-raising leads and the finite-dimensional condition.

void truncation_for_n(std::vector<Report>& out, int N) {
  const std::string su = "truncation";
  const SheunBasis& b = basis();
  LambdaPoly probe = LambdaPoly::monomial(N);
  std::vector<std::string> params_n = {std::to_string(N)};

  auto raising_lead = [&](const DiffOp& op, int deg) {
    LambdaPoly img = apply(op, LambdaPoly::monomial(deg));
    return img.degree() == deg + 1 ? img.coeff(deg + 1) : Rational(0);
  };

  {
    LambdaPoly img = apply(b.R1, probe);
    bool ok = img.degree() == N + 1 && img.coeff(N + 1) == 1;
    out.push_back(base_report(su, "r1-raising-lead", params_n, ok));
  }
  {
    LambdaPoly img = apply(b.R2, probe);
    bool ok = img.degree() == N + 1 && img.coeff(N + 1) == 2 * N - 1;
    out.push_back(base_report(su, "r2-raising-lead", params_n, ok));
  }

  std::vector<Rational> e1_probes = {Rational(1 - N), Rational(2 - N),
                                     Rational(0), Rational(5, 2)};
  std::sort(e1_probes.begin(), e1_probes.end());
  e1_probes.erase(std::unique(e1_probes.begin(), e1_probes.end()),
                  e1_probes.end());

  for (const Rational& e1 : e1_probes) {
    std::vector<std::string> params = {std::to_string(N), rat_str(e1)};
    DiffOp raise = b.R2 + b.R1 * (2 * e1 - 3);
    Rational lead = raising_lead(raise, N);
    Rational stated = 2 * (N - 1 + e1);
    Rational truth = 2 * (N + e1 - 2);

    Report r1 = base_report(su, "combined-raising-lead", params, lead == stated);
    if (lead != stated) {
      r1.residual_offset = N + 1;
      r1.residual_coeff = rat_str(lead - stated);
      r1.empirical.emplace_back("measured_lead", rat_str(lead));
    }
    out.push_back(std::move(r1));

    Report r2 = base_report(su, "combined-raising-lead.corrected", params,
                            lead == truth);
    r2.empirical.emplace_back("measured_lead", rat_str(lead));
    // The stated value coincides with the measured lead one probe degree up.
    r2.empirical.emplace_back(
        "stated_value_matches_next_degree",
        raising_lead(raise, N + 1) == stated ? "true" : "false");
    out.push_back(std::move(r2));
  }

  // The finite-dimensional condition: the stated reading places the
  // vanishing at e1 = 1-N, the measured lead vanishes at e1 = 2-N.
  {
    Rational at_stated =
        raising_lead(b.R2 + b.R1 * (2 * Rational(1 - N) - 3), N);
    Report r = base_report(su, "truncation-condition", params_n,
                           is_zero(at_stated));
    if (!is_zero(at_stated)) r.residual_coeff = rat_str(at_stated);
    out.push_back(std::move(r));

    Rational at_corr = raising_lead(b.R2 + b.R1 * (2 * Rational(2 - N) - 3), N);
    Report r2 = base_report(su, "truncation-condition.corrected", params_n,
                            is_zero(at_corr) && !is_zero(at_stated));
    r2.empirical.emplace_back("vanishing_e1", rat_str(Rational(2 - N)));
    out.push_back(std::move(r2));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Sampler

Rational Sampler::rational() {
  long num = static_cast<long>(eng_() % 81) - 40;
  long den = static_cast<long>(eng_() % 40) + 1;
  return rat(num, den);
}

Rational Sampler::nonzero_rational() {
  for (;;) {
    Rational r = rational();
    if (!is_zero(r)) return r;
  }
}

ParamSet Sampler::wilson_tuple() {
  auto nonint = [](const Rational& r) { return r.get_den() != 1; };
  for (int attempt = 0; attempt < 10000; ++attempt) {
    Rational a = rational(), b = rational(), c = rational(), d = rational();
    ParamSet P(a, b, c, d);
    Rational gap = a + b - c - d;
    if (nonint(a + b) && nonint(a + c) && nonint(a + d) && nonint(b + c) &&
        nonint(b + d) && nonint(c + d) && nonint(P.e1()) && gap != 0 &&
        gap != 2 && gap != -2)
      return P;
  }
  throw std::runtime_error("no admissible parameter tuple found");
}

// ---------------------------------------------------------------------------
// Public suite runners

std::vector<Report> verify_relation_set(const std::string& suite, int trials,
                                        std::uint64_t seed) {
  if (suite == "stab") return suite_stab();
  if (suite == "appendix") return suite_appendix();
  if (suite == "universal") {
    std::vector<Report> out;
    Sampler smp(suite_seed(seed, kSaltUniversal));
    for (int t = 0; t < trials; ++t) universal_for_tuple(out, smp.wilson_tuple(), smp);
    sort_reports(out);
    return out;
  }
  if (suite == "sklyanin") {
    std::vector<Report> out;
    Sampler smp(suite_seed(seed, kSaltSklyanin));
    for (int t = 0; t < trials; ++t) sklyanin_for_tuple(out, smp.rational());
    sort_reports(out);
    return out;
  }
  if (suite == "casimir") return verify_casimirs(trials, seed);
  if (suite == "rains") return verify_rains(trials, seed);
  if (suite == "actions") {
    std::vector<Report> out = verify_wilson_bispectral(8, trials, seed);
    std::vector<Report> rep = verify_sklyanin_representation(8, trials, seed);
    out.insert(out.end(), rep.begin(), rep.end());
    return out;
  }
  if (suite == "pararacah") {
    std::vector<Report> out;
    for (int N : {2, 3, 4, 5, 8, 9}) {
      std::vector<Report> part = verify_para_racah(N, trials, seed);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  throw std::invalid_argument("unknown relation set: " + suite);
}

std::vector<Report> verify_casimirs(int trials, std::uint64_t seed) {
  std::vector<Report> out;
  const SheunBasis& b = basis();
  const DiffOp I = DiffOp::identity();
  const std::string su = "casimir";

  check_op(out, su, "stab-casimir", {},
           sq(b.M1) - acomm(b.M2, b.L) + sq(b.L) * Rational(3), I);

  Sampler smp(suite_seed(seed, kSaltCasimir));
  for (int t = 0; t < trials; ++t) {
    Rational e1 = smp.rational();
    auto params = tuple_strs({e1});
    UniversalSet u = universal_set(e1);
    DiffOp Q1 = sq(u.U) - acomm(u.V, u.Y) + sq(u.Y) * Rational(3);
    DiffOp Q2 = sq(u.U) + sq(u.V) - acomm(u.U, u.V) - acomm(u.U, u.Y) -
                acomm(u.R, u.Y);
    check_op(out, su, "q1-value", params, Q1, I);
    check_op(out, su, "q2-value", params, Q2, I * ((e1 - 2) * (e1 - 4)));
    const std::pair<const char*, const DiffOp*> gens[] = {
        {"U", &u.U}, {"V", &u.V}, {"Y", &u.Y}, {"R", &u.R}};
    for (const auto& [name, G] : gens) {
      check_op(out, su, std::string("q1-central-") + name, params,
               comm(Q1, *G), DiffOp());
      check_op(out, su, std::string("q2-central-") + name, params,
               comm(Q2, *G), DiffOp());
    }
  }

  for (int t = 0; t < trials; ++t) {
    Rational s = smp.rational();
    auto params = tuple_strs({s});
    SklyaninSet k = sklyanin_set(s);
    DiffOp C1 = sq(k.S0) + sq(k.S3) + acomm(k.Splus, k.Sminus) * Rational(1, 2);
    DiffOp C2 = acomm(k.Splus, k.Sminus) * Rational(1, 2) +
                acomm(k.Sminus, k.S3) * Rational(2) + sq(k.S3) -
                acomm(k.Sminus, k.Sminus) * Rational(6);
    check_op(out, su, "c1-value", params, C1,
             I * (16 * (2 * s + 1) * (2 * s + 1)));
    check_op(out, su, "c2-value", params, C2, I * (64 * s * (s + 1)));
    const std::pair<const char*, const DiffOp*> gens[] = {{"S0", &k.S0},
                                                          {"S3", &k.S3},
                                                          {"Splus", &k.Splus},
                                                          {"Sminus", &k.Sminus}};
    for (const auto& [name, G] : gens) {
      check_op(out, su, std::string("c1-central-") + name, params,
               comm(C1, *G), DiffOp());
      check_op(out, su, std::string("c2-central-") + name, params,
               comm(C2, *G), DiffOp());
    }
  }
  sort_reports(out);
  return out;
}

std::vector<Report> verify_rains(int trials, std::uint64_t seed) {
  std::vector<Report> out;
  Sampler smp(suite_seed(seed, kSaltRains));
  const std::string su = "rains";
  const Rational half(1, 2);

  std::optional<ParamSet> swap_source;
  for (int t = 0; t < trials; ++t) {
    ParamSet P = smp.wilson_tuple();
    Rational k = smp.nonzero_rational();
    if (t == 0) k = 0;        // control: both sides coincide syntactically
    if (t == 1) {
      k = half;
      swap_source = P;
    }
    if (t == 2 && swap_source) {
      const auto& S = *swap_source;
      P = ParamSet(S.a(), S.b(), S.d(), S.c());
      k = half;
    }
    auto params = tuple_strs({P.a(), P.b(), P.c(), P.d(), k});

    auto pseudo = [&](const std::function<DiffOp(const ParamSet&)>& ts) {
      DiffOp lhs = compose(ts(P.shifted(0, 0, k, -k)),
                           ts(P.shifted(half, half, -half, -half)));
      DiffOp rhs = compose(
          ts(P), ts(P.shifted(half, half, k - half, -k - half)));
      return lhs - rhs;
    };

    DiffOp res_stated = pseudo(taustar_stated);
    Report r1 = base_report(su, "pseudo-commutation", params,
                            res_stated.is_zero());
    if (!res_stated.is_zero()) {
      auto it = res_stated.terms().begin();
      r1.residual_offset = it->first;
      r1.residual_coeff = it->second.str();
    }
    out.push_back(std::move(r1));

    DiffOp res_corr = pseudo(taustar_corrected);
    out.push_back(base_report(su, "pseudo-commutation.corrected", params,
                              res_corr.is_zero()));
  }
  sort_reports(out);
  return out;
}

std::vector<Report> verify_wilson_bispectral(int n_max, int trials,
                                             std::uint64_t seed) {
  std::vector<Report> out;
  Sampler smp(suite_seed(seed, kSaltWilson));
  for (int t = 0; t < trials; ++t)
    wilson_for_tuple(out, smp.wilson_tuple(), n_max, smp);
  sort_reports(out);
  return out;
}

std::vector<Report> verify_sklyanin_representation(int n_max, int trials,
                                                   std::uint64_t seed) {
  std::vector<Report> out;
  Sampler smp(suite_seed(seed, kSaltRepresentation));
  for (int t = 0; t < trials; ++t)
    representation_for_tuple(out, smp.wilson_tuple(), n_max);
  sort_reports(out);
  return out;
}

std::vector<Rational> solve_discrete_weights(
    const std::vector<LambdaPoly>& polys, const BiLattice& lattice) {
  const int n = static_cast<int>(lattice.points.size());
  if (static_cast<int>(polys.size()) != n)
    throw std::invalid_argument(
        "need exactly one polynomial per lattice point");
  std::vector<std::vector<Rational>> A(n, std::vector<Rational>(n));
  std::vector<Rational> rhs(n, Rational(0));
  for (int m = 0; m < n; ++m)
    for (int s = 0; s < n; ++s) A[m][s] = polys[m].eval(lattice.points[s]);
  rhs[0] = 1;  // the degree-0 row normalizes the weights to unit mass
  return solve_exact(std::move(A), std::move(rhs));
}

std::vector<Report> verify_para_racah(int N, int trials, std::uint64_t seed) {
  std::vector<Report> out;
  const std::string su = "pararacah";
  Sampler smp(suite_seed(seed, kSaltParaRacah + 1000 * static_cast<std::uint64_t>(N)));

  for (int t = 0; t < trials; ++t) {
    for (int attempt = 0;; ++attempt) {
      if (attempt > 400) {
        out.push_back(base_report(su, "sampling", {std::to_string(N)}, false));
        break;
      }
      Rational a = smp.rational();
      Rational c = smp.rational();
      Rational w = smp.rational();
      if (is_zero(w) || w == 1) continue;  // known-degenerate weight scale
      std::vector<std::string> params = {std::to_string(N), rat_str(a),
                                         rat_str(c), rat_str(w)};
      auto resampled = [&](const std::string& reason) {
        Report r = base_report(su, "sample", params, true);
        r.status = kStatusResampled;
        r.empirical.emplace_back("reason", reason);
        out.push_back(std::move(r));
      };
      try {
        BiLattice lat = para_racah_lattice(N, a, c);
        std::vector<LambdaPoly> fam;
        for (int n = 0; n <= N + 1; ++n)
          fam.push_back(para_racah(n, N, a, c, w));

        std::vector<Rational> weights = solve_discrete_weights(
            std::vector<LambdaPoly>(fam.begin(), fam.begin() + N + 1), lat);

        // Gram matrix of the family under the solved weights.
        std::vector<std::vector<Rational>> gram(
            N + 1, std::vector<Rational>(N + 1, Rational(0)));
        for (int n = 0; n <= N; ++n)
          for (int m = n; m <= N; ++m)
            for (int s = 0; s <= N; ++s)
              gram[n][m] += weights[s] * fam[n].eval(lat.points[s]) *
                            fam[m].eval(lat.points[s]);

        bool zero_norm = false;
        for (int n = 0; n <= N && !zero_norm; ++n)
          zero_norm = is_zero(gram[n][n]);
        if (zero_norm) {
          resampled("vanishing diagonal norm");
          continue;
        }

        out.push_back(base_report(su, "lattice-distinct", params,
                                  static_cast<int>(lat.points.size()) == N + 1));

        bool monic = true;
        for (int n = 0; n <= N + 1 && monic; ++n)
          monic = fam[n].degree() == n && fam[n].lead() == 1;
        out.push_back(base_report(su, "monic-degrees", params, monic));

        LambdaPoly char_poly = LambdaPoly(Rational(1));
        for (const Rational& pt : lat.points)
          char_poly = char_poly * (LambdaPoly::lambda() - LambdaPoly(pt));
        out.push_back(base_report(su, "characteristic-vanishing", params,
                                  fam[N + 1] == char_poly));

        Rational mass(0);
        for (const Rational& wv : weights) mass += wv;
        Report wr = base_report(su, "weights-normalized", params, mass == 1);
        wr.empirical.emplace_back("mass", rat_str(mass));
        out.push_back(std::move(wr));

        bool ortho = true;
        for (int n = 0; n <= N && ortho; ++n)
          for (int m = n + 1; m <= N && ortho; ++m)
            ortho = is_zero(gram[n][m]);
        out.push_back(base_report(su, "orthogonality", params, ortho));

        std::string signs;
        for (int n = 0; n <= N; ++n) signs += sgn(gram[n][n]) > 0 ? '+' : '-';
        Report nr = base_report(su, "norms-nonzero", params, true);
        nr.empirical.emplace_back("norm_signs", signs);
        out.push_back(std::move(nr));
        break;
      } catch (const DegenerateLattice& e) {
        resampled(e.what());
      } catch (const SingularPochhammer& e) {
        resampled(e.what());
      } catch (const SingularSystem& e) {
        resampled(e.what());
      }
    }
  }
  sort_reports(out);
  return out;
}

std::vector<Report> verify_truncation(int N) {
  std::vector<Report> out;
  truncation_for_n(out, N);
  sort_reports(out);
  return out;
}

std::vector<Report> run_suite(const std::string& suite,
                              const SuiteOptions& opt) {
  std::vector<Report> out;
  auto append = [&](std::vector<Report> part) {
    out.insert(out.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  };
  if (suite == "stab" || suite == "appendix" || suite == "universal" ||
      suite == "sklyanin" || suite == "casimir" || suite == "rains") {
    append(verify_relation_set(suite, opt.trials, opt.seed));
  } else if (suite == "wilson") {
    append(verify_wilson_bispectral(opt.n_max, opt.trials, opt.seed));
  } else if (suite == "representation") {
    append(verify_sklyanin_representation(opt.n_max, opt.trials, opt.seed));
  } else if (suite == "pararacah") {
    if (opt.N) {
      append(verify_para_racah(*opt.N, opt.trials, opt.seed));
    } else {
      for (int N : {2, 3, 4, 5, 8, 9})
        append(verify_para_racah(N, opt.trials, opt.seed));
    }
  } else if (suite == "truncation") {
    if (opt.N) {
      append(verify_truncation(*opt.N));
    } else {
      for (int N = 1; N <= 8; ++N) append(verify_truncation(N));
    }
  } else if (suite == "all") {
    for (const char* name :
         {"stab", "appendix", "universal", "sklyanin", "casimir", "rains",
          "wilson", "representation", "pararacah", "truncation"})
      append(run_suite(name, opt));
  } else {
    throw std::invalid_argument("unknown suite: " + suite);
  }
  return out;
}

}  // namespace sheun
