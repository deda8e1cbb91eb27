// Acceptance battery: one line per criterion, nonzero exit if any fails.
// Every arithmetic check is exact; a relation whose stated form fails is
// accepted only when its documented corrected twin passes and both outcomes
// appear in the reports.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "sheun/poly.hpp"
#include "sheun/report.hpp"
#include "sheun/sheun_basis.hpp"
#include "sheun/verifier.hpp"

using namespace sheun;

namespace {

int failures = 0;

void line(int n, bool ok, const std::string& what) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion-" << n << ": " << what
            << "\n";
  if (!ok) ++failures;
}

std::string secs(std::chrono::steady_clock::time_point t0) {
  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            t0)
                  .count();
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f s", dt);
  return buf;
}

double elapsed(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

int count(const std::vector<Report>& rs, const std::string& id,
          const std::string& status) {
  int n = 0;
  for (const Report& r : rs)
    if (r.relation_id == id && r.status == status) ++n;
  return n;
}

bool all_pass(const std::vector<Report>& rs) {
  for (const Report& r : rs)
    if (r.status != kStatusPass) return false;
  return !rs.empty();
}

// True when the stated relation either passes outright or fails with its
// corrected twin passing on every tuple (both outcomes reported).
bool documented(const std::vector<Report>& rs, const std::string& id) {
  int stated = count(rs, id, kStatusPass) + count(rs, id, kStatusFail);
  if (stated == 0) return false;
  if (count(rs, id, kStatusFail) == 0) return true;
  return count(rs, id + ".corrected", kStatusPass) ==
         count(rs, id, kStatusFail) + count(rs, id, kStatusPass);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

int main() {
  const std::uint64_t seed = 2026;
  using clock = std::chrono::steady_clock;

  {
    auto t0 = clock::now();
    auto rs = verify_relation_set("stab", 1, seed);
    bool ok = rs.size() == 3 && all_pass(rs) && elapsed(t0) < 1.0;
    line(1, ok, "three stabilizing relations hold exactly (" + secs(t0) + ")");
  }

  {
    auto t0 = clock::now();
    auto rs = verify_relation_set("appendix", 1, seed);
    bool ok = !reports_failed(rs) && elapsed(t0) < 10.0;
    for (const Report& r : rs)
      if (!r.is_correction()) ok = ok && documented(rs, r.relation_id);
    // The quadratic scalar line needs the corrected Casimir combination and
    // both outcomes must appear.
    ok = ok && count(rs, "scalar-1", kStatusFail) == 1 &&
         count(rs, "scalar-1.corrected", kStatusPass) == 1;
    line(2, ok,
         "appendix relations verify as stated or with their documented "
         "corrections, both outcomes reported (" +
             secs(t0) + ")");
  }

  auto cas = verify_casimirs(5, seed);
  auto sk = verify_relation_set("sklyanin", 5, seed);
  {
    bool ok = all_pass(cas) && count(cas, "stab-casimir", kStatusPass) == 1;
    for (const char* id : {"q1-value", "q2-value", "c1-value", "c2-value"})
      ok = ok && count(cas, id, kStatusPass) == 5;
    // Direct realization against the isomorphism route at e1 = 2-2s; the
    // raising generator needs its documented sign correction.
    for (const char* id : {"direct-S0", "direct-S3", "direct-Sminus"})
      ok = ok && count(sk, id, kStatusPass) == 5;
    ok = ok && count(sk, "direct-Splus", kStatusFail) == 5 &&
         count(sk, "direct-Splus.corrected", kStatusPass) == 5;
    line(3, ok,
         "Casimir elements take their closed-form scalar multiples of the "
         "identity on 5 sampled parameters, direct and isomorphism routes "
         "agreeing");
  }

  {
    auto rs = verify_relation_set("universal", 5, seed);
    bool ok = !reports_failed(rs);
    for (const char* id : {"star-comm-UY", "star-comm-VY", "star-comm-UV",
                           "star-comm-RY", "star-comm-RV", "star-comm-RU"})
      ok = ok && count(rs, id, kStatusPass) == 5 &&
           count(rs, id, kStatusFail) == 0;
    for (const char* gen : {"U", "V", "Y", "R"}) {
      ok = ok && count(cas, std::string("q1-central-") + gen, kStatusPass) == 5;
      ok = ok && count(cas, std::string("q2-central-") + gen, kStatusPass) == 5;
    }
    line(4, ok,
         "all six universal-algebra relations and centrality of both "
         "Casimirs hold at 5 sampled parameter values");
  }

  {
    bool ok = true;
    for (const char* id :
         {"rdskly-S0-Sminus", "rdskly-S0-Splus", "rdskly-Splus-Sminus",
          "rdskly-S0-S3", "rdskly-S3-Sminus", "rdskly-S3-Splus"})
      ok = ok && count(sk, id, kStatusPass) == 5 &&
           count(sk, id, kStatusFail) == 0;
    line(5, ok,
         "all Sklyanin-type relations hold at 5 sampled s with generators "
         "built through the algebra isomorphism");
  }

  {
    auto rs = verify_rains(5, seed);
    bool ok = !reports_failed(rs) &&
              count(rs, "pseudo-commutation", kStatusPass) >= 1 &&
              count(rs, "pseudo-commutation.corrected", kStatusPass) == 5 &&
              count(rs, "pseudo-commutation", kStatusPass) +
                      count(rs, "pseudo-commutation", kStatusFail) ==
                  5;
    line(6, ok,
         "pseudo-commutation of shifted raising products verified on 5 "
         "tuples including the zero-shift control");
  }

  {
    auto t0 = clock::now();
    auto rs = verify_wilson_bispectral(8, 5, seed);
    bool ok = !reports_failed(rs) && elapsed(t0) < 60.0;
    ok = ok && count(rs, "q-eigen", kStatusPass) == 5 &&
         count(rs, "q-eigen", kStatusFail) == 0;
    ok = ok && count(rs, "tau-action", kStatusPass) == 5 &&
         count(rs, "degree-bookkeeping", kStatusPass) == 5;
    ok = ok && documented(rs, "taustar-action") &&
         documented(rs, "mustar-action");
    bool sign_recorded = false;
    for (const Report& r : rs)
      if (r.relation_id == "mu-action")
        for (const auto& [k, v] : r.empirical)
          if (k == "global_sign_vs_stated" && !v.empty()) sign_recorded = true;
    ok = ok && sign_recorded;
    line(7, ok,
         "Wilson family is bispectral for n <= 8 at 5 tuples with shift "
         "constants recorded up to a reported global sign (" +
             secs(t0) + ")");
  }

  {
    auto rs = verify_sklyanin_representation(6, 5, seed);
    bool ok = !reports_failed(rs);
    ok = ok && count(rs, "sminus-action", kStatusPass) == 5 &&
         count(rs, "sminus-action", kStatusFail) == 0;
    ok = ok && count(rs, "s0-action", kStatusPass) == 5 &&
         count(rs, "s3-action", kStatusPass) == 5;
    ok = ok && count(rs, "splus-action", kStatusFail) == 5 &&
         count(rs, "splus-action.corrected", kStatusPass) == 5;
    line(8, ok,
         "representation actions for n <= 6 match the displayed linear "
         "combinations, the raising action via its documented constant "
         "correction");
  }

  {
    bool ok = true;
    for (int N = 2; N <= 8; ++N) {
      auto rs = verify_truncation(N);
      ok = ok && !reports_failed(rs);
      ok = ok && count(rs, "r1-raising-lead", kStatusPass) == 1 &&
           count(rs, "r2-raising-lead", kStatusPass) == 1;
      // The stated combined lead and truncation point fail for every N; the
      // corrected lead and condition carry the result.
      ok = ok && count(rs, "combined-raising-lead", kStatusFail) >= 1 &&
           count(rs, "combined-raising-lead", kStatusPass) == 0 &&
           documented(rs, "combined-raising-lead");
      ok = ok && count(rs, "truncation-condition", kStatusFail) == 1 &&
           count(rs, "truncation-condition.corrected", kStatusPass) == 1;
    }
    line(9, ok,
         "combined raising lead and truncation condition verified for N <= 8 "
         "with stated and corrected outcomes both reported");
  }

  {
    auto t0 = clock::now();
    bool ok = true;
    for (int N : {2, 3, 4, 5, 8, 9}) {
      auto rs = verify_para_racah(N, 3, seed);
      ok = ok && !reports_failed(rs);
      for (const char* id :
           {"lattice-distinct", "monic-degrees", "characteristic-vanishing",
            "weights-normalized", "orthogonality", "norms-nonzero"})
        ok = ok && count(rs, id, kStatusPass) == 3 &&
             count(rs, id, kStatusFail) == 0;
    }
    ok = ok && elapsed(t0) < 120.0;
    line(10, ok,
         "para-Racah characteristic vanishing, full pairwise orthogonality "
         "and nonzero norms hold for N in {2,3,4,5,8,9}, 3 tuples each (" +
             secs(t0) + ")");
  }

  {
    DiffOp X = x_op();
    DiffOp MX = mult_x_identity();
    bool ok = (MX - X).is_zero() && X.terms().size() == 1 &&
              X.terms().begin()->first == 0 &&
              (X.terms().begin()->second - RatFunc(Poly::monomial(2)))
                  .is_zero();
    line(11, ok,
         "quadratic basis combination reduces to the single-term "
         "multiplication operator x^2");
  }

  {
    const std::string cli = SHEUN_CLI_PATH;
    const std::string out1 = "/tmp/sheun_acceptance_run1.txt";
    const std::string out2 = "/tmp/sheun_acceptance_run2.txt";
    const std::string args = " verify --suite all --seed 7 > ";
    int rc1 = std::system((cli + args + out1 + " 2>&1").c_str());
    int rc2 = std::system((cli + args + out2 + " 2>&1").c_str());
    std::string a = slurp(out1), b = slurp(out2);
    bool ok = rc1 == 0 && rc2 == 0 && !a.empty() && a == b;
    line(12, ok,
         "full verification battery run twice with the same seed yields "
         "byte-identical reports");
  }

  if (failures) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all 12 criteria passed\n";
  return 0;
}
