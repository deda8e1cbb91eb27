#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "sheun/families.hpp"
#include "sheun/report.hpp"
#include "sheun/structure.hpp"

namespace sheun {

// Deterministic rational sampler.  Draws use explicit modulo reduction of
// the raw engine output so results are identical across platforms;
// numerators range over [-40, 40] and denominators over [1, 40].
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : eng_(seed) {}
  Rational rational();
  Rational nonzero_rational();
  // Tuple admissible for Wilson-type checks: pairwise parameter sums and e1
  // non-integer (so no Pochhammer factor or action constant vanishes under
  // half-integer shifts), sigma defined and staying defined under the
  // shifted parameter sets.
  ParamSet wilson_tuple();

 private:
  std::mt19937_64 eng_;
};

// Generic suite runner for the operator-identity suites; suite is one of
// {stab, appendix, universal, sklyanin, casimir, rains, actions, pararacah}.
// Parameter-free suites run once regardless of trials.
std::vector<Report> verify_relation_set(const std::string& suite, int trials,
                                        std::uint64_t seed);

std::vector<Report> verify_casimirs(int trials, std::uint64_t seed);
std::vector<Report> verify_rains(int trials, std::uint64_t seed);
std::vector<Report> verify_wilson_bispectral(int n_max, int trials,
                                             std::uint64_t seed);
std::vector<Report> verify_sklyanin_representation(int n_max, int trials,
                                                   std::uint64_t seed);

// Unique weights with sum 1 annihilating P_1..P_N on the lattice, by exact
// fraction-free elimination; polys must be (P_0..P_N) on N+1 distinct points.
std::vector<Rational> solve_discrete_weights(const std::vector<LambdaPoly>& polys,
                                             const BiLattice& lattice);

std::vector<Report> verify_para_racah(int N, int trials, std::uint64_t seed);
std::vector<Report> verify_truncation(int N);

// CLI-facing dispatcher: accepts the command-line suite names
// {stab, appendix, universal, sklyanin, casimir, rains, wilson,
//  representation, pararacah, truncation, all}.
struct SuiteOptions {
  int trials = 5;
  std::uint64_t seed = 0;
  int n_max = 8;
  std::optional<int> N;
};

std::vector<Report> run_suite(const std::string& suite, const SuiteOptions& opt);

}  // namespace sheun
