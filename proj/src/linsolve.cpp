#include "sheun/linsolve.hpp"

namespace sheun {

std::vector<Rational> solve_exact(std::vector<std::vector<Rational>> A,
                                  std::vector<Rational> b) {
  size_t n = A.size();
  if (b.size() != n) throw std::invalid_argument("dimension mismatch");
  // Augment and clear denominators row by row so Bareiss runs over integers.
  std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n + 1));
  for (size_t i = 0; i < n; ++i) {
    if (A[i].size() != n) throw std::invalid_argument("dimension mismatch");
    mpz_class common(1);
    for (size_t j = 0; j < n; ++j)
      mpz_lcm(common.get_mpz_t(), common.get_mpz_t(),
              A[i][j].get_den().get_mpz_t());
    mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), b[i].get_den().get_mpz_t());
    for (size_t j = 0; j < n; ++j)
      m[i][j] = A[i][j].get_num() * (common / A[i][j].get_den());
    m[i][n] = b[i].get_num() * (common / b[i].get_den());
  }

  mpz_class prev(1);
  for (size_t k = 0; k < n; ++k) {
    size_t pivot = k;
    while (pivot < n && m[pivot][k] == 0) ++pivot;
    if (pivot == n)
      throw SingularSystem("no pivot in column " + std::to_string(k));
    if (pivot != k) std::swap(m[pivot], m[k]);
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j <= n; ++j) {
        mpz_class t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        // Exact by the Bareiss identity.
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }

  std::vector<Rational> x(n);
  for (size_t ii = n; ii-- > 0;) {
    Rational acc(m[ii][n]);
    for (size_t j = ii + 1; j < n; ++j) acc -= Rational(m[ii][j]) * x[j];
    x[ii] = acc / Rational(m[ii][ii]);
  }
  return x;
}

}  // namespace sheun
