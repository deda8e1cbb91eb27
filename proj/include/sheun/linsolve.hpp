#pragma once

#include <stdexcept>
#include <vector>

#include "sheun/rational.hpp"

namespace sheun {

struct SingularSystem : std::runtime_error {
  explicit SingularSystem(const std::string& what) : std::runtime_error(what) {}
};

// Solves A x = b exactly via fraction-free (Bareiss) elimination over the
// integers after clearing row denominators.  Throws SingularSystem when A is
// singular.
std::vector<Rational> solve_exact(std::vector<std::vector<Rational>> A,
                                  std::vector<Rational> b);

}  // namespace sheun
