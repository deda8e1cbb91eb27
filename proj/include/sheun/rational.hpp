#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace sheun {

// Exact rational scalar.  All arithmetic in the workbench bottoms out here;
// values are kept canonical (reduced, positive denominator) at all times.
using Rational = mpq_class;

inline Rational rat(long n) { return Rational(n); }

inline Rational rat(long n, long d) {
  if (d == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

// Parses "p" or "p/q" with optional leading '-'.  Rejects anything else so
// malformed CLI input fails loudly instead of truncating.
inline Rational rat_parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto digits = [](const std::string& t, size_t from, size_t to) {
    if (from >= to) return false;
    for (size_t i = from; i < to; ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  size_t slash = s.find('/');
  size_t start = (s[0] == '-') ? 1 : 0;
  if (slash == std::string::npos) {
    if (!digits(s, start, s.size()))
      throw std::invalid_argument("bad rational literal: " + s);
  } else {
    if (!digits(s, start, slash) || !digits(s, slash + 1, s.size()))
      throw std::invalid_argument("bad rational literal: " + s);
  }
  Rational r(s);
  if (r.get_den() == 0)
    throw std::invalid_argument("rational with zero denominator: " + s);
  r.canonicalize();
  return r;
}

// Prints "p/q", or just "p" when the denominator is 1.
inline std::string rat_str(const Rational& r) { return r.get_str(); }

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

}  // namespace sheun
