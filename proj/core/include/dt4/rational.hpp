#pragma once

#include <gmpxx.h>

#include <string>

namespace dt4 {

// Exact rational scalar. GMP expression templates are materialized at the
// call sites that need member access.
using Rational = mpq_class;

inline Rational rat(long n, long d = 1) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

// canonical "p/q" form, denominator always printed
inline std::string rat_str(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rational rat_parse(const std::string& s) {
  Rational q(s);
  q.canonicalize();
  return q;
}

}  // namespace dt4
