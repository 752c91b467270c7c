#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace gog {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Exact rational, kept in lowest terms with a positive denominator.
using Rational = mpq_class;

/// Group orders. Every formula in scope depends only on these.
using Order = std::uint64_t;

inline Integer to_integer(std::uint64_t v) {
  Integer r;
  mpz_import(r.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return r;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// "p/q" with q > 0 and gcd(p, q) = 1; zero prints as "0/1".
inline std::string format_rational(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

/// lcm with overflow detection; throws Error(OrderOverflow).
Order checked_lcm(Order a, Order b);

}  // namespace gog
