#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace troprank {

/// Exact scalar of the min-plus semiring. Always finite and canonical.
using Rational = mpq_class;

/// A point of R^d (or a representative of a point of TP^{d-1}).
using TropVector = std::vector<Rational>;

/// "p/q" with q > 0 and gcd 1, or "p" when q == 1.
std::string to_string(const Rational& q);

/// Parses "3", "-1/2", "+7", or a finite decimal such as "0.25".
/// Throws DomainError on anything else (including zero denominators).
Rational parse_rational(std::string_view text);

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Least common multiple of the denominators of `values` (1 when empty).
mpz_class common_denominator(const std::vector<Rational>& values);

}  // namespace troprank
