#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace hamfix {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "a", "-a", "a/b" (b > 0 after normalisation). Throws Error(Parse).
Rational parse_rational(std::string_view text);

/// Canonical text: "n" for integers, "n/d" otherwise, sign on the numerator.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);
Rational abs(const Rational& q);
bool is_integer(const Rational& q);

/// Positive generator of aZ + bZ inside Q; gcd(0, 0) = 0.
Rational gcd(const Rational& a, const Rational& b);
Rational gcd(const std::vector<Rational>& values);

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace hamfix
