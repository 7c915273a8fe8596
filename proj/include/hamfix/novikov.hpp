#pragma once

// Finite Novikov sums  sum_i a_i T^{l_i}  with rational coefficients and
// exponents, plus an optional truncation order.

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "hamfix/rational.hpp"

namespace hamfix {

/// nu(x) = max{-l : a_l != 0}; unset for the zero element (read as -infinity).
struct Valuation {
  std::optional<Rational> value;

  static Valuation neg_infinity() { return {}; }
  bool is_neg_infinity() const { return !value.has_value(); }

  friend bool operator==(const Valuation& a, const Valuation& b) { return a.value == b.value; }
  friend bool operator<(const Valuation& a, const Valuation& b) {
    if (!b.value) return false;
    if (!a.value) return true;
    return *a.value < *b.value;
  }
  friend bool operator<=(const Valuation& a, const Valuation& b) { return !(b < a); }
  friend Valuation operator+(const Valuation& a, const Valuation& b) {
    if (!a.value || !b.value) return {};
    return {*a.value + *b.value};
  }
};

std::string to_string(const Valuation& v);

class Novikov {
 public:
  using Terms = std::map<Rational, Rational>;  // exponent -> nonzero coefficient

  Novikov() = default;
  explicit Novikov(const Rational& constant);
  Novikov(Terms terms, std::optional<Rational> cutoff = std::nullopt);

  static Novikov monomial(const Rational& coef, const Rational& exponent);

  const Terms& terms() const { return terms_; }
  const std::optional<Rational>& cutoff() const { return cutoff_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coeff(const Rational& exponent) const;
  Valuation valuation() const;
  /// Smallest stored exponent; requires a nonzero element.
  const Rational& min_exponent() const;
  const Rational& leading_coeff() const;

  /// Same element with every exponent >= c dropped and cutoff min(old, c).
  Novikov truncated(const Rational& c) const;
  Novikov without_cutoff() const { return Novikov(terms_); }
  /// Multiplication by T^e (the cutoff moves with it).
  Novikov shifted(const Rational& e) const;
  Novikov scaled(const Rational& c) const;

  Novikov operator-() const;
  friend Novikov operator+(const Novikov& a, const Novikov& b);
  friend Novikov operator-(const Novikov& a, const Novikov& b);
  friend Novikov operator*(const Novikov& a, const Novikov& b);
  Novikov& operator+=(const Novikov& b) { return *this = *this + b; }
  Novikov& operator-=(const Novikov& b) { return *this = *this - b; }
  Novikov& operator*=(const Novikov& b) { return *this = *this * b; }

  friend bool operator==(const Novikov& a, const Novikov& b) {
    return a.terms_ == b.terms_ && a.cutoff_ == b.cutoff_;
  }

 private:
  void normalize();

  Terms terms_;
  std::optional<Rational> cutoff_;
};

/// exp(a) = sum_k a^k / k! modulo T^cutoff.  Requires every exponent of a to
/// be strictly positive: exponent 0 raises ConstantTerm, negative raises Domain.
Novikov exp_truncated(const Novikov& a, const Rational& cutoff);

/// b with a*b = 1 modulo T^cutoff and nu(b) = -nu(a).  The result carries
/// cutoff - (lowest exponent of a) unless a is a monomial, whose inverse is exact.
/// Otherwise the cutoff must be positive (Domain).
Novikov invert_truncated(const Novikov& a, const Rational& cutoff);

/// Text form, exponents ascending:  "T^-1/2 + 2 - 1/3*T^2 + O(T^5)".
std::string to_string(const Novikov& a);
Novikov parse_novikov(std::string_view text);

}  // namespace hamfix
