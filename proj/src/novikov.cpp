#include "hamfix/novikov.hpp"

#include <cctype>

#include "hamfix/errors.hpp"

namespace hamfix {

std::string to_string(const Valuation& v) {
  return v.value ? to_string(*v.value) : std::string("-inf");
}

Novikov::Novikov(const Rational& constant) {
  if (constant != 0) terms_.emplace(Rational(0), constant);
}

Novikov::Novikov(Terms terms, std::optional<Rational> cutoff)
    : terms_(std::move(terms)), cutoff_(std::move(cutoff)) {
  normalize();
}

Novikov Novikov::monomial(const Rational& coef, const Rational& exponent) {
  Novikov r;
  if (coef != 0) r.terms_.emplace(exponent, coef);
  return r;
}

void Novikov::normalize() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0 || (cutoff_ && it->first >= *cutoff_))
      it = terms_.erase(it);
    else
      ++it;
  }
}

Rational Novikov::coeff(const Rational& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

Valuation Novikov::valuation() const {
  if (terms_.empty()) return Valuation::neg_infinity();
  return {Rational(-terms_.begin()->first)};
}

const Rational& Novikov::min_exponent() const {
  if (terms_.empty()) fail(ErrorKind::Domain, "zero element has no lowest exponent");
  return terms_.begin()->first;
}

const Rational& Novikov::leading_coeff() const {
  if (terms_.empty()) fail(ErrorKind::Domain, "zero element has no leading coefficient");
  return terms_.begin()->second;
}

Novikov Novikov::truncated(const Rational& c) const {
  Novikov r = *this;
  if (!r.cutoff_ || c < *r.cutoff_) r.cutoff_ = c;
  r.normalize();
  return r;
}

Novikov Novikov::shifted(const Rational& e) const {
  Novikov r;
  for (const auto& [x, a] : terms_) r.terms_.emplace(x + e, a);
  if (cutoff_) r.cutoff_ = *cutoff_ + e;
  return r;
}

Novikov Novikov::scaled(const Rational& c) const {
  if (c == 0) {
    Novikov z;
    z.cutoff_ = cutoff_;
    return z;
  }
  Novikov r = *this;
  for (auto& [x, a] : r.terms_) a *= c;
  return r;
}

Novikov Novikov::operator-() const { return scaled(Rational(-1)); }

namespace {

std::optional<Rational> min_cutoff(const std::optional<Rational>& a, const std::optional<Rational>& b) {
  if (!a) return b;
  if (!b) return a;
  return *a < *b ? a : b;
}

}  // namespace

Novikov operator+(const Novikov& a, const Novikov& b) {
  Novikov r;
  r.terms_ = a.terms_;
  for (const auto& [x, c] : b.terms_) r.terms_[x] += c;
  r.cutoff_ = min_cutoff(a.cutoff_, b.cutoff_);
  r.normalize();
  return r;
}

Novikov operator-(const Novikov& a, const Novikov& b) { return a + (-b); }

Novikov operator*(const Novikov& a, const Novikov& b) {
  Novikov r;
  r.cutoff_ = min_cutoff(a.cutoff_, b.cutoff_);
  for (const auto& [x, c] : a.terms_)
    for (const auto& [y, d] : b.terms_) {
      Rational e = x + y;
      if (r.cutoff_ && e >= *r.cutoff_) continue;
      r.terms_[e] += c * d;
    }
  r.normalize();
  return r;
}

Novikov exp_truncated(const Novikov& a, const Rational& cutoff) {
  if (cutoff <= 0) fail(ErrorKind::Domain, "exp: cutoff must be positive");
  for (const auto& [x, c] : a.terms()) {
    if (x < 0) fail(ErrorKind::Domain, "exp: negative exponent " + to_string(x));
    if (x == 0) fail(ErrorKind::ConstantTerm, "exp: nonzero constant term");
  }
  Rational order = a.cutoff() && *a.cutoff() < cutoff ? *a.cutoff() : cutoff;
  Novikov base = a.without_cutoff().truncated(order);
  Novikov sum = Novikov(Rational(1)).truncated(order);
  if (a.is_zero()) return sum;
  Novikov power = sum;
  Rational lowest = a.min_exponent();
  for (long k = 1; lowest * k < order; ++k) {
    power = (power * base).scaled(Rational(1, k));
    sum += power;
  }
  return sum;
}

Novikov invert_truncated(const Novikov& a, const Rational& cutoff) {
  if (a.is_zero()) fail(ErrorKind::ZeroDivision, "inverse of zero");
  const Rational lambda = a.min_exponent();
  const Rational c = a.leading_coeff();
  // a = c T^lambda (1 + r) with every exponent of r positive.
  Novikov one_plus_r = a.shifted(-lambda).scaled(1 / c);
  if (one_plus_r.terms().size() == 1 && !a.cutoff()) return Novikov::monomial(1 / c, -lambda);
  if (cutoff <= 0) fail(ErrorKind::Domain, "inverse: cutoff must be positive");
  Rational order = cutoff;
  if (one_plus_r.cutoff() && *one_plus_r.cutoff() < order) order = *one_plus_r.cutoff();
  Novikov r = (one_plus_r - Novikov(Rational(1))).without_cutoff().truncated(order);
  Novikov neg_r = -r;
  Novikov sum = Novikov(Rational(1)).truncated(order);
  Novikov power = sum;
  if (!r.is_zero()) {
    Rational lowest = r.min_exponent();
    for (long k = 1; lowest * k < order; ++k) {
      power = power * neg_r;
      sum += power;
    }
  }
  return sum.shifted(-lambda).scaled(1 / c);
}

namespace {

std::string term_body(const Rational& coef_abs, const Rational& exponent) {
  if (exponent == 0) return to_string(coef_abs);
  std::string mono = exponent == 1 ? std::string("T") : "T^" + to_string(exponent);
  if (coef_abs == 1) return mono;
  return to_string(coef_abs) + "*" + mono;
}

}  // namespace

std::string to_string(const Novikov& a) {
  std::string out;
  bool first = true;
  for (const auto& [x, c] : a.terms()) {
    bool neg = c < 0;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    out += term_body(abs(c), x);
    first = false;
  }
  if (a.cutoff()) {
    std::string o = "O(T^" + to_string(*a.cutoff()) + ")";
    out += first ? o : " + " + o;
  } else if (first) {
    out = "0";
  }
  return out;
}

namespace {

class NovikovParser {
 public:
  explicit NovikovParser(std::string_view s) : s_(s) {}

  Novikov parse() {
    Novikov::Terms terms;
    std::optional<Rational> cutoff;
    skip_ws();
    if (at_end()) error("empty input");
    bool first = true;
    while (true) {
      skip_ws();
      int sign = 1;
      if (!first) {
        if (at_end()) break;
        if (peek() == '+')
          ++pos_;
        else if (peek() == '-') {
          sign = -1;
          ++pos_;
        } else
          error("expected '+' or '-'");
        skip_ws();
      } else if (peek() == '-') {
        sign = -1;
        ++pos_;
        skip_ws();
      }
      first = false;
      if (peek() == 'O') {
        if (sign < 0) error("negative order term");
        if (cutoff) error("duplicate order term");
        pos_++;
        expect('(');
        expect('T');
        expect('^');
        cutoff = rational();
        expect(')');
        continue;
      }
      if (cutoff) error("terms after order term");
      Rational coef = 1, exponent = 0;
      if (peek() == 'T') {
        exponent = monomial();
      } else {
        coef = rational_unsigned();
        skip_ws();
        if (peek() == '*') {
          ++pos_;
          skip_ws();
          exponent = monomial();
        }
      }
      if (sign < 0) coef = -coef;
      terms[exponent] += coef;
    }
    return Novikov(std::move(terms), cutoff);
  }

 private:
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorKind::Parse, "novikov: " + what + " at offset " + std::to_string(pos_) + " in '" +
                               std::string(s_) + "'");
  }
  void expect(char c) {
    skip_ws();
    if (peek() != c) error(std::string("expected '") + c + "'");
    ++pos_;
  }
  Rational monomial() {
    expect('T');
    skip_ws();
    if (peek() != '^') return Rational(1);
    ++pos_;
    return rational();
  }
  Rational rational() {
    skip_ws();
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    }
    Rational q = rational_unsigned();
    return neg ? Rational(-q) : q;
  }
  Rational rational_unsigned() {
    skip_ws();
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (peek() == '/') {
      ++pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    }
    if (pos_ == start) error("expected a number");
    return parse_rational(s_.substr(start, pos_ - start));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Novikov parse_novikov(std::string_view text) { return NovikovParser(text).parse(); }

}  // namespace hamfix
