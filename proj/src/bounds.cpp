#include "hamfix/bounds.hpp"

#include <algorithm>

#include "hamfix/errors.hpp"

namespace hamfix::bounds {

Integer main_bound(const Rational& p, const Rational& theta, const Integer& cuplength) {
  if (p <= 0) fail(ErrorKind::InvalidInput, "period must be positive");
  if (cuplength < 1) fail(ErrorKind::InvalidInput, "cuplength must be positive");
  if (theta < p) fail(ErrorKind::ThetaBelowPeriod, "theta " + to_string(theta) + " is below the period " + to_string(p));
  return ceil(p * Rational(cuplength) / theta);
}

std::optional<Integer> arnold_predicate(const Rational& p, const Rational& gamma, const Integer& cuplength) {
  if (gamma < 0) fail(ErrorKind::InvalidInput, "norm must be nonnegative");
  if (p <= 0) fail(ErrorKind::InvalidInput, "period must be positive");
  if (gamma < p) return cuplength;
  return std::nullopt;
}

BclReport bcl_bound(const Rational& p, const std::map<Rational, Integer>& qcl, const Rational& hofer) {
  if (qcl.empty()) fail(ErrorKind::InvalidInput, "qcl table is empty");
  if (p <= 0) fail(ErrorKind::InvalidInput, "period must be positive");
  if (hofer < 0) fail(ErrorKind::InvalidInput, "Hofer norm must be nonnegative");
  BclReport rep;
  bool first = true;
  for (const auto& [g, q] : qcl) {
    Rational den = p + g + hofer;
    if (den <= 0) fail(ErrorKind::InvalidInput, "p + g + ||phi|| must be positive for g = " + to_string(g));
    Integer b = ceil(p * Rational(q) / den);
    if (first || b > rep.bound) {
      rep.bound = b;
      rep.best_g = g;
      first = false;
    }
  }
  return rep;
}

SchwarzReport schwarz_type_bound(const Integer& chern_n, int dim2n, int deg_a) {
  if (chern_n < 1) fail(ErrorKind::InvalidInput, "minimal Chern number must be >= 1");
  if (deg_a < 0 || deg_a >= dim2n) fail(ErrorKind::InvalidInput, "need 0 <= deg a < 2n");
  SchwarzReport rep;
  rep.raw = Rational(2 * chern_n) / Rational(dim2n - deg_a);
  rep.bound = ceil(rep.raw);
  return rep;
}

OnePointReport one_point_bounds(const Rational& p, int l, const Rational& area, const std::optional<Integer>& c1a,
                                const std::vector<int>& codims) {
  if (l < 2) fail(ErrorKind::InvalidInput, "l must be >= 2");
  if (area <= 0) fail(ErrorKind::InvalidInput, "area must be positive");
  if (p <= 0) fail(ErrorKind::InvalidInput, "period must be positive");
  OnePointReport rep;
  rep.b1 = ceil(p * l / area);
  if (c1a && !codims.empty()) {
    int mx = *std::max_element(codims.begin(), codims.end());
    if (mx <= 0) fail(ErrorKind::InvalidInput, "codimensions must be positive");
    rep.b2 = ceil(Rational(2) * p / mx * Rational(*c1a) / area);
  }
  return rep;
}

Integer pfqf_bound(const Integer& l, const Integer& g) {
  if (l < 1 || g < 1) fail(ErrorKind::InvalidInput, "length and order must be >= 1");
  return ceil(Rational(l) / Rational(g));
}

Integer blowup_bound(const Rational& p, const Rational& theta, const Integer& m, const std::vector<Integer>& ks,
                     const Integer& cuplength) {
  if (m < 1) fail(ErrorKind::InvalidInput, "m must be >= 1");
  if (ks.empty()) fail(ErrorKind::InvalidInput, "at least one blow-up weight is required");
  if (p <= 0 || theta <= 0) fail(ErrorKind::InvalidInput, "period and theta must be positive");
  Integer g = m;
  for (const auto& k : ks) {
    if (k < 1) fail(ErrorKind::InvalidInput, "blow-up weights must be positive");
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), k.get_mpz_t());
  }
  return ceil(p * Rational(g) * Rational(cuplength) / (Rational(m) * theta));
}

UnitaryReport unitary_formula(qla::QVector lambda) {
  const std::size_t n = lambda.size();
  if (n < 2) fail(ErrorKind::InvalidShape, "need n >= 2");
  std::sort(lambda.begin(), lambda.end(), [](const Rational& a, const Rational& b) { return a > b; });
  UnitaryReport rep;
  bool any = false;
  for (std::size_t i = 1; i < n; ++i) {
    Rational gap = lambda[i - 1] - lambda[i];
    if (gap == 0) continue;
    if (!any || gap < rep.period) rep.period = gap;
    any = true;
  }
  if (!any) fail(ErrorKind::DegenerateOrbit, "lambda is a multiple of the identity");
  for (std::size_t k = 0; k < n / 2; ++k) rep.theta += lambda[k] - lambda[n - 1 - k];
  // complex dimension = number of pairs i < j with lambda_i != lambda_j
  Integer dim = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (lambda[i] != lambda[j]) ++dim;
  rep.cuplength = dim + 1;
  rep.bound = ceil(rep.period * Rational(rep.cuplength) / rep.theta);
  return rep;
}

namespace {

Integer ceil_q(const Integer& num, const Integer& den) { return ceil(Rational(num) / Rational(den)); }
Integer floor_q(const Integer& num, const Integer& den) { return floor(Rational(num) / Rational(den)); }

}  // namespace

CaseValue case_projective(int n) {
  if (n < 2) fail(ErrorKind::InvalidShape, "need n >= 2");
  return {Integer(n), Integer(n)};
}

CaseValue case_grassmannian(int k, int n) {
  if (k < 1 || k >= n) fail(ErrorKind::InvalidShape, "need 1 <= k < n");
  Integer num = Integer(n) * (Integer(k) * (n - k) + 1);
  Integer den = Integer(n) * std::min(k, n - k);
  return {ceil_q(num, den), Integer(std::max(k, n - k) + 1)};
}

CaseValue case_flag_1_n1(int n) {
  if (n < 3) fail(ErrorKind::InvalidShape, "need n >= 3");
  Integer num = Integer(n - 1) * 2 * (n - 2);
  Integer den = Integer(2) * (n - 1);
  return {ceil_q(num, den), Integer(n - 2)};
}

CaseValue case_block_flag(int k, int m) {
  if (k < 1 || m < 2) fail(ErrorKind::InvalidShape, "need k >= 1, m >= 2");
  const Integer K = k, M = m, h = m / 2;
  Integer num = 2 * K * (K * K * M * (M - 1) / 2 + 1);
  Integer den = 2 * K * (M - h) * h;
  Integer closed = 2 * K * K - floor_q(K * K * h - 1, h * (M - h));
  return {ceil_q(num, den), closed};
}

CaseValue case_complete_flag(int n) {
  if (n < 2) fail(ErrorKind::InvalidShape, "need n >= 2");
  const Integer N = n, h = n / 2;
  Integer num = 2 * (N * (N - 1) / 2 + 1);
  Integer den = 2 * (N - h) * h;
  return {ceil_q(num, den), Integer(2)};
}

}  // namespace hamfix::bounds
