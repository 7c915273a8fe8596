#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "hamfix/errors.hpp"
#include "hamfix/toric.hpp"

using namespace hamfix;

namespace {

qla::ZVector z(std::initializer_list<long> xs) {
  qla::ZVector v;
  for (long x : xs) v.push_back(Integer(x));
  return v;
}

Rational pair(const qla::QVector& t, const qla::ZVector& xi) {
  Rational s = 0;
  for (std::size_t i = 0; i < t.size(); ++i) s += t[i] * Rational(xi[i]);
  return s;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::InvalidInput;
}

/// Brute force: largest <c1, xi>/<tau, xi> over small lattice points of
/// Delta(tau) pairing nonnegatively with every chamber ray.
Rational brute_max_ratio(const ToricSpec& spec, const LatticeData& data) {
  std::optional<Rational> best;
  const std::size_t d = data.delta_basis.size();
  std::vector<int> y(d, -4);
  while (true) {
    qla::ZVector xi(spec.k, 0);
    bool nonzero = false;
    for (std::size_t j = 0; j < d; ++j) {
      if (y[j] != 0) nonzero = true;
      for (int i = 0; i < spec.k; ++i) xi[i] += y[j] * data.delta_basis[j][i];
    }
    bool eff = nonzero;
    for (const auto& t : data.chamber_rays)
      if (pair(qla::to_rational(t), xi) < 0) eff = false;
    if (eff) {
      Rational r = Rational(chern_pairing(spec, xi)) / area(spec, xi);
      if (!best || r > *best) best = r;
    }
    std::size_t j = 0;
    while (j < d && ++y[j] > 4) y[j++] = -4;
    if (j == d) break;
  }
  REQUIRE(best);
  return *best;
}

}  // namespace

TEST_CASE("projective plane") {
  ToricSpec cp2 = toric_cp(2);
  LatticeData data = analyze(cp2);
  REQUIRE(data.effective.size() == 1);
  CHECK(data.effective[0] == z({1}));
  CHECK(d_map(cp2, data.effective[0]) == z({1, 1, 1}));
  CHECK(fano_test(cp2, data));
  CHECK(minimal_period(cp2, data) == 1);
  CHECK(givental_bound(cp2, data).bound == 3);
  auto rel = quantum_sr_relations(cp2, data);
  REQUIRE(rel.size() == 1);
  CHECK(rel[0].d_plus == z({1, 1, 1}));
  CHECK(rel[0].d_minus == z({0, 0, 0}));
  CHECK(rel[0].area == 1);
}

TEST_CASE("projective spaces give n + 1 for any level") {
  for (int n = 1; n <= 5; ++n)
    for (long t : {1, 2, 7}) {
      ToricSpec s = toric_cp(n, Rational(t));
      LatticeData data = analyze(s);
      CHECK(minimal_period(s, data) == t);
      CHECK(givental_bound(s, data).bound == n + 1);
      auto rel = quantum_sr_relations(s, data);
      REQUIRE(rel.size() == 1);
      CHECK(rel[0].area == t);
      for (const auto& x : rel[0].d_plus) CHECK(x == 1);
    }
}

TEST_CASE("product of two projective lines") {
  ToricSpec s = toric_cp1xcp1(2, 3);
  LatticeData data = analyze(s);
  CHECK(data.effective == std::vector<qla::ZVector>{z({0, 1}), z({1, 0})});
  CHECK(fano_test(s, data));
  CHECK(minimal_period(s, data) == 1);
  auto rel = quantum_sr_relations(s, data);
  REQUIRE(rel.size() == 2);
  CHECK(rel[0].d_plus == z({0, 0, 1, 1}));
  CHECK(rel[0].area == 3);
  CHECK(rel[1].d_plus == z({1, 1, 0, 0}));
  CHECK(rel[1].area == 2);

  ToricSpec s24 = toric_cp1xcp1(2, 4);
  CHECK(minimal_period(s24, analyze(s24)) == 2);
  ToricSpec mono = toric_cp1xcp1(2, 2);
  CHECK(givental_bound(mono, analyze(mono)).bound == 2);
}

TEST_CASE("input validation") {
  ToricSpec flat{2, 3, {z({1, 0}), z({1, 0}), z({2, 0})}, {Rational(1), Rational(0)}};
  CHECK(kind_of([&] { analyze(flat); }) == ErrorKind::WeightsDontSpan);
  ToricSpec wall = toric_cp1xcp1(1, 0);
  CHECK(kind_of([&] { analyze(wall); }) == ErrorKind::NotRegularValue);
  ToricSpec outside = toric_cp1xcp1(-1, 1);
  CHECK(kind_of([&] { analyze(outside); }) == ErrorKind::NotRegularValue);
  ToricSpec zero = toric_cp(2, 0);
  CHECK(kind_of([&] { analyze(zero); }) == ErrorKind::NotRegularValue);
  ToricSpec weighted{1, 2, {z({1}), z({2})}, {Rational(1)}};
  CHECK(kind_of([&] { analyze(weighted); }) == ErrorKind::NonFreeAction);
  CHECK_FALSE(analyze(weighted, {true}).warnings.empty());
  ToricSpec short_tau{2, 4, toric_cp1xcp1(1, 1).weights, {Rational(1)}};
  CHECK(kind_of([&] { analyze(short_tau); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("Hirzebruch surfaces") {
  ToricSpec f1 = toric_hirzebruch(1, {Rational(2), Rational(1)});
  LatticeData d1 = analyze(f1);
  CHECK(fano_test(f1, d1));
  CHECK(givental_bound(f1, d1).bound == 2);
  CHECK(kind_of([&] { toric_quantum_ring(f1, d1); }) == ErrorKind::UnsupportedFamily);

  ToricSpec f2 = toric_hirzebruch(2, {Rational(3), Rational(1)});
  LatticeData d2 = analyze(f2);
  CHECK_FALSE(fano_test(f2, d2));
  bool zero_pairing = false;
  for (const auto& xi : d2.effective)
    if (chern_pairing(f2, xi) == 0) zero_pairing = true;
  CHECK(zero_pairing);
  CHECK(kind_of([&] { givental_bound(f2, d2); }) == ErrorKind::NotFano);
  CHECK(kind_of([&] { quantum_sr_relations(f2, d2); }) == ErrorKind::NotFano);
}

TEST_CASE("effective generators are dual to the chamber") {
  std::mt19937_64 rng(3);
  std::vector<ToricSpec> specs{toric_cp(3), toric_cp1xcp1(2, 3), toric_product({1, 2}, {Rational(1), Rational(5, 2)}),
                               toric_hirzebruch(1, {Rational(3), Rational(1)}),
                               toric_hirzebruch(2, {Rational(3), Rational(1)}),
                               toric_product({1, 1, 1}, {Rational(1), Rational(2), Rational(3)})};
  for (const auto& s : specs) {
    LatticeData data = analyze(s);
    REQUIRE_FALSE(data.chamber_rays.empty());
    CHECK(qla::in_cone([&] {
      qla::QMatrix g;
      for (const auto& r : data.chamber_rays) g.push_back(qla::to_rational(r));
      return g;
    }(), s.tau));
    for (int i = 0; i < 1000 / static_cast<int>(specs.size()); ++i) {
      qla::QVector u(s.k, 0);
      for (const auto& r : data.chamber_rays) u = qla::add(u, qla::scale(Rational(gen::uniform(rng, 0, 9)), qla::to_rational(r)));
      for (const auto& xi : data.effective) CHECK(pair(u, xi) >= 0);
    }
    // exact facet check: each effective generator is orthogonal to k - 1
    // independent chamber rays (or the chamber is one-dimensional)
    for (const auto& xi : data.effective) {
      CHECK(pair(s.tau, xi) > 0);
      qla::QMatrix tight;
      for (const auto& r : data.chamber_rays)
        if (pair(qla::to_rational(r), xi) == 0) tight.push_back(qla::to_rational(r));
      CHECK(qla::rank(tight) + 1 == data.delta_basis.size());
    }
  }
}

TEST_CASE("divisor classes satisfy the linear relations") {
  for (const auto& s : {toric_cp(3), toric_cp1xcp1(1, 2), toric_hirzebruch(1), toric_product({2, 1}, {Rational(1), Rational(1)})}) {
    LatticeData data = analyze(s);
    auto cls = divisor_classes(s, data);
    std::vector<qla::ZVector> rows(s.k);
    for (const auto& w : s.weights)
      for (int c = 0; c < s.k; ++c) rows[c].push_back(w[c]);
    auto relations = qla::integer_kernel(rows, s.n);
    CHECK(relations.size() == static_cast<std::size_t>(s.n - s.k));
    for (const auto& alpha : relations) {
      qla::ZVector sum(data.delta_basis.size(), 0);
      for (int i = 0; i < s.n; ++i)
        for (std::size_t j = 0; j < sum.size(); ++j) sum[j] += alpha[i] * cls[i][j];
      for (const auto& x : sum) CHECK(x == 0);
    }
  }
}

TEST_CASE("bound matches brute force and is invariant under rescaling") {
  std::vector<ToricSpec> specs{toric_cp(2, 3), toric_cp1xcp1(2, 5), toric_hirzebruch(1, {Rational(2), Rational(1)}),
                               toric_hirzebruch(1, {Rational(5), Rational(2)}),
                               toric_product({1, 2}, {Rational(3), Rational(1)})};
  for (const auto& s : specs) {
    LatticeData data = analyze(s);
    auto rep = givental_bound(s, data);
    CHECK(rep.max_ratio == brute_max_ratio(s, data));
    CHECK(rep.bound == ceil(rep.period * brute_max_ratio(s, data)));
    for (long c : {2, 3, 6}) {
      ToricSpec scaled = s;
      scaled.tau = qla::scale(Rational(c), s.tau);
      LatticeData sd = analyze(scaled);
      CHECK(sd.effective == data.effective);
      CHECK(givental_bound(scaled, sd).bound == rep.bound);
    }
  }
}

TEST_CASE("monotone inputs give the minimal Chern number") {
  std::vector<ToricSpec> specs{toric_cp(1), toric_cp(2), toric_cp(4), toric_cp1xcp1(1, 1), toric_cp1xcp1(3, 3),
                               toric_product({2, 2}, {Rational(3), Rational(3)}),
                               toric_hirzebruch(1, {Rational(3), Rational(2)})};
  for (const auto& s : specs) {
    LatticeData data = analyze(s);
    REQUIRE(is_monotone(s, data));
    Integer n_min = -1;
    for (const auto& xi : data.effective) {
      Integer c = chern_pairing(s, xi);
      if (n_min < 0 || c < n_min) n_min = c;
    }
    CHECK(givental_bound(s, data).bound == n_min);
    CHECK(minimal_chern_number(s, data) == n_min);
  }
  // CP^1 x CP^2: the generators have Chern numbers 2 and 3, so the minimal
  // Chern number on H_2 is 1 and so is the bound; the minimum over the
  // generators (2) is not.
  ToricSpec mixed = toric_product({1, 2}, {Rational(2), Rational(3)});
  LatticeData md = analyze(mixed);
  REQUIRE(is_monotone(mixed, md));
  CHECK(minimal_chern_number(mixed, md) == 1);
  CHECK(givental_bound(mixed, md).bound == 1);
  ToricSpec skew = toric_cp1xcp1(1, 2);
  CHECK_FALSE(is_monotone(skew, analyze(skew)));
}
