#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "hamfix/bounds.hpp"
#include "hamfix/errors.hpp"
#include "hamfix/quantum_ring.hpp"
#include "hamfix/root_system.hpp"
#include "hamfix/toric.hpp"

using namespace hamfix;
using namespace hamfix::bounds;

namespace {

/// ceil(a/b) for b > 0 via truncating integer division.
long ceil_div(long a, long b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }

}  // namespace

TEST_CASE("main bound examples") {
  CHECK(main_bound(4, 8, 5) == 3);
  for (long n = 2; n <= 8; ++n) CHECK(main_bound(Rational(n), Rational(n), Integer(n)) == n);
  CHECK(main_bound(Rational(3, 2), Rational(3, 2), 7) == 7);
  try {
    main_bound(4, 3, 5);
    FAIL("expected ThetaBelowPeriod");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ThetaBelowPeriod);
    CHECK(is_hypothesis_failure(e.kind()));
  }
}

TEST_CASE("ceiling agrees with the integer division identity") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 5000; ++i) {
    long p = gen::uniform(rng, 1, 40), c = gen::uniform(rng, 1, 30);
    long t = gen::uniform(rng, p, 200);
    CHECK(main_bound(Rational(p), Rational(t), Integer(c)) == ceil_div(p * c, t));
    long l = gen::uniform(rng, 1, 50), g = gen::uniform(rng, 1, 50);
    CHECK(pfqf_bound(l, g) == ceil_div(l, g));
  }
}

TEST_CASE("main bound is monotone in its arguments") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 2000; ++i) {
    Rational p = abs(gen::nonzero_rational(rng, 6, 4));
    Rational theta = p + abs(gen::rational(rng, 10, 4));
    Integer c = gen::uniform(rng, 1, 20);
    Integer b = main_bound(p, theta, c);
    CHECK(b >= 1);
    CHECK(main_bound(p, theta + abs(gen::rational(rng, 5, 3)), c) <= b);
    CHECK(main_bound(p, theta, c + gen::uniform(rng, 0, 5)) >= b);
    Rational p2 = p + abs(gen::rational(rng, 5, 3));
    if (p2 <= theta) CHECK(main_bound(p2, theta, c) >= b);
  }
}

TEST_CASE("Arnold predicate") {
  CHECK(arnold_predicate(3, 0, 4) == Integer(4));
  CHECK_FALSE(arnold_predicate(3, 3, 4).has_value());
  CHECK(arnold_predicate(3, Rational(29, 10), 4) == Integer(4));
  CHECK_FALSE(arnold_predicate(3, 5, 4).has_value());
  for (int n = 1; n <= 5; ++n) {
    Rational p(n + 1);
    auto ring = qh_projective(n, p);
    Integer cupl = quantum_cuplength(*ring, 0, 2 * n + 2).lower_bound;
    CHECK(arnold_predicate(p, p - Rational(1, 7), cupl) == Integer(n + 1));
  }
  CHECK_THROWS_AS(arnold_predicate(3, -1, 4), Error);
}

TEST_CASE("quantum cuplength bound") {
  for (int n = 1; n <= 5; ++n) {
    Rational p(n + 1);
    auto ring = qh_projective(n, p);
    Integer q = quantum_cuplength(*ring, p, 2 * n + 2).lower_bound;
    CHECK(q == 2 * n + 2);
    auto rep = bcl_bound(p, {{p, q}}, 0);
    CHECK(rep.bound == n + 1);
    CHECK(bcl_bound(p, {{Rational(0), Integer(n + 1)}}, 0).bound == n + 1);
    CHECK(bcl_bound(p, {{Rational(0), Integer(n + 1)}, {p, q}}, 0).bound == n + 1);
    CHECK(bcl_bound(p, {{p, q}}, 1000000).bound == 1);
  }
  CHECK(bcl_bound(2, {{Rational(0), Integer(3)}, {Rational(2), Integer(7)}}, 0).best_g == 2);
  CHECK_THROWS_AS(bcl_bound(2, {}, 0), Error);
  CHECK_THROWS_AS(bcl_bound(2, {{Rational(-3), Integer(1)}}, 0), Error);
}

TEST_CASE("Chern-type bound") {
  for (auto [k, n] : std::vector<std::pair<int, int>>{{1, 3}, {2, 4}, {2, 5}, {3, 7}}) {
    int dim2n = 2 * k * (n - k);
    auto r = schwarz_type_bound(n, dim2n, dim2n - 2);
    CHECK(r.bound == n);
    CHECK(r.raw == n);
  }
  for (int n = 3; n <= 6; ++n) {
    int dim2n = n * (n - 1);
    CHECK(schwarz_type_bound(2, dim2n, dim2n - 2).bound == 2);
  }
  auto zero = schwarz_type_bound(3, 8, 0);
  CHECK(zero.raw == Rational(3, 4));
  CHECK(zero.bound == 1);
  CHECK_THROWS_AS(schwarz_type_bound(3, 8, 8), Error);
}

TEST_CASE("one-point bounds") {
  for (int l = 2; l <= 6; ++l) CHECK(one_point_bounds(5, l, 5, std::nullopt, {}).b1 == l);
  auto r = one_point_bounds(2, 3, 2, Integer(2), {2, 2});
  REQUIRE(r.b2);
  CHECK(*r.b2 == 2);
  // CP^2 as a toric manifold with tau = 1: area 1, c1 = 3
  ToricSpec cp2 = toric_cp(2);
  auto data = analyze(cp2);
  auto giv = givental_bound(cp2, data);
  auto onept = one_point_bounds(giv.period, 2, area(cp2, giv.argmax), chern_pairing(cp2, giv.argmax), {2});
  REQUIRE(onept.b2);
  CHECK(*onept.b2 == giv.bound);
  CHECK_THROWS_AS(one_point_bounds(1, 1, 1, std::nullopt, {}), Error);
  CHECK_THROWS_AS(one_point_bounds(1, 2, 0, std::nullopt, {}), Error);
}

TEST_CASE("PFQF bound") {
  CHECK(pfqf_bound(5, 2) == 3);
  for (int l = 1; l <= 9; ++l) CHECK(pfqf_bound(l, l) == 1);
  for (int n = 1; n <= 4; ++n) {
    auto ring = qh_projective(n, n + 1);
    auto f = pfqf_search(*ring, 2 * n + 2);
    REQUIRE(f);
    CHECK(pfqf_bound(f->length, f->order) >= 2);
  }
  CHECK_THROWS_AS(pfqf_bound(0, 1), Error);
}

TEST_CASE("blow-up bound") {
  for (int n = 2; n <= 7; ++n) CHECK(blowup_bound(3, 3, 2, {1}, n + 1) == (n + 2) / 2);
  // gcd(m, k) = m reduces to the main bound
  CHECK(blowup_bound(4, 8, 2, {2}, 5) == main_bound(4, 8, 5));
  CHECK(blowup_bound(4, 8, 3, {6, 9}, 5) == main_bound(4, 8, 5));
  // two points of weight 1 with m = 2: numerator halves
  CHECK(blowup_bound(1, 1, 2, {1, 1}, 6) == 3);
  CHECK_THROWS_AS(blowup_bound(1, 1, 0, {1}, 3), Error);
}

TEST_CASE("closed forms for the flag manifold table") {
  for (int n = 2; n <= 10; ++n) {
    auto c = case_projective(n);
    CHECK(c.ceiling_form == n);
    CHECK(c.closed_form == n);
  }
  for (int n = 2; n <= 10; ++n)
    for (int k = 1; k < n; ++k) {
      auto c = case_grassmannian(k, n);
      CHECK(c.ceiling_form == c.closed_form);
      CHECK(c.closed_form == std::max(k, n - k) + 1);
    }
  for (int n = 3; n <= 10; ++n) {
    auto c = case_flag_1_n1(n);
    CHECK(c.ceiling_form == n - 2);
    CHECK(c.closed_form == n - 2);
  }
  CHECK(case_block_flag(2, 2).closed_form == 5);
  for (int k = 1; k <= 5; ++k)
    for (int m = 2; m <= 8; ++m) {
      auto c = case_block_flag(k, m);
      CHECK(c.ceiling_form == c.closed_form);
    }
  for (int n = 2; n <= 12; ++n) {
    auto c = case_complete_flag(n);
    CHECK(c.ceiling_form == 2);
    CHECK(c.closed_form == 2);
  }
  CHECK_THROWS_AS(case_grassmannian(0, 3), Error);
  CHECK_THROWS_AS(case_flag_1_n1(2), Error);
}

TEST_CASE("direct U(n) formula") {
  CHECK(unitary_formula({1, 1, -1, -1}).bound == 3);
  auto gr = unitary_formula({2, 2, -2, -2});
  CHECK(gr.period == 4);
  CHECK(gr.theta == 8);
  CHECK(gr.cuplength == 5);
  // ordering of lambda does not matter
  CHECK(unitary_formula({-2, 2, -2, 2}).bound == gr.bound);
  for (int n = 2; n <= 7; ++n) {
    CHECK(unitary_formula(partial_flag_lambda({1}, n)).bound == n);
    CHECK(unitary_formula(partial_flag_lambda({1}, n)).bound == case_projective(n).closed_form);
  }
  for (int n = 3; n <= 7; ++n) {
    std::vector<int> all;
    for (int i = 1; i < n; ++i) all.push_back(i);
    CHECK(unitary_formula(partial_flag_lambda(all, n)).bound == 2);
  }
  CHECK_THROWS_AS(unitary_formula({1, 1, 1}), Error);
}

TEST_CASE("cross-module agreement") {
  // orbit pipeline vs closed forms: Cases 1, 2 and 5 agree exactly
  for (int n = 2; n <= 6; ++n)
    CHECK(orbit_fixed_point_bound(preset_projective(n)).bound == case_projective(n).closed_form);
  for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 4}, {2, 5}, {3, 7}})
    CHECK(orbit_fixed_point_bound(preset_grassmannian(k, n)).bound == case_grassmannian(k, n).closed_form);
  for (int n = 3; n <= 5; ++n)
    CHECK(orbit_fixed_point_bound(preset_complete_flag(n)).bound == case_complete_flag(n).closed_form);
  // toric CP^n vs Case 1 one index up
  for (int n = 1; n <= 5; ++n) {
    ToricSpec s = toric_cp(n, 2);
    CHECK(givental_bound(s, analyze(s)).bound == case_projective(n + 1).closed_form);
  }
  // quantum PFQF vs the pfqf bound with a long enough search
  for (int n = 1; n <= 4; ++n) {
    auto ring = qh_projective(n, n + 1);
    auto f = pfqf_search(*ring, 2 * n + 2);
    REQUIRE(f);
    CHECK(f->order == 1);
  }
}
