#pragma once

// Closed-form fixed point lower bounds.  Every evaluator works in exact
// rationals and applies the ceiling last.

#include <map>
#include <optional>
#include <vector>

#include "hamfix/qlinalg.hpp"
#include "hamfix/rational.hpp"

namespace hamfix::bounds {

/// ceil(p * cuplength / theta); ThetaBelowPeriod when theta < p.
Integer main_bound(const Rational& p, const Rational& theta, const Integer& cuplength);

/// cuplength when gamma (or the Hofer norm) is strictly below p.
std::optional<Integer> arnold_predicate(const Rational& p, const Rational& gamma, const Integer& cuplength);

struct BclReport {
  Integer bound;
  Rational best_g;
};

/// max over table rows g of ceil(p * qcl(g) / (p + g + hofer)).
BclReport bcl_bound(const Rational& p, const std::map<Rational, Integer>& qcl, const Rational& hofer);

struct SchwarzReport {
  Integer bound;  // ceiling of raw
  Rational raw;   // 2N / (2n - deg a)
};

SchwarzReport schwarz_type_bound(const Integer& chern_n, int dim2n, int deg_a);

struct OnePointReport {
  Integer b1;
  std::optional<Integer> b2;
};

/// b1 = ceil(p l / area); b2 = ceil(2p / max(codims) * c1A / area) when c1A
/// and codims are given.  codims are the values 2n - deg(a_i).
OnePointReport one_point_bounds(const Rational& p, int l, const Rational& area,
                                const std::optional<Integer>& c1a, const std::vector<int>& codims);

Integer pfqf_bound(const Integer& l, const Integer& g);

/// ceil(p * gcd(m, ks) * cuplength / (m * theta)).
Integer blowup_bound(const Rational& p, const Rational& theta, const Integer& m, const std::vector<Integer>& ks,
                     const Integer& cuplength);

/// The U(n) coadjoint-orbit estimate written directly in lambda coordinates:
/// lambda sorted decreasingly, period = min over nonzero consecutive gaps,
/// theta = sum_{k <= n/2} (lambda_k - lambda_{n-k+1}), cuplength from the block
/// multiplicities (complex dimension + 1).
struct UnitaryReport {
  Integer bound;
  Rational period, theta;
  Integer cuplength;
};
UnitaryReport unitary_formula(qla::QVector lambda);

/// Partial flag table values, written exactly as the closed forms (left: the
/// ceiling expression, right: the simplified value).
struct CaseValue {
  Integer ceiling_form;
  Integer closed_form;
};
CaseValue case_projective(int n);          // CP^(n-1)
CaseValue case_grassmannian(int k, int n);
CaseValue case_flag_1_n1(int n);           // F(1, n-1, n)
CaseValue case_block_flag(int k, int m);   // U(mk)/U(k)^m
CaseValue case_complete_flag(int n);

}  // namespace hamfix::bounds
