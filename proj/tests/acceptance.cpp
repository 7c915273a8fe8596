// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "generators.hpp"
#include "hamfix/bounds.hpp"
#include "hamfix/commands.hpp"
#include "hamfix/errors.hpp"
#include "hamfix/io.hpp"
#include "hamfix/ls_selector.hpp"
#include "hamfix/na_linalg.hpp"
#include "hamfix/quantum_ring.hpp"
#include "hamfix/root_system.hpp"
#include "hamfix/toric.hpp"

using namespace hamfix;

namespace {

/// Collects failed expectations for one criterion.
struct Probe {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  template <class A, class B>
  void equal(const A& got, const B& want, const std::string& what) {
    if (!(got == want)) {
      std::ostringstream s;
      s << what << ": got " << got << ", want " << want;
      failures.push_back(s.str());
    }
  }
};

std::string str(int v) { return std::to_string(v); }

// ---------------------------------------------------------------- 1

void case_table(Probe& t) {
  for (int n = 2; n <= 6; ++n) {
    t.equal(bounds::case_projective(n).closed_form, Integer(n), "CP^" + str(n - 1) + " closed form");
    t.equal(orbit_fixed_point_bound(preset_projective(n)).bound, Integer(n), "CP^" + str(n - 1) + " pipeline");
  }
  for (auto [k, n] : {std::pair{2, 4}, {2, 5}, {3, 7}}) {
    Integer want = std::max(k, n - k) + 1;
    auto c = bounds::case_grassmannian(k, n);
    t.equal(c.closed_form, want, "Gr(" + str(k) + "," + str(n) + ") closed form");
    t.equal(c.ceiling_form, want, "Gr(" + str(k) + "," + str(n) + ") ceiling form");
    t.equal(orbit_fixed_point_bound(preset_grassmannian(k, n)).bound, want, "Gr pipeline");
  }
  for (int n = 3; n <= 6; ++n) {
    auto c = bounds::case_flag_1_n1(n);
    t.equal(c.closed_form, Integer(n - 2), "F(1,n-1,n) closed form n=" + str(n));
    t.equal(c.ceiling_form, Integer(n - 2), "F(1,n-1,n) ceiling form n=" + str(n));
  }
  t.equal(bounds::case_block_flag(2, 2).closed_form, Integer(5), "U(4)/U(2)^2 closed form");
  t.equal(bounds::case_block_flag(2, 2).ceiling_form, Integer(5), "U(4)/U(2)^2 ceiling form");
  for (int n = 3; n <= 5; ++n) {
    t.equal(bounds::case_complete_flag(n).closed_form, Integer(2), "F_" + str(n) + " closed form");
    t.equal(orbit_fixed_point_bound(preset_complete_flag(n)).bound, Integer(2), "F_" + str(n) + " pipeline");
  }
}

void case_table_info() {
  for (int n = 3; n <= 6; ++n)
    std::cout << "INFO  F(1," << n - 1 << "," << n << ") orbit pipeline gives "
              << orbit_fixed_point_bound(preset_flag_1_n1(n)).bound << ", closed form " << n - 2 << "\n";
  std::cout << "INFO  U(4)/U(2)^2 orbit pipeline gives " << orbit_fixed_point_bound(preset_block_flag(2, 2)).bound
            << ", closed form 5\n";
}

// ---------------------------------------------------------------- 2

void blowup(Probe& t) {
  for (int n = 2; n <= 5; ++n) {
    Integer want = (n + 2) / 2;  // ceil((n+1)/2)
    t.equal(bounds::blowup_bound(1, 1, 2, {Integer(1)}, n + 1), want, "blow-up CP^" + str(n));
    t.equal(bounds::blowup_bound(3, 3, 2, {Integer(1)}, n + 1), want, "blow-up CP^" + str(n) + " rescaled");
  }
}

// ---------------------------------------------------------------- 3

/// Minimal positive Chern number on the lattice spanned by the effective
/// generators, by gcd of their pairings.
Integer chern_gcd(const ToricSpec& s, const LatticeData& d) {
  Integer g = 0;
  for (const auto& xi : d.effective) {
    Integer c = chern_pairing(s, xi);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  return g;
}

void toric(Probe& t) {
  for (int n = 1; n <= 5; ++n)
    for (Rational tau : {Rational(1), make_rational(5, 2)}) {
      ToricSpec s = toric_cp(n, tau);
      LatticeData d = analyze(s);
      t.expect(fano_test(s, d), "CP^" + str(n) + " Fano");
      t.equal(givental_bound(s, d).bound, Integer(n + 1), "toric CP^" + str(n));
    }
  ToricSpec pp = toric_cp1xcp1(2, 2);
  t.equal(givental_bound(pp, analyze(pp)).bound, Integer(2), "P1 x P1 tau=(2,2)");
  std::vector<ToricSpec> monotone{toric_cp(2), toric_cp(3), toric_cp1xcp1(1, 1), toric_cp1xcp1(3, 3),
                                  toric_product({2, 2}, {Rational(3), Rational(3)}),
                                  toric_product({1, 2}, {Rational(2), Rational(3)}),
                                  toric_hirzebruch(1, {Rational(3), Rational(2)})};
  for (const auto& s : monotone) {
    LatticeData d = analyze(s);
    t.expect(is_monotone(s, d), "monotone input");
    t.equal(givental_bound(s, d).bound, chern_gcd(s, d), "monotone bound = N");
  }
}

// ---------------------------------------------------------------- 4

void rings(Probe& t) {
  std::vector<RingPtr> all;
  for (int n = 1; n <= 4; ++n) all.push_back(qh_projective(n, n + 1));
  all.push_back(qh_grassmannian(2, 4, 4));
  all.push_back(qh_grassmannian(2, 5, 5));
  for (const auto& r : all) {
    auto fail = check_associativity(*r);
    t.expect(!fail, "associativity: " + fail.value_or(""));
    // independent triple loop over basis elements
    for (std::size_t a = 0; a < r->dim(); ++a)
      for (std::size_t b = 0; b < r->dim(); ++b)
        for (std::size_t c = 0; c < r->dim(); ++c) {
          auto x = GradedClass::basis(r, a), y = GradedClass::basis(r, b), z = GradedClass::basis(r, c);
          if (!(product(product(x, y), z) == product(x, product(y, z)))) {
            t.expect(false, "(ab)c != a(bc) in ring of dim " + str(static_cast<int>(r->dim())));
            a = b = c = r->dim();
          }
        }
  }
  for (int n = 1; n <= 4; ++n) {
    RingPtr r = qh_projective(n, n + 1);
    GradedClass want = GradedClass::basis(r, r->fundamental(), Novikov::monomial(1, n + 1));
    t.expect(power(GradedClass::basis(r, "u^1"), n + 1) == want, "u^(n+1) = T^p [M] for n=" + str(n));
  }
  ToricSpec cp2 = toric_cp(2, 3);
  t.expect(io::ring_to_json(*toric_quantum_ring(cp2, analyze(cp2))) == io::ring_to_json(*qh_projective(2, 3)),
           "toric CP^2 ring equals the projective preset");
}

// ---------------------------------------------------------------- 5

/// In QH(CP^n), u^a1 ... u^ak = T^(q p) u^r with sum a_i = q(n+1) + r.
/// Largest k+1 over multisets of length <= max_len whose T-part is T^g.
int brute_qcl(int n, const Rational& p, const Rational& g, int max_len) {
  int best = 0;
  std::vector<int> a;
  std::function<void(int, int)> rec = [&](int start, int sum) {
    if (!a.empty() && Rational(sum / (n + 1)) * p == g) best = std::max(best, static_cast<int>(a.size()) + 1);
    if (static_cast<int>(a.size()) == max_len) return;
    for (int x = start; x <= n; ++x) {
      a.push_back(x);
      rec(x, sum + x);
      a.pop_back();
    }
  };
  rec(1, 0);
  return best;
}

void cuplength(Probe& t) {
  for (int n = 1; n <= 3; ++n) {
    Rational p(n + 1);
    RingPtr r = qh_projective(n, p);
    int len = 2 * n + 2;
    int q0 = quantum_cuplength(*r, 0, len).lower_bound;
    int qp = quantum_cuplength(*r, p, len).lower_bound;
    t.equal(q0, n + 1, "qcl(0) = classical cuplength, n=" + str(n));
    t.equal(q0, quantum_cuplength(*strip_quantum(*r), 0, len).lower_bound, "qcl(0) on the stripped ring");
    t.equal(qp, 2 * n + 2, "qcl(p), n=" + str(n));
    t.equal(q0, brute_qcl(n, p, 0, len), "qcl(0) brute force");
    t.equal(qp, brute_qcl(n, p, p, len), "qcl(p) brute force");
    t.equal(bounds::bcl_bound(p, {{Rational(0), Integer(q0)}, {p, Integer(qp)}}, 0).bound, Integer(n + 1),
            "deformed bound, n=" + str(n));
  }
}

// ---------------------------------------------------------------- 6

Valuation oracle_ell(const na::FilteredSpace& s, const na::NVector& v) {
  Valuation best;
  for (std::size_t i = 0; i < v.size(); ++i) {
    Valuation here = v[i].valuation();
    if (here.is_neg_infinity()) continue;
    here.value = *here.value + s.levels[i];
    if (best < here) best = here;
  }
  return best;
}

/// L = M ((phi . xi) I - xi phi^T) kills xi.
na::NMatrix killing_matrix(std::mt19937_64& rng, std::size_t rows, const na::NVector& xi) {
  const std::size_t n = xi.size();
  na::NVector phi = gen::nvector(rng, n, 1);
  Novikov dot;
  for (std::size_t i = 0; i < n; ++i) dot += phi[i] * xi[i];
  na::NMatrix p(n, na::NVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p[i][j] = (i == j ? dot : Novikov()) - xi[i] * phi[j];
  na::NMatrix m(rows, na::NVector(n));
  for (auto& row : m)
    for (auto& x : row) x = gen::novikov(rng, 1, -2, 2);
  na::NMatrix l(rows, na::NVector(n));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) l[i][j] += m[i][k] * p[k][j];
  return l;
}

void nonarchimedean(Probe& t) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 10000; ++i) {
    Novikov a = gen::novikov(rng), b = gen::novikov(rng);
    Valuation va = a.valuation(), vb = b.valuation();
    Valuation top = va < vb ? vb : va;
    t.expect((a * b).valuation() == va + vb, "nu(ab) = nu(a) + nu(b)");
    t.expect((a + b).valuation() <= top, "nu(a+b) <= max");
    if (!(va == vb)) t.expect((a + b).valuation() == top, "nu(a+b) = max when nu(a) != nu(b)");
    if (t.failures.size() > 10) return;
  }
  for (int i = 0; i < 1000; ++i) {
    std::size_t n = gen::uniform(rng, 1, 4), m = gen::uniform(rng, 1, 4);
    na::FilteredSpace sv = gen::space(rng, n), sw = gen::space(rng, m);
    na::NVector xi;
    do xi = gen::nvector(rng, n, 1);
    while (na::is_zero(xi));
    na::NMatrix l = killing_matrix(rng, m, xi);
    auto r = na::svd_with_kernel_vector(l, sv, sw, xi);
    bool ok = r.basis_v.size() == n && r.r == na::rank(l) && r.basis_v[r.r] == xi && na::rank(r.basis_v) == n &&
              na::lead_certificate(sv, r.basis_v);
    for (std::size_t k = 0; ok && k < n; ++k) {
      na::NVector img = na::apply(l, r.basis_v[k]);
      ok = k < r.r ? img == r.basis_w[k] : na::is_zero(img);
    }
    if (ok) {
      std::vector<na::NVector> images(r.basis_w.begin(), r.basis_w.begin() + r.r);
      ok = na::lead_certificate(sw, images) && na::sampled_orthogonality(sv, r.basis_v, rng, 20);
      // orthogonality from the definition on one random combination
      na::NVector combo(n);
      Valuation top;
      for (std::size_t k = 0; k < n; ++k) {
        Novikov c = gen::novikov(rng, 1, -2, 2);
        na::NVector part = na::scale(c, r.basis_v[k]);
        combo = na::add(combo, part);
        Valuation e = oracle_ell(sv, part);
        if (top < e) top = e;
      }
      ok = ok && oracle_ell(sv, combo) == top;
    }
    t.expect(ok, "svd postconditions, sample " + str(i));
    if (t.failures.size() > 10) return;
  }
  int done = 0;
  while (done < 200) {
    std::size_t dim = gen::uniform(rng, 1, 4), count = gen::uniform(rng, 1, static_cast<int>(dim));
    na::FilteredSpace s = gen::space(rng, dim);
    std::vector<na::NVector> fam;
    for (std::size_t i = 0; i < count; ++i) fam.push_back(gen::nvector(rng, dim));
    if (na::rank(fam) != count) continue;
    ++done;
    auto first = na::gram_schmidt(s, fam), second = na::gram_schmidt(s, fam);
    t.expect(first.vectors == second.vectors && first.change_of_basis == second.change_of_basis,
             "gram-schmidt is deterministic");
    t.expect(na::lead_certificate(s, first.vectors), "gram-schmidt certificate");
  }
}

// ---------------------------------------------------------------- 7

void roots(Probe& t) {
  std::vector<std::pair<LieType, int>> types;
  for (int r = 1; r <= 6; ++r) types.push_back({LieType::A, r});
  for (int r = 2; r <= 6; ++r) types.push_back({LieType::B, r});
  for (int r = 3; r <= 6; ++r) types.push_back({LieType::C, r});
  for (int r = 4; r <= 6; ++r) types.push_back({LieType::D, r});
  types.push_back({LieType::G2, 2});
  types.push_back({LieType::F4, 4});
  types.push_back({LieType::E6, 6});
  types.push_back({LieType::E7, 7});
  types.push_back({LieType::E8, 8});
  for (auto [type, rank] : types) {
    const std::string name = to_string(type) + str(rank);
    RootSystem rs = build_root_system(type, rank);
    bool closed = true;
    for (const auto& a : rs.roots)
      for (const auto& b : rs.roots)
        if (!rs.find_root(rs.reflect(a, b))) closed = false;
    t.expect(closed, name + " reflection closure");
    qla::QMatrix w0 = longest_element(rs);
    bool flips = true;
    for (auto i : rs.positive) {
      auto img = rs.find_root(qla::apply(w0, rs.roots[i]));
      flips = flips && img && !rs.is_positive(*img);
    }
    t.expect(flips, name + " w0 sends positive roots to negative roots");
    const bool big = type == LieType::E7 || type == LieType::E8;
    auto decs = orthogonal_decompositions(rs, big ? 4 : 32);
    t.expect(!decs.empty(), name + " has a decomposition");
    for (const auto& d : decs) {
      qla::QMatrix prod = qla::identity(rs.ambient);
      bool orth = true;
      for (std::size_t i = 0; i < d.roots.size(); ++i) {
        for (std::size_t j = i + 1; j < d.roots.size(); ++j)
          orth = orth && qla::dot(rs.roots[d.roots[i]], rs.roots[d.roots[j]]) == 0;
        prod = qla::multiply(prod, rs.reflection_matrix(rs.roots[d.roots[i]]));
      }
      t.expect(orth && prod == w0 && verify_decomposition(rs, d, w0), name + " decomposition verified");
    }
  }
  for (int n = 2; n <= 8; ++n) {
    RootSystem rs = build_root_system(LieType::A, n - 1);
    std::set<qla::QVector> nested;
    for (int k = 0; k < n / 2; ++k) {
      qla::QVector v(n, Rational(0));
      v[k] = 1;
      v[n - 1 - k] = -1;
      nested.insert(v);
    }
    bool present = false;
    for (const auto& d : orthogonal_decompositions(rs, 64)) {
      std::set<qla::QVector> got;
      for (auto r : d.roots) got.insert(rs.roots[r]);
      present = present || got == nested;
    }
    t.expect(present, "nested family in A" + str(n - 1));
  }
}

// ---------------------------------------------------------------- 8

/// min over a + d(y), y with coefficients in {0, +-1/2, +-1, +-2}, of the top level.
Rational brute_c_ls(const FilteredComplex& c, const HomologyClass& a) {
  static const std::vector<Rational> coefs{make_rational(-2), make_rational(-1), make_rational(-1, 2), make_rational(0),
                                           make_rational(1, 2), make_rational(1), make_rational(2)};
  std::vector<std::size_t> up;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c.generators[i].degree == a.degree + 1) up.push_back(i);
  std::vector<std::size_t> y(up.size(), 0);
  std::optional<Rational> best;
  while (true) {
    qla::QVector rep = a.cycle;
    for (std::size_t k = 0; k < up.size(); ++k)
      for (std::size_t i = 0; i < c.size(); ++i) rep[i] += coefs[y[k]] * c.boundary[i][up[k]];
    std::optional<Rational> top;
    for (std::size_t i = 0; i < c.size(); ++i)
      if (rep[i] != 0 && (!top || c.generators[i].level > *top)) top = c.generators[i].level;
    if (top && (!best || *top < *best)) best = top;
    std::size_t j = 0;
    while (j < y.size() && ++y[j] == coefs.size()) y[j++] = 0;
    if (j == y.size()) break;
  }
  return best.value_or(Rational(0));
}

void selector(Probe& t) {
  std::mt19937_64 rng(88);
  for (const auto& c : {complex_circle(), complex_circle_two_minima(), complex_sphere(), complex_sphere_cancelling(),
                        complex_torus()}) {
    Rational lo = c.generators[0].level, hi = lo;
    for (const auto& g : c.generators) lo = std::min(lo, g.level), hi = std::max(hi, g.level);
    HomologyClass pt = point_class(c), top = fundamental_class(c);
    t.equal(c_ls(c, pt), lo, "[pt] at the minimum level");
    t.equal(c_ls(c, top), hi, "[X] at the maximum level");
    for (const auto& a : {pt, top}) {
      Rational base = c_ls(c, a);
      t.equal(base, brute_c_ls(c, a), "brute force agreement");
      for (int k = 0; k < 100; ++k) {
        Rational eps = make_rational(gen::uniform(rng, 0, 8), 4);
        std::vector<Rational> levels;
        for (const auto& g : c.generators) levels.push_back(g.level + eps * make_rational(gen::uniform(rng, -4, 4), 4));
        t.expect(abs(c_ls(with_levels(c, levels), a) - base) <= eps, "Lipschitz under perturbation");
      }
    }
  }
  auto torus = complex_torus();
  HomologyClass ab{1, qla::QVector(torus.size(), 0)};
  ab.cycle[torus.index("a")] = 1;
  ab.cycle[torus.index("b")] = 1;
  t.equal(c_ls(torus, ab), brute_c_ls(torus, ab), "torus mixed class brute force");
}

// ---------------------------------------------------------------- 9

void refusals(Probe& t) {
  auto rows = run_selfcheck();
  auto row_ok = [&](const std::string& expected) {
    for (const auto& r : rows)
      if (r.expected == expected && r.pass) return true;
    return false;
  };
  t.expect(row_ok("NotFano"), "selfcheck NotFano refusal");
  t.expect(row_ok("NotMonotone"), "selfcheck NotMonotone refusal");
  t.expect(row_ok("ThetaBelowPeriod"), "selfcheck theta below period refusal");
  bool strict = false;
  for (const auto& r : rows)
    if (r.name.find("strict inequality") != std::string::npos) strict = r.pass && r.actual == "absent";
  t.expect(strict, "selfcheck strict inequality row");
  for (const auto& r : rows) t.expect(!r.counted || r.pass, "selfcheck row: " + r.name);
  try {
    ToricSpec f2 = toric_hirzebruch(2, {Rational(3), Rational(1)});
    givental_bound(f2, analyze(f2));
    t.expect(false, "F2 accepted");
  } catch (const Error& e) {
    t.expect(e.kind() == ErrorKind::NotFano, "F2 refused as NotFano");
  }
  t.expect(!bounds::arnold_predicate(2, 2, 4).has_value(), "gamma = p refused");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Probe&)>>> criteria{
      {"1 case table closed forms", case_table},
      {"2 blow-up bound", blowup},
      {"3 toric bounds", toric},
      {"4 quantum rings", rings},
      {"5 quantum cuplength", cuplength},
      {"6 non-Archimedean linear algebra", nonarchimedean},
      {"7 root systems and decompositions", roots},
      {"8 minmax selector", selector},
      {"9 refusal paths", refusals},
  };
  int failed = 0;
  for (const auto& [name, body] : criteria) {
    Probe t;
    try {
      body(t);
    } catch (const std::exception& e) {
      t.failures.push_back(std::string("exception: ") + e.what());
    }
    std::cout << (t.failures.empty() ? "PASS  " : "FAIL  ") << name << "\n";
    for (std::size_t i = 0; i < t.failures.size() && i < 5; ++i) std::cout << "      " << t.failures[i] << "\n";
    if (!t.failures.empty()) ++failed;
    if (name[0] == '1') case_table_info();
  }
  std::cout << (9 - failed) << "/9 criteria passed\n";
  return failed == 0 ? 0 : 1;
}
