#include <functional>

#include "hamfix/bounds.hpp"
#include "hamfix/commands.hpp"
#include "hamfix/errors.hpp"

namespace hamfix {

namespace {

struct Table {
  std::vector<SelfcheckRow> rows;

  void value(const std::string& name, const Integer& expected, const std::function<Integer()>& f, bool counted = true) {
    SelfcheckRow r{name, to_string(expected), "", false, counted};
    try {
      Integer got = f();
      r.actual = to_string(got);
      r.pass = got == expected;
    } catch (const Error& e) {
      r.actual = std::string(kind_name(e.kind())) + ": " + e.what();
    }
    rows.push_back(r);
  }

  void refusal(const std::string& name, ErrorKind expected, const std::function<void()>& f) {
    SelfcheckRow r{name, std::string(kind_name(expected)), "no error", false, true};
    try {
      f();
    } catch (const Error& e) {
      r.actual = std::string(kind_name(e.kind()));
      r.pass = e.kind() == expected;
    }
    rows.push_back(r);
  }

  void predicate(const std::string& name, const std::string& expected, const std::function<std::string()>& f) {
    SelfcheckRow r{name, expected, "", false, true};
    try {
      r.actual = f();
      r.pass = r.actual == expected;
    } catch (const Error& e) {
      r.actual = std::string(kind_name(e.kind())) + ": " + e.what();
    }
    rows.push_back(r);
  }
};

std::string s(int v) { return std::to_string(v); }

Integer orbit_bound(const OrbitSpec& o) { return orbit_fixed_point_bound(o).bound; }

}  // namespace

std::vector<SelfcheckRow> run_selfcheck() {
  Table t;

  for (int n = 2; n <= 6; ++n) {
    t.value("case1 CP^" + s(n - 1) + " closed form", n, [&] { return bounds::case_projective(n).closed_form; });
    t.value("case1 CP^" + s(n - 1) + " orbit pipeline", n, [&] { return orbit_bound(preset_projective(n)); });
  }
  for (auto [k, n] : {std::pair{2, 4}, {2, 5}, {3, 7}}) {
    const std::string g = "Gr(" + s(k) + "," + s(n) + ")";
    const int want = std::max(k, n - k) + 1;
    t.value("case2 " + g + " ceiling form", want, [&] { return bounds::case_grassmannian(k, n).ceiling_form; });
    t.value("case2 " + g + " simplified", want, [&] { return bounds::case_grassmannian(k, n).closed_form; });
    t.value("case2 " + g + " orbit pipeline", want, [&] { return orbit_bound(preset_grassmannian(k, n)); });
  }
  t.value("case2 Gr(2,4) p=4 theta=8 cupl=5", 3, [] { return bounds::main_bound(4, 8, 5); });
  for (int n = 3; n <= 6; ++n) {
    const std::string f = "F(1," + s(n - 1) + "," + s(n) + ")";
    t.value("case3 " + f + " ceiling form", n - 2, [&] { return bounds::case_flag_1_n1(n).ceiling_form; });
    t.value("case3 " + f + " simplified", n - 2, [&] { return bounds::case_flag_1_n1(n).closed_form; });
    // the orbit pipeline uses cuplength = complex dimension + 1 = 2n - 2
    t.value("case3 " + f + " orbit pipeline", n - 1, [&] { return orbit_bound(preset_flag_1_n1(n)); }, false);
  }
  t.value("case4 U(4)/U(2)^2 ceiling form", 5, [] { return bounds::case_block_flag(2, 2).ceiling_form; });
  t.value("case4 U(4)/U(2)^2 simplified", 5, [] { return bounds::case_block_flag(2, 2).closed_form; });
  t.value("case4 U(4)/U(2)^2 orbit pipeline", 3, [] { return orbit_bound(preset_block_flag(2, 2)); }, false);
  for (int n = 3; n <= 5; ++n) {
    t.value("case5 F_" + s(n) + " ceiling form", 2, [&] { return bounds::case_complete_flag(n).ceiling_form; });
    t.value("case5 F_" + s(n) + " orbit pipeline", 2, [&] { return orbit_bound(preset_complete_flag(n)); });
  }

  for (int k : {4, 5}) {
    t.value("theta = p gives cuplength " + s(k), k, [&] { return bounds::main_bound(3, 3, k); });
  }
  for (auto [k, n] : {std::pair{2, 4}, {2, 5}, {3, 7}}) {
    const int dimc = k * (n - k);
    t.value("Chern-type Gr(" + s(k) + "," + s(n) + ")", n,
            [&] { return bounds::schwarz_type_bound(n, 2 * dimc, 2 * dimc - 2).bound; });
  }
  for (int n = 3; n <= 5; ++n) {
    const int dimc = n * (n - 1) / 2;
    t.value("Chern-type F_" + s(n), 2, [&] { return bounds::schwarz_type_bound(2, 2 * dimc, 2 * dimc - 2).bound; });
  }

  for (int n = 2; n <= 5; ++n) {
    t.value("blow-up CP^" + s(n) + " k=1 m=2", (n + 2) / 2,
            [&] { return bounds::blowup_bound(1, 1, 2, {Integer(1)}, n + 1); });
  }

  for (int n = 1; n <= 4; ++n) {
    t.value("toric CP^" + s(n), n + 1, [&] {
      ToricSpec sp = toric_cp(n);
      return givental_bound(sp, analyze(sp)).bound;
    });
  }
  t.value("toric CP^1 x CP^1 tau=(2,2)", 2, [] {
    ToricSpec sp = toric_cp1xcp1(2, 2);
    return givental_bound(sp, analyze(sp)).bound;
  });
  t.predicate("toric monotone bound = N", "ok", [] {
    for (const ToricSpec& sp : {toric_cp(2), toric_cp(3), toric_cp1xcp1(1, 1), toric_hirzebruch(1, {3, 2})}) {
      LatticeData d = analyze(sp);
      if (!is_monotone(sp, d)) continue;
      if (givental_bound(sp, d).bound != minimal_chern_number(sp, d)) return std::string("mismatch");
    }
    return std::string("ok");
  });

  for (int n = 1; n <= 3; ++n) {
    t.predicate("u^" + s(n + 1) + " = T^p[M] in QH(CP^" + s(n) + ")", "T^" + s(n + 1) + "*u^0", [&] {
      RingPtr r = qh_projective(n, n + 1);
      return to_string(power(GradedClass::basis(r, "u^1"), n + 1));
    });
    t.value("qcl(p) of CP^" + s(n) + " into the deformed bound", n + 1, [&] {
      RingPtr r = qh_projective(n, n + 1);
      int q = quantum_cuplength(*r, n + 1, 2 * n + 2).lower_bound;
      return bounds::bcl_bound(n + 1, {{Rational(n + 1), Integer(q)}}, 0).bound;
    });
  }

  t.refusal("refuse: Hirzebruch F2 is not Fano", ErrorKind::NotFano, [] {
    ToricSpec sp = toric_hirzebruch(2, {3, 1});
    givental_bound(sp, analyze(sp));
  });
  t.refusal("refuse: U(3) orbit lambda=(3,1,0) not monotone", ErrorKind::NotMonotone,
            [] { orbit_fixed_point_bound(unitary_orbit({3, 1, 0})); });
  t.refusal("refuse: theta below period", ErrorKind::ThetaBelowPeriod, [] { bounds::main_bound(2, 1, 3); });
  t.refusal("refuse: non-free weights", ErrorKind::NonFreeAction, [] {
    ToricSpec sp{1, 2, {{Integer(1)}, {Integer(2)}}, {Rational(1)}};
    analyze(sp);
  });
  t.predicate("refuse: gamma = p (strict inequality)", "absent",
              [] { return bounds::arnold_predicate(2, 2, 4) ? std::string("present") : std::string("absent"); });
  t.predicate("accept: gamma < p", "4",
              [] { auto r = bounds::arnold_predicate(2, Rational(3, 2), 4); return r ? to_string(*r) : std::string("absent"); });

  return t.rows;
}

}  // namespace hamfix
