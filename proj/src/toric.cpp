#include "hamfix/toric.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "hamfix/errors.hpp"

namespace hamfix {

namespace {

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == k) {
      f(cur);
      return;
    }
    for (std::size_t i = start; i + (k - cur.size()) <= n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

qla::QMatrix rational_weights(const ToricSpec& spec, const std::vector<std::size_t>& idx) {
  qla::QMatrix m;
  for (auto i : idx) m.push_back(qla::to_rational(spec.weights[i]));
  return m;
}

Rational pair(const qla::QVector& t, const qla::ZVector& xi) {
  Rational s = 0;
  for (std::size_t i = 0; i < t.size(); ++i) s += t[i] * xi[i];
  return s;
}

void validate(const ToricSpec& spec) {
  if (spec.k < 1) fail(ErrorKind::InvalidInput, "toric: k must be >= 1");
  if (spec.n != static_cast<int>(spec.weights.size()))
    fail(ErrorKind::InvalidInput, "toric: n does not match the number of weights");
  if (spec.tau.size() != static_cast<std::size_t>(spec.k))
    fail(ErrorKind::DimensionMismatch, "toric: tau must have k coordinates");
  for (const auto& w : spec.weights)
    if (w.size() != static_cast<std::size_t>(spec.k))
      fail(ErrorKind::DimensionMismatch, "toric: every weight must have k coordinates");
}

}  // namespace

LatticeData analyze(const ToricSpec& spec, const ToricOptions& options) {
  validate(spec);
  const std::size_t k = spec.k, n = spec.n;
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  const qla::QMatrix w_all = rational_weights(spec, all);
  if (qla::rank(w_all) < k) fail(ErrorKind::WeightsDontSpan, "toric: weights do not span");

  // Regular value: tau is not in any cone spanned by fewer than k weights
  // (those cones are lower dimensional) and lies in the cone of all weights.
  if (qla::is_zero(spec.tau)) fail(ErrorKind::NotRegularValue, "toric: tau = 0 is not a regular value");
  for (std::size_t s = 1; s < k; ++s)
    for_each_subset(n, s, [&](const std::vector<std::size_t>& idx) {
      if (qla::in_cone(rational_weights(spec, idx), spec.tau))
        fail(ErrorKind::NotRegularValue, "toric: tau lies on a wall of the chamber decomposition");
    });
  if (!qla::in_cone(w_all, spec.tau)) fail(ErrorKind::NotRegularValue, "toric: tau is not in the image of the moment map");

  LatticeData data;
  // Bases whose cone contains tau: freeness and the chamber inequalities.
  qla::QMatrix inequalities;
  for_each_subset(n, k, [&](const std::vector<std::size_t>& idx) {
    qla::QMatrix b = rational_weights(spec, idx);
    Rational det = qla::determinant(b);
    if (det == 0 || !qla::in_cone(b, spec.tau)) return;
    if (abs(det) != 1) {
      std::string msg = "toric: weight basis {";
      for (std::size_t t = 0; t < idx.size(); ++t) msg += (t ? "," : "") + std::to_string(idx[t] + 1);
      msg += "} around tau has determinant " + to_string(det) + "; the action is not free";
      if (!options.allow_nonfree) fail(ErrorKind::NonFreeAction, msg);
      data.warnings.push_back(msg);
    }
    // rows of inverse(b^T) are the dual vectors g_i with <g_i, w_j> = delta_ij,
    // so t lies in cone(b) iff <g_i, t> >= 0 for all i
    auto dual = qla::inverse(qla::transpose(b));
    for (auto& g : *dual) inequalities.push_back(std::move(g));
  });
  data.chamber_rays = qla::cone_rays(inequalities, k);

  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < n; ++i)
      if (i != j) rest.push_back(i);
    if (!qla::in_cone(rational_weights(spec, rest), spec.tau)) data.removed.push_back(j);
  }
  std::vector<qla::ZVector> constraints;
  for (auto j : data.removed) constraints.push_back(spec.weights[j]);
  data.delta_basis = qla::integer_kernel(constraints, k);
  if (data.delta_basis.empty()) fail(ErrorKind::InvalidInput, "toric: second homology is trivial");

  // Effective cone inside Delta(tau): y with sum_j y_j <t_r, b_j> >= 0.
  const std::size_t d = data.delta_basis.size();
  qla::QMatrix eff_ineq;
  for (const auto& t : data.chamber_rays) {
    qla::QVector row;
    for (const auto& b : data.delta_basis) row.push_back(pair(qla::to_rational(t), b));
    eff_ineq.push_back(row);
  }
  if (qla::rank(eff_ineq) < d) fail(ErrorKind::InvalidInput, "toric: effective cone is not pointed");
  std::set<qla::ZVector> eff;
  for (const auto& y : qla::cone_rays(eff_ineq, d)) {
    qla::QVector xi(k, 0);
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t i = 0; i < k; ++i) xi[i] += Rational(y[j]) * Rational(data.delta_basis[j][i]);
    eff.insert(qla::primitive(xi));
  }
  data.effective.assign(eff.begin(), eff.end());
  return data;
}

qla::ZVector d_map(const ToricSpec& spec, const qla::ZVector& xi) {
  qla::ZVector d;
  for (const auto& w : spec.weights) {
    Integer s = 0;
    for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * xi[i];
    d.push_back(s);
  }
  return d;
}

qla::ZVector first_chern(const ToricSpec& spec) {
  qla::ZVector c(spec.k, 0);
  for (const auto& w : spec.weights)
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += w[i];
  return c;
}

Rational area(const ToricSpec& spec, const qla::ZVector& xi) { return pair(spec.tau, xi); }

Integer chern_pairing(const ToricSpec& spec, const qla::ZVector& xi) {
  auto c = first_chern(spec);
  Integer s = 0;
  for (std::size_t i = 0; i < c.size(); ++i) s += c[i] * xi[i];
  return s;
}

bool fano_test(const ToricSpec& spec, const LatticeData& data) {
  for (const auto& xi : data.effective)
    if (chern_pairing(spec, xi) <= 0) return false;
  return true;
}

Rational minimal_period(const ToricSpec& spec, const LatticeData& data) {
  Rational g = 0;
  for (const auto& b : data.delta_basis) g = gcd(g, area(spec, b));
  if (g == 0) fail(ErrorKind::IrrationalPeriodStructure, "toric: every sphere class has zero area");
  return g;
}

Integer minimal_chern_number(const ToricSpec& spec, const LatticeData& data) {
  Integer g = 0;
  for (const auto& b : data.delta_basis) {
    Integer c = chern_pairing(spec, b);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  return g;
}

bool is_monotone(const ToricSpec& spec, const LatticeData& data) {
  std::optional<Rational> ratio;
  for (const auto& xi : data.effective) {
    Rational r = Rational(chern_pairing(spec, xi)) / area(spec, xi);
    if (ratio && *ratio != r) return false;
    ratio = r;
  }
  return ratio && *ratio > 0;
}

GiventalReport givental_bound(const ToricSpec& spec, const LatticeData& data) {
  if (!fano_test(spec, data)) fail(ErrorKind::NotFano, "toric manifold is not Fano");
  GiventalReport rep;
  rep.period = minimal_period(spec, data);
  bool first = true;
  for (const auto& xi : data.effective) {
    Rational a = area(spec, xi);
    if (a <= 0) fail(ErrorKind::NotRegularValue, "toric: effective class with nonpositive area");
    Rational r = Rational(chern_pairing(spec, xi)) / a;
    if (first || r > rep.max_ratio) {
      rep.max_ratio = r;
      rep.argmax = xi;
      first = false;
    }
  }
  rep.bound = ceil(rep.period * rep.max_ratio);
  return rep;
}

std::vector<QuantumSRRelation> quantum_sr_relations(const ToricSpec& spec, const LatticeData& data) {
  if (!fano_test(spec, data)) fail(ErrorKind::NotFano, "toric manifold is not Fano");
  std::vector<QuantumSRRelation> out;
  for (const auto& xi : data.effective) {
    QuantumSRRelation r;
    r.xi = xi;
    r.d = d_map(spec, xi);
    for (const auto& di : r.d) {
      r.d_plus.push_back(di > 0 ? di : Integer(0));
      r.d_minus.push_back(di < 0 ? Integer(-di) : Integer(0));
    }
    r.area = area(spec, xi);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<qla::ZVector> divisor_classes(const ToricSpec& spec, const LatticeData& data) {
  std::vector<qla::ZVector> out;
  for (const auto& w : spec.weights) {
    qla::ZVector c;
    for (const auto& b : data.delta_basis) {
      Integer s = 0;
      for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * b[i];
      c.push_back(s);
    }
    out.push_back(std::move(c));
  }
  return out;
}

RingPtr toric_quantum_ring(const ToricSpec& spec, const LatticeData& data) {
  const std::size_t k = spec.k;
  std::vector<int> mult(k, 0);
  for (const auto& w : spec.weights) {
    int hit = -1;
    for (std::size_t i = 0; i < k; ++i) {
      if (w[i] == 0) continue;
      if (w[i] != 1 || hit >= 0) fail(ErrorKind::UnsupportedFamily, "toric ring: only products of projective spaces are supported");
      hit = static_cast<int>(i);
    }
    if (hit < 0) fail(ErrorKind::UnsupportedFamily, "toric ring: zero weight");
    ++mult[hit];
  }
  for (int m : mult)
    if (m < 2) fail(ErrorKind::UnsupportedFamily, "toric ring: every factor needs at least two weights");
  if (!data.removed.empty()) fail(ErrorKind::UnsupportedFamily, "toric ring: degenerate chamber");
  RingPtr ring;
  for (std::size_t i = 0; i < k; ++i) {
    RingPtr factor = qh_projective(mult[i] - 1, spec.tau[i]);
    ring = ring ? tensor_product(*ring, *factor) : factor;
  }
  return ring;
}

ToricSpec toric_cp(int n, const Rational& tau) {
  if (n < 1) fail(ErrorKind::InvalidInput, "CP^n needs n >= 1");
  ToricSpec s;
  s.k = 1;
  s.n = n + 1;
  s.weights.assign(n + 1, qla::ZVector{1});
  s.tau = {tau};
  return s;
}

ToricSpec toric_product(const std::vector<int>& dims, const qla::QVector& taus) {
  if (dims.empty() || dims.size() != taus.size())
    fail(ErrorKind::InvalidInput, "product preset needs one level per factor");
  ToricSpec s;
  s.k = static_cast<int>(dims.size());
  for (std::size_t f = 0; f < dims.size(); ++f) {
    if (dims[f] < 1) fail(ErrorKind::InvalidInput, "product preset: factor dimension must be >= 1");
    for (int t = 0; t <= dims[f]; ++t) {
      qla::ZVector w(dims.size(), 0);
      w[f] = 1;
      s.weights.push_back(w);
    }
  }
  s.n = static_cast<int>(s.weights.size());
  s.tau = taus;
  return s;
}

ToricSpec toric_cp1xcp1(const Rational& a, const Rational& b) { return toric_product({1, 1}, {a, b}); }

ToricSpec toric_hirzebruch(int a, const qla::QVector& tau) {
  if (a < 0) fail(ErrorKind::InvalidInput, "Hirzebruch preset needs a >= 0");
  ToricSpec s;
  s.k = 2;
  s.n = 4;
  s.weights = {{1, 0}, {1, 0}, {a, 1}, {0, 1}};
  s.tau = tau;
  return s;
}

ToricSpec toric_hirzebruch(int a) { return toric_hirzebruch(a, {Rational(a + 1), Rational(1)}); }

}  // namespace hamfix
