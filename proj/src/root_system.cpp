#include "hamfix/root_system.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "hamfix/errors.hpp"

namespace hamfix {

LieType parse_lie_type(const std::string& name) {
  static const std::map<std::string, LieType> names{
      {"A", LieType::A},   {"B", LieType::B},   {"C", LieType::C},   {"D", LieType::D},  {"E6", LieType::E6},
      {"E7", LieType::E7}, {"E8", LieType::E8}, {"F4", LieType::F4}, {"G2", LieType::G2}};
  auto it = names.find(name);
  if (it == names.end()) fail(ErrorKind::InvalidType, "unknown Lie type '" + name + "'");
  return it->second;
}

std::string to_string(LieType t) {
  switch (t) {
    case LieType::A: return "A";
    case LieType::B: return "B";
    case LieType::C: return "C";
    case LieType::D: return "D";
    case LieType::E6: return "E6";
    case LieType::E7: return "E7";
    case LieType::E8: return "E8";
    case LieType::F4: return "F4";
    case LieType::G2: return "G2";
  }
  return "?";
}

Rational RootSystem::coroot_pairing(const qla::QVector& lambda, const qla::QVector& alpha) const {
  return 2 * qla::dot(lambda, alpha) / qla::dot(alpha, alpha);
}

qla::QVector RootSystem::reflect(const qla::QVector& alpha, const qla::QVector& x) const {
  return qla::sub(x, qla::scale(coroot_pairing(x, alpha), alpha));
}

qla::QMatrix RootSystem::reflection_matrix(const qla::QVector& alpha) const {
  qla::QMatrix m = qla::identity(ambient);
  Rational aa = qla::dot(alpha, alpha);
  for (std::size_t i = 0; i < ambient; ++i)
    for (std::size_t j = 0; j < ambient; ++j) m[i][j] -= 2 * alpha[i] * alpha[j] / aa;
  return m;
}

std::optional<std::size_t> RootSystem::find_root(const qla::QVector& v) const {
  auto it = lookup.find(v);
  if (it == lookup.end()) return std::nullopt;
  return it->second;
}

bool RootSystem::is_positive(std::size_t root_index) const {
  return std::binary_search(positive.begin(), positive.end(), root_index);
}

namespace {

qla::QVector unit(std::size_t dim, std::size_t i, const Rational& s = 1) {
  qla::QVector v(dim, 0);
  v[i] = s;
  return v;
}

void add_pm_pairs(std::vector<qla::QVector>& roots, std::size_t dim, std::size_t upto) {
  for (std::size_t i = 0; i < upto; ++i)
    for (std::size_t j = i + 1; j < upto; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          qla::QVector v(dim, 0);
          v[i] = si;
          v[j] = sj;
          roots.push_back(v);
        }
}

std::vector<qla::QVector> e8_roots() {
  std::vector<qla::QVector> roots;
  add_pm_pairs(roots, 8, 8);
  for (int mask = 0; mask < 256; ++mask) {
    if (__builtin_popcount(mask) % 2) continue;
    qla::QVector v(8);
    for (int i = 0; i < 8; ++i) v[i] = Rational(mask >> i & 1 ? -1 : 1, 2);
    roots.push_back(v);
  }
  return roots;
}

}  // namespace

RootSystem build_root_system(LieType type, int rank) {
  RootSystem rs;
  rs.type = type;
  std::vector<qla::QVector> roots;
  qla::QVector f;  // generic functional defining positivity
  auto need = [&](bool ok) {
    if (!ok) fail(ErrorKind::InvalidType, "invalid rank " + std::to_string(rank) + " for type " + to_string(type));
  };
  switch (type) {
    case LieType::A: {
      need(rank >= 1);
      rs.ambient = rank + 1;
      for (std::size_t i = 0; i < rs.ambient; ++i)
        for (std::size_t j = 0; j < rs.ambient; ++j)
          if (i != j) roots.push_back(qla::sub(unit(rs.ambient, i), unit(rs.ambient, j)));
      for (std::size_t i = 0; i < rs.ambient; ++i) f.push_back(Rational(long(rs.ambient - i)));
      break;
    }
    case LieType::B:
    case LieType::C:
    case LieType::D: {
      need(type == LieType::D ? rank >= 3 : rank >= 2);
      rs.ambient = rank;
      add_pm_pairs(roots, rs.ambient, rs.ambient);
      if (type != LieType::D)
        for (std::size_t i = 0; i < rs.ambient; ++i)
          for (int s : {1, -1}) roots.push_back(unit(rs.ambient, i, type == LieType::B ? s : 2 * s));
      for (std::size_t i = 0; i < rs.ambient; ++i) f.push_back(Rational(long(rs.ambient - i)));
      break;
    }
    case LieType::G2: {
      need(rank == 0 || rank == 2);
      rank = 2;
      rs.ambient = 3;
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
          if (i == j) continue;
          roots.push_back(qla::sub(unit(3, i), unit(3, j)));
        }
      for (std::size_t i = 0; i < 3; ++i)
        for (int s : {1, -1}) {
          qla::QVector v(3, Rational(-s));
          v[i] = 2 * s;
          roots.push_back(v);
        }
      f = {1, 0, 3};
      break;
    }
    case LieType::F4: {
      need(rank == 0 || rank == 4);
      rank = 4;
      rs.ambient = 4;
      add_pm_pairs(roots, 4, 4);
      for (std::size_t i = 0; i < 4; ++i)
        for (int s : {1, -1}) roots.push_back(unit(4, i, s));
      for (int mask = 0; mask < 16; ++mask) {
        qla::QVector v(4);
        for (int i = 0; i < 4; ++i) v[i] = Rational(mask >> i & 1 ? -1 : 1, 2);
        roots.push_back(v);
      }
      f = {8, 3, 2, 1};
      break;
    }
    case LieType::E6:
    case LieType::E7:
    case LieType::E8: {
      int r = type == LieType::E6 ? 6 : type == LieType::E7 ? 7 : 8;
      need(rank == 0 || rank == r);
      rank = r;
      rs.ambient = 8;
      // E7 and E6 are the centralizers of A1 = <e7+e8> and A2 = <e7+e8, e6+e8>.
      qla::QVector a = qla::add(unit(8, 6), unit(8, 7)), b = qla::add(unit(8, 5), unit(8, 7));
      for (auto& v : e8_roots()) {
        if (r <= 7 && qla::dot(v, a) != 0) continue;
        if (r == 6 && qla::dot(v, b) != 0) continue;
        roots.push_back(v);
      }
      f = {0, 1, 2, 3, 4, 5, 6, 23};
      break;
    }
  }
  rs.rank = rank;
  std::sort(roots.begin(), roots.end());
  rs.roots = std::move(roots);
  for (std::size_t i = 0; i < rs.roots.size(); ++i) {
    rs.lookup.emplace(rs.roots[i], i);
    Rational v = qla::dot(f, rs.roots[i]);
    if (v == 0) fail(ErrorKind::InvalidType, "internal: positivity functional vanishes on a root");
    if (v > 0) rs.positive.push_back(i);
  }
  std::set<std::size_t> decomposable;
  for (auto i : rs.positive)
    for (auto j : rs.positive) {
      if (j < i) continue;
      if (auto s = rs.find_root(qla::add(rs.roots[i], rs.roots[j]))) decomposable.insert(*s);
    }
  for (auto i : rs.positive)
    if (!decomposable.count(i)) rs.simple.push_back(i);
  if (static_cast<int>(rs.simple.size()) != rank)
    fail(ErrorKind::InvalidType, "internal: wrong number of simple roots");
  return rs;
}

qla::QMatrix longest_element(const RootSystem& rs) {
  qla::QVector rho(rs.ambient, 0);
  for (auto i : rs.positive) rho = qla::add(rho, rs.roots[i]);
  qla::QVector y = qla::scale(Rational(-1), rho);
  qla::QMatrix w = qla::identity(rs.ambient);
  for (bool moved = true; moved;) {
    moved = false;
    for (auto s : rs.simple) {
      if (qla::dot(y, rs.roots[s]) < 0) {
        y = rs.reflect(rs.roots[s], y);
        w = qla::multiply(rs.reflection_matrix(rs.roots[s]), w);
        moved = true;
        break;
      }
    }
  }
  return w;
}

bool verify_decomposition(const RootSystem& rs, const OrthoDecomposition& dec, const qla::QMatrix& w0) {
  qla::QMatrix prod = qla::identity(rs.ambient);
  for (std::size_t a = 0; a < dec.roots.size(); ++a) {
    if (!rs.is_positive(dec.roots[a])) return false;
    for (std::size_t b = a + 1; b < dec.roots.size(); ++b)
      if (qla::dot(rs.roots[dec.roots[a]], rs.roots[dec.roots[b]]) != 0) return false;
    prod = qla::multiply(prod, rs.reflection_matrix(rs.roots[dec.roots[a]]));
  }
  return prod == w0;
}

namespace {

Rational theta_of(const RootSystem& rs, const qla::QVector& lambda, const std::vector<std::size_t>& roots) {
  Rational t = 0;
  for (auto i : roots) t += abs(rs.coroot_pairing(lambda, rs.roots[i]));
  return t;
}

}  // namespace

std::vector<OrthoDecomposition> orthogonal_decompositions(const RootSystem& rs, std::size_t limit,
                                                          const qla::QVector& lambda) {
  if (limit < 1) fail(ErrorKind::InvalidInput, "decomposition limit must be >= 1");
  const qla::QMatrix w0 = longest_element(rs);
  qla::QMatrix w0_plus = w0;
  for (std::size_t i = 0; i < rs.ambient; ++i) w0_plus[i][i] += 1;
  const std::size_t need = qla::kernel(w0_plus, rs.ambient).size();

  std::vector<std::size_t> cand;
  for (auto i : rs.positive)
    if (qla::apply(w0, rs.roots[i]) == qla::scale(Rational(-1), rs.roots[i])) cand.push_back(i);
  if (!lambda.empty()) {
    std::stable_sort(cand.begin(), cand.end(), [&](std::size_t a, std::size_t b) {
      return abs(rs.coroot_pairing(lambda, rs.roots[a])) < abs(rs.coroot_pairing(lambda, rs.roots[b]));
    });
  }

  std::vector<OrthoDecomposition> found;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (found.size() >= limit) return;
    if (cur.size() == need) {
      OrthoDecomposition d{cur};
      std::sort(d.roots.begin(), d.roots.end());
      if (verify_decomposition(rs, d, w0)) found.push_back(std::move(d));
      return;
    }
    for (std::size_t t = start; t < cand.size(); ++t) {
      if (cand.size() - t < need - cur.size()) return;
      const auto& r = rs.roots[cand[t]];
      bool ok = true;
      for (auto c : cur)
        if (qla::dot(rs.roots[c], r) != 0) {
          ok = false;
          break;
        }
      if (!ok) continue;
      cur.push_back(cand[t]);
      rec(t + 1);
      cur.pop_back();
      if (found.size() >= limit) return;
    }
  };
  rec(0);
  if (found.empty()) fail(ErrorKind::NoneFound, "no orthogonal decomposition of w0 found");
  std::sort(found.begin(), found.end(), [&](const OrthoDecomposition& a, const OrthoDecomposition& b) {
    if (!lambda.empty()) {
      Rational ta = theta_of(rs, lambda, a.roots), tb = theta_of(rs, lambda, b.roots);
      if (ta != tb) return ta < tb;
    }
    return a.roots < b.roots;
  });
  return found;
}

qla::QVector dominant(const RootSystem& rs, const qla::QVector& lambda) {
  qla::QVector y = lambda;
  for (bool moved = true; moved;) {
    moved = false;
    for (auto s : rs.simple)
      if (qla::dot(y, rs.roots[s]) < 0) {
        y = rs.reflect(rs.roots[s], y);
        moved = true;
        break;
      }
  }
  return y;
}

Rational theta_upper_bound(const OrbitSpec& orbit, const OrthoDecomposition& dec) {
  return theta_of(orbit.rs, orbit.lambda, dec.roots);
}

namespace {

void check_orbit(const OrbitSpec& orbit) {
  if (orbit.lambda.size() != orbit.rs.ambient)
    fail(ErrorKind::DimensionMismatch, "lambda has " + std::to_string(orbit.lambda.size()) +
                                           " coordinates, expected " + std::to_string(orbit.rs.ambient));
  if (qla::is_zero(orbit.lambda)) fail(ErrorKind::InvalidInput, "lambda must be nonzero");
}

}  // namespace

PeriodReport symplectic_period(const OrbitSpec& orbit) {
  check_orbit(orbit);
  PeriodReport rep;
  bool any = false;
  for (auto s : orbit.rs.simple) {
    Rational v = abs(orbit.rs.coroot_pairing(orbit.lambda, orbit.rs.roots[s]));
    if (v == 0) continue;
    rep.period = gcd(rep.period, v);
    if (!any || v < rep.single_root_min) rep.single_root_min = v;
    any = true;
  }
  if (!any) fail(ErrorKind::DegenerateOrbit, "every simple coroot pairs to zero with lambda");
  rep.formulas_differ = rep.period != rep.single_root_min;
  return rep;
}

int orbit_cuplength(const OrbitSpec& orbit) {
  check_orbit(orbit);
  int count = 0;
  for (auto i : orbit.rs.positive)
    if (orbit.rs.coroot_pairing(orbit.lambda, orbit.rs.roots[i]) != 0) ++count;
  return count + 1;
}

std::optional<Rational> monotone_check(const OrbitSpec& orbit) {
  check_orbit(orbit);
  const RootSystem& rs = orbit.rs;
  qla::QVector weight(rs.ambient, 0);
  // roots positive on lambda, so lambda need not be dominant
  for (const auto& a : rs.roots)
    if (rs.coroot_pairing(orbit.lambda, a) > 0) weight = qla::add(weight, a);
  if (qla::is_zero(weight)) return std::nullopt;
  // orthogonal projection of lambda onto the span of the roots
  qla::QMatrix gram;
  qla::QVector rhs;
  for (auto a : rs.simple) {
    qla::QVector row;
    for (auto b : rs.simple) row.push_back(qla::dot(rs.roots[a], rs.roots[b]));
    gram.push_back(row);
    rhs.push_back(qla::dot(orbit.lambda, rs.roots[a]));
  }
  auto c = qla::solve(gram, rhs, rs.simple.size());
  qla::QVector proj(rs.ambient, 0);
  for (std::size_t i = 0; i < rs.simple.size(); ++i) proj = qla::add(proj, qla::scale((*c)[i], rs.roots[rs.simple[i]]));
  std::size_t j = 0;
  while (weight[j] == 0) ++j;
  Rational kappa = proj[j] / weight[j];
  if (kappa <= 0 || qla::scale(kappa, weight) != proj) return std::nullopt;
  return kappa;
}

OrbitReport orbit_fixed_point_bound(const OrbitSpec& input, std::size_t search_limit) {
  check_orbit(input);
  OrbitSpec orbit{input.rs, dominant(input.rs, input.lambda)};
  OrbitReport rep;
  rep.lambda = orbit.lambda;
  rep.period = symplectic_period(orbit);
  rep.cuplength = orbit_cuplength(orbit);
  auto kappa = monotone_check(orbit);
  if (!kappa) fail(ErrorKind::NotMonotone, "orbit is not monotone; the bound requires monotonicity");
  rep.kappa = *kappa;
  rep.decompositions = orthogonal_decompositions(orbit.rs, search_limit, orbit.lambda);
  bool first = true;
  for (std::size_t i = 0; i < rep.decompositions.size(); ++i) {
    Rational theta = theta_upper_bound(orbit, rep.decompositions[i]);
    rep.thetas.push_back(theta);
    if (theta == 0) fail(ErrorKind::DegenerateOrbit, "decomposition with zero theta");
    Integer b = ceil(rep.period.period * rep.cuplength / theta);
    if (first || b > rep.bound) {
      rep.bound = b;
      rep.best = i;
      first = false;
    }
  }
  return rep;
}

qla::QVector partial_flag_lambda(const std::vector<int>& dims, int n) {
  std::vector<int> ns{0};
  for (int d : dims) {
    if (d <= ns.back() || d >= n) fail(ErrorKind::InvalidShape, "flag dimensions must increase strictly inside (0, n)");
    ns.push_back(d);
  }
  ns.push_back(n);
  qla::QVector lambda;
  for (std::size_t i = 1; i < ns.size(); ++i) {
    int value = n - ns[i - 1] - ns[i];
    for (int t = ns[i - 1]; t < ns[i]; ++t) lambda.push_back(Rational(value));
  }
  return lambda;
}

OrbitSpec unitary_orbit(const qla::QVector& lambda) {
  if (lambda.size() < 2) fail(ErrorKind::InvalidShape, "U(n) orbit needs n >= 2");
  return {build_root_system(LieType::A, static_cast<int>(lambda.size()) - 1), lambda};
}

OrbitSpec preset_partial_flag(const std::vector<int>& dims, int n) {
  return unitary_orbit(partial_flag_lambda(dims, n));
}

OrbitSpec preset_projective(int n) {
  if (n < 2) fail(ErrorKind::InvalidShape, "projective preset needs n >= 2");
  return preset_partial_flag({1}, n);
}

OrbitSpec preset_grassmannian(int k, int n) {
  if (k < 1 || k >= n) fail(ErrorKind::InvalidShape, "Grassmannian needs 1 <= k < n");
  return preset_partial_flag({k}, n);
}

OrbitSpec preset_flag_1_n1(int n) {
  if (n < 3) fail(ErrorKind::InvalidShape, "F(1, n-1, n) needs n >= 3");
  return preset_partial_flag({1, n - 1}, n);
}

OrbitSpec preset_block_flag(int k, int m) {
  if (k < 1 || m < 2) fail(ErrorKind::InvalidShape, "U(mk)/U(k)^m needs k >= 1, m >= 2");
  std::vector<int> dims;
  for (int i = 1; i < m; ++i) dims.push_back(i * k);
  return preset_partial_flag(dims, m * k);
}

OrbitSpec preset_complete_flag(int n) {
  if (n < 2) fail(ErrorKind::InvalidShape, "complete flag needs n >= 2");
  std::vector<int> dims;
  for (int i = 1; i < n; ++i) dims.push_back(i);
  return preset_partial_flag(dims, n);
}

}  // namespace hamfix
