#include "hamfix/quantum_ring.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "hamfix/errors.hpp"

namespace hamfix {

QuantumRing::QuantumRing(Data data) : data_(std::move(data)) {
  const std::size_t d = data_.basis.size();
  if (d == 0) fail(ErrorKind::InvalidInput, "ring: empty basis");
  if (data_.dim_n < 0) fail(ErrorKind::InvalidInput, "ring: negative dimension");
  if (data_.period <= 0) fail(ErrorKind::InvalidInput, "ring: period must be positive");
  for (std::size_t i = 0; i < d; ++i) {
    const auto& b = data_.basis[i];
    if (b.degree < 0 || b.degree > 2 * data_.dim_n || b.degree % 2 != 0)
      fail(ErrorKind::InvalidInput, "ring: bad degree for '" + b.label + "'");
    if (!index_.emplace(b.label, i).second)
      fail(ErrorKind::InvalidInput, "ring: duplicate label '" + b.label + "'");
  }
  auto fi = find(data_.fundamental), pi = find(data_.point);
  if (!fi) fail(ErrorKind::InvalidInput, "ring: unknown fundamental class '" + data_.fundamental + "'");
  if (!pi) fail(ErrorKind::InvalidInput, "ring: unknown point class '" + data_.point + "'");
  fundamental_ = *fi;
  point_ = *pi;
  if (data_.basis[fundamental_].degree != 2 * data_.dim_n)
    fail(ErrorKind::InvalidInput, "ring: fundamental class must have degree 2n");
  if (data_.basis[point_].degree != 0) fail(ErrorKind::InvalidInput, "ring: point class must have degree 0");
  if (data_.table.size() != d) fail(ErrorKind::InvalidInput, "ring: structure table has wrong size");
  for (auto& row : data_.table) {
    if (row.size() != d) fail(ErrorKind::InvalidInput, "ring: structure table has wrong size");
    for (auto& prod : row) {
      if (prod.size() != d) fail(ErrorKind::InvalidInput, "ring: structure table has wrong size");
      for (const auto& x : prod)
        if (!x.is_zero() && x.min_exponent() < 0) nonneg_ = false;
    }
  }
  if (auto err = check_unity(*this)) fail(ErrorKind::InvalidInput, "ring: " + *err);
  if (data_.pairing) {
    if (data_.pairing->size() != d) fail(ErrorKind::InvalidInput, "ring: pairing has wrong size");
    for (const auto& row : *data_.pairing)
      if (row.size() != d) fail(ErrorKind::InvalidInput, "ring: pairing has wrong size");
    pairing_ = *data_.pairing;
  } else {
    pairing_.assign(d, qla::QVector(d, 0));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        if (degree(i) + degree(j) == 2 * data_.dim_n)
          pairing_[i][j] = data_.table[i][j][point_].coeff(Rational(0));
  }
}

std::optional<std::size_t> QuantumRing::find(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t QuantumRing::index(const std::string& label) const {
  auto i = find(label);
  if (!i) fail(ErrorKind::InvalidInput, "unknown basis label '" + label + "'");
  return *i;
}

std::vector<std::size_t> QuantumRing::proper_classes() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < dim(); ++i)
    if (degree(i) < 2 * dim_n()) out.push_back(i);
  return out;
}

// ---------------------------------------------------------------------------

GradedClass::GradedClass(RingPtr ring, std::vector<Novikov> coords)
    : ring_(std::move(ring)), coords_(std::move(coords)) {
  if (!ring_) fail(ErrorKind::InvalidInput, "class without a ring");
  if (coords_.size() != ring_->dim()) fail(ErrorKind::DimensionMismatch, "class has wrong length");
}

GradedClass GradedClass::zero(RingPtr ring) {
  std::size_t d = ring->dim();
  return GradedClass(std::move(ring), std::vector<Novikov>(d));
}

GradedClass GradedClass::basis(RingPtr ring, std::size_t i, Novikov coef) {
  GradedClass c = zero(std::move(ring));
  c.coords_.at(i) = std::move(coef);
  return c;
}

GradedClass GradedClass::basis(RingPtr ring, const std::string& label, Novikov coef) {
  std::size_t i = ring->index(label);
  return basis(std::move(ring), i, std::move(coef));
}

bool GradedClass::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Novikov& x) { return x.is_zero(); });
}

namespace {

void same_ring(const GradedClass& a, const GradedClass& b) {
  if (!a.ring() || a.ring() != b.ring())
    fail(ErrorKind::RingMismatch, "classes belong to different rings");
}

}  // namespace

GradedClass operator+(const GradedClass& a, const GradedClass& b) {
  same_ring(a, b);
  GradedClass r = a;
  for (std::size_t i = 0; i < r.coords_.size(); ++i) r.coords_[i] += b.coords_[i];
  return r;
}

GradedClass operator-(const GradedClass& a, const GradedClass& b) {
  return a + b.scaled(Novikov(Rational(-1)));
}

GradedClass GradedClass::scaled(const Novikov& s) const {
  GradedClass r = *this;
  for (auto& x : r.coords_) x = s * x;
  return r;
}

bool operator==(const GradedClass& a, const GradedClass& b) {
  return a.ring_ == b.ring_ && a.coords_ == b.coords_;
}

GradedClass product(const GradedClass& a, const GradedClass& b) {
  same_ring(a, b);
  const QuantumRing& ring = *a.ring();
  const std::size_t d = ring.dim();
  std::vector<Novikov> out(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (a.coord(i).is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (b.coord(j).is_zero()) continue;
      Novikov coef = a.coord(i) * b.coord(j);
      const auto& s = ring.structure(i, j);
      for (std::size_t c = 0; c < d; ++c)
        if (!s[c].is_zero()) out[c] += coef * s[c];
    }
  }
  return GradedClass(a.ring(), std::move(out));
}

GradedClass power(const GradedClass& a, int k) {
  GradedClass r = GradedClass::basis(a.ring(), a.ring()->fundamental());
  for (int i = 0; i < k; ++i) r = product(r, a);
  return r;
}

Valuation i_nu(const GradedClass& a) {
  Valuation best = Valuation::neg_infinity();
  for (const auto& x : a.coords()) {
    Valuation v = x.valuation();
    if (best < v) best = v;
  }
  return best;
}

Rational pair_pi(const GradedClass& a, const GradedClass& b) {
  same_ring(a, b);
  const auto& pairing = a.ring()->pairing();
  Rational sum = 0;
  for (std::size_t i = 0; i < a.coords().size(); ++i)
    for (std::size_t j = 0; j < b.coords().size(); ++j) {
      if (pairing[i][j] == 0) continue;
      for (const auto& [g, x] : a.coord(i).terms()) sum += pairing[i][j] * x * b.coord(j).coeff(-g);
    }
  return sum;
}

std::string to_string(const GradedClass& a) {
  std::string out;
  for (std::size_t i = 0; i < a.coords().size(); ++i) {
    const Novikov& x = a.coord(i);
    if (x.is_zero()) continue;
    std::string coef = to_string(x);
    std::string term;
    if (coef == "1")
      term = a.ring()->label(i);
    else if (coef == "-1")
      term = "-" + a.ring()->label(i);
    else if (coef.find(' ') != std::string::npos)
      term = "(" + coef + ")*" + a.ring()->label(i);
    else
      term = coef + "*" + a.ring()->label(i);
    out += out.empty() ? term : " + " + term;
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// Presets

RingPtr qh_projective(int n, const Rational& p) {
  if (n < 1) fail(ErrorKind::InvalidInput, "projective space needs n >= 1");
  if (p <= 0) fail(ErrorKind::InvalidInput, "period must be positive");
  QuantumRing::Data d;
  d.dim_n = n;
  d.period = p;
  for (int k = 0; k <= n; ++k) d.basis.push_back({"u^" + std::to_string(k), 2 * n - 2 * k});
  d.fundamental = "u^0";
  d.point = "u^" + std::to_string(n);
  const std::size_t dim = n + 1;
  d.table.assign(dim, std::vector<QuantumRing::Product>(dim, QuantumRing::Product(dim)));
  for (int a = 0; a <= n; ++a)
    for (int b = 0; b <= n; ++b) {
      int s = a + b;
      if (s <= n)
        d.table[a][b][s] = Novikov(Rational(1));
      else
        d.table[a][b][s - n - 1] = Novikov::monomial(1, p);
    }
  d.chern_per_area = Rational(n + 1) / p;
  return std::make_shared<const QuantumRing>(std::move(d));
}

std::vector<std::vector<int>> box_partitions(int k, int n) {
  std::vector<std::vector<int>> out;
  const int w = n - k;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int row, int maxpart) {
    if (row == k) {
      out.push_back(cur);
      return;
    }
    for (int v = maxpart; v >= 0; --v) {
      cur.push_back(v);
      rec(row + 1, v);
      cur.pop_back();
    }
  };
  rec(0, w);
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    int sa = 0, sb = 0;
    for (int x : a) sa += x;
    for (int x : b) sb += x;
    return sa < sb;
  });
  return out;
}

std::string schubert_label(const std::vector<int>& partition) {
  std::string s = "s(";
  bool first = true;
  for (int x : partition) {
    if (x == 0) break;
    if (!first) s += ",";
    s += std::to_string(x);
    first = false;
  }
  return s + ")";
}

namespace {

using Partition = std::vector<int>;  // exactly k entries, weakly decreasing
using SchurSum = std::map<Partition, Integer>;

// s_nu * h_a in k variables.
void pieri(const Partition& nu, int a, const Integer& coef, SchurSum& out) {
  const int k = static_cast<int>(nu.size());
  Partition rho = nu;
  std::function<void(int, int)> rec = [&](int row, int left) {
    if (row == k) {
      if (left == 0) out[rho] += coef;
      return;
    }
    int hi = row == 0 ? nu[0] + left : std::min(nu[row - 1], nu[row] + left);
    for (int v = nu[row]; v <= hi; ++v) {
      rho[row] = v;
      rec(row + 1, left - (v - nu[row]));
    }
    rho[row] = nu[row];
  };
  rec(0, a);
}

// Classical s_lambda * s_mu in k variables via Jacobi-Trudi and Pieri.
SchurSum schur_product(const Partition& lambda, const Partition& mu) {
  std::vector<int> parts;
  for (int x : mu)
    if (x > 0) parts.push_back(x);
  const int l = static_cast<int>(parts.size());
  SchurSum total;
  std::vector<int> perm(l);
  for (int i = 0; i < l; ++i) perm[i] = i;
  do {
    int inversions = 0;
    for (int i = 0; i < l; ++i)
      for (int j = i + 1; j < l; ++j)
        if (perm[i] > perm[j]) ++inversions;
    SchurSum cur{{lambda, Integer(inversions % 2 ? -1 : 1)}};
    bool dead = false;
    for (int i = 0; i < l && !dead; ++i) {
      int m = parts[i] - i + perm[i];
      if (m < 0) {
        dead = true;
        break;
      }
      if (m == 0) continue;
      SchurSum next;
      for (const auto& [nu, c] : cur) pieri(nu, m, c, next);
      cur = std::move(next);
    }
    if (dead) continue;
    for (const auto& [nu, c] : cur) total[nu] += c;
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (auto it = total.begin(); it != total.end();)
    it = it->second == 0 ? total.erase(it) : std::next(it);
  return total;
}

// Rim-hook reduction of s_nu into the k x (n-k) box: returns (sign, q-degree,
// reduced partition) or nothing when the class vanishes.
std::optional<std::tuple<int, int, Partition>> rim_hook_reduce(Partition nu, int k, int n) {
  int sign = 1, d = 0;
  while (nu[0] > n - k) {
    std::vector<int> beta(k);
    for (int i = 0; i < k; ++i) beta[i] = nu[i] + k - 1 - i;
    int b = beta[0] - n;
    if (b < 0) return std::nullopt;
    if (std::find(beta.begin(), beta.end(), b) != beta.end()) return std::nullopt;
    int between = 0;
    for (int i = 1; i < k; ++i)
      if (beta[i] > b && beta[i] < beta[0]) ++between;
    int height = between + 1;
    if ((k - height) % 2) sign = -sign;
    beta[0] = b;
    std::sort(beta.begin(), beta.end(), std::greater<int>());
    for (int i = 0; i < k; ++i) nu[i] = beta[i] - (k - 1 - i);
    ++d;
  }
  return std::make_tuple(sign, d, nu);
}

}  // namespace

RingPtr qh_grassmannian(int k, int n, const Rational& p) {
  if (k < 1 || k >= n) fail(ErrorKind::InvalidShape, "Grassmannian needs 1 <= k < n");
  if (p <= 0) fail(ErrorKind::InvalidInput, "period must be positive");
  auto parts = box_partitions(k, n);
  const int dimc = k * (n - k);
  QuantumRing::Data d;
  d.dim_n = dimc;
  d.period = p;
  std::map<Partition, std::size_t> where;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    int size = 0;
    for (int x : parts[i]) size += x;
    d.basis.push_back({schubert_label(parts[i]), 2 * (dimc - size)});
    where[parts[i]] = i;
  }
  d.fundamental = d.basis.front().label;
  d.point = d.basis.back().label;
  const std::size_t dim = parts.size();
  d.table.assign(dim, std::vector<QuantumRing::Product>(dim, QuantumRing::Product(dim)));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i; j < dim; ++j) {
      QuantumRing::Product prod(dim);
      for (const auto& [nu, c] : schur_product(parts[i], parts[j])) {
        auto red = rim_hook_reduce(nu, k, n);
        if (!red) continue;
        auto [sign, q, rho] = *red;
        prod[where.at(rho)] += Novikov::monomial(Rational(c * sign), p * q);
      }
      d.table[i][j] = prod;
      d.table[j][i] = prod;
    }
  d.chern_per_area = Rational(n) / p;
  return std::make_shared<const QuantumRing>(std::move(d));
}

RingPtr tensor_product(const QuantumRing& a, const QuantumRing& b) {
  QuantumRing::Data d;
  d.dim_n = a.dim_n() + b.dim_n();
  d.period = gcd(a.period(), b.period());
  const std::size_t da = a.dim(), db = b.dim(), dim = da * db;
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < db; ++j)
      d.basis.push_back({a.label(i) + "|" + b.label(j), a.degree(i) + b.degree(j)});
  d.fundamental = a.label(a.fundamental()) + "|" + b.label(b.fundamental());
  d.point = a.label(a.point()) + "|" + b.label(b.point());
  d.table.assign(dim, std::vector<QuantumRing::Product>(dim, QuantumRing::Product(dim)));
  for (std::size_t x = 0; x < dim; ++x)
    for (std::size_t y = 0; y < dim; ++y) {
      const auto& pa = a.structure(x / db, y / db);
      const auto& pb = b.structure(x % db, y % db);
      auto& out = d.table[x][y];
      for (std::size_t i = 0; i < da; ++i) {
        if (pa[i].is_zero()) continue;
        for (std::size_t j = 0; j < db; ++j)
          if (!pb[j].is_zero()) out[i * db + j] = pa[i] * pb[j];
      }
    }
  qla::QMatrix pairing(dim, qla::QVector(dim, 0));
  for (std::size_t x = 0; x < dim; ++x)
    for (std::size_t y = 0; y < dim; ++y)
      pairing[x][y] = a.pairing()[x / db][y / db] * b.pairing()[x % db][y % db];
  d.pairing = pairing;
  if (a.chern_per_area() && b.chern_per_area() && *a.chern_per_area() == *b.chern_per_area())
    d.chern_per_area = a.chern_per_area();
  return std::make_shared<const QuantumRing>(std::move(d));
}

RingPtr strip_quantum(const QuantumRing& ring) {
  QuantumRing::Data d = ring.data();
  for (auto& row : d.table)
    for (auto& prod : row)
      for (auto& x : prod) x = Novikov(x.coeff(Rational(0)));
  d.chern_per_area.reset();
  d.pairing = ring.pairing();
  return std::make_shared<const QuantumRing>(std::move(d));
}

// ---------------------------------------------------------------------------
// Checks

namespace {

QuantumRing::Product mul_products(const QuantumRing& ring, const QuantumRing::Product& a, std::size_t j) {
  QuantumRing::Product out(ring.dim());
  for (std::size_t i = 0; i < ring.dim(); ++i) {
    if (a[i].is_zero()) continue;
    const auto& s = ring.structure(i, j);
    for (std::size_t c = 0; c < ring.dim(); ++c)
      if (!s[c].is_zero()) out[c] += a[i] * s[c];
  }
  return out;
}

}  // namespace

std::optional<std::string> check_associativity(const QuantumRing& ring) {
  const std::size_t d = ring.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t l = 0; l < d; ++l) {
        auto left = mul_products(ring, ring.structure(i, j), l);
        auto right = mul_products(ring, ring.structure(j, l), i);
        if (left != right)
          return "(" + ring.label(i) + "*" + ring.label(j) + ")*" + ring.label(l) + " != " + ring.label(i) +
                 "*(" + ring.label(j) + "*" + ring.label(l) + ")";
      }
  return std::nullopt;
}

std::optional<std::string> check_commutativity(const QuantumRing& ring) {
  for (std::size_t i = 0; i < ring.dim(); ++i)
    for (std::size_t j = i + 1; j < ring.dim(); ++j) {
      auto a = ring.structure(i, j), b = ring.structure(j, i);
      // graded sign is +1 for even degrees; odd degrees are rejected at construction
      if (a != b) return ring.label(i) + "*" + ring.label(j) + " != " + ring.label(j) + "*" + ring.label(i);
    }
  return std::nullopt;
}

std::optional<std::string> check_unity(const QuantumRing& ring) {
  const std::size_t f = ring.fundamental();
  for (std::size_t i = 0; i < ring.dim(); ++i) {
    QuantumRing::Product e(ring.dim());
    e[i] = Novikov(Rational(1));
    if (ring.structure(f, i) != e || ring.structure(i, f) != e)
      return "fundamental class is not a unit on '" + ring.label(i) + "'";
  }
  return std::nullopt;
}

std::optional<std::string> check_degrees(const QuantumRing& ring) {
  if (!ring.chern_per_area()) return std::nullopt;
  const Rational& kappa = *ring.chern_per_area();
  const Rational two_n = 2 * ring.dim_n();
  for (std::size_t i = 0; i < ring.dim(); ++i)
    for (std::size_t j = 0; j < ring.dim(); ++j) {
      const auto& s = ring.structure(i, j);
      for (std::size_t c = 0; c < ring.dim(); ++c)
        for (const auto& [g, x] : s[c].terms()) {
          Rational lhs = ring.degree(i) + ring.degree(j) - ring.degree(c);
          if (lhs != two_n - 2 * g * kappa)
            return "degree mismatch in " + ring.label(i) + "*" + ring.label(j) + " -> T^" + to_string(g) +
                   " " + ring.label(c);
        }
    }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Searches

namespace {

// Depth-first walk over nondecreasing index sequences of proper classes.
// `visit` returns false to prune below the current product.
void walk_products(const QuantumRing& ring, int max_len,
                   const std::function<bool(const QuantumRing::Product&, const std::vector<std::size_t>&)>& visit) {
  auto proper = ring.proper_classes();
  std::vector<std::size_t> seq;
  std::function<void(std::size_t, const QuantumRing::Product*)> rec =
      [&](std::size_t start, const QuantumRing::Product* cur) {
        if (static_cast<int>(seq.size()) == max_len) return;
        for (std::size_t t = start; t < proper.size(); ++t) {
          std::size_t idx = proper[t];
          QuantumRing::Product next;
          if (cur) {
            next = mul_products(ring, *cur, idx);
          } else {
            next.assign(ring.dim(), Novikov());
            next[idx] = Novikov(Rational(1));
          }
          if (std::all_of(next.begin(), next.end(), [](const Novikov& x) { return x.is_zero(); })) continue;
          seq.push_back(idx);
          if (visit(next, seq)) rec(t, &next);
          seq.pop_back();
        }
      };
  rec(0, nullptr);
}

std::vector<std::string> labels_of(const QuantumRing& ring, const std::vector<std::size_t>& seq) {
  std::vector<std::string> out;
  for (auto i : seq) out.push_back(ring.label(i));
  return out;
}

}  // namespace

CuplengthReport quantum_cuplength(const QuantumRing& ring, const Rational& g, int max_len) {
  if (max_len < 1) fail(ErrorKind::InvalidInput, "cuplength: max_len must be >= 1");
  CuplengthReport rep;
  rep.g = g;
  const bool prune = ring.exponents_nonnegative();
  walk_products(ring, max_len, [&](const QuantumRing::Product& prod, const std::vector<std::size_t>& seq) {
    bool hit = false, reachable = !prune;
    for (const auto& x : prod) {
      if (x.coeff(g) != 0) hit = true;
      if (!x.is_zero() && x.min_exponent() <= g) reachable = true;
    }
    int value = static_cast<int>(seq.size()) + 1;
    if (hit && value > rep.lower_bound) {
      rep.lower_bound = value;
      rep.witness = labels_of(ring, seq);
    }
    return reachable;
  });
  return rep;
}

std::string to_string(NilpotenceVerdict v) {
  switch (v) {
    case NilpotenceVerdict::ProvenNonnilpotent: return "PROVEN_NONNILPOTENT";
    case NilpotenceVerdict::NonzeroUpToLmax: return "NONZERO_UP_TO_LMAX";
    case NilpotenceVerdict::NilpotentAt: return "NILPOTENT_AT";
  }
  return "?";
}

NilpotenceReport nonnilpotent_test(const GradedClass& a, int l_max) {
  if (a.is_zero()) fail(ErrorKind::InvalidInput, "nonnilpotent_test: class is zero");
  if (l_max < 1) fail(ErrorKind::InvalidInput, "nonnilpotent_test: l_max must be >= 1");
  std::vector<GradedClass> powers{GradedClass::basis(a.ring(), a.ring()->fundamental())};
  NilpotenceReport rep;
  for (int l = 1; l <= l_max; ++l) {
    powers.push_back(product(powers.back(), a));
    const GradedClass& cur = powers.back();
    if (cur.is_zero()) {
      rep.verdict = NilpotenceVerdict::NilpotentAt;
      rep.level = l;
      return rep;
    }
    for (int k = 0; k < l; ++k) {
      const GradedClass& prev = powers[k];
      std::size_t i = 0;
      while (prev.coord(i).is_zero()) ++i;
      if (cur.coord(i).is_zero()) continue;
      Rational c = cur.coord(i).min_exponent() - prev.coord(i).min_exponent();
      Rational z = cur.coord(i).leading_coeff() / prev.coord(i).leading_coeff();
      if (prev.scaled(Novikov::monomial(z, c)) == cur) {
        rep.verdict = NilpotenceVerdict::ProvenNonnilpotent;
        rep.rule = "periodic";
        rep.level = l;
        rep.k = k;
        rep.m = l - k;
        rep.z = z;
        rep.c = c;
        return rep;
      }
    }
  }
  // In an algebra of dimension N over a field every nilpotent a has a^N = 0.
  rep.level = l_max;
  if (static_cast<std::size_t>(l_max) >= a.ring()->dim()) {
    rep.verdict = NilpotenceVerdict::ProvenNonnilpotent;
    rep.rule = "dimension";
  }
  return rep;
}

std::optional<Factorization> pfqf_search(const QuantumRing& ring, int max_len) {
  if (max_len < 1) fail(ErrorKind::InvalidInput, "pfqf_search: max_len must be >= 1");
  std::optional<Factorization> best;
  const std::size_t f = ring.fundamental();
  walk_products(ring, max_len, [&](const QuantumRing::Product& prod, const std::vector<std::size_t>& seq) {
    const Novikov& lambda = prod[f];
    if (lambda.is_zero()) return true;
    Rational g = lambda.min_exponent() / ring.period();
    if (g <= 0 || !is_integer(g)) return true;
    Factorization cand;
    cand.length = static_cast<int>(seq.size());
    cand.order = g.get_num();
    cand.bound = ceil(Rational(cand.length) / g);
    cand.lambda = lambda;
    cand.factors = labels_of(ring, seq);
    bool better = !best || cand.bound > best->bound ||
                  (cand.bound == best->bound &&
                   (cand.length < best->length || (cand.length == best->length && cand.factors < best->factors)));
    if (better) best = std::move(cand);
    return true;
  });
  return best;
}

}  // namespace hamfix
