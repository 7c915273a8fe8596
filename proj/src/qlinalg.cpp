#include "hamfix/qlinalg.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "hamfix/errors.hpp"

namespace hamfix::qla {

Rational dot(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) fail(ErrorKind::DimensionMismatch, "dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

QVector add(const QVector& a, const QVector& b) {
  QVector r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

QVector sub(const QVector& a, const QVector& b) {
  QVector r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

QVector scale(const Rational& s, const QVector& a) {
  QVector r(a);
  for (auto& x : r) x *= s;
  return r;
}

bool is_zero(const QVector& a) {
  return std::all_of(a.begin(), a.end(), [](const Rational& x) { return x == 0; });
}

QMatrix identity(std::size_t n) {
  QMatrix m(n, QVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

QMatrix multiply(const QMatrix& a, const QMatrix& b) {
  if (a.empty()) return {};
  std::size_t inner = b.size(), cols = b.empty() ? 0 : b[0].size();
  QMatrix r(a.size(), QVector(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

QVector apply(const QMatrix& a, const QVector& x) {
  QVector r(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = dot(a[i], x);
  return r;
}

QMatrix transpose(const QMatrix& a, std::size_t cols_if_empty) {
  std::size_t cols = a.empty() ? cols_if_empty : a[0].size();
  QMatrix t(cols, QVector(a.size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) t[j][i] = a[i][j];
  return t;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(QMatrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    Rational inv = 1 / m[row][c];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c] == 0) continue;
      Rational f = m[r][c];
      for (std::size_t j = 0; j < m[r].size(); ++j) m[r][j] -= f * m[row][j];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(QMatrix rows) {
  if (rows.empty()) return 0;
  return rref(rows, rows[0].size()).size();
}

Rational determinant(QMatrix a) {
  std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      Rational f = a[r][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  return det;
}

QMatrix kernel(const QMatrix& a, std::size_t cols) {
  QMatrix m = a;
  auto pivots = rref(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  QMatrix basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    QVector x(cols, 0);
    x[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -m[r][f];
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<QVector> solve(const QMatrix& a, const QVector& b, std::size_t cols) {
  QMatrix m = a;
  for (std::size_t i = 0; i < m.size(); ++i) m[i].push_back(b[i]);
  auto pivots = rref(m, cols + 1);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  QVector x(cols, 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = m[r][cols];
  return x;
}

std::optional<QVector> express_in_rows(const QMatrix& rows, const QVector& target) {
  if (rows.empty()) {
    if (is_zero(target)) return QVector{};
    return std::nullopt;
  }
  return solve(transpose(rows), target, rows.size());
}

std::optional<QMatrix> inverse(const QMatrix& a) {
  std::size_t n = a.size();
  QMatrix m = a;
  for (std::size_t i = 0; i < n; ++i) {
    m[i].resize(2 * n, 0);
    m[i][n + i] = 1;
  }
  auto pivots = rref(m, n);
  if (pivots.size() < n) return std::nullopt;
  QMatrix inv(n, QVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
  return inv;
}

ZVector primitive(const QVector& v) {
  Integer l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  ZVector z;
  z.reserve(v.size());
  Integer g = 0;
  for (const auto& x : v) {
    Integer k = x.get_num() * (l / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), k.get_mpz_t());
    z.push_back(k);
  }
  if (g == 0) fail(ErrorKind::InvalidInput, "primitive: zero vector");
  for (auto& k : z) k /= g;
  return z;
}

QVector to_rational(const ZVector& v) {
  QVector q;
  q.reserve(v.size());
  for (const auto& z : v) q.emplace_back(z);
  return q;
}

std::vector<ZVector> integer_kernel(const std::vector<ZVector>& a, std::size_t cols) {
  // Column operations A U = [H | 0] with U unimodular; the trailing columns of
  // U span the integer kernel.
  std::vector<ZVector> m = a;
  std::vector<ZVector> u(cols, ZVector(cols, 0));
  for (std::size_t i = 0; i < cols; ++i) u[i][i] = 1;
  auto col_op = [&](std::size_t dst, std::size_t src, const Integer& f) {
    for (auto& row : m) row[dst] -= f * row[src];
    for (auto& row : u) row[dst] -= f * row[src];
  };
  auto swap_cols = [&](std::size_t x, std::size_t y) {
    for (auto& row : m) std::swap(row[x], row[y]);
    for (auto& row : u) std::swap(row[x], row[y]);
  };
  std::size_t lead = 0;
  for (std::size_t r = 0; r < m.size() && lead < cols; ++r) {
    while (true) {
      // Euclid across columns lead..cols-1 of row r.
      std::size_t best = cols;
      for (std::size_t c = lead; c < cols; ++c)
        if (m[r][c] != 0 && (best == cols || abs(m[r][c]) < abs(m[r][best]))) best = c;
      if (best == cols) break;
      swap_cols(lead, best);
      bool done = true;
      for (std::size_t c = lead + 1; c < cols; ++c) {
        if (m[r][c] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), m[r][c].get_mpz_t(), m[r][lead].get_mpz_t());
        col_op(c, lead, q);
        if (m[r][c] != 0) done = false;
      }
      if (done) {
        ++lead;
        break;
      }
    }
  }
  std::vector<ZVector> basis;
  for (std::size_t c = lead; c < cols; ++c) {
    ZVector v(cols);
    for (std::size_t i = 0; i < cols; ++i) v[i] = u[i][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

namespace {

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             const std::function<void(const std::vector<std::size_t>&)>& visit) {
  if (cur.size() == k) {
    visit(cur);
    return;
  }
  for (std::size_t i = start; i + (k - cur.size()) <= n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, visit);
    cur.pop_back();
  }
}

}  // namespace

std::vector<ZVector> cone_rays(const QMatrix& inequalities, std::size_t dim) {
  std::set<ZVector> rays;
  auto feasible = [&](const QVector& v) {
    for (const auto& a : inequalities)
      if (dot(a, v) < 0) return false;
    return true;
  };
  if (dim == 0) return {};
  if (dim == 1) {
    for (int s : {1, -1}) {
      QVector v{Rational(s)};
      if (feasible(v)) rays.insert(primitive(v));
    }
    return {rays.begin(), rays.end()};
  }
  std::vector<std::size_t> cur;
  subsets(inequalities.size(), dim - 1, 0, cur, [&](const std::vector<std::size_t>& idx) {
    QMatrix sub;
    for (auto i : idx) sub.push_back(inequalities[i]);
    auto k = kernel(sub, dim);
    if (k.size() != 1) return;
    for (int s : {1, -1}) {
      QVector v = scale(Rational(s), k[0]);
      if (feasible(v)) rays.insert(primitive(v));
    }
  });
  return {rays.begin(), rays.end()};
}

bool in_cone(const QMatrix& generators, const QVector& target) {
  if (is_zero(target)) return true;
  // Caratheodory: target is a nonnegative combination of some linearly
  // independent subset of the generators.
  std::size_t dim = target.size();
  bool found = false;
  for (std::size_t k = 1; k <= std::min(dim, generators.size()) && !found; ++k) {
    std::vector<std::size_t> cur;
    subsets(generators.size(), k, 0, cur, [&](const std::vector<std::size_t>& idx) {
      if (found) return;
      QMatrix cols;
      for (auto i : idx) cols.push_back(generators[i]);
      if (rank(cols) != k) return;
      auto c = solve(transpose(cols), target, k);
      if (!c) return;
      if (std::all_of(c->begin(), c->end(), [](const Rational& x) { return x >= 0; })) found = true;
    });
  }
  return found;
}

}  // namespace hamfix::qla
