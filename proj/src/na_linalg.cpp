#include "hamfix/na_linalg.hpp"

#include "hamfix/errors.hpp"

namespace hamfix::na {

namespace {

void check_dim(const FilteredSpace& space, const NVector& v) {
  if (v.size() != space.dim())
    fail(ErrorKind::DimensionMismatch, "vector of length " + std::to_string(v.size()) +
                                           " in a space of dimension " + std::to_string(space.dim()));
}

}  // namespace

Valuation ell(const FilteredSpace& space, const NVector& v) {
  check_dim(space, v);
  Valuation best = Valuation::neg_infinity();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    Valuation here{space.levels[i] - v[i].min_exponent()};
    if (best < here) best = here;
  }
  return best;
}

qla::QVector normalized_lead(const FilteredSpace& space, const NVector& v) {
  Valuation l = ell(space, v);
  if (l.is_neg_infinity()) fail(ErrorKind::Domain, "lead of the zero vector");
  qla::QVector lead(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) lead[i] = v[i].coeff(space.levels[i] - *l.value);
  return lead;
}

bool lead_certificate(const FilteredSpace& space, const std::vector<NVector>& family) {
  qla::QMatrix leads;
  for (const auto& v : family) {
    if (is_zero(v)) return false;
    leads.push_back(normalized_lead(space, v));
  }
  return qla::rank(leads) == family.size();
}

NVector unit_vector(std::size_t dim, std::size_t i) {
  NVector v(dim);
  v[i] = Novikov(Rational(1));
  return v;
}

NVector apply(const NMatrix& m, const NVector& v) {
  NVector out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != v.size()) fail(ErrorKind::DimensionMismatch, "matrix/vector size mismatch");
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!m[i][j].is_zero() && !v[j].is_zero()) out[i] += m[i][j] * v[j];
  }
  return out;
}

NVector add(const NVector& a, const NVector& b) {
  if (a.size() != b.size()) fail(ErrorKind::DimensionMismatch, "vector length mismatch");
  NVector r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

NVector scale(const Novikov& s, const NVector& v) {
  NVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

bool is_zero(const NVector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

bool sampled_orthogonality(const FilteredSpace& space, const std::vector<NVector>& family,
                           std::mt19937_64& rng, int samples) {
  std::uniform_int_distribution<int> coef(-3, 3), expo(-4, 4), count(0, 3);
  for (int s = 0; s < samples; ++s) {
    NVector sum(space.dim());
    Valuation best = Valuation::neg_infinity();
    for (const auto& w : family) {
      Novikov a;
      for (int t = count(rng); t > 0; --t) a += Novikov::monomial(coef(rng), make_rational(expo(rng), 2));
      NVector term = scale(a, w);
      Valuation lt = ell(space, term);
      if (best < lt) best = lt;
      sum = add(sum, term);
    }
    if (!(ell(space, sum) == best)) return false;
  }
  return true;
}

namespace {

// Fraction-free row echelon form; returns pivot columns, rows beyond the
// pivot count are zero.
std::vector<std::size_t> echelon(std::vector<NVector>& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    for (std::size_t r = row + 1; r < m.size(); ++r) {
      if (m[r][c].is_zero()) continue;
      Novikov a = m[row][c], b = m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[r][j] = a * m[r][j] - b * m[row][j];
    }
    pivots.push_back(c);
    ++row;
  }
  m.resize(row);
  return pivots;
}

}  // namespace

std::size_t rank(const std::vector<NVector>& rows) {
  if (rows.empty()) return 0;
  std::vector<NVector> m = rows;
  return echelon(m, rows[0].size()).size();
}

Novikov determinant(const NMatrix& m) {
  std::size_t n = m.size();
  if (n == 0) return Novikov(Rational(1));
  if (n > 20) fail(ErrorKind::InvalidInput, "determinant: matrix too large");
  // d[mask] = determinant of rows 0..|mask|-1 restricted to the columns in mask.
  std::vector<Novikov> d(std::size_t(1) << n);
  d[0] = Novikov(Rational(1));
  for (std::size_t mask = 1; mask < d.size(); ++mask) {
    std::size_t k = __builtin_popcountll(mask) - 1;
    Novikov acc;
    int sign = 1;
    // columns of mask in increasing order; sign alternates by position
    for (std::size_t j = 0, pos = 0; j < n; ++j) {
      if (!(mask >> j & 1)) continue;
      std::size_t rest = mask & ~(std::size_t(1) << j);
      sign = ((k - pos) % 2 == 0) ? 1 : -1;
      if (!m[k][j].is_zero() && !d[rest].is_zero()) {
        Novikov t = m[k][j] * d[rest];
        acc += sign > 0 ? t : -t;
      }
      ++pos;
    }
    d[mask] = acc;
  }
  return d.back();
}

std::vector<NVector> kernel(const NMatrix& m, std::size_t cols) {
  std::vector<NVector> e = m;
  auto pivots = echelon(e, cols);
  std::size_t r = pivots.size();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  NMatrix sub(r, NVector(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t t = 0; t < r; ++t) sub[i][t] = e[i][pivots[t]];
  Novikov det = determinant(sub);
  std::vector<NVector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    // Cramer: x_f = det, x_{pivot t} = -det(sub with column t replaced by column f).
    NVector x(cols);
    x[f] = det;
    for (std::size_t t = 0; t < r; ++t) {
      NMatrix repl = sub;
      for (std::size_t i = 0; i < r; ++i) repl[i][t] = e[i][f];
      x[pivots[t]] = -determinant(repl);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

namespace {

struct Orthogonalizer {
  const FilteredSpace& space;
  int max_iterations;
  std::vector<NVector> done;
  qla::QMatrix leads;
  NMatrix change;  // rows aligned with `done`

  // Reduces v (with coefficient row b) against `done` and appends it.
  void push(NVector v, NVector b) {
    for (int it = 0;; ++it) {
      if (it >= max_iterations) fail(ErrorKind::IterationLimit, "orthogonalization did not terminate");
      if (is_zero(v)) fail(ErrorKind::DependentInput, "family is linearly dependent");
      qla::QVector lead = normalized_lead(space, v);
      auto c = qla::express_in_rows(leads, lead);
      if (!c) {
        done.push_back(std::move(v));
        leads.push_back(std::move(lead));
        change.push_back(std::move(b));
        return;
      }
      Rational lv = *ell(space, v).value;
      for (std::size_t j = 0; j < done.size(); ++j) {
        if ((*c)[j] == 0) continue;
        Rational e = *ell(space, done[j]).value - lv;
        Novikov f = Novikov::monomial(-(*c)[j], e);
        v = add(v, scale(f, done[j]));
        if (!b.empty()) b = add(b, scale(f, change[j]));
      }
    }
  }
};

}  // namespace

GramSchmidtResult gram_schmidt(const FilteredSpace& space, const std::vector<NVector>& vectors,
                               int max_iterations) {
  for (const auto& v : vectors) check_dim(space, v);
  if (rank(vectors) != vectors.size())
    fail(ErrorKind::DependentInput, "gram_schmidt: input family is linearly dependent");
  const std::size_t m = vectors.size();
  std::vector<bool> used(m, false);
  Orthogonalizer orth{space, max_iterations, {}, {}, {}};
  for (std::size_t step = 0; step < m; ++step) {
    std::size_t pick = m;
    Valuation best;
    for (std::size_t i = 0; i < m; ++i) {
      if (used[i]) continue;
      Valuation l = ell(space, vectors[i]);
      if (pick == m || best < l) {
        pick = i;
        best = l;
      }
    }
    used[pick] = true;
    orth.push(vectors[pick], unit_vector(m, pick));
  }
  return {std::move(orth.done), std::move(orth.change)};
}

namespace {

// Unit vectors extending `leads` to a basis of Q^dim, in index order.
std::vector<std::size_t> completing_units(qla::QMatrix leads, std::size_t dim) {
  std::vector<std::size_t> picked;
  std::size_t r = qla::rank(leads);
  for (std::size_t i = 0; i < dim && r < dim; ++i) {
    qla::QVector e(dim, 0);
    e[i] = 1;
    leads.push_back(e);
    std::size_t r2 = qla::rank(leads);
    if (r2 > r) {
      picked.push_back(i);
      r = r2;
    } else {
      leads.pop_back();
    }
  }
  return picked;
}

qla::QMatrix leads_of(const FilteredSpace& space, const std::vector<NVector>& family) {
  qla::QMatrix leads;
  for (const auto& v : family) leads.push_back(normalized_lead(space, v));
  return leads;
}

}  // namespace

std::vector<NVector> orthogonal_complement(const FilteredSpace& space,
                                           const std::vector<NVector>& subspace) {
  auto gs = gram_schmidt(space, subspace);
  std::vector<NVector> out;
  for (auto i : completing_units(leads_of(space, gs.vectors), space.dim()))
    out.push_back(unit_vector(space.dim(), i));
  return out;
}

SvdResult svd_with_kernel_vector(const NMatrix& l, const FilteredSpace& space_v,
                                 const FilteredSpace& space_w, const NVector& xi,
                                 int max_iterations) {
  const std::size_t n = space_v.dim();
  if (l.size() != space_w.dim()) fail(ErrorKind::DimensionMismatch, "svd: row count != dim W");
  for (const auto& row : l)
    if (row.size() != n) fail(ErrorKind::DimensionMismatch, "svd: column count != dim V");
  check_dim(space_v, xi);
  if (is_zero(xi)) fail(ErrorKind::ZeroXi, "svd: xi is zero");
  if (!is_zero(na::apply(l, xi))) fail(ErrorKind::NotInKernel, "svd: L xi != 0");

  auto ker = kernel(l, n);
  const std::size_t r = n - ker.size();

  // Kernel family starting with xi, orthogonalized in order so xi stays put.
  std::vector<NVector> kfam{xi};
  for (const auto& k : ker) {
    if (kfam.size() == ker.size()) break;
    kfam.push_back(k);
    if (rank(kfam) < kfam.size()) kfam.pop_back();
  }
  Orthogonalizer korth{space_v, max_iterations, {}, {}, {}};
  for (auto& v : kfam) korth.push(v, {});

  std::vector<NVector> x;
  for (auto i : completing_units(korth.leads, n)) x.push_back(unit_vector(n, i));
  if (x.size() != r) fail(ErrorKind::DependentInput, "svd: complement size mismatch");

  std::vector<NVector> y(r);
  for (int it = 0;; ++it) {
    if (it >= max_iterations) fail(ErrorKind::IterationLimit, "svd: image orthogonalization did not terminate");
    for (std::size_t i = 0; i < r; ++i) y[i] = na::apply(l, x[i]);
    qla::QMatrix wl = leads_of(space_w, y);
    if (qla::rank(wl) == r) break;
    qla::QVector a = qla::kernel(qla::transpose(wl, space_w.dim()), r).front();
    std::size_t j = r;
    Rational best_gain;
    for (std::size_t i = 0; i < r; ++i) {
      if (a[i] == 0) continue;
      Rational gain = *ell(space_w, y[i]).value - *ell(space_v, x[i]).value;
      if (j == r || gain < best_gain) {
        j = i;
        best_gain = gain;
      }
    }
    Rational lyj = *ell(space_w, y[j]).value;
    NVector xj = x[j];
    for (std::size_t i = 0; i < r; ++i) {
      if (i == j || a[i] == 0) continue;
      Novikov f = Novikov::monomial(a[i] / a[j], *ell(space_w, y[i]).value - lyj);
      xj = add(xj, scale(f, x[i]));
    }
    x[j] = std::move(xj);
  }

  SvdResult out;
  out.r = r;
  out.basis_v = x;
  for (auto& k : korth.done) out.basis_v.push_back(k);
  out.basis_w = y;
  for (auto i : completing_units(leads_of(space_w, y), space_w.dim()))
    out.basis_w.push_back(unit_vector(space_w.dim(), i));
  return out;
}

}  // namespace hamfix::na
