#include "hamfix/ls_selector.hpp"

#include <algorithm>
#include <set>

#include "hamfix/errors.hpp"

namespace hamfix {

std::size_t FilteredComplex::index(const std::string& label) const {
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (generators[i].label == label) return i;
  fail(ErrorKind::InvalidInput, "unknown generator '" + label + "'");
}

int FilteredComplex::top_degree() const {
  int top = 0;
  for (const auto& g : generators) top = std::max(top, g.degree);
  return top;
}

void validate(const FilteredComplex& c) {
  const std::size_t n = c.size();
  if (n == 0) fail(ErrorKind::InvalidComplex, "complex has no generators");
  if (c.boundary.size() != n) fail(ErrorKind::InvalidComplex, "boundary matrix has wrong size");
  std::set<std::string> labels;
  for (const auto& g : c.generators) {
    if (g.degree < 0) fail(ErrorKind::InvalidComplex, "negative degree for '" + g.label + "'");
    if (!labels.insert(g.label).second) fail(ErrorKind::InvalidComplex, "duplicate generator '" + g.label + "'");
  }
  for (const auto& row : c.boundary)
    if (row.size() != n) fail(ErrorKind::InvalidComplex, "boundary matrix has wrong size");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (c.boundary[i][j] != 0 && c.generators[i].degree != c.generators[j].degree - 1)
        fail(ErrorKind::InvalidComplex, "boundary of '" + c.generators[j].label + "' hits '" +
                                            c.generators[i].label + "' in the wrong degree");
  for (const auto& row : qla::multiply(c.boundary, c.boundary))
    if (!qla::is_zero(row)) fail(ErrorKind::InvalidComplex, "boundary does not square to zero");
}

namespace {

// Columns of generators in `degree`.
std::vector<std::size_t> of_degree(const FilteredComplex& c, int degree) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c.generators[i].degree == degree) out.push_back(i);
  return out;
}

// Is there y in C_{d+1} with (a + dy)_i = 0 for every i outside `allowed`?
bool representable(const FilteredComplex& c, const HomologyClass& a, const std::vector<bool>& allowed) {
  auto cols = of_degree(c, a.degree + 1);
  qla::QMatrix m;
  qla::QVector rhs;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (allowed[i] || c.generators[i].degree != a.degree) continue;
    qla::QVector row;
    for (auto j : cols) row.push_back(c.boundary[i][j]);
    m.push_back(row);
    rhs.push_back(-a.cycle[i]);
  }
  if (m.empty()) return true;
  if (cols.empty()) return qla::is_zero(rhs);
  return qla::solve(m, rhs, cols.size()).has_value();
}

}  // namespace

void validate(const FilteredComplex& c, const HomologyClass& a) {
  if (a.cycle.size() != c.size()) fail(ErrorKind::DimensionMismatch, "class has wrong length");
  for (std::size_t i = 0; i < c.size(); ++i)
    if (a.cycle[i] != 0 && c.generators[i].degree != a.degree)
      fail(ErrorKind::InvalidInput, "class is not homogeneous of degree " + std::to_string(a.degree));
  if (!qla::is_zero(qla::apply(c.boundary, a.cycle))) fail(ErrorKind::InvalidInput, "chain is not a cycle");
  if (qla::is_zero(a.cycle) || representable(c, a, std::vector<bool>(c.size(), false)))
    fail(ErrorKind::NullClass, "class is zero in homology");
}

Rational c_ls(const FilteredComplex& c, const HomologyClass& a) {
  validate(c, a);
  std::set<Rational> levels;
  for (const auto& g : c.generators) levels.insert(g.level);
  for (const auto& lambda : levels) {
    std::vector<bool> allowed(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) allowed[i] = c.generators[i].level <= lambda;
    if (representable(c, a, allowed)) return lambda;
  }
  fail(ErrorKind::InvalidComplex, "internal: class not representable at the top level");
}

HomologyClass point_class(const FilteredComplex& c) {
  auto gens = of_degree(c, 0);
  if (gens.empty()) fail(ErrorKind::NullClass, "complex has no degree 0 generators");
  std::size_t best = gens.front();
  for (auto i : gens)
    if (c.generators[i].level < c.generators[best].level) best = i;
  HomologyClass a{0, qla::QVector(c.size(), 0)};
  a.cycle[best] = 1;
  return a;
}

HomologyClass fundamental_class(const FilteredComplex& c) {
  int top = c.top_degree();
  auto gens = of_degree(c, top);
  qla::QMatrix rows;  // boundary restricted to top-degree columns
  for (std::size_t i = 0; i < c.size(); ++i) {
    qla::QVector row;
    for (auto j : gens) row.push_back(c.boundary[i][j]);
    rows.push_back(row);
  }
  auto ker = qla::kernel(rows, gens.size());
  if (ker.size() != 1) fail(ErrorKind::NullClass, "top homology is not one dimensional");
  HomologyClass a{top, qla::QVector(c.size(), 0)};
  auto z = qla::primitive(ker[0]);
  for (std::size_t t = 0; t < gens.size(); ++t) a.cycle[gens[t]] = Rational(z[t]);
  return a;
}

FilteredComplex with_levels(const FilteredComplex& c, const std::vector<Rational>& levels) {
  if (levels.size() != c.size()) fail(ErrorKind::DimensionMismatch, "one level per generator required");
  FilteredComplex out = c;
  for (std::size_t i = 0; i < c.size(); ++i) out.generators[i].level = levels[i];
  return out;
}

bool lipschitz_check(const FilteredComplex& c, const HomologyClass& a, const std::vector<Rational>& deltas,
                     const Rational& epsilon) {
  if (epsilon < 0) fail(ErrorKind::InvalidInput, "epsilon must be >= 0");
  if (deltas.size() != c.size()) fail(ErrorKind::DimensionMismatch, "one delta per generator required");
  std::vector<Rational> levels;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (abs(deltas[i]) > epsilon) fail(ErrorKind::InvalidInput, "perturbation exceeds epsilon");
    levels.push_back(c.generators[i].level + deltas[i]);
  }
  return abs(c_ls(with_levels(c, levels), a) - c_ls(c, a)) <= epsilon;
}

bool sandwich_check(const FilteredComplex& c, const HomologyClass& a) {
  Rational v = c_ls(c, a);
  return c_ls(c, point_class(c)) <= v && v <= c_ls(c, fundamental_class(c));
}

namespace {

FilteredComplex make(std::vector<Generator> gens, const std::vector<std::tuple<int, int, int>>& entries) {
  FilteredComplex c;
  c.generators = std::move(gens);
  c.boundary.assign(c.size(), qla::QVector(c.size(), 0));
  for (auto [i, j, v] : entries) c.boundary[i][j] = v;
  validate(c);
  return c;
}

}  // namespace

FilteredComplex complex_circle() { return make({{"min", 0, 0}, {"max", 1, 1}}, {}); }

FilteredComplex complex_circle_two_minima() {
  return make({{"m1", 0, 0}, {"m2", 0, Rational(1, 2)}, {"s1", 1, 1}, {"s2", 1, 2}},
              {{1, 2, 1}, {0, 2, -1}, {0, 3, 1}, {1, 3, -1}});
}

FilteredComplex complex_sphere() { return make({{"min", 0, 0}, {"max", 2, 5}}, {}); }

FilteredComplex complex_sphere_cancelling() {
  return make({{"min", 0, 0}, {"m2", 0, 2}, {"s", 1, 3}, {"max", 2, 5}}, {{1, 2, 1}, {0, 2, -1}});
}

FilteredComplex complex_torus() {
  return make({{"min", 0, 0}, {"a", 1, 1}, {"b", 1, 2}, {"max", 2, 3}}, {});
}

}  // namespace hamfix
