#pragma once

// Dense exact linear algebra over Q and Z, shared by the root-system, toric
// and chain-complex code.

#include <cstddef>
#include <optional>
#include <vector>

#include "hamfix/rational.hpp"

namespace hamfix::qla {

using QVector = std::vector<Rational>;
using QMatrix = std::vector<QVector>;  // row major
using ZVector = std::vector<Integer>;

Rational dot(const QVector& a, const QVector& b);
QVector add(const QVector& a, const QVector& b);
QVector sub(const QVector& a, const QVector& b);
QVector scale(const Rational& s, const QVector& a);
bool is_zero(const QVector& a);

QMatrix identity(std::size_t n);
QMatrix multiply(const QMatrix& a, const QMatrix& b);
QVector apply(const QMatrix& a, const QVector& x);
QMatrix transpose(const QMatrix& a, std::size_t cols_if_empty = 0);

std::size_t rank(QMatrix rows);
Rational determinant(QMatrix a);

/// Basis of { x : a x = 0 } where a has `cols` columns.
QMatrix kernel(const QMatrix& a, std::size_t cols);

/// Some x with a x = b, if one exists.
std::optional<QVector> solve(const QMatrix& a, const QVector& b, std::size_t cols);

/// Coefficients c with sum_i c_i rows[i] = target, if target lies in the row span.
std::optional<QVector> express_in_rows(const QMatrix& rows, const QVector& target);

std::optional<QMatrix> inverse(const QMatrix& a);

/// Scales a nonzero rational vector to the primitive integer vector on its ray.
ZVector primitive(const QVector& v);
QVector to_rational(const ZVector& v);

/// Lattice basis of { x in Z^cols : a x = 0 } (a integral).
std::vector<ZVector> integer_kernel(const std::vector<ZVector>& a, std::size_t cols);

/// Extreme rays of the pointed polyhedral cone { y : <a_i, y> >= 0 } in Q^dim,
/// returned as primitive integer vectors in lexicographic order.  Brute force
/// over (dim-1)-subsets of the inequalities; meant for dim <= 4.
std::vector<ZVector> cone_rays(const QMatrix& inequalities, std::size_t dim);

/// Whether target is a nonnegative combination of generators (exact).
bool in_cone(const QMatrix& generators, const QVector& target);

}  // namespace hamfix::qla
