#pragma once

// Linear algebra over the Novikov field with a non-Archimedean filtration
// ell(sum x_i v_i) = max_i (level_i + nu(x_i)) on a reference basis v_i.

#include <cstddef>
#include <optional>
#include <random>
#include <vector>

#include "hamfix/novikov.hpp"
#include "hamfix/qlinalg.hpp"

namespace hamfix::na {

using NVector = std::vector<Novikov>;
using NMatrix = std::vector<NVector>;  // row major, dim_out x dim_in

struct FilteredSpace {
  std::vector<Rational> levels;
  std::size_t dim() const { return levels.size(); }
};

Valuation ell(const FilteredSpace& space, const NVector& v);

/// Rational vector of the coefficients of v sitting exactly at level ell(v):
/// coordinate i is the coefficient of T^(level_i - ell(v)) in x_i.  Requires v != 0.
qla::QVector normalized_lead(const FilteredSpace& space, const NVector& v);

/// Deterministic orthogonality certificate: the normalized leads of the family
/// are linearly independent over Q.
bool lead_certificate(const FilteredSpace& space, const std::vector<NVector>& family);

/// Random check of ell(sum a_i w_i) == max_i ell(a_i w_i) on `samples`
/// coefficient tuples with small random support.
bool sampled_orthogonality(const FilteredSpace& space, const std::vector<NVector>& family,
                           std::mt19937_64& rng, int samples);

NVector unit_vector(std::size_t dim, std::size_t i);
NVector apply(const NMatrix& m, const NVector& v);
NVector add(const NVector& a, const NVector& b);
NVector scale(const Novikov& s, const NVector& v);
bool is_zero(const NVector& v);

/// Rank over the Novikov field (fraction-free elimination).
std::size_t rank(const std::vector<NVector>& rows);
Novikov determinant(const NMatrix& m);
/// Basis of { x : m x = 0 } with `cols` unknowns.
std::vector<NVector> kernel(const NMatrix& m, std::size_t cols);

struct GramSchmidtResult {
  std::vector<NVector> vectors;
  /// vectors[k] = sum_j change_of_basis[k][j] * input[j]
  NMatrix change_of_basis;
};

/// Orthogonalizes an independent family.  The next vector processed is the
/// remaining one of largest ell (ties: lowest index); it is reduced against the
/// processed ones until its lead is independent of theirs.
GramSchmidtResult gram_schmidt(const FilteredSpace& space, const std::vector<NVector>& vectors,
                               int max_iterations = 10000);

/// Reference-basis vectors completing an orthogonal basis of `subspace`.
std::vector<NVector> orthogonal_complement(const FilteredSpace& space,
                                           const std::vector<NVector>& subspace);

struct SvdResult {
  std::vector<NVector> basis_v;
  std::vector<NVector> basis_w;
  std::size_t r = 0;
};

/// Orthogonal bases (x_i) of V and (y_i) of W with L x_i = y_i for i < r,
/// L x_i = 0 for i >= r, and x_r = xi.
SvdResult svd_with_kernel_vector(const NMatrix& l, const FilteredSpace& space_v,
                                 const FilteredSpace& space_w, const NVector& xi,
                                 int max_iterations = 10000);

}  // namespace hamfix::na
