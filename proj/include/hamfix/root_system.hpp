#pragma once

// Root systems of compact simple Lie groups in fixed coordinate realizations,
// the longest Weyl element, and the coadjoint-orbit fixed point bound.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hamfix/qlinalg.hpp"

namespace hamfix {

enum class LieType { A, B, C, D, E6, E7, E8, F4, G2 };

LieType parse_lie_type(const std::string& name);
std::string to_string(LieType t);

struct RootSystem {
  LieType type;
  int rank = 0;
  std::size_t ambient = 0;
  std::vector<qla::QVector> roots;     // all roots
  std::vector<std::size_t> positive;   // indices into roots
  std::vector<std::size_t> simple;     // indices into roots
  std::map<qla::QVector, std::size_t> lookup;

  Rational inner(const qla::QVector& a, const qla::QVector& b) const { return qla::dot(a, b); }
  /// <lambda, alpha^vee> = 2 (lambda, alpha) / (alpha, alpha)
  Rational coroot_pairing(const qla::QVector& lambda, const qla::QVector& alpha) const;
  qla::QVector reflect(const qla::QVector& alpha, const qla::QVector& x) const;
  qla::QMatrix reflection_matrix(const qla::QVector& alpha) const;
  std::optional<std::size_t> find_root(const qla::QVector& v) const;
  bool is_positive(std::size_t root_index) const;
};

/// Accepted pairs: A r>=1, B r>=2, C r>=3 (C2 = B2 up to relabeling is also
/// accepted), D r>=3, E6/E7/E8, F4, G2 (rank argument ignored for the
/// exceptional types except as a consistency check when nonzero).
RootSystem build_root_system(LieType type, int rank);

qla::QMatrix longest_element(const RootSystem& rs);

struct OrthoDecomposition {
  std::vector<std::size_t> roots;  // indices into rs.roots, ascending
};

/// Pairwise orthogonal positive roots whose reflections multiply to w0.
/// Search explores roots in increasing |<lambda, alpha^vee>| (lambda may be
/// empty: index order), stops after `limit`, and sorts the result by theta then
/// lexicographically by root index.  Throws NoneFound if nothing exists.
std::vector<OrthoDecomposition> orthogonal_decompositions(const RootSystem& rs, std::size_t limit,
                                                          const qla::QVector& lambda = {});

bool verify_decomposition(const RootSystem& rs, const OrthoDecomposition& dec, const qla::QMatrix& w0);

struct OrbitSpec {
  RootSystem rs;
  qla::QVector lambda;
};

/// Moves lambda into the dominant chamber by simple reflections.
qla::QVector dominant(const RootSystem& rs, const qla::QVector& lambda);

Rational theta_upper_bound(const OrbitSpec& orbit, const OrthoDecomposition& dec);

struct PeriodReport {
  Rational period;             // gcd over simple roots with nonzero pairing
  Rational single_root_min;    // min over those pairings of |<lambda, alpha^vee>|
  bool formulas_differ = false;
};

PeriodReport symplectic_period(const OrbitSpec& orbit);
int orbit_cuplength(const OrbitSpec& orbit);
/// kappa > 0 with proj(lambda) = kappa * (sum of the roots alpha with <lambda, alpha^vee> > 0).
std::optional<Rational> monotone_check(const OrbitSpec& orbit);

struct OrbitReport {
  qla::QVector lambda;          // dominant representative
  PeriodReport period;
  int cuplength = 0;
  Rational kappa;
  std::vector<OrthoDecomposition> decompositions;
  std::vector<Rational> thetas;
  Integer bound;
  std::size_t best = 0;         // index of the decomposition realizing the bound
};

/// sup over found decompositions of ceil(p * cuplength / theta).  Throws
/// NotMonotone when the orbit is not monotone.
OrbitReport orbit_fixed_point_bound(const OrbitSpec& orbit, std::size_t search_limit = 64);

/// U(n) orbits of partial flag manifolds F(n_1 < ... < n_r < n) with the
/// monotone weight normalization lambda_block(i) = n - n_{i-1} - n_i.
qla::QVector partial_flag_lambda(const std::vector<int>& dims, int n);
OrbitSpec unitary_orbit(const qla::QVector& lambda);

OrbitSpec preset_projective(int n);          // CP^(n-1) as a U(n) orbit
OrbitSpec preset_grassmannian(int k, int n);
OrbitSpec preset_flag_1_n1(int n);           // F(1, n-1, n)
OrbitSpec preset_block_flag(int k, int m);   // U(mk) / U(k)^m
OrbitSpec preset_complete_flag(int n);
OrbitSpec preset_partial_flag(const std::vector<int>& dims, int n);

}  // namespace hamfix
