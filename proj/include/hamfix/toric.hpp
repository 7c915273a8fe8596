#pragma once

// Toric symplectic manifolds C^n // T^k from integer weights and a level tau.

#include <cstddef>
#include <string>
#include <vector>

#include "hamfix/qlinalg.hpp"
#include "hamfix/quantum_ring.hpp"

namespace hamfix {

struct ToricSpec {
  int k = 0;
  int n = 0;
  std::vector<qla::ZVector> weights;  // n vectors in Z^k
  qla::QVector tau;                   // in Q^k
};

struct ToricOptions {
  bool allow_nonfree = false;
};

struct LatticeData {
  std::vector<std::size_t> removed;         // J = { j : tau not in cone(I_j) }
  std::vector<qla::ZVector> delta_basis;    // lattice basis of Delta(tau), in Z^k
  std::vector<qla::ZVector> chamber_rays;   // rays of the closed Kaehler chamber, in Z^k
  std::vector<qla::ZVector> effective;      // extremal effective classes xi, in Z^k, sorted
  std::vector<std::string> warnings;
};

LatticeData analyze(const ToricSpec& spec, const ToricOptions& options = {});

/// d(xi) = (<w_1, xi>, ..., <w_n, xi>)
qla::ZVector d_map(const ToricSpec& spec, const qla::ZVector& xi);
qla::ZVector first_chern(const ToricSpec& spec);  // sum of weights
Rational area(const ToricSpec& spec, const qla::ZVector& xi);  // <tau, xi>
Integer chern_pairing(const ToricSpec& spec, const qla::ZVector& xi);

bool fano_test(const ToricSpec& spec, const LatticeData& data);
Rational minimal_period(const ToricSpec& spec, const LatticeData& data);
/// gcd of <c1, xi> over the lattice Delta(tau).
Integer minimal_chern_number(const ToricSpec& spec, const LatticeData& data);
/// Whether <c1, xi> / <tau, xi> is the same on every extremal effective class.
bool is_monotone(const ToricSpec& spec, const LatticeData& data);

struct GiventalReport {
  Integer bound;
  Rational period;
  Rational max_ratio;           // max over effective rays of <c1,xi>/<tau,xi>
  qla::ZVector argmax;
};

GiventalReport givental_bound(const ToricSpec& spec, const LatticeData& data);

struct QuantumSRRelation {
  qla::ZVector xi;
  qla::ZVector d, d_plus, d_minus;
  Rational area;
};

std::vector<QuantumSRRelation> quantum_sr_relations(const ToricSpec& spec, const LatticeData& data);

/// Divisor classes [X_i] as linear forms on Delta(tau) (coordinates in delta_basis).
std::vector<qla::ZVector> divisor_classes(const ToricSpec& spec, const LatticeData& data);

/// Only for products of projective spaces (every weight a standard basis
/// vector occurring at least twice); UnsupportedFamily otherwise.
RingPtr toric_quantum_ring(const ToricSpec& spec, const LatticeData& data);

ToricSpec toric_cp(int n, const Rational& tau = 1);
ToricSpec toric_cp1xcp1(const Rational& a, const Rational& b);
/// Product of CP^{n_i} with levels tau_i.
ToricSpec toric_product(const std::vector<int>& dims, const qla::QVector& taus);
/// Hirzebruch surface: weights (1,0),(1,0),(a,1),(0,1); default tau = (a+1, 1).
ToricSpec toric_hirzebruch(int a);
ToricSpec toric_hirzebruch(int a, const qla::QVector& tau);

}  // namespace hamfix
