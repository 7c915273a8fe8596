#pragma once

// Minmax critical value selector on finite filtered chain complexes over Q.

#include <cstddef>
#include <string>
#include <vector>

#include "hamfix/qlinalg.hpp"

namespace hamfix {

struct Generator {
  std::string label;
  int degree = 0;
  Rational level;
};

struct FilteredComplex {
  std::vector<Generator> generators;
  /// boundary[i][j] = coefficient of generator i in the boundary of generator j
  qla::QMatrix boundary;

  std::size_t size() const { return generators.size(); }
  std::size_t index(const std::string& label) const;
  int top_degree() const;
};

/// Degree of the boundary, d^2 = 0, finiteness of the shape.  Throws InvalidComplex.
void validate(const FilteredComplex& complex);

struct HomologyClass {
  int degree = 0;
  qla::QVector cycle;  // indexed by all generators; support in `degree`
};

/// Checks that the chain is a cycle of one degree and not a boundary.
/// Throws InvalidInput / NullClass.
void validate(const FilteredComplex& complex, const HomologyClass& a);

/// Smallest generator level lambda such that a has a representative supported
/// on generators of level <= lambda.
Rational c_ls(const FilteredComplex& complex, const HomologyClass& a);

HomologyClass point_class(const FilteredComplex& complex);
HomologyClass fundamental_class(const FilteredComplex& complex);

FilteredComplex with_levels(const FilteredComplex& complex, const std::vector<Rational>& levels);

/// |c_ls(perturbed) - c_ls(original)| <= epsilon, for level deltas bounded by epsilon.
bool lipschitz_check(const FilteredComplex& complex, const HomologyClass& a,
                     const std::vector<Rational>& deltas, const Rational& epsilon);
/// c_ls([pt]) <= c_ls(a) <= c_ls([X]).
bool sandwich_check(const FilteredComplex& complex, const HomologyClass& a);

// Small Morse-type complexes used by examples and tests.
FilteredComplex complex_circle();
FilteredComplex complex_circle_two_minima();
FilteredComplex complex_sphere();
FilteredComplex complex_sphere_cancelling();
FilteredComplex complex_torus();

}  // namespace hamfix
