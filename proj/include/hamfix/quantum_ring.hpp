#pragma once

// Small quantum homology rings given by explicit structure constants.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hamfix/novikov.hpp"
#include "hamfix/qlinalg.hpp"

namespace hamfix {

struct BasisElement {
  std::string label;
  int degree = 0;  // homology degree, even, in [0, 2n]
};

class QuantumRing;
using RingPtr = std::shared_ptr<const QuantumRing>;

class QuantumRing {
 public:
  using Product = std::vector<Novikov>;  // coefficient per basis index

  struct Data {
    std::vector<BasisElement> basis;
    int dim_n = 0;
    Rational period;
    std::string fundamental;
    std::string point;
    /// table[i][j] = basis_i * basis_j
    std::vector<std::vector<Product>> table;
    /// Poincare pairing of basis classes; derived from the classical part of
    /// the table when absent.
    std::optional<qla::QMatrix> pairing;
    /// <c1, A> / <omega, A>, used for degree bookkeeping when present.
    std::optional<Rational> chern_per_area;
  };

  /// Validates shape, labels, degrees and unity.
  explicit QuantumRing(Data data);

  std::size_t dim() const { return data_.basis.size(); }
  int dim_n() const { return data_.dim_n; }
  const Rational& period() const { return data_.period; }
  const std::vector<BasisElement>& basis() const { return data_.basis; }
  const std::string& label(std::size_t i) const { return data_.basis[i].label; }
  int degree(std::size_t i) const { return data_.basis[i].degree; }
  std::size_t index(const std::string& label) const;
  std::optional<std::size_t> find(const std::string& label) const;
  std::size_t fundamental() const { return fundamental_; }
  std::size_t point() const { return point_; }
  const Product& structure(std::size_t i, std::size_t j) const { return data_.table[i][j]; }
  const qla::QMatrix& pairing() const { return pairing_; }
  const std::optional<Rational>& chern_per_area() const { return data_.chern_per_area; }
  const Data& data() const { return data_; }
  /// Basis classes of degree < 2n.
  std::vector<std::size_t> proper_classes() const;
  /// True when every structure-constant exponent is >= 0.
  bool exponents_nonnegative() const { return nonneg_; }

 private:
  Data data_;
  std::map<std::string, std::size_t> index_;
  std::size_t fundamental_ = 0, point_ = 0;
  qla::QMatrix pairing_;
  bool nonneg_ = true;
};

class GradedClass {
 public:
  GradedClass() = default;
  GradedClass(RingPtr ring, std::vector<Novikov> coords);

  static GradedClass zero(RingPtr ring);
  static GradedClass basis(RingPtr ring, std::size_t i, Novikov coef = Novikov(Rational(1)));
  static GradedClass basis(RingPtr ring, const std::string& label,
                           Novikov coef = Novikov(Rational(1)));

  const RingPtr& ring() const { return ring_; }
  const std::vector<Novikov>& coords() const { return coords_; }
  const Novikov& coord(std::size_t i) const { return coords_[i]; }
  bool is_zero() const;

  friend GradedClass operator+(const GradedClass& a, const GradedClass& b);
  friend GradedClass operator-(const GradedClass& a, const GradedClass& b);
  GradedClass scaled(const Novikov& s) const;
  friend bool operator==(const GradedClass& a, const GradedClass& b);

 private:
  RingPtr ring_;
  std::vector<Novikov> coords_;
};

GradedClass product(const GradedClass& a, const GradedClass& b);
GradedClass power(const GradedClass& a, int k);
Valuation i_nu(const GradedClass& a);
Rational pair_pi(const GradedClass& a, const GradedClass& b);
/// "2*s(1) + T^4*s()" style rendering, basis order.
std::string to_string(const GradedClass& a);

// Presets.
RingPtr qh_projective(int n, const Rational& p);
RingPtr qh_grassmannian(int k, int n, const Rational& p);
RingPtr tensor_product(const QuantumRing& a, const QuantumRing& b);
/// Same basis with every quantum (T^g, g != 0) term removed.
RingPtr strip_quantum(const QuantumRing& ring);

/// Partitions in a k x (n-k) box, graded by size then reverse lexicographic.
std::vector<std::vector<int>> box_partitions(int k, int n);
std::string schubert_label(const std::vector<int>& partition);

// Consistency checks; each returns a description of the first failure.
std::optional<std::string> check_associativity(const QuantumRing& ring);
std::optional<std::string> check_commutativity(const QuantumRing& ring);
std::optional<std::string> check_unity(const QuantumRing& ring);
std::optional<std::string> check_degrees(const QuantumRing& ring);

struct CuplengthReport {
  Rational g;
  int lower_bound = 0;
  std::vector<std::string> witness;
};

/// Largest k+1 (k <= max_len) such that a product of k proper basis classes has
/// a nonzero T^g component.  A lower bound for the quantum cuplength.
CuplengthReport quantum_cuplength(const QuantumRing& ring, const Rational& g, int max_len);

enum class NilpotenceVerdict { ProvenNonnilpotent, NonzeroUpToLmax, NilpotentAt };

struct NilpotenceReport {
  NilpotenceVerdict verdict = NilpotenceVerdict::NonzeroUpToLmax;
  int level = 0;  // l for NilpotentAt, the checked bound otherwise
  std::string rule;  // "periodic" or "dimension"
  int k = 0, m = 0;  // periodic rule: a^(k+m) = z T^c a^k
  Rational z, c;
};

std::string to_string(NilpotenceVerdict v);
NilpotenceReport nonnilpotent_test(const GradedClass& a, int l_max);

struct Factorization {
  int length = 0;
  Integer order;  // g = -nu(lambda) / p
  Integer bound;  // ceil(length / g)
  Novikov lambda;  // [M]-coefficient of the product
  std::vector<std::string> factors;
};

/// Best principal fundamental factorization by proper basis classes.
std::optional<Factorization> pfqf_search(const QuantumRing& ring, int max_len);

}  // namespace hamfix
