#pragma once

#include "wittsupport/rational.hpp"

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace witt {

/// Point of Z^n. Arithmetic is overflow-checked and throws std::overflow_error.
class LatticeVector {
 public:
  using value_type = std::int64_t;

  LatticeVector() = default;
  explicit LatticeVector(std::size_t n) : v_(n, 0) {}
  LatticeVector(std::initializer_list<value_type> init) : v_(init) {}
  explicit LatticeVector(std::vector<value_type> v) : v_(std::move(v)) {}

  static LatticeVector zero(std::size_t n) { return LatticeVector(n); }
  static LatticeVector unit(std::size_t n, std::size_t i);

  std::size_t size() const { return v_.size(); }
  value_type operator[](std::size_t i) const { return v_[i]; }
  value_type& operator[](std::size_t i) { return v_[i]; }
  const std::vector<value_type>& coords() const { return v_; }
  auto begin() const { return v_.begin(); }
  auto end() const { return v_.end(); }

  bool is_zero() const;
  value_type l1_norm() const;
  value_type linf_norm() const;

  LatticeVector operator+(const LatticeVector& o) const;
  LatticeVector operator-(const LatticeVector& o) const;
  LatticeVector operator-() const;
  LatticeVector operator*(value_type k) const;
  LatticeVector& operator+=(const LatticeVector& o) { return *this = *this + o; }

  auto operator<=>(const LatticeVector&) const = default;
  bool operator==(const LatticeVector&) const = default;

  std::string to_string() const;

 private:
  std::vector<value_type> v_;
};

/// Throws std::invalid_argument naming `what` when the dimensions differ.
void require_same_dim(std::size_t a, std::size_t b, const char* what);

Rational dot(const RationalVector& a, const LatticeVector& x);
Rational dot(const RationalVector& a, const RationalVector& x);
RationalVector to_rational(const LatticeVector& x);

enum class Side { Negative = -1, Zero = 0, Positive = 1 };

/// Sign of a·x. Throws for a = 0.
Side halfspace_classify(const RationalVector& a, const LatticeVector& x);

enum class Order { Gt, Geq, Eq, Lt, Leq, Incomparable };
std::string to_string(Order o);

/// Componentwise comparison: Gt when every x_i > y_i, Geq when every x_i >= y_i, and so on.
Order componentwise_order(const LatticeVector& x, const LatticeVector& y);
/// x <= y componentwise.
bool leq(const LatticeVector& x, const LatticeVector& y);

/// Closed or open half-lattice b + {x : a·x <= 0}; a has rational entries.
struct HalfSpaceSpec {
  RationalVector a;
  LatticeVector b;
};

/// Integer matrix with determinant ±1; its rows form the new Z-basis.
class UnimodularBasis {
 public:
  /// Throws std::invalid_argument unless the rows form a square matrix of determinant ±1.
  explicit UnimodularBasis(std::vector<LatticeVector> rows);
  static UnimodularBasis identity(std::size_t n);

  std::size_t dim() const { return rows_.size(); }
  const std::vector<LatticeVector>& rows() const { return rows_; }
  int determinant() const { return det_; }

  /// Coordinates y of x in the new basis: x = sum_i y_i rows[i].
  LatticeVector apply(const LatticeVector& x) const;
  /// Inverse of apply: sum_i y_i rows[i].
  LatticeVector to_standard(const LatticeVector& y) const;
  /// Basis whose rows are the rows of the inverse matrix.
  UnimodularBasis inverse() const;

  bool operator==(const UnimodularBasis& o) const { return rows_ == o.rows_; }

 private:
  UnimodularBasis(std::vector<LatticeVector> rows, std::vector<LatticeVector> inv, int det)
      : rows_(std::move(rows)), inv_(std::move(inv)), det_(det) {}
  std::vector<LatticeVector> rows_;
  std::vector<LatticeVector> inv_;  // rows of M^{-1}
  int det_ = 1;
};

/// Exact determinant of a square integer matrix.
Integer integer_determinant(const std::vector<LatticeVector>& rows);

LatticeVector apply_basis(const UnimodularBasis& m, const LatticeVector& x);

struct SemigroupGenerators {
  std::vector<LatticeVector> plus;   // beta_i^+ = e_i - k_i^+ beta
  std::vector<LatticeVector> minus;  // beta_i^- = -e_i - k_i^- beta
  std::vector<std::int64_t> k_plus;
  std::vector<std::int64_t> k_minus;
  std::int64_t max_k() const;
  /// {beta} followed by beta_1^+, beta_1^-, ..., beta_n^+, beta_n^-.
  std::vector<LatticeVector> with_beta(const LatticeVector& beta) const;
};

/// For a·beta < 0, the generators ±e_i − k beta with minimal k >= 0 landing in a·x > 0.
SemigroupGenerators semigroup_generators_for(const LatticeVector& beta, const RationalVector& a);

enum class MonoidStatus { Generated, ProvenImpossible, BoundExhausted };
std::string to_string(MonoidStatus s);

struct MonoidWitness {
  LatticeVector target;
  std::vector<std::int64_t> counts;  // multiplicity of each element of S
  std::int64_t length = 0;
};

struct MonoidResult {
  MonoidStatus status = MonoidStatus::BoundExhausted;
  std::vector<MonoidWitness> witnesses;  // one per ±e_i that was reached
  /// For ProvenImpossible: the unreachable target and a functional with a·s >= 0 on S, a·target < 0.
  std::optional<LatticeVector> unreachable;
  std::optional<RationalVector> separating_functional;
  /// Set when impossibility comes from S spanning a proper sublattice instead of a cone separation.
  bool proper_sublattice = false;
  bool generated() const { return status == MonoidStatus::Generated; }
};

/// Bounded search for nonnegative integer words in S reaching every ±e_i (length <= search_bound).
MonoidResult generates_monoid(const std::vector<LatticeVector>& s, std::int64_t search_bound);

/// Rational coordinates c with sum_i c_i basis[i] = x, or nullopt when x is outside the span.
/// Throws std::invalid_argument for a linearly dependent basis.
std::optional<RationalVector> span_coordinates(const std::vector<LatticeVector>& basis,
                                                const LatticeVector& x);
/// x lies in the subgroup generated by a linearly independent basis (empty basis: x = 0).
bool in_subgroup(const std::vector<LatticeVector>& basis, const LatticeVector& x);

/// q in the convex hull of points (boundary inclusive), decided by exact LP.
bool convex_hull_contains(const std::vector<LatticeVector>& points, const LatticeVector& q);

/// Some a with a·(x − mu) > 0 for all x in A, normalized to coprime integers, or nullopt.
std::optional<RationalVector> separating_hyperplane(const std::vector<LatticeVector>& a_set,
                                                     const LatticeVector& mu);

/// Nonzero integer vectors with entries in [-r, r] and coprime entries, ordered by l1 norm,
/// then lexicographically descending.
std::vector<LatticeVector> small_primitive_vectors(std::size_t n, int r);

}  // namespace witt
