#pragma once

#include "wittsupport/lattice.hpp"
#include "wittsupport/scalar.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace witt {

/// Finite sum of t^alpha d_u over distinct alpha, with u a nonzero Scalar n-vector and
/// d_u = sum_i u_i d_i (d_i the Euler operator t_i d/dt_i).
class WittElement {
 public:
  using Terms = std::map<LatticeVector, ScalarVector>;

  explicit WittElement(std::size_t n = 1);
  /// t^alpha d_u; a zero u gives the zero element.
  static WittElement term(const LatticeVector& alpha, const ScalarVector& u);
  /// t^alpha d_j, j zero-based.
  static WittElement basis(const LatticeVector& alpha, std::size_t j);

  std::size_t dim() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// The unique grade when exactly one term is present.
  std::optional<LatticeVector> grade() const;
  /// Stored u at alpha, or the zero vector.
  ScalarVector component(const LatticeVector& alpha) const;

  WittElement operator+(const WittElement& o) const;
  WittElement operator-(const WittElement& o) const;
  WittElement operator-() const;
  WittElement scaled(const Scalar& c) const;
  WittElement& operator+=(const WittElement& o) { return *this = *this + o; }
  bool operator==(const WittElement& o) const;

  void add_term(const LatticeVector& alpha, const ScalarVector& u);
  std::string to_string() const;

 private:
  std::size_t n_;
  Terms terms_;
};

Scalar dot(const ScalarVector& u, const LatticeVector& x);
Scalar dot(const ScalarVector& u, const ScalarVector& v);

/// [t^a d_u, t^b d_v] = t^(a+b) ((u.b) d_v - (v.a) d_u), extended bilinearly.
WittElement bracket(const WittElement& x, const WittElement& y);

enum class SubalgebraKind { Full, Cartan, VirGamma, GOfG };

struct SubalgebraSpec {
  SubalgebraKind kind = SubalgebraKind::Full;
  ScalarVector gamma;              // VirGamma
  std::vector<LatticeVector> G;    // GOfG, linearly independent

  static SubalgebraSpec full() { return {}; }
  static SubalgebraSpec cartan() { return {SubalgebraKind::Cartan, {}, {}}; }
  static SubalgebraSpec vir_gamma(ScalarVector g);
  /// Throws std::invalid_argument for a dependent basis.
  static SubalgebraSpec g_of_G(std::vector<LatticeVector> basis);
};

bool in_subalgebra(const WittElement& x, const SubalgebraSpec& s);

/// c with [t^a (g.d), t^b (g.d)] = c t^(a+b) (g.d); equals g.(b - a).
Scalar vir_bracket_coefficient(const ScalarVector& gamma, const LatticeVector& alpha,
                               const LatticeVector& beta);

/// Formal parameters named prefix1..prefixn.
ScalarVector formal_vector(const std::string& prefix, std::size_t n);

}  // namespace witt
