#pragma once

#include "wittsupport/rational.hpp"

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace witt {

/// Power product of named indeterminates, stored sorted by name with positive exponents.
class Monomial {
 public:
  Monomial() = default;
  static Monomial variable(const std::string& name, int exponent = 1);

  const std::vector<std::pair<std::string, int>>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  int degree(const std::string& var) const;
  int total_degree() const;

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  /// Requires divides(other) == true.
  Monomial quotient(const Monomial& divisor) const;
  Monomial without(const std::string& var) const;

  bool operator==(const Monomial&) const = default;

 private:
  std::vector<std::pair<std::string, int>> factors_;
};

/// Lexicographic monomial order; variables with smaller names dominate.
struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Multivariate polynomial with rational coefficients, canonical (no zero coefficients).
class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational, MonomialLess>;

  Polynomial() = default;
  Polynomial(const Rational& c);  // NOLINT: implicit constant embedding
  Polynomial(long c) : Polynomial(Rational(c)) {}  // NOLINT
  static Polynomial variable(const std::string& name);
  static Polynomial term(const Monomial& m, const Rational& c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;
  std::set<std::string> variables() const;
  int degree(const std::string& var) const;

  /// Coefficient of the lex-leading term.
  Rational leading_coefficient() const;
  const Monomial& leading_monomial() const;

  /// View as a univariate polynomial in var with polynomial coefficients.
  std::map<int, Polynomial> coefficients_in(const std::string& var) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const Rational& c) const;
  Polynomial pow(int e) const;

  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  /// Divide by the leading coefficient (zero stays zero).
  Polynomial monic() const;

  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  Terms terms_;
};

/// Exact quotient f / g. Throws std::domain_error if g does not divide f.
Polynomial exact_divide(const Polynomial& f, const Polynomial& g);

/// Monic greatest common divisor over Q (recursive primitive remainder sequences).
Polynomial gcd(const Polynomial& f, const Polynomial& g);

}  // namespace witt
