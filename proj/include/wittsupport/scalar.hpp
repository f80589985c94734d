#pragma once

#include "wittsupport/polynomial.hpp"
#include "wittsupport/rational.hpp"

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace witt {

/// Reduced quotient of polynomials; the denominator is monic and coprime to the numerator.
struct RationalFunction {
  Polynomial num;
  Polynomial den{1};
};

/// Exact element of Q or of Q(x_1, ..., x_k) in named indeterminates.
///
/// Rational values take a fast path; anything non-constant is kept as a gcd-reduced
/// rational function, so equality is structural.
class Scalar {
 public:
  Scalar() = default;
  Scalar(const Rational& q) : q_(q) {}  // NOLINT
  Scalar(long v) : q_(v) {}             // NOLINT
  Scalar(int v) : q_(v) {}              // NOLINT
  static Scalar variable(const std::string& name);
  static Scalar fraction(const Polynomial& num, const Polynomial& den);

  /// Parses rational literals, identifiers, + - * / ^ (integer exponents) and parentheses.
  static Scalar parse(std::string_view text);

  bool is_zero() const { return !f_ && q_ == 0; }
  bool is_rational() const { return !f_; }
  /// Throws std::domain_error if the value is not constant.
  const Rational& rational() const;
  Polynomial numerator() const;
  Polynomial denominator() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  /// Throws std::domain_error on division by zero.
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  static Scalar from_parts(Polynomial num, Polynomial den);
  Rational q_{0};
  std::shared_ptr<const RationalFunction> f_;
};

using ScalarVector = std::vector<Scalar>;

std::vector<std::string> to_strings(const ScalarVector& v);
ScalarVector parse_scalar_vector(const std::vector<std::string>& v);
ScalarVector to_scalars(const RationalVector& v);
bool is_zero(const ScalarVector& v);

}  // namespace witt
