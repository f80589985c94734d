#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace witt {

using Rational = mpq_class;
using Integer = mpz_class;
using RationalVector = std::vector<Rational>;

/// Lowest-terms string: "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Accepts "p", "p/q" with optional sign and surrounding blanks.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& q);

/// Throws std::overflow_error when q is not an integer representable in int64.
std::int64_t to_int64(const Rational& q);

std::vector<std::string> to_strings(const RationalVector& v);
RationalVector parse_rational_vector(const std::vector<std::string>& v);

/// Scale v by a positive rational so the entries become coprime integers.
RationalVector primitive_integer_multiple(const RationalVector& v);

}  // namespace witt
