#include "wittsupport/rational.hpp"

#include <limits>
#include <stdexcept>

namespace witt {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  std::size_t b = 0, e = text.size();
  while (b < e && (text[b] == ' ' || text[b] == '\t')) ++b;
  while (e > b && (text[e - 1] == ' ' || text[e - 1] == '\t')) --e;
  std::string s(text.substr(b, e - b));
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = s.find('/');
  auto valid_int = [](std::string_view t) {
    std::size_t i = (!t.empty() && t.front() == '-') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  if (slash == std::string::npos) {
    if (!valid_int(s)) throw std::invalid_argument("malformed rational literal: " + s);
  } else {
    std::string_view num(s.data(), slash), den(s.data() + slash + 1, s.size() - slash - 1);
    if (!valid_int(num) || !valid_int(den) || den.front() == '-')
      throw std::invalid_argument("malformed rational literal: " + s);
  }
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational literal: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

std::int64_t to_int64(const Rational& q) {
  if (!is_integer(q)) throw std::invalid_argument("not an integer: " + q.get_str());
  const Integer& z = q.get_num();
  if (!z.fits_slong_p()) throw std::overflow_error("integer exceeds int64: " + z.get_str());
  return z.get_si();
}

std::vector<std::string> to_strings(const RationalVector& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

RationalVector parse_rational_vector(const std::vector<std::string>& v) {
  RationalVector out;
  out.reserve(v.size());
  for (const auto& s : v) out.push_back(parse_rational(s));
  return out;
}

RationalVector primitive_integer_multiple(const RationalVector& v) {
  Integer lcm_den = 1;
  for (const auto& q : v) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), q.get_den().get_mpz_t());
  std::vector<Integer> ints;
  ints.reserve(v.size());
  Integer g = 0;
  for (const auto& q : v) {
    Integer z = q.get_num() * (lcm_den / q.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    ints.push_back(z);
  }
  RationalVector out;
  out.reserve(v.size());
  for (auto& z : ints) out.emplace_back(g == 0 ? z : Integer(z / g));
  return out;
}

}  // namespace witt
