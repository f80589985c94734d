#include "wittsupport/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace witt {

Scalar Scalar::variable(const std::string& name) {
  return from_parts(Polynomial::variable(name), Polynomial(1));
}

Scalar Scalar::fraction(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  return from_parts(num, den);
}

Scalar Scalar::from_parts(Polynomial num, Polynomial den) {
  if (num.is_zero()) return Scalar();
  if (den.is_constant()) {
    Rational d = den.constant_value();
    if (num.is_constant()) return Scalar(Rational(num.constant_value() / d));
    num = num.scaled(1 / d);
    den = Polynomial(1);
  } else {
    Polynomial g = gcd(num, den);
    if (!g.is_constant()) {
      num = exact_divide(num, g);
      den = exact_divide(den, g);
    }
    Rational lc = den.leading_coefficient();
    num = num.scaled(1 / lc);
    den = den.scaled(1 / lc);
    if (den.is_constant() && num.is_constant()) return Scalar(num.constant_value());
  }
  Scalar s;
  s.f_ = std::make_shared<const RationalFunction>(RationalFunction{std::move(num), std::move(den)});
  return s;
}

const Rational& Scalar::rational() const {
  if (f_) throw std::domain_error("scalar is not a rational constant: " + to_string());
  return q_;
}

Polynomial Scalar::numerator() const { return f_ ? f_->num : Polynomial(q_); }
Polynomial Scalar::denominator() const { return f_ ? f_->den : Polynomial(1); }

Scalar Scalar::operator-() const {
  if (!f_) return Scalar(Rational(-q_));
  Scalar s;
  s.f_ = std::make_shared<const RationalFunction>(RationalFunction{-f_->num, f_->den});
  return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
  if (!f_ && !o.f_) return Scalar(Rational(q_ + o.q_));
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  Polynomial a = numerator(), b = denominator(), c = o.numerator(), d = o.denominator();
  if (b == d) return from_parts(a + c, b);
  return from_parts(a * d + c * b, b * d);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  if (!f_ && !o.f_) return Scalar(Rational(q_ * o.q_));
  if (is_zero() || o.is_zero()) return Scalar();
  if (!o.f_) return from_parts(numerator().scaled(o.q_), denominator());
  if (!f_) return from_parts(o.numerator().scaled(q_), o.denominator());
  return from_parts(numerator() * o.numerator(), denominator() * o.denominator());
}

Scalar Scalar::operator/(const Scalar& o) const {
  if (o.is_zero()) throw std::domain_error("division by zero scalar");
  if (!f_ && !o.f_) return Scalar(Rational(q_ / o.q_));
  return from_parts(numerator() * o.denominator(), denominator() * o.numerator());
}

bool Scalar::operator==(const Scalar& o) const {
  if (!f_ && !o.f_) return q_ == o.q_;
  if (!f_ || !o.f_) return false;
  return f_->num == o.f_->num && f_->den == o.f_->den;
}

std::string Scalar::to_string() const {
  if (!f_) return witt::to_string(q_);
  std::string n = f_->num.to_string();
  if (f_->den == Polynomial(1)) return n;
  return "(" + n + ")/(" + f_->den.to_string() + ")";
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Scalar parse_all() {
    Scalar v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("cannot parse scalar '" + std::string(s_) + "': " + why);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  static bool ident_start(unsigned char c) { return std::isalpha(c) || c == '_' || c >= 0x80; }
  static bool ident_char(unsigned char c) { return ident_start(c) || std::isdigit(c); }

  Scalar expr() {
    Scalar v = term();
    while (true) {
      if (eat('+')) v = v + term();
      else if (eat('-')) v = v - term();
      else return v;
    }
  }
  Scalar term() {
    Scalar v = unary();
    while (true) {
      if (eat('*')) v = v * unary();
      else if (eat('/')) v = v / unary();
      else return v;
    }
  }
  Scalar unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }
  Scalar power() {
    Scalar base = atom();
    if (eat('^')) {
      skip();
      bool neg = eat('-');
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected integer exponent");
      int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
      Scalar r(1);
      for (int i = 0; i < e; ++i) r = r * base;
      return neg ? Scalar(1) / r : r;
    }
    return base;
  }
  Scalar atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    unsigned char c = static_cast<unsigned char>(s_[pos_]);
    if (c == '(') {
      ++pos_;
      Scalar v = expr();
      if (!eat(')')) fail("missing ')'");
      return v;
    }
    if (std::isdigit(c)) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Scalar(parse_rational(s_.substr(start, pos_ - start)));
    }
    if (ident_start(c)) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && ident_char(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Scalar::variable(std::string(s_.substr(start, pos_ - start)));
    }
    fail(std::string("unexpected character '") + static_cast<char>(c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar Scalar::parse(std::string_view text) { return Parser(text).parse_all(); }

std::vector<std::string> to_strings(const ScalarVector& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& s : v) out.push_back(s.to_string());
  return out;
}

ScalarVector parse_scalar_vector(const std::vector<std::string>& v) {
  ScalarVector out;
  out.reserve(v.size());
  for (const auto& s : v) out.push_back(Scalar::parse(s));
  return out;
}

ScalarVector to_scalars(const RationalVector& v) { return ScalarVector(v.begin(), v.end()); }

bool is_zero(const ScalarVector& v) {
  for (const auto& s : v)
    if (!s.is_zero()) return false;
  return true;
}

}  // namespace witt
