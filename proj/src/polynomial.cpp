#include "wittsupport/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace witt {

Monomial Monomial::variable(const std::string& name, int exponent) {
  Monomial m;
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  if (exponent > 0) m.factors_.emplace_back(name, exponent);
  return m;
}

int Monomial::degree(const std::string& var) const {
  for (const auto& [v, e] : factors_)
    if (v == var) return e;
  return 0;
}

int Monomial::total_degree() const {
  int d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  auto i = factors_.begin(), j = other.factors_.begin();
  while (i != factors_.end() || j != other.factors_.end()) {
    if (j == other.factors_.end() || (i != factors_.end() && i->first < j->first)) {
      out.factors_.push_back(*i++);
    } else if (i == factors_.end() || j->first < i->first) {
      out.factors_.push_back(*j++);
    } else {
      out.factors_.emplace_back(i->first, i->second + j->second);
      ++i, ++j;
    }
  }
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  for (const auto& [v, e] : factors_)
    if (other.degree(v) < e) return false;
  return true;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  Monomial out;
  for (const auto& [v, e] : factors_) {
    int r = e - divisor.degree(v);
    if (r < 0) throw std::domain_error("monomial does not divide");
    if (r > 0) out.factors_.emplace_back(v, r);
  }
  return out;
}

Monomial Monomial::without(const std::string& var) const {
  Monomial out;
  for (const auto& f : factors_)
    if (f.first != var) out.factors_.push_back(f);
  return out;
}

bool MonomialLess::operator()(const Monomial& a, const Monomial& b) const {
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  auto i = fa.begin(), j = fb.begin();
  while (i != fa.end() && j != fb.end()) {
    if (i->first != j->first) return i->first > j->first;  // a lacks b's variable
    if (i->second != j->second) return i->second < j->second;
    ++i, ++j;
  }
  return i == fa.end() && j != fb.end();
}

Polynomial::Polynomial(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

Polynomial Polynomial::variable(const std::string& name) {
  return term(Monomial::variable(name), 1);
}

Polynomial Polynomial::term(const Monomial& m, const Rational& c) {
  Polynomial p;
  if (c != 0) p.terms_.emplace(m, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::constant_value() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Rational(0) : it->second;
}

std::set<std::string> Polynomial::variables() const {
  std::set<std::string> out;
  for (const auto& [m, c] : terms_)
    for (const auto& f : m.factors()) out.insert(f.first);
  return out;
}

int Polynomial::degree(const std::string& var) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree(var));
  return d;
}

Rational Polynomial::leading_coefficient() const {
  return terms_.empty() ? Rational(0) : terms_.rbegin()->second;
}

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no leading monomial");
  return terms_.rbegin()->first;
}

std::map<int, Polynomial> Polynomial::coefficients_in(const std::string& var) const {
  std::map<int, Polynomial> out;
  for (const auto& [m, c] : terms_) out[m.degree(var)].add_term(m.without(var), c);
  return out;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& [m, c] : p.terms_) c = -c;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial p = *this;
  p += o;
  return p;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial p = *this;
  p -= o;
  return p;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial p;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) p.add_term(m1 * m2, c1 * c2);
  return p;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c == 0) return {};
  Polynomial p = *this;
  for (auto& [m, k] : p.terms_) k *= c;
  return p;
}

Polynomial Polynomial::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative power of a polynomial");
  Polynomial result(1), base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  return scaled(1 / leading_coefficient());
}

namespace {

// Graded order for display: higher total degree first, then lex.
bool display_before(const Monomial& a, const Monomial& b) {
  if (a.total_degree() != b.total_degree()) return a.total_degree() > b.total_degree();
  return MonomialLess{}(b, a);
}

std::string monomial_text(const Monomial& m) {
  std::string s;
  for (const auto& [v, e] : m.factors()) {
    if (!s.empty()) s += '*';
    s += v;
    if (e != 1) s += '^' + std::to_string(e);
  }
  return s;
}

}  // namespace

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Monomial, Rational>> ordered(terms_.begin(), terms_.end());
  std::sort(ordered.begin(), ordered.end(),
            [](const auto& x, const auto& y) { return display_before(x.first, y.first); });
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : ordered) {
    Rational a = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (m.is_one()) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << '*';
      os << monomial_text(m);
    }
  }
  return os.str();
}

Polynomial exact_divide(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw std::domain_error("division by the zero polynomial");
  Polynomial q, r = f;
  const Monomial& lg = g.leading_monomial();
  const Rational cg = g.leading_coefficient();
  while (!r.is_zero()) {
    const Monomial& lr = r.leading_monomial();
    if (!lg.divides(lr)) throw std::domain_error("polynomial division is not exact");
    Polynomial t = Polynomial::term(lr.quotient(lg), r.leading_coefficient() / cg);
    q += t;
    r -= t * g;
  }
  return q;
}

namespace {

Polynomial content_in(const Polynomial& f, const std::string& var);

Polynomial lead_in(const Polynomial& f, const std::string& var) {
  auto coeffs = f.coefficients_in(var);
  return coeffs.rbegin()->second;
}

Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, const std::string& var) {
  Polynomial r = a;
  const int db = b.degree(var);
  const Polynomial lb = lead_in(b, var);
  while (!r.is_zero() && r.degree(var) >= db) {
    const int dr = r.degree(var);
    Polynomial shift = lead_in(r, var) * Polynomial::term(Monomial::variable(var, dr - db), 1);
    r = lb * r - shift * b;
  }
  return r;
}

Polynomial primitive_part_in(const Polynomial& f, const std::string& var) {
  return exact_divide(f, content_in(f, var));
}

Polynomial content_in(const Polynomial& f, const std::string& var) {
  Polynomial c;
  for (const auto& [e, coeff] : f.coefficients_in(var)) {
    c = gcd(c, coeff);
    if (c.is_constant() && !c.is_zero()) return Polynomial(1);
  }
  return c;
}

}  // namespace

Polynomial gcd(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero()) return g.monic();
  if (g.is_zero()) return f.monic();
  if (f.is_constant() || g.is_constant()) return Polynomial(1);
  auto vf = f.variables(), vg = g.variables();
  std::set<std::string> all = vf;
  all.insert(vg.begin(), vg.end());
  const std::string var = *all.begin();
  if (!vf.count(var)) return gcd(f, content_in(g, var));
  if (!vg.count(var)) return gcd(content_in(f, var), g);

  Polynomial cf = content_in(f, var), cg = content_in(g, var);
  Polynomial c = gcd(cf, cg);
  Polynomial a = exact_divide(f, cf), b = exact_divide(g, cg);
  if (a.degree(var) < b.degree(var)) std::swap(a, b);
  while (true) {
    Polynomial r = pseudo_remainder(a, b, var);
    if (r.is_zero()) break;
    if (r.degree(var) == 0) {
      b = Polynomial(1);
      break;
    }
    a = b;
    b = primitive_part_in(r, var);
  }
  if (!b.is_constant()) b = primitive_part_in(b, var);
  return (c * b).monic();
}

}  // namespace witt
