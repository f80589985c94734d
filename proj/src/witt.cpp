#include "wittsupport/witt.hpp"

#include <sstream>
#include <stdexcept>

namespace witt {

WittElement::WittElement(std::size_t n) : n_(n) {
  if (n == 0) throw std::invalid_argument("Witt algebra rank must be at least 1");
}

WittElement WittElement::term(const LatticeVector& alpha, const ScalarVector& u) {
  WittElement x(alpha.size());
  x.add_term(alpha, u);
  return x;
}

WittElement WittElement::basis(const LatticeVector& alpha, std::size_t j) {
  if (j >= alpha.size()) throw std::out_of_range("derivation index out of range");
  ScalarVector u(alpha.size());
  u[j] = 1;
  return term(alpha, u);
}

std::optional<LatticeVector> WittElement::grade() const {
  if (terms_.size() != 1) return std::nullopt;
  return terms_.begin()->first;
}

ScalarVector WittElement::component(const LatticeVector& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? ScalarVector(n_) : it->second;
}

void WittElement::add_term(const LatticeVector& alpha, const ScalarVector& u) {
  require_same_dim(alpha.size(), n_, "Witt term grade");
  require_same_dim(u.size(), n_, "Witt term coefficients");
  auto [it, fresh] = terms_.try_emplace(alpha, u);
  if (!fresh)
    for (std::size_t i = 0; i < n_; ++i) it->second[i] += u[i];
  if (witt::is_zero(it->second)) terms_.erase(it);
}

WittElement WittElement::operator+(const WittElement& o) const {
  require_same_dim(n_, o.n_, "Witt sum");
  WittElement r = *this;
  for (const auto& [a, u] : o.terms_) r.add_term(a, u);
  return r;
}

WittElement WittElement::operator-() const { return scaled(-1); }
WittElement WittElement::operator-(const WittElement& o) const { return *this + (-o); }

WittElement WittElement::scaled(const Scalar& c) const {
  WittElement r(n_);
  if (c.is_zero()) return r;
  for (const auto& [a, u] : terms_) {
    ScalarVector v(u);
    for (auto& s : v) s = s * c;
    r.terms_.emplace(a, std::move(v));
  }
  return r;
}

bool WittElement::operator==(const WittElement& o) const {
  return n_ == o.n_ && terms_ == o.terms_;
}

std::string WittElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [a, u] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "t^" << a.to_string() << "*d[";
    for (std::size_t i = 0; i < u.size(); ++i) os << (i ? "," : "") << u[i].to_string();
    os << ']';
  }
  return os.str();
}

Scalar dot(const ScalarVector& u, const LatticeVector& x) {
  require_same_dim(u.size(), x.size(), "dot");
  Scalar s;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (x[i] != 0) s += u[i] * Scalar(static_cast<long>(x[i]));
  return s;
}

Scalar dot(const ScalarVector& u, const ScalarVector& v) {
  require_same_dim(u.size(), v.size(), "dot");
  Scalar s;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
  return s;
}

WittElement bracket(const WittElement& x, const WittElement& y) {
  require_same_dim(x.dim(), y.dim(), "bracket");
  const std::size_t n = x.dim();
  WittElement r(n);
  for (const auto& [a, u] : x.terms())
    for (const auto& [b, v] : y.terms()) {
      Scalar ub = dot(u, b), va = dot(v, a);
      ScalarVector w(n);
      for (std::size_t i = 0; i < n; ++i) w[i] = ub * v[i] - va * u[i];
      r.add_term(a + b, w);
    }
  return r;
}

SubalgebraSpec SubalgebraSpec::vir_gamma(ScalarVector g) {
  if (is_zero(g)) throw std::invalid_argument("Vir(gamma) needs a nonzero gamma");
  return {SubalgebraKind::VirGamma, std::move(g), {}};
}

SubalgebraSpec SubalgebraSpec::g_of_G(std::vector<LatticeVector> basis) {
  if (!basis.empty()) {
    // span_coordinates rejects dependent bases.
    (void)span_coordinates(basis, LatticeVector::zero(basis.front().size()));
  }
  return {SubalgebraKind::GOfG, {}, std::move(basis)};
}

bool in_subalgebra(const WittElement& x, const SubalgebraSpec& s) {
  switch (s.kind) {
    case SubalgebraKind::Full: return true;
    case SubalgebraKind::Cartan:
      for (const auto& [a, u] : x.terms())
        if (!a.is_zero()) return false;
      return true;
    case SubalgebraKind::GOfG:
      for (const auto& [a, u] : x.terms())
        if (!in_subgroup(s.G, a)) return false;
      return true;
    case SubalgebraKind::VirGamma: {
      require_same_dim(s.gamma.size(), x.dim(), "in_subalgebra");
      std::size_t p = 0;
      while (s.gamma[p].is_zero()) ++p;
      for (const auto& [a, u] : x.terms()) {
        Scalar c = u[p] / s.gamma[p];
        for (std::size_t i = 0; i < u.size(); ++i)
          if (u[i] != c * s.gamma[i]) return false;
      }
      return true;
    }
  }
  return false;
}

Scalar vir_bracket_coefficient(const ScalarVector& gamma, const LatticeVector& alpha,
                               const LatticeVector& beta) {
  return dot(gamma, beta - alpha);
}

ScalarVector formal_vector(const std::string& prefix, std::size_t n) {
  ScalarVector v;
  for (std::size_t i = 1; i <= n; ++i) v.push_back(Scalar::variable(prefix + std::to_string(i)));
  return v;
}

}  // namespace witt
