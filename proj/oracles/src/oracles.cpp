#include "wittoracles/oracles.hpp"

#include <functional>
#include <stdexcept>

namespace witt::oracle {

LaurentPolynomial apply_derivation(const Exponent& alpha, const std::vector<mpq_class>& u, const LaurentPolynomial& f) {
  LaurentPolynomial out;
  for (const auto& [m, c] : f) {
    // t_i d/dt_i t^m = m_i t^m
    mpq_class w = 0;
    for (std::size_t i = 0; i < m.size(); ++i) w += u[i] * m[i];
    if (w == 0) continue;
    Exponent e(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) e[i] = m[i] + alpha[i];
    mpq_class& slot = out[e];
    slot += w * c;
    if (slot == 0) out.erase(e);
  }
  return out;
}

LaurentPolynomial Derivation::operator()(const LaurentPolynomial& f) const {
  LaurentPolynomial out;
  for (const auto& [alpha, u] : terms) {
    for (const auto& [e, c] : apply_derivation(alpha, u, f)) {
      mpq_class& slot = out[e];
      slot += c;
      if (slot == 0) out.erase(e);
    }
  }
  return out;
}

LaurentPolynomial subtract(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial out = a;
  for (const auto& [e, c] : b) {
    mpq_class& slot = out[e];
    slot -= c;
    if (slot == 0) out.erase(e);
  }
  return out;
}

std::vector<std::uint64_t> partition_numbers(int m) {
  std::vector<std::uint64_t> p(static_cast<std::size_t>(m) + 1, 0);
  p[0] = 1;
  for (int n = 1; n <= m; ++n) {
    std::int64_t s = 0;
    for (int k = 1;; ++k) {
      int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > n) break;
      int sign = (k % 2) ? 1 : -1;
      s += sign * static_cast<std::int64_t>(p[n - g1]);
      if (g2 <= n) s += sign * static_cast<std::int64_t>(p[n - g2]);
    }
    p[n] = static_cast<std::uint64_t>(s);
  }
  return p;
}

std::vector<std::vector<int>> partitions(int d, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rem, int maxpart) {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    for (int part = std::min(rem, maxpart); part >= 1; --part) {
      cur.push_back(part);
      rec(rem - part, part);
      cur.pop_back();
    }
  };
  rec(d, k);
  return out;
}

bool hull_contains_bruteforce(const std::vector<std::vector<long>>& points, const std::vector<long>& q, int max_den) {
  const std::size_t m = points.size();
  if (m == 0) throw std::invalid_argument("empty point set");
  for (int D = 1; D <= max_den; ++D) {
    std::vector<int> k(m, 0);
    // every composition of D into m nonnegative parts
    std::function<bool(std::size_t, int)> rec = [&](std::size_t i, int rem) -> bool {
      if (i + 1 == m) {
        k[i] = rem;
        for (std::size_t c = 0; c < q.size(); ++c) {
          long s = 0;
          for (std::size_t j = 0; j < m; ++j) s += k[j] * points[j][c];
          if (s != static_cast<long>(D) * q[c]) return false;
        }
        return true;
      }
      for (int v = 0; v <= rem; ++v) {
        k[i] = v;
        if (rec(i + 1, rem - v)) return true;
      }
      return false;
    };
    if (rec(0, D)) return true;
  }
  return false;
}

}  // namespace witt::oracle
