#include "wittsupport/exact_lp.hpp"

#include <stdexcept>

namespace witt::lp {

std::optional<RationalVector> find_feasible(const Problem& p) {
  const std::size_t nv = p.num_vars;
  std::vector<bool> is_free = p.free.empty() ? std::vector<bool>(nv, false) : p.free;
  if (is_free.size() != nv) throw std::invalid_argument("lp: free-flag size mismatch");

  // Standard form columns: x+ for every variable, x- for free ones, one slack per inequality.
  std::vector<std::size_t> minus_col(nv, SIZE_MAX);
  std::size_t ncols = nv;
  for (std::size_t j = 0; j < nv; ++j)
    if (is_free[j]) minus_col[j] = ncols++;
  std::vector<std::size_t> slack_col(p.constraints.size(), SIZE_MAX);
  for (std::size_t i = 0; i < p.constraints.size(); ++i)
    if (p.constraints[i].rel != Relation::Eq) slack_col[i] = ncols++;

  const std::size_t m = p.constraints.size();
  const std::size_t total = ncols + m;  // artificials last
  std::vector<RationalVector> tab(m, RationalVector(total + 1, 0));
  for (std::size_t i = 0; i < m; ++i) {
    const auto& c = p.constraints[i];
    if (c.coeffs.size() != nv) throw std::invalid_argument("lp: coefficient size mismatch");
    auto& row = tab[i];
    for (std::size_t j = 0; j < nv; ++j) {
      row[j] = c.coeffs[j];
      if (is_free[j]) row[minus_col[j]] = -c.coeffs[j];
    }
    if (c.rel == Relation::Leq) row[slack_col[i]] = 1;
    if (c.rel == Relation::Geq) row[slack_col[i]] = -1;
    row[total] = c.rhs;
    if (row[total] < 0)
      for (auto& v : row) v = -v;
    row[ncols + i] = 1;
  }

  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = ncols + i;

  // Reduced costs for minimizing the sum of artificials.
  RationalVector cost(total + 1, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= total; ++j)
      if (j < ncols || j == total) cost[j] -= tab[i][j];

  while (true) {
    std::size_t enter = SIZE_MAX;
    for (std::size_t j = 0; j < total; ++j)
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    if (enter == SIZE_MAX) break;
    std::size_t leave = SIZE_MAX;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (tab[i][enter] <= 0) continue;
      Rational ratio = tab[i][total] / tab[i][enter];
      if (leave == SIZE_MAX || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == SIZE_MAX) break;  // unbounded direction cannot occur in phase one
    Rational piv = tab[leave][enter];
    for (auto& v : tab[leave]) v /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || tab[i][enter] == 0) continue;
      Rational f = tab[i][enter];
      for (std::size_t j = 0; j <= total; ++j)
        if (tab[leave][j] != 0) tab[i][j] -= f * tab[leave][j];
    }
    if (cost[enter] != 0) {
      Rational f = cost[enter];
      for (std::size_t j = 0; j <= total; ++j)
        if (tab[leave][j] != 0) cost[j] -= f * tab[leave][j];
    }
    basis[leave] = enter;
  }

  if (cost[total] != 0) return std::nullopt;  // positive artificial sum remains

  RationalVector col(ncols, 0);
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < ncols) col[basis[i]] = tab[i][total];
  RationalVector x(nv);
  for (std::size_t j = 0; j < nv; ++j) {
    x[j] = col[j];
    if (is_free[j]) x[j] -= col[minus_col[j]];
  }
  return x;
}

}  // namespace witt::lp
