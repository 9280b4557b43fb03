#pragma once

// Dense two-phase simplex over exact rationals with Bland's rule. Shares no
// code with the library's transport solver.

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace oracle {

using Q = mpq_class;

/// min c.x subject to A x = b, x >= 0, with b >= 0. Throws when infeasible.
/// Rows of A must be linearly independent.
inline Q simplex_min(const std::vector<std::vector<Q>>& a, const std::vector<Q>& b, const std::vector<Q>& c) {
  const std::size_t m = a.size();
  const std::size_t n = c.size();
  const std::size_t cols = n + m;  // originals, then one artificial per row
  std::vector<std::vector<Q>> t(m, std::vector<Q>(cols + 1, 0));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i][j] = a[i][j];
    t[i][n + i] = 1;
    t[i][cols] = b[i];
    basis[i] = n + i;
  }

  auto pivot = [&](std::size_t r, std::size_t e) {
    const Q piv = t[r][e];
    for (auto& x : t[r]) x /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || t[i][e] == 0) continue;
      const Q f = t[i][e];
      for (std::size_t j = 0; j <= cols; ++j) t[i][j] -= f * t[r][j];
    }
    basis[r] = e;
  };

  // Runs simplex on cost vector `cost` over the allowed columns.
  auto optimize = [&](const std::vector<Q>& cost, std::size_t allowed) {
    for (;;) {
      std::size_t enter = allowed;
      for (std::size_t j = 0; j < allowed; ++j) {
        Q reduced = cost[j];
        for (std::size_t i = 0; i < m; ++i) reduced -= cost[basis[i]] * t[i][j];
        if (reduced < 0) {
          enter = j;
          break;
        }
      }
      if (enter == allowed) return;
      std::size_t leave = m;
      Q best;
      for (std::size_t i = 0; i < m; ++i) {
        if (t[i][enter] <= 0) continue;
        const Q ratio = t[i][cols] / t[i][enter];
        if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == m) throw std::runtime_error("unbounded");
      pivot(leave, enter);
    }
  };

  std::vector<Q> phase1(cols, 0);
  for (std::size_t j = n; j < cols; ++j) phase1[j] = 1;
  optimize(phase1, cols);
  Q infeasibility = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] >= n) infeasibility += t[i][cols];
  }
  if (infeasibility != 0) throw std::runtime_error("infeasible");
  // Drive zero-level artificials out of the basis.
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (t[i][j] != 0) {
        pivot(i, j);
        break;
      }
    }
    if (basis[i] >= n) throw std::runtime_error("dependent rows");
  }

  std::vector<Q> phase2(cols, 0);
  for (std::size_t j = 0; j < n; ++j) phase2[j] = c[j];
  optimize(phase2, n);
  Q value = 0;
  for (std::size_t i = 0; i < m; ++i) value += c[basis[i]] * t[i][cols];
  return value;
}

/// W1 between two mass vectors over the same vertex set under `dist`.
/// The last target constraint is dropped: it follows from equal totals.
inline Q transport_oracle(const std::vector<std::vector<int>>& dist, const std::vector<Q>& src,
                          const std::vector<Q>& tgt) {
  std::vector<std::size_t> s, d;
  for (std::size_t i = 0; i < src.size(); ++i) {
    if (src[i] > 0) s.push_back(i);
    if (tgt[i] > 0) d.push_back(i);
  }
  const std::size_t vars = s.size() * d.size();
  std::vector<std::vector<Q>> a;
  std::vector<Q> b;
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::vector<Q> row(vars, 0);
    for (std::size_t j = 0; j < d.size(); ++j) row[i * d.size() + j] = 1;
    a.push_back(row);
    b.push_back(src[s[i]]);
  }
  for (std::size_t j = 0; j + 1 < d.size(); ++j) {
    std::vector<Q> row(vars, 0);
    for (std::size_t i = 0; i < s.size(); ++i) row[i * d.size() + j] = 1;
    a.push_back(row);
    b.push_back(tgt[d[j]]);
  }
  std::vector<Q> c(vars);
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = 0; j < d.size(); ++j) c[i * d.size() + j] = dist[s[i]][d[j]];
  }
  return simplex_min(a, b, c);
}

}  // namespace oracle
