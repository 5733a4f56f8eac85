#pragma once

// Slow, independent reference implementations used only by the tests.

#include "klimm/exactmat.hpp"
#include "klimm/grid.hpp"
#include "klimm/perm.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using namespace klimm;

inline int inversion_count(const std::vector<int> &w) {
  int c = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      c += w[i] > w[j];
  return c;
}

/// Leibniz expansion over all permutations.
inline Rational leibniz_det(const RationalMatrix &m) {
  const int n = m.rows();
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  Rational total = 0;
  do {
    Rational term = inversion_count(w) % 2 == 0 ? 1 : -1;
    for (int i = 1; i <= n; ++i)
      term *= m(i, w[static_cast<std::size_t>(i - 1)]);
    total += term;
  } while (std::next_permutation(w.begin(), w.end()));
  return total;
}

/// x <= y iff #{a <= i : x(a) >= j} <= #{a <= i : y(a) >= j} for all i, j.
inline bool bruhat_by_rank(const Permutation &x, const Permutation &y) {
  const int n = x.size();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      int cx = 0, cy = 0;
      for (int a = 1; a <= i; ++a) {
        cx += x(a) >= j;
        cy += y(a) >= j;
      }
      if (cx > cy)
        return false;
    }
  return true;
}

/// Tries every set of positions.
inline bool contains_pattern(const Permutation &v, const Permutation &p) {
  const int n = v.size(), k = p.size();
  if (k > n)
    return false;
  std::vector<bool> pick(static_cast<std::size_t>(n), false);
  std::fill(pick.begin(), pick.begin() + k, true);
  do {
    std::vector<int> sub;
    for (int i = 0; i < n; ++i)
      if (pick[static_cast<std::size_t>(i)])
        sub.push_back(v(i + 1));
    bool same = true;
    for (int a = 0; a < k && same; ++a)
      for (int b = 0; b < k && same; ++b)
        same = (sub[static_cast<std::size_t>(a)] < sub[static_cast<std::size_t>(b)]) ==
               (p(a + 1) < p(b + 1));
    if (same)
      return true;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return false;
}

/// Union of graphs of all u with v <= u, Bruhat order by rank matrices.
inline std::set<Cell> interval_cells(const Permutation &v) {
  std::set<Cell> cells;
  for (const auto &u : all_permutations(v.size()))
    if (bruhat_by_rank(v, u))
      for (int i = 1; i <= u.size(); ++i)
        cells.insert({i, u(i)});
  return cells;
}

inline std::set<Cell> cell_set(const LabeledGrid &g) {
  const auto c = g.cells();
  return {c.begin(), c.end()};
}

/// Largest s such that some s x s block of the grid is full.
inline int largest_square(const LabeledGrid &g) {
  const int n = g.size();
  int best = 0;
  for (int s = 1; s <= n; ++s)
    for (int i = 1; i + s - 1 <= n; ++i)
      for (int j = 1; j + s - 1 <= n; ++j) {
        bool full = true;
        for (int a = i; a < i + s && full; ++a)
          for (int b = j; b < j + s && full; ++b)
            full = g.contains(a, b);
        if (full)
          best = s;
      }
  return best;
}

inline bool admissible(const LabeledGrid &g) {
  const int n = g.size();
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      if (g.row_labels()[a] == g.row_labels()[b] && g.row_support(a) == g.row_support(b))
        return false;
      if (g.col_labels()[a] == g.col_labels()[b] && g.col_support(a) == g.col_support(b))
        return false;
    }
  return true;
}

/// Every square submatrix of size <= k has positive determinant.
inline bool k_positive(const RationalMatrix &m, int k) {
  const int n = m.rows();
  for (int s = 1; s <= k; ++s) {
    std::vector<bool> rp(static_cast<std::size_t>(n), false);
    std::fill(rp.begin(), rp.begin() + s, true);
    do {
      std::vector<int> rows;
      for (int i = 0; i < n; ++i)
        if (rp[static_cast<std::size_t>(i)])
          rows.push_back(i + 1);
      std::vector<bool> cp(static_cast<std::size_t>(n), false);
      std::fill(cp.begin(), cp.begin() + s, true);
      do {
        std::vector<int> cols;
        for (int j = 0; j < n; ++j)
          if (cp[static_cast<std::size_t>(j)])
            cols.push_back(j + 1);
        if (leibniz_det(submatrix(m, rows, cols)) <= 0)
          return false;
      } while (std::prev_permutation(cp.begin(), cp.end()));
    } while (std::prev_permutation(rp.begin(), rp.end()));
  }
  return true;
}

/// Number of (a < a', b < b') pairs for an n x n matrix.
inline std::size_t carroll_tuples(int n) {
  const std::size_t pairs = static_cast<std::size_t>(n * (n - 1) / 2);
  return pairs * pairs;
}

} // namespace oracle
