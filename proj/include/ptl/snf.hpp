// Copyright (c) the ptl authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ptl/common.hpp"

namespace ptl {

using bigint = boost::multiprecision::cpp_int;

// Sparse integer matrix, column-major. Rows within a column are kept sorted.
struct SparseMat {
  int nrows = 0, ncols = 0;
  std::vector<std::vector<std::pair<int, bigint>>> cols;

  explicit SparseMat(int r = 0, int c = 0) : nrows(r), ncols(c), cols(static_cast<size_t>(c)) {}

  void push(int r, int c, bigint v) {  // build-time only, rows pushed in order
    cols[static_cast<size_t>(c)].emplace_back(r, std::move(v));
  }
  size_t nnz() const {
    size_t t = 0;
    for (const auto& c : cols) t += c.size();
    return t;
  }
};

namespace detail {

inline bigint big_gcd(const bigint& a, const bigint& b) {
  return boost::multiprecision::gcd(a < 0 ? bigint(-a) : a, b < 0 ? bigint(-b) : b);
}

// col_a := col_a + k * col_b (sorted merge).
inline void axpy_col(std::vector<std::pair<int, bigint>>& a,
                     const std::vector<std::pair<int, bigint>>& b, const bigint& k) {
  std::vector<std::pair<int, bigint>> out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(std::move(a[i++]));
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, k * b[j].second);
      ++j;
    } else {
      bigint v = a[i].second + k * b[j].second;
      if (v != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  a = std::move(out);
}

inline void normalize_content(std::vector<std::pair<int, bigint>>& col) {
  if (col.empty()) return;
  bigint g = 0;
  for (const auto& [r, v] : col) {
    g = big_gcd(g, v);
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& [r, v] : col) v /= g;
}

}  // namespace detail

// Rank of an integer matrix over the rationals, via fraction-free column
// reduction: each column is reduced against the registered pivot column with
// the same lowest row until its low is fresh or it vanishes.
inline int rank_over_q(SparseMat m) {
  std::vector<int> pivot_of_row(static_cast<size_t>(m.nrows), -1);
  int rank = 0;
  for (int c = 0; c < m.ncols; ++c) {
    auto& col = m.cols[static_cast<size_t>(c)];
    detail::normalize_content(col);
    while (!col.empty()) {
      int low = col.back().first;
      int p = pivot_of_row[static_cast<size_t>(low)];
      if (p < 0) {
        pivot_of_row[static_cast<size_t>(low)] = c;
        ++rank;
        break;
      }
      const auto& pcol = m.cols[static_cast<size_t>(p)];
      const bigint& a = col.back().second;
      const bigint& b = pcol.back().second;
      bigint g = detail::big_gcd(a, b);
      bigint scale = b / g, k = -(a / g);
      if (scale != 1)
        for (auto& [r, v] : col) v *= scale;
      detail::axpy_col(col, pcol, k);
      detail::normalize_content(col);
    }
  }
  return rank;
}

// Smith normal form invariants: the nonzero diagonal entries d_1 | d_2 | ...
// (all positive). rank = count, torsion = entries > 1.
//
// Phase 1 eliminates unit pivots chosen by a small-column / low-fill
// heuristic; boundary matrices of simplicial complexes are almost entirely
// consumed here. Phase 2 runs a dense textbook reduction on the residue.
struct SnfResult {
  int rank = 0;
  std::vector<bigint> invariants;  // size == rank, divisibility-normalized

  std::vector<bigint> torsion() const {
    std::vector<bigint> t;
    for (const auto& d : invariants)
      if (d > 1) t.push_back(d);
    return t;
  }
};

inline SnfResult smith_normal_form(SparseMat m) {
  SnfResult res;
  const int R = m.nrows, C = m.ncols;
  std::vector<char> row_live(static_cast<size_t>(R), 1), col_live(static_cast<size_t>(C), 1);
  std::vector<int> row_nnz(static_cast<size_t>(R), 0);
  // Row -> columns index with lazy deletion.
  std::vector<std::vector<int>> row_cols(static_cast<size_t>(R));
  for (int c = 0; c < C; ++c)
    for (const auto& [r, v] : m.cols[static_cast<size_t>(c)]) {
      row_nnz[static_cast<size_t>(r)]++;
      row_cols[static_cast<size_t>(r)].push_back(c);
    }

  // row_cols entries go stale as columns change; compact when the slack gets
  // large so memory stays proportional to the live fill.
  size_t pushed = m.nnz();
  auto maybe_compact = [&] {
    size_t live = 0;
    for (int c = 0; c < C; ++c) live += m.cols[static_cast<size_t>(c)].size();
    if (pushed < 4 * live + 65536) return;
    for (auto& rc : row_cols) rc.clear();
    for (int c = 0; c < C; ++c)
      for (const auto& [r, v] : m.cols[static_cast<size_t>(c)])
        row_cols[static_cast<size_t>(r)].push_back(c);
    pushed = live;
  };

  // Live columns ordered by nnz; approximate min-fill pivot selection scans
  // the smallest few columns for unit entries.
  std::set<std::pair<int, int>> by_size;  // (nnz, col)
  auto col_nnz = [&](int c) { return static_cast<int>(m.cols[static_cast<size_t>(c)].size()); };
  for (int c = 0; c < C; ++c)
    if (col_nnz(c) > 0) by_size.insert({col_nnz(c), c});

  auto erase_size = [&](int c) { by_size.erase({col_nnz(c), c}); };
  auto insert_size = [&](int c) {
    if (col_live[static_cast<size_t>(c)] && col_nnz(c) > 0) by_size.insert({col_nnz(c), c});
  };

  auto entry_value = [&](int r, int c) -> const bigint* {
    const auto& col = m.cols[static_cast<size_t>(c)];
    auto it = std::lower_bound(col.begin(), col.end(), r,
                               [](const std::pair<int, bigint>& e, int row) { return e.first < row; });
    if (it == col.end() || it->first != r) return nullptr;
    return &it->second;
  };

  int unit_pivots = 0;
  const int scan_window = 24;
  while (!by_size.empty()) {
    // Find a unit entry minimizing (row_nnz-1)*(col_nnz-1) in the window.
    int best_r = -1, best_c = -1;
    long long best_fill = -1;
    int scanned = 0;
    for (auto it = by_size.begin(); it != by_size.end() && scanned < scan_window; ++it, ++scanned) {
      int c = it->second;
      for (const auto& [r, v] : m.cols[static_cast<size_t>(c)]) {
        if (!row_live[static_cast<size_t>(r)]) continue;
        if (v != 1 && v != -1) continue;
        long long fill = static_cast<long long>(row_nnz[static_cast<size_t>(r)] - 1) *
                         (col_nnz(c) - 1);
        if (best_fill < 0 || fill < best_fill) {
          best_fill = fill;
          best_r = r;
          best_c = c;
        }
      }
      if (best_fill == 0) break;
    }
    if (best_r < 0) break;  // no unit entries reachable; fall through to phase 2

    const int r = best_r, c = best_c;
    const bigint piv = *entry_value(r, c);  // +-1

    // Column ops clear row r outside the pivot; afterwards the remaining
    // entries of column c can be dropped outright (the row ops that would
    // clear them touch no other column since row r is already clear).
    std::vector<int> touched = row_cols[static_cast<size_t>(r)];
    for (int c2 : touched) {
      if (c2 == c || !col_live[static_cast<size_t>(c2)]) continue;
      const bigint* a = entry_value(r, c2);
      if (!a) continue;  // stale index entry
      bigint k = -(*a) / piv;
      erase_size(c2);
      // Update row stats: entries leaving/entering c2.
      for (const auto& [rr, vv] : m.cols[static_cast<size_t>(c2)])
        row_nnz[static_cast<size_t>(rr)]--;
      detail::axpy_col(m.cols[static_cast<size_t>(c2)], m.cols[static_cast<size_t>(c)], k);
      for (const auto& [rr, vv] : m.cols[static_cast<size_t>(c2)]) {
        row_nnz[static_cast<size_t>(rr)]++;
        row_cols[static_cast<size_t>(rr)].push_back(c2);
        ++pushed;
      }
      insert_size(c2);
    }
    // Retire pivot row and column.
    erase_size(c);
    for (const auto& [rr, vv] : m.cols[static_cast<size_t>(c)])
      row_nnz[static_cast<size_t>(rr)]--;
    m.cols[static_cast<size_t>(c)].clear();
    col_live[static_cast<size_t>(c)] = 0;
    row_live[static_cast<size_t>(r)] = 0;
    ++unit_pivots;
    maybe_compact();
  }

  // Phase 2: dense SNF on the live residue.
  std::vector<int> live_rows, live_cols;
  for (int r = 0; r < R; ++r)
    if (row_live[static_cast<size_t>(r)] && row_nnz[static_cast<size_t>(r)] > 0)
      live_rows.push_back(r);
  for (int c = 0; c < C; ++c)
    if (col_live[static_cast<size_t>(c)] && !m.cols[static_cast<size_t>(c)].empty())
      live_cols.push_back(c);

  std::vector<bigint> diag(static_cast<size_t>(unit_pivots), bigint(1));
  if (!live_cols.empty()) {
    std::vector<int> row_pos(static_cast<size_t>(R), -1);
    for (size_t i = 0; i < live_rows.size(); ++i) row_pos[static_cast<size_t>(live_rows[i])] =
        static_cast<int>(i);
    const int rr = static_cast<int>(live_rows.size()), cc = static_cast<int>(live_cols.size());
    std::vector<std::vector<bigint>> a(static_cast<size_t>(rr),
                                       std::vector<bigint>(static_cast<size_t>(cc), bigint(0)));
    for (int j = 0; j < cc; ++j)
      for (const auto& [r, v] : m.cols[static_cast<size_t>(live_cols[static_cast<size_t>(j)])])
        if (row_live[static_cast<size_t>(r)]) a[static_cast<size_t>(row_pos[static_cast<size_t>(r)])]
            [static_cast<size_t>(j)] = v;

    int top = 0;
    while (true) {
      // Locate the nonzero entry of least absolute value in a[top..][top..].
      int pr = -1, pc = -1;
      bigint best = 0;
      for (int i = top; i < rr; ++i)
        for (int j = top; j < cc; ++j) {
          const bigint& v = a[static_cast<size_t>(i)][static_cast<size_t>(j)];
          if (v == 0) continue;
          bigint av = v < 0 ? bigint(-v) : v;
          if (pr < 0 || av < best) {
            best = av;
            pr = i;
            pc = j;
          }
        }
      if (pr < 0) break;
      std::swap(a[static_cast<size_t>(top)], a[static_cast<size_t>(pr)]);
      for (int i = 0; i < rr; ++i)
        std::swap(a[static_cast<size_t>(i)][static_cast<size_t>(top)],
                  a[static_cast<size_t>(i)][static_cast<size_t>(pc)]);

      bool clean = true;
      // Reduce the pivot column.
      for (int i = top + 1; i < rr; ++i) {
        const bigint& v = a[static_cast<size_t>(i)][static_cast<size_t>(top)];
        if (v == 0) continue;
        bigint q = v / a[static_cast<size_t>(top)][static_cast<size_t>(top)];
        if (q != 0)
          for (int j = top; j < cc; ++j)
            a[static_cast<size_t>(i)][static_cast<size_t>(j)] -=
                q * a[static_cast<size_t>(top)][static_cast<size_t>(j)];
        if (a[static_cast<size_t>(i)][static_cast<size_t>(top)] != 0) clean = false;
      }
      if (!clean) continue;  // smaller remainder became the new min; reselect
      // Reduce the pivot row.
      for (int j = top + 1; j < cc; ++j) {
        const bigint& v = a[static_cast<size_t>(top)][static_cast<size_t>(j)];
        if (v == 0) continue;
        bigint q = v / a[static_cast<size_t>(top)][static_cast<size_t>(top)];
        if (q != 0)
          for (int i = top; i < rr; ++i)
            a[static_cast<size_t>(i)][static_cast<size_t>(j)] -=
                q * a[static_cast<size_t>(i)][static_cast<size_t>(top)];
        if (a[static_cast<size_t>(top)][static_cast<size_t>(j)] != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility: pivot must divide every remaining entry.
      bool fixed = false;
      for (int i = top + 1; i < rr && !fixed; ++i)
        for (int j = top + 1; j < cc && !fixed; ++j)
          if (a[static_cast<size_t>(i)][static_cast<size_t>(j)] %
                  a[static_cast<size_t>(top)][static_cast<size_t>(top)] !=
              0) {
            for (int jj = top; jj < cc; ++jj)
              a[static_cast<size_t>(top)][static_cast<size_t>(jj)] +=
                  a[static_cast<size_t>(i)][static_cast<size_t>(jj)];
            fixed = true;
          }
      if (fixed) continue;
      bigint d = a[static_cast<size_t>(top)][static_cast<size_t>(top)];
      diag.push_back(d < 0 ? bigint(-d) : d);
      ++top;
      if (top >= rr || top >= cc) break;
    }
  }

  // Unit pivots may hide nontrivial residue invariants ordering-wise, but 1
  // divides everything, so sorting preserves the divisibility chain.
  std::sort(diag.begin(), diag.end());
  res.rank = static_cast<int>(diag.size());
  res.invariants = std::move(diag);
  return res;
}

}  // namespace ptl
