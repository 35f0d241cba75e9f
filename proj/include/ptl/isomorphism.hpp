// Copyright (c) the ptl authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ptl/poset.hpp"

namespace ptl {

namespace detail {

// Joint iterated color refinement over two posets. Signatures are built the
// same way on both sides and share one id table per round, so equal colors
// are meaningful across the pair. Starts from (height, degrees, ideal and
// filter sizes) and refines by sorted neighbor-color multisets until stable.
inline std::pair<std::vector<int>, std::vector<int>> joint_colors(const Poset& p, const Poset& q) {
  auto base_sig = [](const Poset& x, int i) {
    int ideal = 0, filter = 0;
    for (int z = 0; z < x.size(); ++z) {
      if (x.leq(z, i)) ideal++;
      if (x.leq(i, z)) filter++;
    }
    return std::to_string(x.height_of(i)) + "." +
           std::to_string(x.upper_covers(i).size()) + "." +
           std::to_string(x.lower_covers(i).size()) + "." + std::to_string(ideal) + "." +
           std::to_string(filter);
  };
  std::vector<int> cp(static_cast<size_t>(p.size())), cq(static_cast<size_t>(q.size()));
  {
    std::map<std::string, int> ids;
    for (int i = 0; i < p.size(); ++i)
      cp[static_cast<size_t>(i)] = ids.emplace(base_sig(p, i), static_cast<int>(ids.size())).first->second;
    for (int j = 0; j < q.size(); ++j)
      cq[static_cast<size_t>(j)] = ids.emplace(base_sig(q, j), static_cast<int>(ids.size())).first->second;
  }
  auto round_sig = [](const Poset& x, const std::vector<int>& c, int i) {
    std::vector<int> up, down;
    for (int w : x.upper_covers(i)) up.push_back(c[static_cast<size_t>(w)]);
    for (int w : x.lower_covers(i)) down.push_back(c[static_cast<size_t>(w)]);
    std::sort(up.begin(), up.end());
    std::sort(down.begin(), down.end());
    std::string s = std::to_string(c[static_cast<size_t>(i)]) + "|";
    for (int v : up) s += std::to_string(v) + ",";
    s += "|";
    for (int v : down) s += std::to_string(v) + ",";
    return s;
  };
  int limit = p.size() + q.size();
  for (int round = 0; round < limit; ++round) {
    std::map<std::string, int> ids;
    std::vector<int> np(cp.size()), nq(cq.size());
    for (int i = 0; i < p.size(); ++i)
      np[static_cast<size_t>(i)] =
          ids.emplace(round_sig(p, cp, i), static_cast<int>(ids.size())).first->second;
    for (int j = 0; j < q.size(); ++j)
      nq[static_cast<size_t>(j)] =
          ids.emplace(round_sig(q, cq, j), static_cast<int>(ids.size())).first->second;
    if (np == cp && nq == cq) break;
    bool stable = true;
    for (size_t i = 0; i < cp.size(); ++i)
      if (np[i] != cp[i]) stable = false;
    for (size_t j = 0; j < cq.size(); ++j)
      if (nq[j] != cq[j]) stable = false;
    cp = np;
    cq = nq;
    if (stable) break;
  }
  return {cp, cq};
}

}  // namespace detail

// Backtracking isomorphism search with invariant pruning. On success the
// witness maps indices of p to indices of q.
inline std::optional<std::vector<int>> isomorphism_witness(const Poset& p, const Poset& q) {
  const int n = p.size();
  if (n != q.size() || p.covers().size() != q.covers().size()) return std::nullopt;
  if (n == 0) return std::vector<int>{};

  auto [cp, cq] = detail::joint_colors(p, q);
  {
    std::map<int, int> hp, hq;
    for (int c : cp) hp[c]++;
    for (int c : cq) hq[c]++;
    if (hp != hq) return std::nullopt;
  }

  std::vector<std::vector<int>> cand(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      if (cp[static_cast<size_t>(i)] == cq[static_cast<size_t>(j)])
        cand[static_cast<size_t>(i)].push_back(j);
    if (cand[static_cast<size_t>(i)].empty()) return std::nullopt;
  }

  // Most-constrained-first assignment order.
  std::vector<int> order(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<size_t>(i)] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    size_t ca = cand[static_cast<size_t>(a)].size(), cb = cand[static_cast<size_t>(b)].size();
    if (ca != cb) return ca < cb;
    return a < b;
  });

  std::vector<int> assign(static_cast<size_t>(n), -1);
  std::vector<char> used(static_cast<size_t>(n), 0);

  std::function<bool(int)> rec = [&](int depth) -> bool {
    if (depth == n) return true;
    int i = order[static_cast<size_t>(depth)];
    for (int j : cand[static_cast<size_t>(i)]) {
      if (used[static_cast<size_t>(j)]) continue;
      bool ok = true;
      for (int d = 0; d < depth && ok; ++d) {
        int a = order[static_cast<size_t>(d)];
        int b = assign[static_cast<size_t>(a)];
        if (p.leq(a, i) != q.leq(b, j) || p.leq(i, a) != q.leq(j, b)) ok = false;
      }
      if (!ok) continue;
      assign[static_cast<size_t>(i)] = j;
      used[static_cast<size_t>(j)] = 1;
      if (rec(depth + 1)) return true;
      assign[static_cast<size_t>(i)] = -1;
      used[static_cast<size_t>(j)] = 0;
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  return assign;
}

inline bool is_isomorphic(const Poset& p, const Poset& q) {
  return isomorphism_witness(p, q).has_value();
}

inline bool is_self_dual(const Poset& p) { return is_isomorphic(p, p.dual()); }

// Structural Boolean-algebra recognition: atom count a, size 2^a, then a full
// isomorphism check against the reference Boolean poset.
inline bool is_boolean_algebra(const Poset& p) {
  if (p.empty()) return false;
  int mn = p.minimum();
  if (mn < 0 || p.maximum() < 0) return false;
  int atoms = static_cast<int>(p.upper_covers(mn).size());
  if (atoms > 20) return false;
  if (p.size() != (1 << atoms)) return false;
  return is_isomorphic(p, boolean_poset(atoms));
}

}  // namespace ptl
