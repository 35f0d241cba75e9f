// Copyright (c) the ptl authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ptl/poset.hpp"

namespace ptl {

// Moebius function of the bounded extension P^ = {0^} + P + {1^}. Fresh
// bounds are adjoined even to bounded posets, so mu(0^,1^) always equals the
// reduced Euler characteristic of the order complex of P itself; values
// between original elements agree with the Moebius function of P.
struct MobiusTable {
  Poset extension;                 // P^ with the fresh bounds
  int bottom = -1, top = -1;       // indices of 0^ and 1^ in `extension`
  std::vector<long long> values;   // dense n*n, mu(x,y) for x <= y, else 0

  long long mu(int x, int y) const {
    return values[static_cast<size_t>(x) * static_cast<size_t>(extension.size()) +
                  static_cast<size_t>(y)];
  }
  long long mu(const std::string& x, const std::string& y) const {
    return mu(extension.index_of(x), extension.index_of(y));
  }
  long long mu_total() const { return mu(bottom, top); }
};

inline MobiusTable mobius(const Poset& p) {
  MobiusTable t;
  t.extension = with_bounds(p);
  t.bottom = t.extension.minimum();
  t.top = t.extension.maximum();
  const Poset& hat = t.extension;
  const int n = hat.size();
  t.values.assign(static_cast<size_t>(n) * static_cast<size_t>(n), 0);

  // Process targets in height order; mu(x,y) = -sum_{x <= z < y} mu(x,z).
  std::vector<int> by_height(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) by_height[static_cast<size_t>(i)] = i;
  std::stable_sort(by_height.begin(), by_height.end(),
                   [&](int a, int b) { return hat.height_of(a) < hat.height_of(b); });
  for (int x = 0; x < n; ++x) {
    for (int y : by_height) {
      if (!hat.leq(x, y)) continue;
      if (x == y) {
        t.values[static_cast<size_t>(x) * static_cast<size_t>(n) + static_cast<size_t>(y)] = 1;
        continue;
      }
      long long s = 0;
      for (int z = 0; z < n; ++z)
        if (hat.leq(x, z) && hat.less(z, y))
          s += t.values[static_cast<size_t>(x) * static_cast<size_t>(n) + static_cast<size_t>(z)];
      t.values[static_cast<size_t>(x) * static_cast<size_t>(n) + static_cast<size_t>(y)] = -s;
    }
  }
  return t;
}

}  // namespace ptl
