// Copyright (c) the ptl authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "ptl/poset.hpp"

namespace ptl {

// Abstract simplicial complex given by vertex count and facets. Faces are all
// subsets of facets. The empty complex {emptyset} has an empty facet list;
// the void complex (no faces at all) is distinguished by a flag.
struct SimplicialComplex {
  int vertex_count = 0;
  std::vector<std::vector<int>> facets;  // sorted vertex sets, pairwise non-contained
  bool void_complex = false;

  int dim() const {
    if (void_complex || facets.empty()) return -1;  // dim({emptyset}) = -1
    int d = -1;
    for (const auto& f : facets) d = std::max(d, static_cast<int>(f.size()) - 1);
    return d;
  }
  bool pure() const {
    if (facets.empty()) return true;
    size_t s = facets.front().size();
    for (const auto& f : facets)
      if (f.size() != s) return false;
    return true;
  }
  bool is_void() const { return void_complex; }
  bool is_empty_complex() const { return !void_complex && facets.empty(); }
};

inline SimplicialComplex void_complex() {
  SimplicialComplex k;
  k.void_complex = true;
  return k;
}

// Normalizing constructor: sorts facets, drops duplicates and dominated ones.
// A facet given as the empty set denotes the complex {emptyset}.
inline SimplicialComplex from_facets(int vertex_count, std::vector<std::vector<int>> facets) {
  SimplicialComplex k;
  k.vertex_count = vertex_count;
  for (auto& f : facets) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    for (int v : f)
      if (v < 0 || v >= vertex_count) throw bad_params("facet vertex out of range");
  }
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  for (size_t i = 0; i < facets.size(); ++i) {
    bool dominated = false;
    for (size_t j = 0; j < facets.size() && !dominated; ++j) {
      if (i == j) continue;
      if (std::includes(facets[j].begin(), facets[j].end(), facets[i].begin(), facets[i].end()) &&
          facets[i].size() < facets[j].size())
        dominated = true;
      if (i > j && facets[i] == facets[j]) dominated = true;
    }
    if (!dominated && !facets[i].empty()) k.facets.push_back(facets[i]);
  }
  std::sort(k.facets.begin(), k.facets.end());
  return k;
}

// Order complex: vertices are the poset's elements, facets its maximal chains.
inline SimplicialComplex order_complex(const Poset& p) {
  SimplicialComplex k;
  k.vertex_count = p.size();
  if (p.empty()) return k;  // {emptyset}
  // DFS over covers from minimal elements; every root-to-sink path is a facet.
  std::vector<int> chain;
  std::vector<std::vector<int>> facets;
  std::function<void(int)> walk = [&](int v) {
    chain.push_back(v);
    if (p.upper_covers(v).empty()) {
      facets.push_back(chain);
    } else {
      for (int w : p.upper_covers(v)) walk(w);
    }
    chain.pop_back();
  };
  for (int v : p.minimal_elements()) walk(v);
  for (auto& f : facets) std::sort(f.begin(), f.end());
  std::sort(facets.begin(), facets.end());
  k.facets = std::move(facets);
  return k;
}

namespace detail {
struct vec_hash {
  size_t operator()(const std::vector<int>& v) const {
    std::uint64_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};
}  // namespace detail

// All faces by dimension: faces[d] holds the d-dimensional faces, each sorted,
// the list itself sorted lexicographically. faces[0] corresponds to dim 0;
// the empty face is implicit (present unless the complex is void).
inline std::vector<std::vector<std::vector<int>>> faces_by_dimension(const SimplicialComplex& k,
                                                                     int dim_cap = 12) {
  if (k.dim() > dim_cap)
    throw dimension_cap_exceeded("complex dimension " + std::to_string(k.dim()) +
                                 " exceeds cap " + std::to_string(dim_cap));
  std::vector<std::unordered_set<std::vector<int>, detail::vec_hash>> sets(
      static_cast<size_t>(std::max(0, k.dim() + 1)));
  std::vector<int> sub;
  for (const auto& f : k.facets) {
    const size_t m = f.size();
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
      sub.clear();
      for (size_t i = 0; i < m; ++i)
        if (mask & (1u << i)) sub.push_back(f[i]);
      sets[sub.size() - 1].insert(sub);
    }
  }
  std::vector<std::vector<std::vector<int>>> out(sets.size());
  for (size_t d = 0; d < sets.size(); ++d) {
    out[d].assign(sets[d].begin(), sets[d].end());
    std::sort(out[d].begin(), out[d].end());
  }
  return out;
}

// Reduced Euler characteristic: sum over all faces including the empty one of
// (-1)^dim. Zero for the void complex.
inline long long reduced_euler(const SimplicialComplex& k, int dim_cap = 12) {
  if (k.is_void()) return 0;
  long long chi = -1;  // the empty face, dimension -1
  auto faces = faces_by_dimension(k, dim_cap);
  for (size_t d = 0; d < faces.size(); ++d)
    chi += (d % 2 == 0 ? 1ll : -1ll) * static_cast<long long>(faces[d].size());
  return chi;
}

// ---------------------------------------------------------------------------
// Shellability checks. A facet order F_1..F_m is a shelling when each F_i
// meets the union of its predecessors in a nonempty union of maximal proper
// faces of F_i.
// ---------------------------------------------------------------------------

namespace detail {
// Is prefix + next a valid shelling step? `prefix` are earlier facets.
inline bool shelling_step_ok(const std::vector<std::vector<int>>& prefix,
                             const std::vector<int>& next) {
  if (prefix.empty()) return true;
  // Maximal proper faces of <next> available in the union: next minus one
  // vertex, contained in some earlier facet.
  std::vector<std::vector<int>> walls;
  for (size_t drop = 0; drop < next.size(); ++drop) {
    std::vector<int> wall;
    for (size_t i = 0; i < next.size(); ++i)
      if (i != drop) wall.push_back(next[i]);
    for (const auto& f : prefix)
      if (std::includes(f.begin(), f.end(), wall.begin(), wall.end())) {
        walls.push_back(wall);
        break;
      }
  }
  if (walls.empty()) return false;
  // Every intersection next ∩ F_j must lie inside some wall.
  for (const auto& f : prefix) {
    std::vector<int> inter;
    std::set_intersection(next.begin(), next.end(), f.begin(), f.end(),
                          std::back_inserter(inter));
    bool covered = false;
    for (const auto& wall : walls)
      if (std::includes(wall.begin(), wall.end(), inter.begin(), inter.end())) {
        covered = true;
        break;
      }
    if (!covered) return false;
  }
  return true;
}
}  // namespace detail

// Validate a proposed shelling order of the given pure complex. The order
// must enumerate exactly the facets of k.
inline bool is_shelling_order(const SimplicialComplex& k,
                              const std::vector<std::vector<int>>& order) {
  if (!k.pure()) return false;
  std::vector<std::vector<int>> sorted_order = order;
  for (auto& f : sorted_order) std::sort(f.begin(), f.end());
  {
    auto a = sorted_order;
    std::sort(a.begin(), a.end());
    if (a != k.facets) return false;
  }
  std::vector<std::vector<int>> prefix;
  for (const auto& f : sorted_order) {
    if (!detail::shelling_step_ok(prefix, f)) return false;
    prefix.push_back(f);
  }
  return true;
}

// Exhaustive backtracking search for a shelling order. Only intended for
// complexes with at most `facet_cap` facets; partial shellings do not always
// extend, so the search must backtrack.
inline std::optional<std::vector<std::vector<int>>> find_shelling(const SimplicialComplex& k,
                                                                  size_t facet_cap = 12) {
  if (!k.pure()) return std::nullopt;
  if (k.facets.size() > facet_cap)
    throw size_cap_exceeded("find_shelling: facet count exceeds cap");
  if (k.facets.empty()) return std::vector<std::vector<int>>{};
  const size_t m = k.facets.size();
  std::vector<std::vector<int>> prefix;
  std::vector<char> used(m, 0);
  std::function<bool()> rec = [&]() -> bool {
    if (prefix.size() == m) return true;
    for (size_t i = 0; i < m; ++i) {
      if (used[i]) continue;
      if (!detail::shelling_step_ok(prefix, k.facets[i])) continue;
      used[i] = 1;
      prefix.push_back(k.facets[i]);
      if (rec()) return true;
      prefix.pop_back();
      used[i] = 0;
    }
    return false;
  };
  if (!rec()) return std::nullopt;
  return prefix;
}

}  // namespace ptl
