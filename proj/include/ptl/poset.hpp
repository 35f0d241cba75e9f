// Copyright (c) the ptl authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ptl/common.hpp"

namespace ptl {

// ---------------------------------------------------------------------------
// Finite poset stored by covers with a cached reflexive-transitive closure.
//
// Elements carry opaque string labels; index order always equals
// lexicographic label order, which pins down every iteration order in the
// library. A Poset is immutable after construction.
// ---------------------------------------------------------------------------

class Poset {
 public:
  Poset() = default;

  // Validating constructor from labels and cover pairs (label form).
  // Rejects duplicate labels, cycles, and covers already implied by the
  // transitive closure of the remaining covers.
  static Poset from_covers(const std::vector<std::string>& labels,
                           const std::vector<std::pair<std::string, std::string>>& covers);

  // Same, with covers as index pairs into `labels` as given (pre-sort).
  static Poset from_covers_indexed(const std::vector<std::string>& labels,
                                   const std::vector<std::pair<int, int>>& covers);

  // Non-validating constructor from a full order relation (reflexive or not);
  // computes the transitive reduction. `leq(i,j)` is indexed by positions in
  // `labels` as given. Antisymmetry is verified.
  static Poset from_relation(const std::vector<std::string>& labels,
                             const std::function<bool(int, int)>& leq);

  int size() const { return static_cast<int>(labels_.size()); }
  bool empty() const { return labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[static_cast<size_t>(i)]; }

  // Index of a label, or -1 if absent.
  int find(const std::string& label) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label) return -1;
    return static_cast<int>(it - labels_.begin());
  }
  int index_of(const std::string& label) const {
    int i = find(label);
    if (i < 0) throw unknown_element("unknown element label: " + label);
    return i;
  }

  bool leq(int a, int b) const { return bit(a, b); }
  bool less(int a, int b) const { return a != b && bit(a, b); }
  bool comparable(int a, int b) const { return bit(a, b) || bit(b, a); }

  // Covers as ordered index pairs (a,b), a -> b, sorted ascending.
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }

  const std::vector<int>& upper_covers(int a) const { return up_[static_cast<size_t>(a)]; }
  const std::vector<int>& lower_covers(int a) const { return down_[static_cast<size_t>(a)]; }

  std::vector<int> minimal_elements() const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
      if (down_[static_cast<size_t>(i)].empty()) out.push_back(i);
    return out;
  }
  std::vector<int> maximal_elements() const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
      if (up_[static_cast<size_t>(i)].empty()) out.push_back(i);
    return out;
  }
  // Index of the minimum/maximum element, or -1 when there is none.
  int minimum() const {
    auto m = minimal_elements();
    return m.size() == 1 ? m[0] : -1;
  }
  int maximum() const {
    auto m = maximal_elements();
    return m.size() == 1 ? m[0] : -1;
  }
  bool bounded() const { return !empty() && minimum() >= 0 && maximum() >= 0; }

  // Gradedness under the longest-chain convention: rank_of(x) is the length
  // of the longest chain ending at x; the poset is graded when every cover
  // raises that rank by exactly one and all maximal elements agree.
  bool graded() const { return graded_; }
  int rank() const {
    if (empty()) throw empty_poset("rank of empty poset");
    if (!graded_) throw not_graded("rank of non-graded poset");
    return rank_;
  }
  int rank_of(int i) const {
    if (!graded_) throw not_graded("rank_of on non-graded poset");
    return ranks_[static_cast<size_t>(i)];
  }
  // Longest-chain height, defined for any poset (graded or not).
  int height_of(int i) const { return heights_[static_cast<size_t>(i)]; }

  // Induced subposet on a set of indices (any order; result is canonical).
  Poset induced(std::vector<int> keep) const;

  Poset without(int idx) const {
    std::vector<int> keep;
    keep.reserve(static_cast<size_t>(size() - 1));
    for (int i = 0; i < size(); ++i)
      if (i != idx) keep.push_back(i);
    return induced(std::move(keep));
  }
  Poset without_set(const std::vector<int>& drop) const {
    std::vector<char> gone(static_cast<size_t>(size()), 0);
    for (int d : drop) gone[static_cast<size_t>(d)] = 1;
    std::vector<int> keep;
    for (int i = 0; i < size(); ++i)
      if (!gone[static_cast<size_t>(i)]) keep.push_back(i);
    return induced(std::move(keep));
  }

  // Closed/open interval [x,y] resp. (x,y); requires x <= y.
  Poset interval(int x, int y, bool open) const;
  Poset interval(const std::string& x, const std::string& y, bool open) const {
    return interval(index_of(x), index_of(y), open);
  }

  // Order ideal generated by the given elements (downward closed).
  Poset order_ideal(const std::vector<int>& generators) const;
  Poset order_ideal_labels(const std::vector<std::string>& generators) const {
    std::vector<int> g;
    g.reserve(generators.size());
    for (const auto& s : generators) g.push_back(index_of(s));
    return order_ideal(g);
  }
  // Index set of the ideal / filter, ascending.
  std::vector<int> ideal_indices(const std::vector<int>& generators) const;
  std::vector<int> filter_indices(const std::vector<int>& generators) const;

  Poset dual() const;

  // Canonical serialization: labels joined by '\n', then cover pairs. Equal
  // strings <=> equal posets (same labels, same order), which makes this the
  // memoization key for homology jobs.
  std::string content_key() const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::vector<int>> up_, down_;
  std::vector<std::uint64_t> order_;  // row-major bit matrix, reflexive
  size_t stride_ = 0;
  std::vector<int> heights_;
  std::vector<int> ranks_;
  bool graded_ = false;
  int rank_ = 0;

  bool bit(int a, int b) const {
    return (order_[static_cast<size_t>(a) * stride_ + static_cast<size_t>(b) / 64] >>
            (static_cast<size_t>(b) % 64)) &
           1u;
  }
  void set_bit(int a, int b) {
    order_[static_cast<size_t>(a) * stride_ + static_cast<size_t>(b) / 64] |=
        (std::uint64_t{1} << (static_cast<size_t>(b) % 64));
  }

  // Build everything from sorted labels + acyclic cover lists (index form).
  static Poset build(std::vector<std::string> sorted_labels,
                     std::vector<std::pair<int, int>> covers);
  void finish();  // closure, heights, gradedness
};

// --- implementation --------------------------------------------------------

inline void Poset::finish() {
  const int n = size();
  stride_ = (static_cast<size_t>(n) + 63) / 64;
  order_.assign(static_cast<size_t>(n) * stride_, 0);
  up_.assign(static_cast<size_t>(n), {});
  down_.assign(static_cast<size_t>(n), {});
  for (auto [a, b] : covers_) {
    up_[static_cast<size_t>(a)].push_back(b);
    down_[static_cast<size_t>(b)].push_back(a);
  }
  for (auto& v : up_) std::sort(v.begin(), v.end());
  for (auto& v : down_) std::sort(v.begin(), v.end());

  // Topological order by DFS over covers (acyclicity established upstream).
  std::vector<int> topo;
  topo.reserve(static_cast<size_t>(n));
  {
    std::vector<int> indeg(static_cast<size_t>(n), 0);
    for (auto [a, b] : covers_) indeg[static_cast<size_t>(b)]++;
    std::vector<int> stack;
    for (int i = n - 1; i >= 0; --i)
      if (indeg[static_cast<size_t>(i)] == 0) stack.push_back(i);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      topo.push_back(v);
      for (int w : up_[static_cast<size_t>(v)])
        if (--indeg[static_cast<size_t>(w)] == 0) stack.push_back(w);
    }
    if (static_cast<int>(topo.size()) != n) throw cycle_detected("covers contain a cycle");
  }

  // Reflexive-transitive closure, reverse topological order: row(v) = {v} | rows of upper covers.
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    int v = *it;
    set_bit(v, v);
    std::uint64_t* row = &order_[static_cast<size_t>(v) * stride_];
    for (int w : up_[static_cast<size_t>(v)]) {
      const std::uint64_t* wrow = &order_[static_cast<size_t>(w) * stride_];
      for (size_t k = 0; k < stride_; ++k) row[k] |= wrow[k];
    }
  }

  // Heights (longest chain ending at each element) in topological order.
  heights_.assign(static_cast<size_t>(n), 0);
  for (int v : topo)
    for (int w : down_[static_cast<size_t>(v)])
      heights_[static_cast<size_t>(v)] =
          std::max(heights_[static_cast<size_t>(v)], heights_[static_cast<size_t>(w)] + 1);

  // Graded iff every cover raises height by one and all maxima share it.
  graded_ = n > 0;
  for (auto [a, b] : covers_)
    if (heights_[static_cast<size_t>(b)] != heights_[static_cast<size_t>(a)] + 1) {
      graded_ = false;
      break;
    }
  if (graded_) {
    rank_ = -1;
    for (int i = 0; i < n; ++i)
      if (up_[static_cast<size_t>(i)].empty()) {
        if (rank_ < 0) rank_ = heights_[static_cast<size_t>(i)];
        if (heights_[static_cast<size_t>(i)] != rank_) {
          graded_ = false;
          break;
        }
      }
  }
  ranks_ = graded_ ? heights_ : std::vector<int>();
  if (!graded_) rank_ = 0;
}

inline Poset Poset::build(std::vector<std::string> sorted_labels,
                          std::vector<std::pair<int, int>> covers) {
  Poset p;
  p.labels_ = std::move(sorted_labels);
  std::sort(covers.begin(), covers.end());
  p.covers_ = std::move(covers);
  p.finish();
  return p;
}

inline Poset Poset::from_covers_indexed(const std::vector<std::string>& labels,
                                        const std::vector<std::pair<int, int>>& covers) {
  const int n = static_cast<int>(labels.size());
  {
    std::set<std::string> seen;
    for (const auto& l : labels)
      if (!seen.insert(l).second) throw duplicate_label("duplicate label: " + l);
  }
  for (auto [a, b] : covers) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw unknown_element("cover references unknown element index");
    if (a == b) throw cycle_detected("self-cover " + labels[static_cast<size_t>(a)]);
  }

  // Remap to canonical (sorted) label order.
  std::vector<int> perm(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
  std::sort(perm.begin(), perm.end(),
            [&](int a, int b) { return labels[static_cast<size_t>(a)] < labels[static_cast<size_t>(b)]; });
  std::vector<int> where(static_cast<size_t>(n));
  std::vector<std::string> sorted;
  sorted.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    where[static_cast<size_t>(perm[static_cast<size_t>(i)])] = i;
    sorted.push_back(labels[static_cast<size_t>(perm[static_cast<size_t>(i)])]);
  }
  std::vector<std::pair<int, int>> cov;
  cov.reserve(covers.size());
  for (auto [a, b] : covers)
    cov.emplace_back(where[static_cast<size_t>(a)], where[static_cast<size_t>(b)]);
  std::sort(cov.begin(), cov.end());
  for (size_t i = 1; i < cov.size(); ++i)
    if (cov[i] == cov[i - 1])
      throw redundant_cover("duplicate cover " + sorted[static_cast<size_t>(cov[i].first)] + " -> " +
                            sorted[static_cast<size_t>(cov[i].second)]);

  Poset p = build(std::move(sorted), cov);  // throws cycle_detected on cycles

  // Redundancy: a declared cover implied transitively by the others.
  for (auto [a, b] : cov) {
    for (int z = 0; z < n; ++z)
      if (z != a && z != b && p.less(a, z) && p.less(z, b))
        throw redundant_cover("cover " + p.label(a) + " -> " + p.label(b) +
                              " is implied transitively");
  }
  return p;
}

inline Poset Poset::from_covers(const std::vector<std::string>& labels,
                                const std::vector<std::pair<std::string, std::string>>& covers) {
  std::map<std::string, int> pos;
  for (int i = 0; i < static_cast<int>(labels.size()); ++i) {
    if (!pos.emplace(labels[static_cast<size_t>(i)], i).second)
      throw duplicate_label("duplicate label: " + labels[static_cast<size_t>(i)]);
  }
  std::vector<std::pair<int, int>> cov;
  cov.reserve(covers.size());
  for (const auto& [a, b] : covers) {
    auto ia = pos.find(a), ib = pos.find(b);
    if (ia == pos.end()) throw unknown_element("unknown element label: " + a);
    if (ib == pos.end()) throw unknown_element("unknown element label: " + b);
    cov.emplace_back(ia->second, ib->second);
  }
  return from_covers_indexed(labels, cov);
}

inline Poset Poset::from_relation(const std::vector<std::string>& labels,
                                  const std::function<bool(int, int)>& leq) {
  const int n = static_cast<int>(labels.size());
  // Antisymmetry.
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (leq(a, b) && leq(b, a))
        throw construction_failed("relation violates antisymmetry between " +
                                  labels[static_cast<size_t>(a)] + " and " +
                                  labels[static_cast<size_t>(b)]);
  // Transitive reduction: a -> b iff a < b with nothing strictly between.
  std::vector<std::pair<int, int>> cov;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b || !leq(a, b)) continue;
      bool direct = true;
      for (int z = 0; z < n && direct; ++z)
        if (z != a && z != b && leq(a, z) && leq(z, b)) direct = false;
      if (direct) cov.emplace_back(a, b);
    }
  // Remap through the canonical sort; from_covers_indexed re-validates cheaply.
  return from_covers_indexed(labels, cov);
}

inline Poset Poset::induced(std::vector<int> keep) const {
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  const int m = static_cast<int>(keep.size());
  std::vector<std::string> labels;
  labels.reserve(static_cast<size_t>(m));
  for (int i : keep) labels.push_back(label(i));
  // keep is ascending and labels_ sorted, so `labels` stays sorted.
  std::vector<std::pair<int, int>> cov;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (a == b || !less(keep[static_cast<size_t>(a)], keep[static_cast<size_t>(b)])) continue;
      bool direct = true;
      for (int z = 0; z < m && direct; ++z)
        if (z != a && z != b && less(keep[static_cast<size_t>(a)], keep[static_cast<size_t>(z)]) &&
            less(keep[static_cast<size_t>(z)], keep[static_cast<size_t>(b)]))
          direct = false;
      if (direct) cov.emplace_back(a, b);
    }
  return build(std::move(labels), std::move(cov));
}

inline Poset Poset::interval(int x, int y, bool open) const {
  if (!leq(x, y)) throw not_comparable("interval endpoints not comparable: " + label(x) +
                                       ", " + label(y));
  std::vector<int> keep;
  for (int z = 0; z < size(); ++z) {
    if (!leq(x, z) || !leq(z, y)) continue;
    if (open && (z == x || z == y)) continue;
    keep.push_back(z);
  }
  return induced(std::move(keep));
}

inline std::vector<int> Poset::ideal_indices(const std::vector<int>& generators) const {
  std::vector<char> in(static_cast<size_t>(size()), 0);
  for (int g : generators) {
    if (g < 0 || g >= size()) throw unknown_element("ideal generator out of range");
    for (int z = 0; z < size(); ++z)
      if (leq(z, g)) in[static_cast<size_t>(z)] = 1;
  }
  std::vector<int> keep;
  for (int z = 0; z < size(); ++z)
    if (in[static_cast<size_t>(z)]) keep.push_back(z);
  return keep;
}

inline std::vector<int> Poset::filter_indices(const std::vector<int>& generators) const {
  std::vector<char> in(static_cast<size_t>(size()), 0);
  for (int g : generators) {
    if (g < 0 || g >= size()) throw unknown_element("filter generator out of range");
    for (int z = 0; z < size(); ++z)
      if (leq(g, z)) in[static_cast<size_t>(z)] = 1;
  }
  std::vector<int> keep;
  for (int z = 0; z < size(); ++z)
    if (in[static_cast<size_t>(z)]) keep.push_back(z);
  return keep;
}

inline Poset Poset::order_ideal(const std::vector<int>& generators) const {
  return induced(ideal_indices(generators));
}

inline Poset Poset::dual() const {
  std::vector<std::pair<int, int>> cov;
  cov.reserve(covers_.size());
  for (auto [a, b] : covers_) cov.emplace_back(b, a);
  return build(labels_, std::move(cov));
}

inline std::string Poset::content_key() const {
  std::string out;
  for (const auto& l : labels_) {
    out += l;
    out += '\n';
  }
  out += '|';
  for (auto [a, b] : covers_) {
    out += std::to_string(a);
    out += ',';
    out += std::to_string(b);
    out += ';';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Constructions: product, ordinal sum, chains, Boolean algebras, bounded
// extension. Label composition is deterministic and part of the contract.
// ---------------------------------------------------------------------------

inline Poset product(const Poset& p, const Poset& q) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<size_t>(p.size()) * static_cast<size_t>(q.size()));
  std::vector<std::pair<int, int>> pairs;  // (i in p, j in q) per flat index
  for (int i = 0; i < p.size(); ++i)
    for (int j = 0; j < q.size(); ++j) {
      labels.push_back("(" + p.label(i) + "," + q.label(j) + ")");
      pairs.emplace_back(i, j);
    }
  auto leq = [&](int a, int b) {
    auto [ia, ja] = pairs[static_cast<size_t>(a)];
    auto [ib, jb] = pairs[static_cast<size_t>(b)];
    return p.leq(ia, ib) && q.leq(ja, jb);
  };
  return Poset::from_relation(labels, leq);
}

inline Poset ordinal_sum(const Poset& p, const Poset& q) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<size_t>(p.size() + q.size()));
  for (int i = 0; i < p.size(); ++i) labels.push_back("L:" + p.label(i));
  for (int j = 0; j < q.size(); ++j) labels.push_back("R:" + q.label(j));
  const int np = p.size();
  auto leq = [&](int a, int b) {
    bool aL = a < np, bL = b < np;
    if (aL && bL) return p.leq(a, b);
    if (!aL && !bL) return q.leq(a - np, b - np);
    return aL;  // everything in p below everything in q
  };
  return Poset::from_relation(labels, leq);
}

inline Poset chain_poset(int length) {  // length+1 elements labeled "0".."length"
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> cov;
  for (int i = 0; i <= length; ++i) labels.push_back(std::to_string(i));
  for (int i = 0; i < length; ++i) cov.emplace_back(std::to_string(i), std::to_string(i + 1));
  return Poset::from_covers(labels, cov);
}

inline Poset antichain_poset(const std::vector<std::string>& labels) {
  return Poset::from_covers(labels, {});
}

namespace detail {
inline std::string subset_word(unsigned mask, int n) {
  // Letters 1..n; digit string for n <= 9, dot-separated beyond.
  std::string out;
  for (int i = 0; i < n; ++i)
    if (mask & (1u << i)) {
      if (n > 9 && !out.empty()) out += '.';
      out += std::to_string(i + 1);
    }
  return out;
}
}  // namespace detail

inline Poset boolean_poset(int n_atoms) {
  if (n_atoms < 0 || n_atoms > 20) throw bad_params("boolean_poset: bad atom count");
  std::vector<std::string> labels;
  labels.reserve(1u << n_atoms);
  std::vector<unsigned> masks;
  for (unsigned m = 0; m < (1u << n_atoms); ++m) {
    labels.push_back(detail::subset_word(m, n_atoms));
    masks.push_back(m);
  }
  auto leq = [&](int a, int b) {
    return (masks[static_cast<size_t>(a)] & ~masks[static_cast<size_t>(b)]) == 0;
  };
  return Poset::from_relation(labels, leq);
}

// Adjoin fresh bottom and top elements; labels are chosen fresh.
inline Poset with_bounds(const Poset& p, std::string bottom = "^0", std::string top = "^1") {
  auto fresh = [&](std::string s) {
    while (p.find(s) >= 0) s = "^" + s;
    return s;
  };
  bottom = fresh(std::move(bottom));
  top = fresh(std::move(top));
  if (bottom == top) top += "'";
  std::vector<std::string> labels = p.labels();
  labels.push_back(bottom);
  labels.push_back(top);
  const int n = p.size();
  auto leq = [&](int a, int b) {
    if (a == b) return true;
    if (a == n) return true;       // bottom below everything
    if (b == n) return false;
    if (b == n + 1) return true;   // top above everything
    if (a == n + 1) return false;
    return p.leq(a, b);
  };
  return Poset::from_relation(labels, leq);
}

// Gradedness as a checked operation; empty posets are rejected.
inline bool is_graded(const Poset& p) {
  if (p.empty()) throw empty_poset("is_graded on empty poset");
  return p.graded();
}

// Remove the minimum and/or maximum when present (proper part for bounded
// posets; identity when neither exists).
inline Poset proper_part(const Poset& p) {
  std::vector<int> drop;
  int mn = p.minimum(), mx = p.maximum();
  if (mn >= 0) drop.push_back(mn);
  if (mx >= 0 && mx != mn) drop.push_back(mx);
  return p.without_set(drop);
}

}  // namespace ptl
