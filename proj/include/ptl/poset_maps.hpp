// Copyright (c) the ptl authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ptl/poset.hpp"

namespace ptl {

// A total map between posets, stored by target indices. Order preservation is
// a property to be checked, not an invariant of the type.
struct PosetMap {
  Poset source;
  Poset target;
  std::vector<int> image;  // image[i] = target index of source element i

  PosetMap() = default;
  PosetMap(Poset src, Poset tgt, std::vector<int> img)
      : source(std::move(src)), target(std::move(tgt)), image(std::move(img)) {
    if (static_cast<int>(image.size()) != source.size())
      throw bad_configuration("poset map is not total on its source");
    for (int t : image)
      if (t < 0 || t >= target.size())
        throw bad_configuration("poset map image index out of range");
  }

  int operator()(int i) const { return image[static_cast<size_t>(i)]; }

  std::vector<int> fiber(int q) const {  // f^{-1}(q), ascending
    std::vector<int> out;
    for (int i = 0; i < source.size(); ++i)
      if (image[static_cast<size_t>(i)] == q) out.push_back(i);
    return out;
  }

  // f^{-1}(<q>) as a set of source indices: everything mapping into the
  // ideal generated by q.
  std::vector<int> fiber_of_ideal(int q) const {
    std::vector<int> out;
    for (int i = 0; i < source.size(); ++i)
      if (target.leq(image[static_cast<size_t>(i)], q)) out.push_back(i);
    return out;
  }

  // Restriction to a subset of source indices; the target is restricted to
  // the image of the subset.
  PosetMap restrict_source(const std::vector<int>& src_keep) const;

  // Restriction P_{>=p} -> Q_{>=f(p)} used in the interval-theorem proof.
  PosetMap restrict_above(int p) const { return restrict_source(source.filter_indices({p})); }
};

struct MapCheck {
  bool order_preserving = false;
  bool surjective = false;
  std::optional<bool> rank_preserving;  // nullopt when either side is not graded

  bool all_true() const {
    return order_preserving && surjective && rank_preserving.value_or(false);
  }
};

inline MapCheck check_map(const PosetMap& f) {
  MapCheck out;
  const Poset& P = f.source;
  const Poset& Q = f.target;
  out.order_preserving = true;
  for (int a = 0; a < P.size() && out.order_preserving; ++a)
    for (int b = 0; b < P.size(); ++b)
      if (P.leq(a, b) && !Q.leq(f(a), f(b))) {
        out.order_preserving = false;
        break;
      }
  std::vector<char> hit(static_cast<size_t>(Q.size()), 0);
  for (int i = 0; i < P.size(); ++i) hit[static_cast<size_t>(f(i))] = 1;
  out.surjective = true;
  for (char h : hit)
    if (!h) out.surjective = false;
  if (P.graded() && Q.graded()) {
    bool rp = true;
    for (int i = 0; i < P.size(); ++i)
      if (P.rank_of(i) != Q.rank_of(f(i))) {
        rp = false;
        break;
      }
    out.rank_preserving = rp;
  }
  return out;
}

// Like check_map but raising not_graded when the rank flag cannot be decided.
inline MapCheck check_map_strict(const PosetMap& f) {
  MapCheck out = check_map(f);
  if (!out.rank_preserving.has_value())
    throw not_graded("rank preservation undefined: source or target not graded");
  return out;
}

inline PosetMap PosetMap::restrict_source(const std::vector<int>& src_keep) const {
  Poset sub = source.induced(src_keep);
  std::vector<char> tgt_in(static_cast<size_t>(target.size()), 0);
  for (int i : src_keep) tgt_in[static_cast<size_t>(image[static_cast<size_t>(i)])] = 1;
  std::vector<int> tgt_keep;
  for (int q = 0; q < target.size(); ++q)
    if (tgt_in[static_cast<size_t>(q)]) tgt_keep.push_back(q);
  Poset tsub = target.induced(tgt_keep);
  std::vector<int> img(static_cast<size_t>(sub.size()));
  for (int i = 0; i < sub.size(); ++i) {
    int orig = source.index_of(sub.label(i));
    img[static_cast<size_t>(i)] = tsub.index_of(target.label(image[static_cast<size_t>(orig)]));
  }
  return PosetMap(std::move(sub), std::move(tsub), std::move(img));
}

}  // namespace ptl
