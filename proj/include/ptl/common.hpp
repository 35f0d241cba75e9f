// Copyright (c) the ptl authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

namespace ptl {

// ---------------------------------------------------------------------------
// Error hierarchy. Every named failure mode gets its own type so callers and
// tests can discriminate without string matching.
// ---------------------------------------------------------------------------

class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

#define PTL_DEFINE_ERROR(NAME)                                      \
  class NAME : public error {                                       \
   public:                                                          \
    explicit NAME(const std::string& what = #NAME) : error(what) {} \
  };

PTL_DEFINE_ERROR(cycle_detected)
PTL_DEFINE_ERROR(duplicate_label)
PTL_DEFINE_ERROR(redundant_cover)
PTL_DEFINE_ERROR(empty_poset)
PTL_DEFINE_ERROR(not_comparable)
PTL_DEFINE_ERROR(unknown_element)
PTL_DEFINE_ERROR(not_graded)
PTL_DEFINE_ERROR(group_mismatch)
PTL_DEFINE_ERROR(not_below_mu)
PTL_DEFINE_ERROR(size_cap_exceeded)
PTL_DEFINE_ERROR(dimension_cap_exceeded)
PTL_DEFINE_ERROR(subset_budget_exceeded)
PTL_DEFINE_ERROR(bad_configuration)
PTL_DEFINE_ERROR(has_extremum)
PTL_DEFINE_ERROR(arity_mismatch)
PTL_DEFINE_ERROR(precondition_failed)
PTL_DEFINE_ERROR(certificate_shape_unsupported)
PTL_DEFINE_ERROR(invalid_input_certificate)
PTL_DEFINE_ERROR(construction_failed)
PTL_DEFINE_ERROR(bad_params)
PTL_DEFINE_ERROR(falsification_detected)

#undef PTL_DEFINE_ERROR

// ---------------------------------------------------------------------------
// Deterministic content hashing (FNV-1a, 64-bit). Used for cache keys only;
// full keys are stored alongside so collisions degrade to recomputation.
// ---------------------------------------------------------------------------

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string fnv1a64_hex(std::string_view s) {
  static const char* digits = "0123456789abcdef";
  std::uint64_t h = fnv1a64(s);
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<size_t>(i)] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parallelism. A single process-wide degree, settable from the CLI; all
// library loops that parallelize go through parallel_for. Results must be
// written to disjoint slots so aggregation order stays deterministic.
// ---------------------------------------------------------------------------

inline std::atomic<int>& parallelism_degree() {
  static std::atomic<int> degree{0};  // 0 = use hardware_concurrency
  return degree;
}

inline void set_parallelism(int jobs) { parallelism_degree().store(jobs); }

inline int effective_parallelism() {
  int d = parallelism_degree().load();
  if (d > 0) return d;
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn) {
  int jobs = effective_parallelism();
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      fn(i);
    }
  };
  std::vector<std::thread> pool;
  int spawn = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(jobs), n));
  pool.reserve(static_cast<size_t>(spawn));
  for (int t = 0; t < spawn - 1; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
}

}  // namespace ptl
