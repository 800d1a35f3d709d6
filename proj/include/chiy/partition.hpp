#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "chiy/errors.hpp"

namespace chiy {

// Integer partition, non-increasing positive parts. The empty partition has
// weight zero and labels the degree-zero component of a graded class.
using Partition = std::vector<int>;

inline int weight(const Partition& p) {
  int w = 0;
  for (int part : p) w += part;
  return w;
}

inline bool is_valid_partition(const Partition& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) return false;
    if (i > 0 && p[i] > p[i - 1]) return false;
  }
  return true;
}

inline Partition canonical_partition(Partition p) {
  std::sort(p.begin(), p.end(), std::greater<int>());
  for (int part : p)
    if (part <= 0) throw DimensionError("partition parts must be positive");
  return p;
}

// Multiset union, used when multiplying monomials in the graded ring.
inline Partition merge_partitions(const Partition& a, const Partition& b) {
  Partition out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  std::sort(out.begin(), out.end(), std::greater<int>());
  return out;
}

// All partitions of exactly n, in lexicographic order of the canonical form.
inline std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  Partition current;
  const std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

inline std::string partition_str(const Partition& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(p[i]);
  }
  return out + "]";
}

}  // namespace chiy
