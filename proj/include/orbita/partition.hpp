#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace orbita {

// Weakly decreasing list of positive integers.
using Partition = std::vector<int>;

inline void validate_partition(const Partition& p) {
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i && p[i] > p[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

inline long partition_sum(const Partition& p) {
  long s = 0;
  for (int x : p) s += x;
  return s;
}

// Conjugate partition: dual(p)[j-1] = #{i : p_i >= j}.
inline Partition dual_partition(const Partition& p) {
  validate_partition(p);
  Partition d;
  if (p.empty()) return d;
  for (int j = 1; j <= p[0]; ++j) {
    int c = 0;
    for (int x : p)
      if (x >= j) ++c;
    d.push_back(c);
  }
  return d;
}

// Tail sum d_l = lambda_{n-l} + lambda_{n-l+1} + ... + lambda_{n-1}
// (0-indexed; parts beyond the length of lambda count as zero).
// Requires 1 <= l <= n.
inline long d_l(const Partition& lambda, int n, int l) {
  validate_partition(lambda);
  if (n < 1) throw std::invalid_argument("d_l: n must be >= 1");
  if (l < 1 || l > n) throw std::invalid_argument("d_l: need 1 <= l <= n");
  long s = 0;
  for (int j = n - l; j < n; ++j)
    if (j < (int)lambda.size()) s += lambda[j];
  return s;
}

inline std::string partition_str(const Partition& p) {
  std::string s = "(";
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + ")";
}

// All partitions of m (m >= 0), each in weakly decreasing order, enumerated
// in lexicographically decreasing order. partitions_of(0) = { () }.
inline std::vector<Partition> partitions_of(int m) {
  if (m < 0) throw std::invalid_argument("partitions_of: m must be >= 0");
  std::vector<Partition> out;
  Partition cur;
  // Depth-first: next part at most the previous part and at most the rest.
  auto rec = [&](auto&& self, int rest, int maxpart) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int part = std::min(rest, maxpart); part >= 1; --part) {
      cur.push_back(part);
      self(self, rest - part, part);
      cur.pop_back();
    }
  };
  rec(rec, m, m);
  return out;
}

// All compositions of m (ordered tuples of positive parts summing to m), in
// lexicographically decreasing order. compositions_of(0) = { () }.
inline std::vector<std::vector<int>> compositions_of(int m) {
  if (m < 0) throw std::invalid_argument("compositions_of: m must be >= 0");
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int part = rest; part >= 1; --part) {
      cur.push_back(part);
      self(self, rest - part);
      cur.pop_back();
    }
  };
  rec(rec, m);
  return out;
}

}  // namespace orbita
