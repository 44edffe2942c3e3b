#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "orbita/polynomial.hpp"

namespace orbita {

// Elementary symmetric polynomial e_p of an arbitrary list, by the standard
// one-new-element recurrence. e_0 = 1; p beyond the list length gives 0.
inline Polynomial elem_sym(const VarSet& ring, const std::vector<Polynomial>& xs, int p) {
  if (p < 0) throw std::invalid_argument("elem_sym: negative degree");
  if (p > (int)xs.size()) return Polynomial(ring);
  std::vector<Polynomial> E;
  E.reserve(p + 1);
  E.emplace_back(Polynomial::constant(ring, Rational(1)));
  for (int j = 1; j <= p; ++j) E.emplace_back(ring);
  for (const Polynomial& x : xs)
    for (int j = p; j >= 1; --j) E[j] += x * E[j - 1];
  return E[p];
}

// Complete homogeneous symmetric polynomial h_p of an arbitrary list.
// h_0 = 1; the empty list gives 0 for p >= 1.
inline Polynomial complete_sym(const VarSet& ring, const std::vector<Polynomial>& xs, int p) {
  if (p < 0) throw std::invalid_argument("complete_sym: negative degree");
  std::vector<Polynomial> H;
  H.reserve(p + 1);
  H.emplace_back(Polynomial::constant(ring, Rational(1)));
  for (int j = 1; j <= p; ++j) H.emplace_back(ring);
  for (const Polynomial& x : xs)
    for (int j = 1; j <= p; ++j) H[j] += x * H[j - 1];
  return H[p];
}

// 1-based strictly increasing index set within 1..n.
inline void validate_index_set(const std::vector<int>& L, int n) {
  for (size_t i = 0; i < L.size(); ++i) {
    if (L[i] < 1 || L[i] > n)
      throw std::invalid_argument("index set entry " + std::to_string(L[i]) +
                                  " out of range 1.." + std::to_string(n));
    if (i && L[i] <= L[i - 1])
      throw std::invalid_argument("index set must be strictly increasing");
  }
}

inline std::vector<Polynomial> squared_vars(const VarSet& ring, const std::vector<int>& L) {
  std::vector<Polynomial> xs;
  xs.reserve(L.size());
  for (int i : L) xs.push_back(Polynomial::var(ring, i - 1, 2));
  return xs;
}

// e_p of {y_i^2 : i in L} over an explicit ring whose first variables are y.
inline Polynomial partial_elem_sym_sq(const VarSet& ring, const std::vector<int>& L, int p) {
  validate_index_set(L, ring.size());
  if (p < 0 || p > (int)L.size())
    throw std::invalid_argument("partial_elem_sym_sq: need 0 <= p <= |L|");
  return elem_sym(ring, squared_vars(ring, L), p);
}

inline Polynomial partial_elem_sym_sq(const std::vector<int>& L, int p, int n) {
  return partial_elem_sym_sq(VarSet::y_ring(n), L, p);
}

// h_p of {y_i^2 : i in L}; p = 0 gives 1 and an empty L gives 0 for p >= 1.
inline Polynomial partial_complete_sym_sq(const VarSet& ring, const std::vector<int>& L, int p) {
  validate_index_set(L, ring.size());
  if (p < 0) throw std::invalid_argument("partial_complete_sym_sq: negative degree");
  return complete_sym(ring, squared_vars(ring, L), p);
}

inline Polynomial partial_complete_sym_sq(const std::vector<int>& L, int p, int n) {
  return partial_complete_sym_sq(VarSet::y_ring(n), L, p);
}

// Power sum of squares: y_1^{2j} + ... + y_m^{2j}.
inline Polynomial power_sum_sq(const VarSet& ring, int m, int j) {
  if (m < 1 || m > ring.size()) throw std::invalid_argument("power_sum_sq: bad variable count");
  if (j < 1) throw std::invalid_argument("power_sum_sq: exponent must be >= 1");
  Polynomial s(ring);
  for (int i = 0; i < m; ++i) s += Polynomial::var(ring, i, (uint32_t)(2 * j));
  return s;
}

// Square-free monomial y_K = prod_{i in K} y_i.
inline Polynomial monomial_product(const VarSet& ring, const std::vector<int>& K) {
  validate_index_set(K, ring.size());
  Monomial m(ring.size());
  for (int i : K) m.set_exp(i - 1, 1);
  return Polynomial::from_term(ring, m, Rational(1));
}

// Complement of L within {1..n}, both 1-based increasing.
inline std::vector<int> complement_set(const std::vector<int>& L, int n) {
  validate_index_set(L, n);
  std::vector<int> out;
  size_t j = 0;
  for (int i = 1; i <= n; ++i) {
    if (j < L.size() && L[j] == i) {
      ++j;
      continue;
    }
    out.push_back(i);
  }
  return out;
}

// All subsets of {1..n} with the given size, in increasing bitmask order.
inline std::vector<std::vector<int>> subsets_of_size(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    if (__builtin_popcountl(mask) != k) continue;
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask & (1UL << i)) s.push_back(i + 1);
    out.push_back(std::move(s));
  }
  return out;
}

inline std::string index_set_str(const std::vector<int>& L) {
  std::string s = "(";
  for (size_t i = 0; i < L.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(L[i]);
  }
  return s + ")";
}

}  // namespace orbita
