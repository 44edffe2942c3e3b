#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "orbita/partition.hpp"
#include "orbita/points.hpp"
#include "orbita/rational.hpp"

namespace orbita {

// Classical family of the acting group. B and C share the full
// hyperoctahedral group (permutations and all sign changes) on coordinates;
// D uses the index-two subgroup with evenly many sign changes.
enum class Family { B, C, D };

inline const char* family_name(Family f) {
  switch (f) {
    case Family::B: return "B";
    case Family::C: return "C";
    default: return "D";
  }
}

inline Family parse_family(const std::string& s) {
  if (s == "B" || s == "b") return Family::B;
  if (s == "C" || s == "c") return Family::C;
  if (s == "D" || s == "d") return Family::D;
  throw std::invalid_argument("parse_family: expected B, C or D, got '" + s + "'");
}

// Combinatorial datum (family; n, a, b): block sizes b_1 >= ... >= b_m >= 1
// of equal nonzero coordinate groups, a trailing zero coordinates, with
// sum(b) + a = n.
struct LeviDatum {
  Family family = Family::C;
  int n = 0;
  int a = 0;
  Partition b;

  void validate() const {
    validate_partition(b);
    if (n < 1) throw std::invalid_argument("LeviDatum: n must be >= 1");
    if (a < 0) throw std::invalid_argument("LeviDatum: a must be >= 0");
    if (partition_sum(b) + a != n)
      throw std::invalid_argument("LeviDatum: block sizes plus zeros must sum to n");
  }

  std::string str() const {
    return std::string(family_name(family)) + " n=" + std::to_string(n) +
           " a=" + std::to_string(a) + " b=" + partition_str(b);
  }

  bool operator==(const LeviDatum& o) const {
    return family == o.family && n == o.n && a == o.a && b == o.b;
  }
};

// Threshold count d'_l = sum_i max(0, l - (n - b_i)) + max(0, l - (n - a)).
// Requires 1 <= l <= n.
inline long d_prime_l(const LeviDatum& L, int l) {
  L.validate();
  if (l < 1 || l > L.n) throw std::invalid_argument("d_prime_l: need 1 <= l <= n");
  long s = 0;
  for (int bi : L.b) s += std::max(0, l - (L.n - bi));
  s += std::max(0, l - (L.n - L.a));
  return s;
}

// First k primes, as exact rationals; generic block values by default.
inline std::vector<Rational> default_tvals(int k) {
  std::vector<Rational> out;
  int cand = 2;
  while ((int)out.size() < k) {
    bool prime = cand >= 2;
    for (int d = 2; d * d <= cand; ++d)
      if (cand % d == 0) {
        prime = false;
        break;
      }
    if (prime) out.push_back(Rational(cand));
    ++cand;
  }
  return out;
}

// Point (t_1 1_{b_1}, ..., t_m 1_{b_m}, 0^a). Genericity demands every t_i
// nonzero with pairwise distinct absolute values (otherwise blocks merge and
// the stabilizer grows), and violations are errors.
inline std::vector<Rational> generic_point(const LeviDatum& L, const std::vector<Rational>& tvals) {
  L.validate();
  if (tvals.size() != L.b.size())
    throw std::invalid_argument("generic_point: need exactly one block value per part of b");
  for (size_t i = 0; i < tvals.size(); ++i) {
    if (tvals[i] == 0) throw std::invalid_argument("generic_point: block values must be nonzero");
    for (size_t j = i + 1; j < tvals.size(); ++j)
      if (tvals[i] == tvals[j] || tvals[i] == -tvals[j])
        throw std::invalid_argument(
            "generic_point: block values must have pairwise distinct absolute values");
  }
  std::vector<Rational> x;
  x.reserve(L.n);
  for (size_t i = 0; i < L.b.size(); ++i)
    for (int c = 0; c < L.b[i]; ++c) x.push_back(tvals[i]);
  for (int c = 0; c < L.a; ++c) x.push_back(Rational(0));
  return x;
}

inline std::vector<Rational> generic_point(const LeviDatum& L) {
  return generic_point(L, default_tvals((int)L.b.size()));
}

// Orbit of an explicit point under the group of the given family,
// deduplicated. For family D with no zero coordinate only even sign patterns
// are applied; a zero coordinate makes the two orbits coincide.
inline std::vector<std::vector<Rational>> orbit_of_point(const std::vector<Rational>& x,
                                                         Family family) {
  int n = (int)x.size();
  bool has_zero = false;
  for (const auto& v : x)
    if (v == 0) has_zero = true;
  bool even_only = (family == Family::D) && !has_zero;

  // Distinct permutations of the coordinate multiset.
  std::vector<Rational> sorted = x;
  std::sort(sorted.begin(), sorted.end());
  std::set<std::vector<Rational>> out;
  do {
    // All sign patterns on nonzero slots (zero slots are sign-fixed).
    std::vector<int> nz;
    for (int i = 0; i < n; ++i)
      if (sorted[i] != 0) nz.push_back(i);
    int k = (int)nz.size();
    for (unsigned long mask = 0; mask < (1UL << k); ++mask) {
      if (even_only && (__builtin_popcountl(mask) & 1)) continue;
      std::vector<Rational> p = sorted;
      for (int bit = 0; bit < k; ++bit)
        if (mask & (1UL << bit)) p[nz[bit]] = -p[nz[bit]];
      out.insert(std::move(p));
    }
  } while (std::next_permutation(sorted.begin(), sorted.end()));
  return std::vector<std::vector<Rational>>(out.begin(), out.end());
}

inline unsigned long long factorial_u64(int n) {
  unsigned long long f = 1;
  for (int i = 2; i <= n; ++i) f *= (unsigned long long)i;
  return f;
}

// |W x| for a generic point of the datum: 2^(n-a) n! / (prod b_i! * a!),
// halved for family D when a = 0 (all coordinates nonzero, so the even and
// full sign-change orbits differ and the stabilizer picks up no factor 2).
inline unsigned long long orbit_size(const LeviDatum& L) {
  L.validate();
  unsigned long long size = factorial_u64(L.n);
  for (int i = 0; i < L.n - L.a; ++i) size *= 2;
  for (int bi : L.b) size /= factorial_u64(bi);
  size /= factorial_u64(L.a);
  if (L.family == Family::D && L.a == 0) size /= 2;
  return size;
}

inline constexpr unsigned long long kWeylOrbitCap = 1000000;

// Orbit of generic_point(L, tvals) as a point set in dimension n. The
// predicted size is checked against the cap before enumeration.
inline PointSet weyl_orbit(const LeviDatum& L, const std::vector<Rational>& tvals,
                           unsigned long long cap = kWeylOrbitCap) {
  unsigned long long predicted = orbit_size(L);
  if (predicted > cap)
    throw std::invalid_argument("weyl_orbit: predicted orbit size " + std::to_string(predicted) +
                                " exceeds cap " + std::to_string(cap));
  auto pts = orbit_of_point(generic_point(L, tvals), L.family);
  return PointSet(L.n, std::move(pts));
}

inline PointSet weyl_orbit(const LeviDatum& L, unsigned long long cap = kWeylOrbitCap) {
  return weyl_orbit(L, default_tvals((int)L.b.size()), cap);
}

}  // namespace orbita
