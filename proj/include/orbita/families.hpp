#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "orbita/ideal.hpp"
#include "orbita/symfun.hpp"
#include "orbita/weyl.hpp"

namespace orbita {

// A labeled generating set of an ideal in a fixed ring. Labels are unique and
// every generator is nonzero.
class GeneratorFamily {
 public:
  GeneratorFamily() = default;
  explicit GeneratorFamily(VarSet ring) : ring_(std::move(ring)) {}

  const VarSet& ring() const { return ring_; }
  size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }

  void add(const std::string& label, Polynomial g) {
    if (g.is_zero()) throw std::invalid_argument("GeneratorFamily: zero generator '" + label + "'");
    if (g.ring() != ring_)
      throw std::invalid_argument("GeneratorFamily: ring mismatch for '" + label + "'");
    for (const auto& it : items_)
      if (it.first == label)
        throw std::invalid_argument("GeneratorFamily: duplicate label '" + label + "'");
    items_.emplace_back(label, std::move(g));
  }

  const std::vector<std::pair<std::string, Polynomial>>& items() const { return items_; }

  std::vector<Polynomial> polys() const {
    std::vector<Polynomial> out;
    out.reserve(items_.size());
    for (const auto& it : items_) out.push_back(it.second);
    return out;
  }

  Ideal as_ideal(MonomialOrder order = MonomialOrder::GrevLex, GbLimits lim = {}) const {
    return Ideal(ring_, polys(), order, lim);
  }

  // Ideal-file text: optional vars header, then one generator per line with a
  // label comment.
  std::string ideal_file_str() const {
    std::ostringstream os;
    os << "vars:";
    for (int i = 0; i < ring_.size(); ++i) os << " " << ring_.name(i);
    os << "\n";
    for (const auto& it : items_) {
      os << "# label: " << it.first << "\n";
      os << it.second.str() << "\n";
    }
    return os.str();
  }

 private:
  VarSet ring_;
  std::vector<std::pair<std::string, Polynomial>> items_;
};

namespace detail {

// Deterministic complexity order for pruning: total degree, then leading
// monomial, then term count, then text.
inline bool prune_less(const std::pair<std::string, Polynomial>& a,
                       const std::pair<std::string, Polynomial>& b, MonomialOrder order) {
  long da = a.second.degree(), db = b.second.degree();
  if (da != db) return da < db;
  int c = monomial_cmp(a.second.leading_term(order).m, b.second.leading_term(order).m, order);
  if (c != 0) return c < 0;
  if (a.second.term_count() != b.second.term_count())
    return a.second.term_count() < b.second.term_count();
  return a.second.str() < b.second.str();
}

}  // namespace detail

// Drops generators that are exact duplicates, exact Q-linear combinations of
// kept generators, or exact polynomial multiples of a kept generator. Every
// drop carries an exact witness identity, so the pruned family provably
// generates the same ideal; each witness is re-verified here. Output is in
// the deterministic complexity order.
inline std::vector<std::pair<std::string, Polynomial>> prune_generators(
    std::vector<std::pair<std::string, Polynomial>> gens,
    MonomialOrder order = MonomialOrder::GrevLex,
    std::vector<std::pair<std::string, Polynomial>>* dropped_out = nullptr) {
  for (auto& g : gens) g.second = detail::canonical_scale(g.second, order);
  std::stable_sort(gens.begin(), gens.end(), [&](const auto& a, const auto& b) {
    return detail::prune_less(a, b, order);
  });

  std::vector<std::pair<std::string, Polynomial>> kept;
  // Row-echelon pivots for the linear span of the kept generators: leading
  // monomial -> monic reduced polynomial.
  std::map<Monomial, Polynomial, MonomialLess> pivots{MonomialLess(order)};

  auto span_reduce = [&](Polynomial f) {
    while (!f.is_zero()) {
      Term lt = f.leading_term(order);
      auto it = pivots.find(lt.m);
      if (it == pivots.end()) break;
      f -= it->second * lt.c;
    }
    return f;
  };

  for (auto& g : gens) {
    // Exact linear dependence on kept generators (covers duplicates).
    Polynomial residue = span_reduce(g.second);
    if (residue.is_zero()) {
      if (dropped_out) dropped_out->push_back(g);
      continue;
    }
    // Exact multiple of a single kept generator.
    bool multiple = false;
    for (const auto& f : kept) {
      auto q = try_exact_divide(g.second, f.second, order);
      if (q) {
        if (*q * f.second != g.second)
          throw std::logic_error("prune_generators: division witness failed");
        multiple = true;
        break;
      }
    }
    if (multiple) {
      if (dropped_out) dropped_out->push_back(g);
      continue;
    }
    Term lt = residue.leading_term(order);
    pivots.emplace(lt.m, residue * (Rational(1) / lt.c));
    kept.push_back(std::move(g));
  }
  return kept;
}

inline GeneratorFamily pruned_family(const VarSet& ring,
                                     std::vector<std::pair<std::string, Polynomial>> gens,
                                     MonomialOrder order = MonomialOrder::GrevLex) {
  GeneratorFamily fam(ring);
  for (auto& g : prune_generators(std::move(gens), order)) fam.add(g.first, std::move(g.second));
  return fam;
}

// Dimension of the Q-linear span of a list of polynomials, by exact Gaussian
// elimination on their coefficient vectors.
inline size_t linear_span_dim(const std::vector<Polynomial>& polys,
                              MonomialOrder order = MonomialOrder::GrevLex) {
  std::map<Monomial, Polynomial, MonomialLess> pivots{MonomialLess(order)};
  for (const Polynomial& p : polys) {
    Polynomial f = p;
    while (!f.is_zero()) {
      Term lt = f.leading_term(order);
      auto it = pivots.find(lt.m);
      if (it == pivots.end()) {
        pivots.emplace(lt.m, f * (Rational(1) / lt.c));
        break;
      }
      f -= it->second * lt.c;
    }
  }
  return pivots.size();
}

// lambda(b): dual of the doubled block sizes (b_1, b_1, ..., b_k, b_k).
inline Partition levi_lambda(const Partition& b) {
  validate_partition(b);
  Partition doubled;
  for (int bi : b) {
    doubled.push_back(bi);
    doubled.push_back(bi);
  }
  return dual_partition(doubled);
}

// Inverse of doubling: (c_1, c_1, c_2, c_2, ...) -> (c_1, c_2, ...).
inline Partition undouble_partition(const Partition& p) {
  validate_partition(p);
  if (p.size() % 2 != 0)
    throw std::invalid_argument("undouble_partition: odd number of parts");
  Partition out;
  for (size_t i = 0; i < p.size(); i += 2) {
    if (p[i] != p[i + 1])
      throw std::invalid_argument("undouble_partition: parts do not come in equal pairs");
    out.push_back(p[i]);
  }
  return out;
}

// Squared Tanisaki ideal for the zero-block datum: e^2_p(L) over all
// L with 2p >= 2|L| - d_{|L|}(lambda) + 1, pruned.
inline GeneratorFamily tanisaki_ideal(const LeviDatum& levi) {
  levi.validate();
  if (levi.a != 0) throw std::invalid_argument("tanisaki_ideal: requires a = 0");
  const int n = levi.n;
  const Partition lambda = levi_lambda(levi.b);
  const VarSet R = VarSet::y_ring(n);
  std::vector<std::pair<std::string, Polynomial>> raw;
  for (int l = 1; l <= n; ++l) {
    long dl = d_l(lambda, n, l);
    for (const auto& L : subsets_of_size(n, l))
      for (int p = 1; p <= l; ++p) {
        if (2 * p < 2 * l - dl + 1) continue;
        raw.emplace_back("e2_" + std::to_string(p) + index_set_str(L),
                         partial_elem_sym_sq(R, L, p));
      }
  }
  return pruned_family(R, std::move(raw));
}

// Ring y1..yn, t1..tk, z used internally for the remainder construction.
namespace detail {
inline VarSet y_t_z_ring(int n, int k) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("y" + std::to_string(i));
  for (int i = 1; i <= k; ++i) names.push_back("t" + std::to_string(i));
  names.push_back("z");
  return VarSet(names);
}
}  // namespace detail

// Uniform generators for the zero-block datum, over Q[y, t]: for every
// nonempty L the z-coefficients of the remainder of prod_{i in L}(z^2 - y_i^2)
// by prod_i (z^2 - t_i^2)^{max(0, |L| - (n - b_i))}. Each coefficient is
// certified homogeneous, and its t -> 0 specialization is certified to be the
// matching signed partial elementary symmetric polynomial.
inline GeneratorFamily uniform_generators_a0(const LeviDatum& levi) {
  levi.validate();
  if (levi.a != 0) throw std::invalid_argument("uniform_generators_a0: requires a = 0");
  const int n = levi.n;
  const int k = (int)levi.b.size();
  const Partition lambda = levi_lambda(levi.b);
  const VarSet Ryt = VarSet::y_t_ring(n, k);
  const VarSet Rz = detail::y_t_z_ring(n, k);
  const int zvar = n + k;

  std::vector<std::pair<std::string, Polynomial>> raw;
  for (int l = 1; l <= n; ++l) {
    std::vector<int> mult;
    long deg_q = 0;
    for (int bi : levi.b) {
      int m = std::max(0, l - (n - bi));
      mult.push_back(m);
      deg_q += 2 * m;
    }
    if (deg_q != d_l(lambda, n, l))
      throw std::logic_error("uniform_generators_a0: divisor degree disagrees with the tail sum");
    if (deg_q == 0) continue;

    Polynomial Q = Polynomial::constant(Rz, Rational(1));
    for (int i = 0; i < k; ++i) {
      Polynomial factor = Polynomial::var(Rz, zvar, 2) - Polynomial::var(Rz, n + i, 2);
      for (int rep = 0; rep < mult[i]; ++rep) Q *= factor;
    }

    for (const auto& L : subsets_of_size(n, l)) {
      Polynomial P = Polynomial::constant(Rz, Rational(1));
      for (int i : L) P *= Polynomial::var(Rz, zvar, 2) - Polynomial::var(Rz, i - 1, 2);
      Polynomial rem = poly_divmod_in_z(P, Q, zvar).remainder;

      // Oracle for the construction: dividing by z^{deg_q} (the t -> 0 limit
      // of the divisor) truncates P, so each coefficient must specialize to
      // the signed partial elementary symmetric polynomial.
      std::map<int, Polynomial> tzero;
      for (int i = 0; i < k; ++i) tzero[n + i] = Polynomial(Rz);
      for (long d = 0; d < deg_q; ++d) {
        Polynomial coeff = rem.coeff_of_power(zvar, (uint32_t)d);
        Polynomial at0 = coeff.specialize(tzero);
        if (d % 2 == 1) {
          if (!at0.is_zero())
            throw std::logic_error("uniform_generators_a0: odd coefficient fails the t=0 oracle");
        } else {
          int p = l - (int)(d / 2);
          Polynomial expect = elem_sym(Rz, squared_vars(Rz, L), p);
          if (p % 2 == 1) expect = -expect;
          if (at0 != expect)
            throw std::logic_error("uniform_generators_a0: coefficient fails the t=0 oracle");
        }
        if (coeff.is_zero()) continue;
        if (coeff != coeff.homogeneous_component(coeff.degree()))
          throw std::logic_error("uniform_generators_a0: coefficient is not homogeneous");
        raw.emplace_back("L=" + index_set_str(L) + " z^" + std::to_string(d),
                         coeff.mapped_to(Ryt));
      }
    }
  }
  return pruned_family(Ryt, std::move(raw));
}

// f times the product of every variable occurring in f.
inline Polynomial sco(const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("sco: zero input");
  const VarSet& R = f.ring();
  Monomial support(R.size());
  for (const Term& t : f.terms())
    for (int v = 0; v < R.size(); ++v)
      if (t.m.exp(v) > 0) support.set_exp(v, 1);
  return f * Polynomial::from_term(R, support, Rational(1));
}

namespace detail {

struct TOfBItem {
  bool is_elem;        // e-side if true, h-side otherwise
  int p;               // symmetric-function degree
  std::vector<int> S;  // variable index set the polynomial is built on
};

// Structured member list of T(b): for every nonempty L inside {1..n-a} with
// l = |L| and the threshold 2p > 2l - d_l(lambda(b)), the e-side members
// e^2_p(L) (p <= l) and the h-side members h^2_p(complement of L), the
// latter capped at p <= h_cap.
inline std::vector<TOfBItem> t_of_b_items(const LeviDatum& levi, int h_cap) {
  levi.validate();
  if (levi.b.empty()) throw std::invalid_argument("t_of_b: requires at least one block");
  const int np = levi.n - levi.a;
  const Partition lb = levi_lambda(levi.b);
  std::vector<TOfBItem> items;
  for (int l = 1; l <= np; ++l) {
    long dl = d_l(lb, np, l);
    for (const auto& L : subsets_of_size(np, l)) {
      std::vector<int> comp = complement_set(L, np);
      for (int p = 1; 2 * p <= 2 * l; ++p) {
        if (2 * p <= 2 * l - dl) continue;
        items.push_back(TOfBItem{true, p, L});
      }
      if (!comp.empty())
        for (int p = 1; p <= h_cap; ++p) {
          if (2 * p <= 2 * l - dl) continue;
          items.push_back(TOfBItem{false, p, comp});
        }
    }
  }
  return items;
}

}  // namespace detail

inline int default_h_cap(const LeviDatum& levi) { return levi.n + 2; }

// T(b): partial elementary and partial complete symmetric polynomials in the
// first n-a variables, with the d_l(lambda(b)) threshold. The unbounded
// h-side is cut at h_cap (default n + 2); stabilization under raising the
// cap is checked at the call sites that consume T(b).
inline GeneratorFamily t_of_b(const LeviDatum& levi, int h_cap = -1) {
  if (h_cap < 0) h_cap = default_h_cap(levi);
  const VarSet R = VarSet::y_ring(levi.n);
  std::vector<std::pair<std::string, Polynomial>> raw;
  for (const auto& it : detail::t_of_b_items(levi, h_cap)) {
    std::string label = (it.is_elem ? "e2_" : "h2_") + std::to_string(it.p) + index_set_str(it.S);
    Polynomial g = it.is_elem ? partial_elem_sym_sq(R, it.S, it.p)
                              : partial_complete_sym_sq(R, it.S, it.p);
    raw.emplace_back(std::move(label), std::move(g));
  }
  return pruned_family(R, std::move(raw));
}

// Conjectured generating set for a datum with zeros (a >= 1): partial
// elementary symmetric squares above the doubled d'_l threshold, the
// square-free monomials y_K with |K| = n-a+1, and all signed-permutation
// images of sco applied to the members of T(b).
inline GeneratorFamily conjectural_generators(const LeviDatum& levi, int h_cap = -1) {
  levi.validate();
  if (levi.a < 1) throw std::invalid_argument("conjectural_generators: requires a >= 1");
  if (levi.b.empty())
    throw std::invalid_argument("conjectural_generators: requires at least one block");
  if (h_cap < 0) h_cap = default_h_cap(levi);
  const int n = levi.n;
  const VarSet R = VarSet::y_ring(n);
  std::vector<std::pair<std::string, Polynomial>> raw;

  // (1) partial elementary symmetric squares. The tail count d'_l is doubled
  // to match the squared-partition convention of the a = 0 threshold (at
  // a = 0, 2 d'_l = d_l(lambda(b)) exactly).
  for (int l = 1; l <= n; ++l) {
    long dpl = d_prime_l(levi, l);
    for (const auto& L : subsets_of_size(n, l))
      for (int p = 1; p <= l; ++p) {
        if (p <= l - dpl) continue;
        raw.emplace_back("e2_" + std::to_string(p) + index_set_str(L),
                         partial_elem_sym_sq(R, L, p));
      }
  }

  // (2) square-free monomials on n - a + 1 indices.
  for (const auto& K : subsets_of_size(n, n - levi.a + 1))
    raw.emplace_back("y_" + index_set_str(K), monomial_product(R, K));

  // (3) signed-permutation images of sco(T(b)). sco of an e- or h-member on
  // the set S0 is y_{S0} times the member; its images are the same shape on
  // every index set S of the same size (signs are absorbed by the ideal).
  for (const auto& it : detail::t_of_b_items(levi, h_cap)) {
    int sz = (int)it.S.size();
    for (const auto& S : subsets_of_size(n, sz)) {
      Polynomial sym = it.is_elem ? partial_elem_sym_sq(R, S, it.p)
                                  : partial_complete_sym_sq(R, S, it.p);
      Polynomial img = monomial_product(R, S) * sym;
      std::string label = std::string("y*") + (it.is_elem ? "e2_" : "h2_") +
                          std::to_string(it.p) + index_set_str(S);
      bool dup = false;
      for (const auto& r : raw)
        if (r.first == label) {
          dup = true;
          break;
        }
      if (!dup) raw.emplace_back(std::move(label), std::move(img));
    }
  }
  return pruned_family(R, std::move(raw));
}

// The ideal I_{n,a,k}: odd powers y_i^{2k+1}, even power sums up to 2n, and
// the square-free monomials y_K with |K| = n-a+1.
inline GeneratorFamily i_nak(int n, int a, int k) {
  if (n < 1 || a < 0 || k < 0 || a + k < 1 || n < a + k)
    throw std::invalid_argument("i_nak: need n >= a + k >= 1 with a, k >= 0");
  const VarSet R = VarSet::y_ring(n);
  GeneratorFamily fam(R);
  for (int i = 1; i <= n; ++i)
    fam.add("y" + std::to_string(i) + "^" + std::to_string(2 * k + 1),
            Polynomial::var(R, i - 1, (uint32_t)(2 * k + 1)));
  for (int j = 1; j <= n; ++j) fam.add("p_" + std::to_string(j), power_sum_sq(R, n, j));
  for (const auto& K : subsets_of_size(n, n - a + 1))
    fam.add("y_" + index_set_str(K), monomial_product(R, K));
  return fam;
}

// Two-row ideal: squares of all variables and the square-free monomials on
// k+1 indices.
inline GeneratorFamily two_row_ideal(int n, int k) {
  if (n < 1 || k < 0 || k > n) throw std::invalid_argument("two_row_ideal: need 0 <= k <= n");
  const VarSet R = VarSet::y_ring(n);
  GeneratorFamily fam(R);
  for (int i = 1; i <= n; ++i)
    fam.add("y" + std::to_string(i) + "^2", Polynomial::var(R, i - 1, 2));
  for (const auto& K : subsets_of_size(n, k + 1))
    fam.add("y_" + index_set_str(K), monomial_product(R, K));
  return fam;
}

// Very-even ideal in 2k variables: squares and the differences
// y_L - y_{complement} over the half-size subsets.
inline GeneratorFamily very_even_ideal(int k) {
  if (k < 1) throw std::invalid_argument("very_even_ideal: need k >= 1");
  const int n = 2 * k;
  const VarSet R = VarSet::y_ring(n);
  std::vector<std::pair<std::string, Polynomial>> raw;
  for (int i = 1; i <= n; ++i)
    raw.emplace_back("y" + std::to_string(i) + "^2", Polynomial::var(R, i - 1, 2));
  for (const auto& L : subsets_of_size(n, k)) {
    std::vector<int> comp = complement_set(L, n);
    Polynomial g = monomial_product(R, L) - monomial_product(R, comp);
    if (g.is_zero()) continue;  // cannot happen for k >= 1, kept for safety
    raw.emplace_back("y_" + index_set_str(L) + "-y_" + index_set_str(comp), std::move(g));
  }
  // Deduplicate the two spellings of each difference (L vs complement).
  std::vector<std::pair<std::string, Polynomial>> uniq;
  for (auto& g : raw) {
    Polynomial canon = detail::canonical_scale(g.second, MonomialOrder::GrevLex);
    bool seen = false;
    for (const auto& u : uniq)
      if (u.second == canon) {
        seen = true;
        break;
      }
    if (!seen) uniq.emplace_back(g.first, std::move(canon));
  }
  GeneratorFamily fam(R);
  for (auto& g : uniq) fam.add(g.first, std::move(g.second));
  return fam;
}

// Dimension of the linear span of the signed-permutation images of
// y_1 y_2 ... y_k, by exact rank of the image coefficient matrix.
inline unsigned long long vk_span_dim(int n, int k) {
  if (k < 1 || k > n) throw std::invalid_argument("vk_span_dim: need 1 <= k <= n");
  const VarSet R = VarSet::y_ring(n);
  std::vector<Polynomial> images;
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  do {
    for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
      // image of y_1...y_k under (perm, signs): sign * y_{perm(1..k)}
      Monomial m(n);
      int sign = 1;
      for (int i = 0; i < k; ++i) {
        m.set_exp(perm[i], 1);
        if (mask & (1UL << perm[i])) sign = -sign;
      }
      images.push_back(Polynomial::from_term(R, m, Rational(sign)));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return (unsigned long long)linear_span_dim(images);
}

}  // namespace orbita
