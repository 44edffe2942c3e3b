#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "orbita/families.hpp"

namespace orbita {

// Finite point family whose coordinates are linear forms in parameters.
struct ParamPointFamily {
  VarSet params;  // parameter ring the coordinates live in
  int n = 0;      // coordinate count
  std::vector<std::vector<Polynomial>> points;
  std::string case_id;

  void validate(size_t expected_count) const {
    if (points.size() != expected_count)
      throw std::logic_error("ParamPointFamily " + case_id + ": cardinality " +
                             std::to_string(points.size()) + " != expected " +
                             std::to_string(expected_count));
    for (const auto& pt : points) {
      if ((int)pt.size() != n)
        throw std::logic_error("ParamPointFamily " + case_id + ": coordinate count mismatch");
      for (const auto& c : pt)
        if (c.degree() > 1)
          throw std::logic_error("ParamPointFamily " + case_id + ": nonlinear coordinate");
    }
    for (size_t i = 0; i < points.size(); ++i)
      for (size_t j = i + 1; j < points.size(); ++j)
        if (points[i] == points[j])
          throw std::logic_error("ParamPointFamily " + case_id + ": duplicate point");
  }
};

// Multiset of torus weights on the standard representation, closed under
// negation (zero weights may appear with multiplicity).
struct WeightList {
  VarSet params;
  std::vector<Polynomial> weights;

  void validate() const {
    std::vector<bool> used(weights.size(), false);
    for (size_t i = 0; i < weights.size(); ++i) {
      if (used[i]) continue;
      if (weights[i].is_zero()) {
        used[i] = true;
        continue;  // zero is its own negative
      }
      bool found = false;
      for (size_t j = i + 1; j < weights.size(); ++j) {
        if (used[j]) continue;
        if (weights[j] == -weights[i]) {
          used[i] = used[j] = true;
          found = true;
          break;
        }
      }
      if (!found)
        throw std::invalid_argument("WeightList: not closed under negation");
    }
  }
};

// Flag-variety relations e_i(y_1^2..y_n^2) - e_i(mu_1^2..mu_n^2) over
// Q[y_1..y_n, params], where the mu_j are one representative from each
// +/- weight pair; two zero weights pair to mu = 0 and a single leftover
// zero is dropped.
inline GeneratorFamily flag_relations(const WeightList& wl, int n) {
  if (n < 1) throw std::invalid_argument("flag_relations: n must be >= 1");
  std::vector<Polynomial> mu;
  std::vector<bool> used(wl.weights.size(), false);
  // nonzero weights pair w with -w
  for (size_t i = 0; i < wl.weights.size(); ++i) {
    if (used[i] || wl.weights[i].is_zero()) continue;
    bool found = false;
    for (size_t j = i + 1; j < wl.weights.size(); ++j) {
      if (used[j] || wl.weights[j].is_zero()) continue;
      if (wl.weights[j] == -wl.weights[i]) {
        used[i] = used[j] = true;
        mu.push_back(wl.weights[i]);
        found = true;
        break;
      }
    }
    if (!found) throw std::invalid_argument("flag_relations: unpaired weight");
  }
  // zero weights pair among themselves; one leftover zero is dropped
  int zeros = 0;
  for (size_t i = 0; i < wl.weights.size(); ++i)
    if (!used[i] && wl.weights[i].is_zero()) ++zeros;
  for (int k = 0; k < zeros / 2; ++k) mu.push_back(Polynomial(wl.params));

  if ((int)mu.size() != n)
    throw std::invalid_argument("flag_relations: weight pairs give " +
                                std::to_string(mu.size()) + " values, expected n = " +
                                std::to_string(n));

  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("y" + std::to_string(i));
  for (int i = 0; i < wl.params.size(); ++i) names.push_back(wl.params.name(i));
  VarSet R(names);

  std::vector<Polynomial> ysq, musq;
  for (int i = 0; i < n; ++i) ysq.push_back(Polynomial::var(R, i, 2));
  for (const auto& m : mu) {
    Polynomial lifted = m.mapped_to(R);
    musq.push_back(lifted * lifted);
  }
  GeneratorFamily fam(R);
  for (int p = 1; p <= n; ++p) {
    Polynomial rel = elem_sym(R, ysq, p) - elem_sym(R, musq, p);
    if (rel.is_zero())
      throw std::logic_error("flag_relations: degenerate relation e_" + std::to_string(p));
    fam.add("e" + std::to_string(p), rel);
  }
  return fam;
}

// One Appendix-style fixed-point verification case: the point family, the
// torus weights, the stated uniform generators over Q[y, t0, h], and the
// stated generators of the specialized (initial) ideal over Q[y].
struct KernelCase {
  std::string id;
  ParamPointFamily family;
  WeightList weights;
  GeneratorFamily stated_generators;
  GeneratorFamily stated_initial;

  int n() const { return family.n; }
};

namespace detail {

inline VarSet param_ring() { return VarSet({"t0", "h"}); }

inline VarSet y_param_ring(int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("y" + std::to_string(i));
  names.push_back("t0");
  names.push_back("h");
  return VarSet(names);
}

// Chain-ordered arrangements used by the C:2,2,2 and C:4,3,3 families:
// ordered tuples of distinct values, no two values summing to zero
// (isotropy), and every value with a chain predecessor (value + 2h present
// among the candidate values) must have that predecessor at an earlier
// position.
inline std::vector<std::vector<Polynomial>> chain_arrangements(
    const std::vector<Polynomial>& values, int len, const Polynomial& step) {
  std::vector<std::vector<Polynomial>> out;
  std::vector<int> idx(values.size());
  for (size_t i = 0; i < values.size(); ++i) idx[i] = (int)i;
  std::vector<int> cur;
  auto has_value = [&](const Polynomial& v) {
    for (const auto& w : values)
      if (w == v) return true;
    return false;
  };
  auto rec = [&](auto&& self) -> void {
    if ((int)cur.size() == len) {
      std::vector<Polynomial> tuple;
      for (int i : cur) tuple.push_back(values[i]);
      out.push_back(std::move(tuple));
      return;
    }
    for (int i = 0; i < (int)values.size(); ++i) {
      bool ok = true;
      for (int j : cur) {
        if (j == i) ok = false;                                   // distinct
        if (ok && (values[j] + values[i]).is_zero()) ok = false;  // isotropy
      }
      if (!ok) continue;
      Polynomial pred = values[i] + step;
      if (has_value(pred)) {
        bool seen = false;
        for (int j : cur)
          if (values[j] == pred) seen = true;
        if (!seen) continue;  // chain predecessor must come earlier
      }
      cur.push_back(i);
      self(self);
      cur.pop_back();
    }
  };
  rec(rec);
  return out;
}

}  // namespace detail

inline std::vector<std::string> kernel_case_ids() {
  return {"C:2n-2,1,1", "C:2,2,2", "C:4,3,3", "B:2,2,1",
          "D:2,2,1,1", "D:3,2,2,1", "D:2n-3,1,1,1"};
}

// Build the named case. The two 2n-parameterized ids accept a "?n=<N>"
// suffix and default to n = 4.
inline KernelCase kernel_case(const std::string& id_in) {
  std::string id = id_in;
  int nparam = 4;
  auto qpos = id.find("?n=");
  if (qpos != std::string::npos) {
    nparam = std::stoi(id.substr(qpos + 3));
    id = id.substr(0, qpos);
  }
  const VarSet P = detail::param_ring();
  const Polynomial T0 = Polynomial::var(P, 0);
  const Polynomial H = Polynomial::var(P, 1);
  auto ch = [&](long c) { return H * Rational(c); };

  KernelCase kc;
  kc.weights.params = P;
  int n = 0;

  if (id == "C:2n-2,1,1" || id == "D:2n-3,1,1,1") {
    n = nparam;
    bool typeC = (id[0] == 'C');
    if (n < 2) throw std::invalid_argument("kernel_case: need n >= 2 for " + id);
    // remaining coordinates, left to right: odd multiples (2n-3)h..h for C,
    // even multiples (2n-4)h..2h,0 for D
    std::vector<Polynomial> rem;
    for (int k = 1; k <= n - 1; ++k)
      rem.push_back(typeC ? ch(2 * n - 1 - 2 * k) : ch(2 * n - 2 - 2 * k));
    kc.weights.weights.push_back(T0);
    kc.weights.weights.push_back(-T0);
    for (const auto& w : rem) {
      kc.weights.weights.push_back(w);
      if (!w.is_zero()) kc.weights.weights.push_back(-w);
    }
    if (!typeC) kc.weights.weights.push_back(Polynomial(P));  // second zero weight
    for (int slot = 1; slot <= n; ++slot)
      for (int sign : {1, -1}) {
        std::vector<Polynomial> pt;
        int k = 0;
        for (int i = 1; i <= n; ++i)
          pt.push_back(i == slot ? T0 * Rational(sign) : rem[k++]);
        kc.family.points.push_back(std::move(pt));
      }
    kc.family.case_id = id + "?n=" + std::to_string(n);
    kc.id = kc.family.case_id;

    const VarSet R = detail::y_param_ring(n);
    auto Y = [&](int i) { return Polynomial::var(R, i - 1); };
    auto rv = [&](int j) { return rem[j - 1].mapped_to(R); };  // value at pre-slot position j
    // value at position j when the t0 slot comes at or before j
    auto rv_late = [&](int j) { return rem[j - 2].mapped_to(R); };
    Polynomial t0R = T0.mapped_to(R);
    GeneratorFamily gens(R);
    for (int j = 1; j <= n; ++j)
      for (int i = j + 1; i <= n; ++i)
        gens.add("q_" + std::to_string(j) + "_" + std::to_string(i),
                 (Y(j) - rv(j)) * (Y(i) - rv_late(i)));
    gens.add("c_1", (Y(1) - rv(1)) * (Y(1) * Y(1) - t0R * t0R));
    gens.add("c_" + std::to_string(n),
             (Y(n) - rv_late(n)) * (Y(n) * Y(n) - t0R * t0R));
    for (int i = 2; i <= n - 1; ++i)
      gens.add("m_" + std::to_string(i),
               (Y(i) - rv(i)) * (Y(i) - rv_late(i)) * (Y(i) * Y(i) - t0R * t0R));
    for (int j = 1; j <= n; ++j) {
      Polynomial lift(R);
      for (int i = 1; i <= n; ++i) lift += Polynomial::var(R, i - 1, (uint32_t)(2 * j));
      Polynomial musum = t0R;
      for (uint32_t e = 1; e < (uint32_t)(2 * j); ++e) musum *= t0R;
      for (const auto& w : rem) {
        if (w.is_zero()) continue;
        Polynomial wl = w.mapped_to(R), pw = wl;
        for (uint32_t e = 1; e < (uint32_t)(2 * j); ++e) pw *= wl;
        musum += pw;
      }
      gens.add("p_" + std::to_string(j), lift - musum);
    }
    kc.stated_generators = gens;

    GeneratorFamily init(VarSet::y_ring(n));
    GeneratorFamily nak = i_nak(n, n - 1, 1);
    for (const auto& item : nak.items()) init.add(item.first, item.second);
    kc.stated_initial = init;
  } else if (id == "C:2,2,2") {
    n = 3;
    kc.id = id;
    kc.family.case_id = id;
    std::vector<Polynomial> W = {T0 + H, T0 - H, -T0 + H, -T0 - H, H, -H};
    kc.weights.weights = W;
    for (const auto& arr : detail::chain_arrangements(W, 3, ch(2)))
      kc.family.points.push_back(arr);

    const VarSet R = detail::y_param_ring(3);
    Polynomial y1 = Polynomial::var(R, 0), y2 = Polynomial::var(R, 1),
               y3 = Polynomial::var(R, 2);
    Polynomial t0 = Polynomial::var(R, 3), h = Polynomial::var(R, 4);
    GeneratorFamily gens(R);
    gens.add("g1", (y1 - h) * (y2 - h) * (y3 - h));
    gens.add("g2", (y1 - h) * (y1 - t0 - h) * (y1 + t0 - h));
    gens.add("g3", (y3 - h) * (y3 * y3 - t0 * t0 + (y1 + y2) * h * Rational(2) -
                               h * h * Rational(5)));
    gens.add("g4", (y2 - h * Rational(3)) *
                           (y2 * y2 - t0 * t0 + y1 * h * Rational(2) - h * h * Rational(3)) +
                       (h * h - y3 * y3) * h * Rational(2));
    kc.stated_generators = gens;

    const VarSet Ry = VarSet::y_ring(3);
    GeneratorFamily init(Ry);
    for (int i = 1; i <= 3; ++i)
      init.add("y" + std::to_string(i) + "^3", Polynomial::var(Ry, i - 1, 3));
    init.add("y123", Polynomial::parse(Ry, "y1*y2*y3"));
    std::vector<Polynomial> ysq;
    for (int i = 0; i < 3; ++i) ysq.push_back(Polynomial::var(Ry, i, 2));
    for (int p = 1; p <= 3; ++p) init.add("e" + std::to_string(p), elem_sym(Ry, ysq, p));
    kc.stated_initial = init;
  } else if (id == "C:4,3,3") {
    n = 5;
    kc.id = id;
    kc.family.case_id = id;
    std::vector<Polynomial> chain = {T0 + ch(2), T0,      T0 - ch(2),
                                     -T0 + ch(2), -T0, -T0 - ch(2)};
    kc.weights.weights = chain;
    kc.weights.weights.push_back(ch(3));
    kc.weights.weights.push_back(ch(1));
    kc.weights.weights.push_back(ch(-1));
    kc.weights.weights.push_back(ch(-3));
    auto arrs = detail::chain_arrangements(chain, 3, ch(2));
    if (arrs.size() != 8)
      throw std::logic_error("kernel_case C:4,3,3: expected 8 chain arrangements");
    for (int i = 1; i <= 5; ++i)
      for (int j = i + 1; j <= 5; ++j)
        for (const auto& arr : arrs) {
          std::vector<Polynomial> pt(5, Polynomial(P));
          pt[i - 1] = ch(3);
          pt[j - 1] = ch(1);
          int k = 0;
          for (int pos = 1; pos <= 5; ++pos)
            if (pos != i && pos != j) pt[pos - 1] = arr[k++];
          kc.family.points.push_back(std::move(pt));
        }

    const VarSet R = detail::y_param_ring(5);
    auto Y = [&](int i) { return Polynomial::var(R, i - 1); };
    Polynomial t0 = Polynomial::var(R, 5), h = Polynomial::var(R, 6);
    Polynomial h3 = h * Rational(3), h2 = h * Rational(2);
    GeneratorFamily gens(R);
    gens.add("g1", (Y(1) - h3) * (Y(2) - h3) * (Y(3) - h3) * (Y(4) - h3));
    gens.add("g2", (Y(2) - h) * (Y(3) - h) * (Y(4) - h) * (Y(5) - h));
    gens.add("g3", (Y(5) - h) * (Y(1) - h3) * (Y(2) - h3) * (Y(3) - h3));
    gens.add("g4", (Y(5) - h) * (Y(4) - h) * (Y(1) - h3) * (Y(2) - h3));
    gens.add("g5", (Y(5) - h) * (Y(4) - h) * (Y(3) - h) * (Y(1) - h3));
    gens.add("g6", (Y(1) - h3) * (Y(1) - t0 - h2) * (Y(1) + t0 - h2));
    kc.stated_generators = gens;

    const VarSet Ry = VarSet::y_ring(5);
    GeneratorFamily init(Ry);
    for (int i = 1; i <= 5; ++i)
      init.add("y" + std::to_string(i) + "^3", Polynomial::var(Ry, i - 1, 3));
    for (const auto& K : subsets_of_size(5, 4))
      init.add("y_" + index_set_str(K), monomial_product(Ry, K));
    kc.stated_initial = init;
  } else if (id == "B:2,2,1") {
    n = 2;
    kc.id = id;
    kc.family.case_id = id;
    kc.weights.weights = {T0 + H, T0 - H, -T0 + H, -T0 - H, Polynomial(P)};
    kc.family.points = {{T0 + H, T0 - H},
                        {-T0 + H, -T0 - H},
                        {T0 + H, -T0 + H},
                        {-T0 + H, T0 + H}};
    const VarSet R = detail::y_param_ring(2);
    Polynomial y1 = Polynomial::var(R, 0), y2 = Polynomial::var(R, 1),
               t0 = Polynomial::var(R, 2), h = Polynomial::var(R, 3);
    GeneratorFamily gens(R);
    gens.add("g1", (y1 - t0 - h) * (y1 + t0 - h));
    gens.add("g2", (y2 + y1 - h * Rational(2)) * (y2 - y1 + h * Rational(2)));
    kc.stated_generators = gens;
    const VarSet Ry = VarSet::y_ring(2);
    GeneratorFamily init(Ry);
    init.add("y1^2", Polynomial::var(Ry, 0, 2));
    init.add("y2^2", Polynomial::var(Ry, 1, 2));
    kc.stated_initial = init;
  } else if (id == "D:2,2,1,1" || id == "D:3,2,2,1") {
    bool small = (id == "D:2,2,1,1");
    n = small ? 3 : 4;
    kc.id = id;
    kc.family.case_id = id;
    kc.weights.weights = {T0 + H, T0 - H, -T0 + H, -T0 - H, Polynomial(P), Polynomial(P)};
    if (!small) {
      kc.weights.weights.push_back(ch(2));
      kc.weights.weights.push_back(ch(-2));
    }
    std::vector<std::pair<Polynomial, Polynomial>> pairs = {
        {T0 + H, T0 - H}, {-T0 + H, -T0 - H}, {T0 + H, -T0 + H}, {-T0 + H, T0 + H}};
    if (small) {
      for (int zpos = 1; zpos <= 3; ++zpos)
        for (const auto& pr : pairs) {
          std::vector<Polynomial> pt;
          std::vector<Polynomial> rest = {pr.first, pr.second};
          int k = 0;
          for (int i = 1; i <= 3; ++i)
            pt.push_back(i == zpos ? Polynomial(P) : rest[k++]);
          kc.family.points.push_back(std::move(pt));
        }
    } else {
      for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j)
          for (const auto& pr : pairs) {
            std::vector<Polynomial> pt(4, Polynomial(P));
            pt[i - 1] = ch(2);
            pt[j - 1] = Polynomial(P);
            std::vector<Polynomial> rest = {pr.first, pr.second};
            int k = 0;
            for (int pos = 1; pos <= 4; ++pos)
              if (pos != i && pos != j) pt[pos - 1] = rest[k++];
            kc.family.points.push_back(std::move(pt));
          }
    }

    const VarSet R = detail::y_param_ring(n);
    auto Y = [&](int i) { return Polynomial::var(R, i - 1); };
    Polynomial t0 = Polynomial::var(R, n), h = Polynomial::var(R, n + 1);
    GeneratorFamily gens(R);
    if (small) {
      gens.add("g1", Y(1) * Y(2) * Y(3));
      gens.add("g2", Y(1) * (Y(1) - t0 - h) * (Y(1) + t0 - h));
      gens.add("g3", Y(3) * (Y(3) * Y(3) - t0 * t0 + (Y(1) + Y(2)) * h * Rational(2) -
                             h * h * Rational(3)));
      gens.add("g4", (Y(2) - h * Rational(2)) *
                             (Y(2) * Y(2) - t0 * t0 + Y(1) * h * Rational(2) -
                              h * h * Rational(3)) -
                         Y(3) * Y(3) * h * Rational(2));
    } else {
      Polynomial h2 = h * Rational(2);
      gens.add("g1", (Y(1) - h2) * (Y(2) - h2) * (Y(3) - h2));
      gens.add("g2", Y(2) * Y(3) * Y(4));
      gens.add("g3", Y(4) * (Y(1) - h2) * (Y(2) - h2));
      gens.add("g4", Y(3) * Y(4) * (Y(1) - h2));
      gens.add("g5", (Y(1) - h2) * (Y(1) - t0 - h) * (Y(1) + t0 - h));
      gens.add("g6", Y(4) * (Y(4) * Y(4) - t0 * t0 +
                             (Y(1) + Y(2) + Y(3)) * h * Rational(2) - h * h * Rational(7)));
    }
    // power-sum lifts: mu = (t0+h, t0-h, 0) resp. (t0+h, t0-h, 2h, 0)
    std::vector<Polynomial> mu = {t0 + h, t0 - h};
    if (!small) mu.push_back(h * Rational(2));
    for (int j = 1; j <= n; ++j) {
      Polynomial lift(R);
      for (int i = 1; i <= n; ++i) lift += Polynomial::var(R, i - 1, (uint32_t)(2 * j));
      for (const auto& m : mu) {
        Polynomial pw = m;
        for (uint32_t e = 1; e < (uint32_t)(2 * j); ++e) pw *= m;
        lift -= pw;
      }
      gens.add("p_" + std::to_string(j), lift);
    }
    kc.stated_generators = gens;

    GeneratorFamily init(VarSet::y_ring(n));
    auto nak = small ? i_nak(3, 1, 1) : i_nak(4, 2, 1);
    for (auto& item : nak.items()) init.add(item.first, item.second);
    kc.stated_initial = init;
  } else {
    throw std::invalid_argument("kernel_case: unknown case id '" + id_in + "'");
  }

  kc.family.params = P;
  kc.family.n = n;
  size_t expected = 0;
  if (id == "C:2n-2,1,1" || id == "D:2n-3,1,1,1") expected = 2 * (size_t)n;
  else if (id == "C:2,2,2") expected = 12;
  else if (id == "C:4,3,3") expected = 80;
  else if (id == "B:2,2,1") expected = 4;
  else if (id == "D:2,2,1,1") expected = 12;
  else if (id == "D:3,2,2,1") expected = 24;
  kc.family.validate(expected);
  kc.weights.validate();
  return kc;
}

// Result of the four-part kernel-generator verification.
struct KernelVerification {
  std::string case_id;
  size_t family_size = 0;
  bool generators_vanish = false;                        // (1)
  std::vector<std::string> vanish_witnesses;             // failing (gen, point) pairs
  bool initial_match = false;                            // (2)
  std::optional<unsigned long long> rank_generic;        // (3) at (2,1)
  std::optional<unsigned long long> rank_generic_alt;    // (3) at (3,1)
  std::optional<unsigned long long> rank_origin;         // (4) at (0,0)
  std::optional<unsigned long long> stated_initial_dim;  // (4) stated initial alone

  bool all_pass() const {
    return generators_vanish && initial_match && rank_generic && rank_generic_alt &&
           rank_origin && *rank_generic == family_size && *rank_generic_alt == family_size &&
           *rank_origin == family_size;
  }
};

namespace detail {

// Specialize the parameter variables of the combined ring to constants and
// return the result over the plain y-ring.
inline Polynomial specialize_params(const Polynomial& g, int n,
                                    const std::vector<Rational>& vals) {
  const VarSet& R = g.ring();
  if (R.size() != n + (int)vals.size())
    throw std::invalid_argument("specialize_params: ring size mismatch");
  std::map<int, Polynomial> images;
  for (size_t k = 0; k < vals.size(); ++k)
    images.emplace(n + (int)k, Polynomial::constant(R, vals[k]));
  return g.specialize(images).mapped_to(VarSet::y_ring(n));
}

}  // namespace detail

inline KernelVerification verify_kernel_case(const KernelCase& kc, GbLimits lim = {}) {
  KernelVerification out;
  out.case_id = kc.id;
  out.family_size = kc.family.points.size();
  const int n = kc.n();
  const VarSet& R = kc.stated_generators.ring();
  GeneratorFamily flags = flag_relations(kc.weights, n);
  if (flags.ring() != R)
    throw std::logic_error("verify_kernel_case: flag relation ring mismatch");

  // (1) every stated generator vanishes identically on the family
  out.generators_vanish = true;
  for (const auto& item : kc.stated_generators.items()) {
    std::map<int, Polynomial> images;
    for (int i = 0; i < n; ++i) images.emplace(i, Polynomial(R));
    for (const auto& pt : kc.family.points) {
      for (int i = 0; i < n; ++i) images[i] = pt[i].mapped_to(R);
      if (!item.second.specialize(images).is_zero()) {
        out.generators_vanish = false;
        std::string coords;
        for (int i = 0; i < n; ++i) coords += (i ? ", " : "") + pt[i].str();
        out.vanish_witnesses.push_back(item.first + " at (" + coords + ")");
      }
    }
  }

  // augmented generator list: stated generators plus flag relations
  std::vector<Polynomial> augmented = kc.stated_generators.polys();
  for (const auto& g : flags.polys()) augmented.push_back(g);

  std::vector<Rational> origin = {Rational(0), Rational(0)};
  auto specialize_all = [&](const std::vector<Polynomial>& gens,
                            const std::vector<Rational>& at) {
    std::vector<Polynomial> out_polys;
    for (const auto& g : gens) {
      Polynomial s = detail::specialize_params(g, n, at);
      if (!s.is_zero()) out_polys.push_back(s);
    }
    return out_polys;
  };

  // (2) J_0 versus the stated initial ideal (both sides with the flag
  // specializations)
  const VarSet Ry = VarSet::y_ring(n);
  Ideal J0(Ry, specialize_all(augmented, origin), MonomialOrder::GrevLex, lim);
  std::vector<Polynomial> target = kc.stated_initial.polys();
  for (const auto& g : specialize_all(flags.polys(), origin)) target.push_back(g);
  Ideal target_ideal(Ry, target, MonomialOrder::GrevLex, lim);
  out.initial_match = ideal_equal(J0, target_ideal);

  // (3) generic-fiber ranks
  auto rank_at = [&](const std::vector<Rational>& at) {
    Ideal I(Ry, specialize_all(augmented, at), MonomialOrder::GrevLex, lim);
    return quotient_dimension(I);
  };
  out.rank_generic = rank_at({Rational(2), Rational(1)});
  out.rank_generic_alt = rank_at({Rational(3), Rational(1)});

  // (4) rank at the origin, and the stated initial ideal's own dimension
  out.rank_origin = quotient_dimension(J0);
  out.stated_initial_dim =
      quotient_dimension(Ideal(Ry, kc.stated_initial.polys(), MonomialOrder::GrevLex, lim));
  return out;
}

// Constancy of fiber quotient dimensions of a parameterized family.
struct FiberRankResult {
  bool constant = false;
  std::optional<unsigned long long> common_rank;
  std::vector<std::pair<std::string, std::string>> fibers;  // sample -> rank text
  std::string witness;
};

inline FiberRankResult fiber_rank_constancy(const std::vector<Polynomial>& gens,
                                            const std::vector<int>& param_vars,
                                            const std::vector<std::vector<Rational>>& samples,
                                            GbLimits lim = {}) {
  if (gens.empty()) throw std::invalid_argument("fiber_rank_constancy: no generators");
  if (param_vars.empty()) throw std::invalid_argument("fiber_rank_constancy: no parameters");
  if (samples.size() < 2)
    throw std::invalid_argument("fiber_rank_constancy: need at least two samples");
  bool has_origin = false;
  for (const auto& s : samples) {
    if (s.size() != param_vars.size())
      throw std::invalid_argument("fiber_rank_constancy: sample length mismatch");
    bool zero = true;
    for (const auto& v : s)
      if (v != 0) zero = false;
    if (zero) has_origin = true;
  }
  if (!has_origin)
    throw std::invalid_argument("fiber_rank_constancy: one sample must be the origin");

  const VarSet& R = gens.front().ring();
  for (int v : param_vars)
    if (v < 0 || v >= R.size())
      throw std::invalid_argument("fiber_rank_constancy: parameter index out of range");
  std::vector<std::string> names;
  for (int i = 0; i < R.size(); ++i)
    if (std::find(param_vars.begin(), param_vars.end(), i) == param_vars.end())
      names.push_back(R.name(i));
  VarSet Ry(names);

  FiberRankResult out;
  out.constant = true;
  for (const auto& s : samples) {
    std::map<int, Polynomial> images;
    for (size_t k = 0; k < param_vars.size(); ++k)
      images.emplace(param_vars[k], Polynomial::constant(R, s[k]));
    std::vector<Polynomial> fiber;
    for (const auto& g : gens) {
      Polynomial sp = g.specialize(images).mapped_to(Ry);
      if (!sp.is_zero()) fiber.push_back(sp);
    }
    std::string label = "(";
    for (size_t k = 0; k < s.size(); ++k) label += (k ? "," : "") + to_string(s[k]);
    label += ")";
    auto dim = quotient_dimension(Ideal(Ry, fiber, MonomialOrder::GrevLex, lim));
    if (!dim) {
      out.constant = false;
      out.fibers.emplace_back(label, "infinite");
      if (out.witness.empty()) out.witness = "fiber at " + label + " is infinite-dimensional";
      continue;
    }
    out.fibers.emplace_back(label, std::to_string(*dim));
    if (!out.common_rank) {
      out.common_rank = *dim;
    } else if (*out.common_rank != *dim) {
      out.constant = false;
      if (out.witness.empty())
        out.witness = "fiber at " + label + " has rank " + std::to_string(*dim) +
                      " != " + std::to_string(*out.common_rank);
    }
  }
  if (!out.constant) out.common_rank.reset();
  return out;
}

}  // namespace orbita
