#pragma once

#include <chrono>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <vector>

#include "orbita/polynomial.hpp"

namespace orbita {

// Resource budget for basis computations. A computation that would exceed a
// budget raises GbLimitError instead of returning a truncated answer.
struct GbLimits {
  long degree_cap = 40;        // max total degree of an S-pair lcm
  long pair_cap = 200000;      // max S-pairs processed
  long time_budget_ms = 120000;  // wall-clock budget; <= 0 disables
};

enum class LimitKind { Degree, Pairs, Time };

inline const char* limit_kind_name(LimitKind k) {
  switch (k) {
    case LimitKind::Degree: return "degree";
    case LimitKind::Pairs: return "pairs";
    case LimitKind::Time: return "time";
  }
  return "?";
}

class GbLimitError : public std::runtime_error {
 public:
  GbLimitError(LimitKind k, const std::string& what)
      : std::runtime_error(what), kind(k) {}
  LimitKind kind;
};

namespace detail {

struct GbClock {
  std::chrono::steady_clock::time_point deadline;
  bool enabled = false;
  GbClock() = default;
  explicit GbClock(const GbLimits& lim) {
    enabled = lim.time_budget_ms > 0;
    if (enabled)
      deadline = std::chrono::steady_clock::now() +
                 std::chrono::milliseconds(lim.time_budget_ms);
  }
  void check() const {
    if (enabled && std::chrono::steady_clock::now() > deadline)
      throw GbLimitError(LimitKind::Time, "time budget exceeded during basis computation");
  }
};

// Integral, primitive, positive leading coefficient under the given order.
inline Polynomial canonical_scale(const Polynomial& f, MonomialOrder order) {
  if (f.is_zero()) return f;
  Rational c = f.content();
  if (c < 0) c = -c;
  if (f.leading_term(order).c < 0) c = -c;
  Polynomial p = f;
  p *= Rational(1) / c;
  return p;
}

struct ReduceOutcome {
  Polynomial remainder;
  long sugar;
};

// Full multivariate division of f by the basis under `order`. Fraction-free:
// the working polynomial and the emitted remainder are scaled by integers and
// rescaled exactly at the end, so the result is the exact normal form.
// `basis_sugar`, when given, makes the returned sugar track reduction steps.
inline ReduceOutcome reduce_full(const Polynomial& f,
                                 const std::vector<const Polynomial*>& basis,
                                 MonomialOrder order, long start_sugar,
                                 const std::vector<long>* basis_sugar,
                                 const GbLimits& lim, const GbClock& clock) {
  const VarSet& R = f.ring();
  long sugar = start_sugar >= 0 ? start_sugar : std::max<long>(f.degree(), 0);
  if (f.is_zero()) return {f, sugar};

  // Basis elements must be integral for the gcd bookkeeping below.
  std::vector<Polynomial> scratch;
  std::vector<const Polynomial*> gs(basis);
  for (size_t k = 0; k < gs.size(); ++k) {
    bool integral = true;
    for (const auto& t : gs[k]->terms())
      if (!is_integer(t.c)) { integral = false; break; }
    if (!integral) {
      scratch.reserve(basis.size());
      scratch.push_back(gs[k]->primitive_part());
      gs[k] = &scratch.back();
    }
  }

  Int den(1);
  for (const auto& t : f.terms()) den = int_lcm(den, rat_den(t.c));
  Polynomial h = f;
  h *= Rational(den);
  Rational scale(den);
  Polynomial out(R);

  std::vector<Term> lts;
  lts.reserve(gs.size());
  for (auto* g : gs) lts.push_back(g->leading_term(order));

  const long f_deg = f.degree();
  long steps = 0;
  while (!h.is_zero()) {
    clock.check();
    if (!degree_compatible(order) && h.degree() > std::max(lim.degree_cap, f_deg))
      throw GbLimitError(LimitKind::Degree,
                         "intermediate degree exceeded the cap during reduction");
    const Term lt = h.leading_term(order);
    int gi = -1;
    for (int k = 0; k < (int)gs.size(); ++k)
      if (lts[k].m.divides(lt.m)) { gi = k; break; }
    if (gi < 0) {
      out += Polynomial::from_term(R, lt.m, lt.c);
      h -= Polynomial::from_term(R, lt.m, lt.c);
      continue;
    }
    const Polynomial& g = *gs[gi];
    Int gamma = int_gcd(rat_num(lt.c), rat_num(lts[gi].c));
    Int a = rat_num(lts[gi].c) / gamma;
    Int b = rat_num(lt.c) / gamma;
    if (a < 0) { a = -a; b = -b; }
    Monomial m = lt.m.divided_by(lts[gi].m);
    Polynomial mg = Polynomial::from_term(R, m, Rational(-b)) * g;
    if (a != 1) {
      h *= Rational(a);
      out *= Rational(a);
      scale *= Rational(a);
    }
    h += mg;
    if (basis_sugar)
      sugar = std::max(sugar, (*basis_sugar)[gi] + m.degree());
    if (++steps % 64 == 0 && !h.is_zero()) {
      Int c = rat_num(scale);
      for (const auto& t : h.terms()) { c = int_gcd(c, rat_num(t.c)); if (c == 1) break; }
      if (c != 1)
        for (const auto& t : out.terms()) { c = int_gcd(c, rat_num(t.c)); if (c == 1) break; }
      if (c > 1) {
        Rational inv = Rational(1) / Rational(c);
        h *= inv;
        out *= inv;
        scale *= inv;
      }
    }
  }
  if (scale != 1) out *= Rational(1) / scale;
  return {std::move(out), sugar};
}

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                               MonomialOrder order) {
  const Term& lf = f.leading_term(order);
  const Term& lg = g.leading_term(order);
  Monomial L = Monomial::lcm(lf.m, lg.m);
  Polynomial a = Polynomial::from_term(f.ring(), L.divided_by(lf.m), Rational(1) / lf.c) * f;
  Polynomial b = Polynomial::from_term(g.ring(), L.divided_by(lg.m), Rational(1) / lg.c) * g;
  return a - b;
}

struct GbPair {
  int i, j;  // indices into the basis, i < j
  Monomial lcm;
  long sugar;
  long lcm_deg;
};

// Buchberger's algorithm with the Gebauer-Moller pair update and the sugar
// selection strategy. Fully deterministic.
class BuchbergerEngine {
 public:
  BuchbergerEngine(const VarSet& ring, MonomialOrder order, const GbLimits& lim)
      : ring_(ring), order_(order), lim_(lim), clock_(lim) {}

  void add_generator(const Polynomial& f) {
    if (f.is_zero()) return;
    update(canonical_scale(f, order_), std::max<long>(f.degree(), 0));
  }

  void run() {
    while (!pairs_.empty()) {
      clock_.check();
      if (pairs_done_ >= lim_.pair_cap)
        throw GbLimitError(LimitKind::Pairs, "pair cap exceeded during basis computation");
      size_t best = 0;
      for (size_t k = 1; k < pairs_.size(); ++k)
        if (pair_less(pairs_[k], pairs_[best])) best = k;
      GbPair pr = pairs_[best];
      pairs_.erase(pairs_.begin() + best);
      ++pairs_done_;
      if (pr.lcm_deg > lim_.degree_cap)
        throw GbLimitError(LimitKind::Degree, "S-pair degree exceeded the degree cap");
      Polynomial s = s_polynomial(basis_[pr.i], basis_[pr.j], order_);
      auto red = reduce_full(s, pointers(), order_, pr.sugar, &sugar_, lim_, clock_);
      if (red.remainder.is_zero()) continue;
      update(canonical_scale(red.remainder, order_), red.sugar);
    }
  }

  // Minimal, tail-reduced, canonically scaled, sorted by leading term.
  std::vector<Polynomial> reduced_basis() {
    std::vector<int> idx(basis_.size());
    for (size_t k = 0; k < idx.size(); ++k) idx[k] = (int)k;
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
      return monomial_cmp(basis_[a].leading_term(order_).m,
                          basis_[b].leading_term(order_).m, order_) < 0;
    });
    std::vector<int> keep;
    for (int k : idx) {
      const Monomial& m = basis_[k].leading_term(order_).m;
      bool dominated = false;
      for (int k2 : keep)
        if (basis_[k2].leading_term(order_).m.divides(m)) { dominated = true; break; }
      if (!dominated) keep.push_back(k);
    }
    std::vector<Polynomial> out;
    out.reserve(keep.size());
    for (size_t a = 0; a < keep.size(); ++a) {
      std::vector<const Polynomial*> others;
      for (size_t b = 0; b < keep.size(); ++b)
        if (b != a) others.push_back(&basis_[keep[b]]);
      auto red = reduce_full(basis_[keep[a]], others, order_, -1, nullptr, lim_, clock_);
      out.push_back(canonical_scale(red.remainder, order_));
    }
    std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
      return monomial_cmp(a.leading_term(order_).m, b.leading_term(order_).m, order_) < 0;
    });
    return out;
  }

 private:
  bool pair_less(const GbPair& a, const GbPair& b) const {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    if (a.lcm_deg != b.lcm_deg) return a.lcm_deg < b.lcm_deg;
    int c = monomial_cmp(a.lcm, b.lcm, order_);
    if (c) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }

  std::vector<const Polynomial*> pointers() const {
    std::vector<const Polynomial*> p;
    p.reserve(basis_.size());
    for (const auto& g : basis_) p.push_back(&g);
    return p;
  }

  GbPair make_pair(int i, int j) const {
    const Monomial& mi = basis_[i].leading_term(order_).m;
    const Monomial& mj = basis_[j].leading_term(order_).m;
    Monomial L = Monomial::lcm(mi, mj);
    long sug = std::max(sugar_[i] + L.degree() - mi.degree(),
                        sugar_[j] + L.degree() - mj.degree());
    long d = L.degree();
    return GbPair{i, j, std::move(L), sug, d};
  }

  // Gebauer-Moller UPDATE: install h as basis element t, filtering the new
  // pairs (i,t) by the product/chain criteria and pruning old pairs whose
  // lcm is strictly broken up by LT(h).
  void update(Polynomial h, long h_sugar) {
    const int t = (int)basis_.size();
    const Monomial lth = h.leading_term(order_).m;
    basis_.push_back(std::move(h));
    sugar_.push_back(h_sugar);

    std::vector<GbPair> C;
    C.reserve(t);
    for (int i = 0; i < t; ++i) C.push_back(make_pair(i, t));
    std::vector<GbPair> D;
    for (size_t idx = 0; idx < C.size(); ++idx) {
      const GbPair& cur = C[idx];
      bool coprime = basis_[cur.i].leading_term(order_).m.coprime_with(lth);
      bool minimal = true;
      if (!coprime) {
        for (size_t rest = idx + 1; rest < C.size() && minimal; ++rest)
          if (C[rest].lcm.divides(cur.lcm)) minimal = false;
        for (const auto& d : D)
          if (d.lcm.divides(cur.lcm)) { minimal = false; break; }
      }
      if (coprime || minimal) D.push_back(cur);
    }
    std::vector<GbPair> fresh;
    for (const auto& d : D)
      if (!basis_[d.i].leading_term(order_).m.coprime_with(lth)) fresh.push_back(d);

    std::vector<GbPair> kept;
    kept.reserve(pairs_.size() + fresh.size());
    for (const auto& p : pairs_) {
      const Monomial& mi = basis_[p.i].leading_term(order_).m;
      const Monomial& mj = basis_[p.j].leading_term(order_).m;
      bool drop = lth.divides(p.lcm) && Monomial::lcm(mi, lth) != p.lcm &&
                  Monomial::lcm(mj, lth) != p.lcm;
      if (!drop) kept.push_back(p);
    }
    for (auto& d : fresh) kept.push_back(std::move(d));
    pairs_ = std::move(kept);
  }

  VarSet ring_;
  MonomialOrder order_;
  GbLimits lim_;
  GbClock clock_;
  std::vector<Polynomial> basis_;
  std::vector<long> sugar_;
  std::vector<GbPair> pairs_;
  long pairs_done_ = 0;
};

inline std::vector<Polynomial> buchberger(const VarSet& ring,
                                          const std::vector<Polynomial>& gens,
                                          MonomialOrder order, const GbLimits& lim) {
  BuchbergerEngine eng(ring, order, lim);
  for (const auto& g : gens) {
    if (g.ring() != ring)
      throw std::invalid_argument("buchberger: generator in a different ring");
    eng.add_generator(g);
  }
  eng.run();
  return eng.reduced_basis();
}

}  // namespace detail

// Finitely generated ideal with a lazily computed, cached reduced basis per
// monomial order. Copies share the cache.
class Ideal {
 public:
  Ideal() : ring_(), cache_(std::make_shared<Cache>()) {}

  Ideal(VarSet ring, std::vector<Polynomial> gens,
        MonomialOrder order = MonomialOrder::GrevLex, GbLimits lim = {})
      : ring_(std::move(ring)), gens_(std::move(gens)), order_(order), lim_(lim),
        cache_(std::make_shared<Cache>()) {
    for (const auto& g : gens_)
      if (g.ring() != ring_)
        throw std::invalid_argument("Ideal: generator in a different ring");
  }

  // Wraps a basis that is already known to be the reduced basis under `order`
  // (e.g. produced by the finite-point interpolation routine).
  static Ideal with_known_basis(VarSet ring, std::vector<Polynomial> basis,
                                MonomialOrder order = MonomialOrder::GrevLex,
                                GbLimits lim = {}) {
    Ideal I(std::move(ring), std::move(basis), order, lim);
    I.cache_->by_order[order] = I.gens_;  // freshly created cache, not yet shared
    return I;
  }

  const VarSet& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  MonomialOrder order() const { return order_; }
  const GbLimits& limits() const { return lim_; }

  Ideal with_order(MonomialOrder o) const {
    Ideal J(*this);
    J.order_ = o;
    return J;
  }

  Ideal with_limits(const GbLimits& lim) const {
    Ideal J(*this);
    J.lim_ = lim;
    return J;
  }

  // Reduced basis under this ideal's order.
  const std::vector<Polynomial>& basis() const { return basis_for(order_); }

  const std::vector<Polynomial>& basis_for(MonomialOrder o) const {
    {
      std::lock_guard<std::mutex> lock(cache_->mu);
      auto it = cache_->by_order.find(o);
      if (it != cache_->by_order.end()) return it->second;
    }
    auto gb = detail::buchberger(ring_, gens_, o, lim_);
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto [it, inserted] = cache_->by_order.emplace(o, std::move(gb));
    return it->second;
  }

  Polynomial normal_form(const Polynomial& f) const {
    if (f.ring() != ring_)
      throw std::invalid_argument("normal_form: polynomial in a different ring");
    const auto& gb = basis();
    std::vector<const Polynomial*> ptrs;
    ptrs.reserve(gb.size());
    for (const auto& g : gb) ptrs.push_back(&g);
    detail::GbClock clock(lim_);
    return detail::reduce_full(f, ptrs, order_, -1, nullptr, lim_, clock).remainder;
  }

  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

  bool is_zero_ideal() const { return basis().empty(); }
  bool is_unit_ideal() const {
    const auto& gb = basis();
    return gb.size() == 1 && gb[0].is_constant();
  }

 private:
  struct Cache {
    std::mutex mu;
    std::map<MonomialOrder, std::vector<Polynomial>> by_order;
  };

  VarSet ring_;
  std::vector<Polynomial> gens_;
  MonomialOrder order_ = MonomialOrder::GrevLex;
  GbLimits lim_;
  std::shared_ptr<Cache> cache_;
};

inline const std::vector<Polynomial>& groebner_basis(const Ideal& I) { return I.basis(); }

inline Polynomial normal_form(const Polynomial& f, const Ideal& I) {
  return I.normal_form(f);
}

inline bool ideal_member(const Polynomial& f, const Ideal& I) { return I.contains(f); }

// True iff J is contained in I.
inline bool ideal_contains(const Ideal& I, const Ideal& J) {
  if (I.ring() != J.ring())
    throw std::invalid_argument("ideal_contains: rings differ");
  for (const auto& g : J.generators())
    if (!I.contains(g)) return false;
  return true;
}

inline bool ideal_equal(const Ideal& I, const Ideal& J) {
  return ideal_contains(I, J) && ideal_contains(J, I);
}

inline Ideal ideal_sum(const Ideal& I, const Ideal& J) {
  if (I.ring() != J.ring()) throw std::invalid_argument("ideal_sum: rings differ");
  std::vector<Polynomial> gens = I.generators();
  const auto& more = J.generators();
  gens.insert(gens.end(), more.begin(), more.end());
  return Ideal(I.ring(), std::move(gens), I.order(), I.limits());
}

namespace detail {

// Visits every monomial outside the staircase of `lts` (i.e. divisible by
// none of them), optionally capped by total degree. Exponents are assigned
// variable by variable; once a partial assignment is divisible by an lt
// supported on the assigned variables, all larger exponents are too, which
// bounds every loop (guaranteed to terminate when the quotient is finite or
// a degree cap is given).
template <class Visit>
void walk_standard_monomials(const std::vector<Monomial>& lts, int n, long degcap,
                             Visit&& visit) {
  for (const auto& lt : lts)
    if (lt.is_one()) return;  // unit ideal: nothing is standard
  Monomial cur(n);
  if (n == 0) { visit(cur); return; }

  auto divisible_on_prefix = [&](int upto) {
    for (const auto& lt : lts) {
      bool div = true;
      for (int i = 0; i < n && div; ++i) {
        if (i <= upto) {
          if (lt.exp(i) > cur.exp(i)) div = false;
        } else if (lt.exp(i) > 0) {
          div = false;
        }
      }
      if (div) return true;
    }
    return false;
  };

  // Recursion depth equals the variable count, so plain recursion is safe.
  // Callers guarantee termination: either the staircase is finite (a pure
  // power of every variable appears among the lts) or degcap >= 0.
  auto rec = [&](auto&& self, int i, long partial) -> void {
    for (uint32_t e = 0;; ++e) {
      cur.set_exp(i, e);
      if (degcap >= 0 && partial + (long)e > degcap) break;
      if (divisible_on_prefix(i)) break;
      if (i + 1 == n) visit(cur);
      else self(self, i + 1, partial + (long)e);
    }
    cur.set_exp(i, 0);
  };
  rec(rec, 0, 0);
}

}  // namespace detail

// True iff the quotient by I is a finite-dimensional vector space.
inline bool is_zero_dimensional(const Ideal& I) {
  const auto& gb = I.basis_for(I.order());
  if (gb.empty()) return I.ring().size() == 0;
  int n = I.ring().size();
  for (const auto& g : gb)
    if (g.leading_term(I.order()).m.is_one()) return true;
  for (int i = 0; i < n; ++i) {
    bool pure = false;
    for (const auto& g : gb) {
      const Monomial& m = g.leading_term(I.order()).m;
      if (m.exp(i) == 0) continue;
      bool only_i = true;
      for (int j = 0; j < n && only_i; ++j)
        if (j != i && m.exp(j) > 0) only_i = false;
      if (only_i) { pure = true; break; }
    }
    if (!pure) return false;
  }
  return true;
}

// Dimension of the quotient ring as a vector space; nullopt when infinite.
inline std::optional<unsigned long long> quotient_dimension(const Ideal& I) {
  if (!is_zero_dimensional(I)) return std::nullopt;
  const auto& gb = I.basis();
  std::vector<Monomial> lts;
  lts.reserve(gb.size());
  for (const auto& g : gb) lts.push_back(g.leading_term(I.order()).m);
  unsigned long long count = 0;
  detail::walk_standard_monomials(lts, I.ring().size(), -1,
                                  [&](const Monomial&) { ++count; });
  return count;
}

// Monomial basis of the quotient (zero-dimensional ideals only), ascending.
inline std::vector<Monomial> standard_monomials(const Ideal& I) {
  if (!is_zero_dimensional(I))
    throw std::logic_error("standard_monomials: quotient is infinite-dimensional");
  const auto& gb = I.basis();
  std::vector<Monomial> lts;
  for (const auto& g : gb) lts.push_back(g.leading_term(I.order()).m);
  std::vector<Monomial> out;
  detail::walk_standard_monomials(lts, I.ring().size(), -1,
                                  [&](const Monomial& m) { out.push_back(m); });
  std::sort(out.begin(), out.end(), MonomialLess{I.order()});
  return out;
}

// Hilbert function of the quotient in degrees 0..dmax (dimension counts of
// the graded pieces of the monomial staircase). Defined for any ideal.
inline std::vector<unsigned long long> hilbert_function(const Ideal& I, long dmax) {
  if (dmax < 0) return {};
  const auto& gb = I.basis();
  if (!degree_compatible(I.order()))
    return hilbert_function(I.with_order(MonomialOrder::GrevLex), dmax);
  std::vector<Monomial> lts;
  for (const auto& g : gb) lts.push_back(g.leading_term(I.order()).m);
  std::vector<unsigned long long> h(dmax + 1, 0);
  detail::walk_standard_monomials(lts, I.ring().size(), dmax,
                                  [&](const Monomial& m) { ++h[m.degree()]; });
  return h;
}

// The ideal of initial forms (lowest-degree forms drop out: this is the ideal
// generated by the top-degree homogeneous parts of all members). For a basis
// under a degree-compatible order, the leading forms of the reduced basis
// generate it.
inline Ideal initial_form_ideal(const Ideal& I) {
  MonomialOrder o = degree_compatible(I.order()) ? I.order() : MonomialOrder::GrevLex;
  const auto& gb = I.basis_for(o);
  std::vector<Polynomial> forms;
  forms.reserve(gb.size());
  for (const auto& g : gb) forms.push_back(g.leading_form());
  return Ideal(I.ring(), std::move(forms), o, I.limits());
}

}  // namespace orbita
