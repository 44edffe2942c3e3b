#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "orbita/ideal.hpp"

namespace orbita {

// Finite set of rational points in fixed dimension, deduplicated and kept in
// a canonical (lexicographically sorted) order.
class PointSet {
 public:
  PointSet() = default;

  PointSet(int dim, std::vector<std::vector<Rational>> pts) : dim_(dim) {
    std::set<std::vector<Rational>> dedup;
    for (auto& p : pts) {
      if ((int)p.size() != dim)
        throw std::invalid_argument("PointSet: point dimension mismatch");
      dedup.insert(std::move(p));
    }
    pts_.assign(dedup.begin(), dedup.end());
  }

  int dim() const { return dim_; }
  size_t size() const { return pts_.size(); }
  const std::vector<Rational>& at(size_t i) const { return pts_.at(i); }
  const std::vector<std::vector<Rational>>& points() const { return pts_; }

  bool operator==(const PointSet& o) const { return dim_ == o.dim_ && pts_ == o.pts_; }

  std::string str() const {
    std::ostringstream os;
    for (const auto& p : pts_) {
      for (int i = 0; i < dim_; ++i) {
        if (i) os << ", ";
        os << to_string(p[i]);
      }
      os << "\n";
    }
    return os.str();
  }

  // One point per line, coordinates comma-separated; '#' starts a comment.
  static PointSet parse(int dim, const std::string& text) {
    std::vector<std::vector<Rational>> pts;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
      auto hash = line.find('#');
      if (hash != std::string::npos) line = line.substr(0, hash);
      bool blank = true;
      for (char c : line)
        if (!std::isspace((unsigned char)c)) blank = false;
      if (blank) continue;
      std::vector<Rational> p;
      std::string tok;
      std::istringstream ls(line);
      while (std::getline(ls, tok, ',')) {
        size_t b = tok.find_first_not_of(" \t\r");
        size_t e = tok.find_last_not_of(" \t\r");
        if (b == std::string::npos) throw std::invalid_argument("PointSet: empty coordinate");
        p.push_back(parse_rational(tok.substr(b, e - b + 1)));
      }
      pts.push_back(std::move(p));
    }
    return PointSet(dim, std::move(pts));
  }

 private:
  int dim_ = 0;
  std::vector<std::vector<Rational>> pts_;
};

// First (polynomial index, point index) where a generator fails to vanish.
struct VanishWitness {
  size_t poly_index;
  size_t point_index;
  Rational value;
};

inline std::optional<VanishWitness> vanish_failure(const std::vector<Polynomial>& polys,
                                                   const PointSet& pts) {
  for (size_t i = 0; i < polys.size(); ++i)
    for (size_t j = 0; j < pts.size(); ++j) {
      Rational v = polys[i].evaluate(pts.at(j));
      if (v != 0) return VanishWitness{i, j, v};
    }
  return std::nullopt;
}

inline bool vanishes_on(const std::vector<Polynomial>& polys, const PointSet& pts) {
  return !vanish_failure(polys, pts).has_value();
}

inline constexpr size_t kVanishingIdealPointCap = 500;

// Exact vanishing ideal of a finite point set, computed by evaluation and
// Gaussian elimination over the monomials in increasing order: each monomial
// either joins the staircase (its evaluation vector is independent) or yields
// a basis element (monomial minus its projection on the staircase). The
// output is the reduced basis and is installed as such, and the staircase
// size always equals the number of points.
inline Ideal vanishing_ideal(const PointSet& pts, const VarSet& ring,
                             MonomialOrder order = MonomialOrder::GrevLex,
                             GbLimits lim = {}) {
  if (ring.size() != pts.dim())
    throw std::invalid_argument("vanishing_ideal: ring dimension mismatch");
  if (pts.size() > kVanishingIdealPointCap)
    throw std::invalid_argument("vanishing_ideal: point set exceeds the supported size (" +
                                std::to_string(pts.size()) + " > " +
                                std::to_string(kVanishingIdealPointCap) + ")");
  const int n = ring.size();
  const size_t np = pts.size();
  detail::GbClock clock(lim);

  if (np == 0) {
    // Vanishing ideal of the empty set is the whole ring.
    return Ideal::with_known_basis(ring, {Polynomial::constant(ring, Rational(1))}, order, lim);
  }

  struct Row {
    Monomial mono;                  // the standard monomial
    std::vector<Rational> true_eval;  // evaluations of the monomial itself
    std::vector<Rational> reduced;    // pivot-normalized reduced vector
    size_t pivot;
    Polynomial q;  // polynomial with those reduced evaluations
  };
  std::vector<Row> rows;

  struct Cand {
    int parent;  // index into rows, -1 for the monomial 1
    int var;
  };
  MonomialLess less{order};
  std::map<Monomial, Cand, MonomialLess> cands(less);
  cands.emplace(Monomial(n), Cand{-1, -1});

  std::vector<Monomial> lead_monos;
  std::vector<Polynomial> basis;

  while (!cands.empty()) {
    clock.check();
    auto it = cands.begin();
    Monomial m = it->first;
    Cand c = it->second;
    cands.erase(it);

    bool skip = false;
    for (const auto& lm : lead_monos)
      if (lm.divides(m)) { skip = true; break; }
    if (skip) continue;

    // Evaluation vector of m at all points.
    std::vector<Rational> v(np);
    if (c.parent < 0) {
      for (size_t p = 0; p < np; ++p) v[p] = 1;
    } else {
      const auto& pv = rows[c.parent].true_eval;
      for (size_t p = 0; p < np; ++p) v[p] = pv[p] * pts.at(p)[c.var];
    }
    std::vector<Rational> true_eval = v;

    // Reduce against the staircase rows.
    Polynomial f = Polynomial::from_term(ring, m, Rational(1));
    for (const auto& row : rows) {
      const Rational& coef = v[row.pivot];
      if (coef == 0) continue;
      Rational cc = coef;  // v[row.pivot] aliases v; copy before mutating
      for (size_t p = 0; p < np; ++p)
        if (row.reduced[p] != 0) v[p] -= cc * row.reduced[p];
      f -= row.q * cc;
    }

    bool zero = true;
    for (size_t p = 0; p < np; ++p)
      if (v[p] != 0) { zero = false; break; }

    if (zero) {
      lead_monos.push_back(m);
      basis.push_back(detail::canonical_scale(f, order));
      continue;
    }

    size_t pivot = 0;
    while (v[pivot] == 0) ++pivot;
    Rational inv = Rational(1) / v[pivot];
    for (size_t p = 0; p < np; ++p)
      if (v[p] != 0) v[p] *= inv;
    f *= inv;

    int row_index = (int)rows.size();
    rows.push_back(Row{m, std::move(true_eval), std::move(v), pivot, std::move(f)});
    for (int var = 0; var < n; ++var) {
      Monomial child = m.times_var(var);
      cands.emplace(std::move(child), Cand{row_index, var});
    }
  }

  if (rows.size() != np)
    throw std::logic_error("vanishing_ideal: staircase size disagrees with point count");

  std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
    return monomial_cmp(a.leading_term(order).m, b.leading_term(order).m, order) < 0;
  });
  return Ideal::with_known_basis(ring, std::move(basis), order, lim);
}

// Vanishing ideal in the default coordinate ring y1..yn of the point
// dimension.
inline Ideal vanishing_ideal_points(const PointSet& pts,
                                    MonomialOrder order = MonomialOrder::GrevLex,
                                    GbLimits lim = {}) {
  return vanishing_ideal(pts, VarSet::y_ring(pts.dim()), order, lim);
}

}  // namespace orbita
