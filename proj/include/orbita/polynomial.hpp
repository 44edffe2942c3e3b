#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "orbita/monomial.hpp"
#include "orbita/rational.hpp"
#include "orbita/varset.hpp"

namespace orbita {

struct Term {
  Monomial m;
  Rational c;
};

// Sparse multivariate polynomial with exact rational coefficients.
// Terms are kept merged, zero-free, and sorted in descending grevlex order;
// that canonical layout makes equality a plain vector comparison.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(VarSet ring) : ring_(std::move(ring)) {}

  static Polynomial zero(const VarSet& ring) { return Polynomial(ring); }

  static Polynomial constant(const VarSet& ring, Rational c) {
    Polynomial p(ring);
    if (c != 0) p.terms_.push_back({Monomial(ring.size()), std::move(c)});
    return p;
  }

  static Polynomial var(const VarSet& ring, int i, uint32_t power = 1) {
    if (i < 0 || i >= ring.size()) throw std::invalid_argument("Polynomial::var: index out of range");
    Polynomial p(ring);
    if (power == 0) return constant(ring, 1);
    Monomial m(ring.size());
    m.set_exp(i, power);
    p.terms_.push_back({std::move(m), Rational(1)});
    return p;
  }

  static Polynomial var(const VarSet& ring, const std::string& name, uint32_t power = 1) {
    return var(ring, ring.index_of_checked(name), power);
  }

  static Polynomial from_term(const VarSet& ring, Monomial m, Rational c) {
    Polynomial p(ring);
    if (c != 0) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
  }

  static Polynomial from_terms(const VarSet& ring, std::vector<Term> terms) {
    Polynomial p(ring);
    p.terms_ = std::move(terms);
    p.canonicalize();
    return p;
  }

  const VarSet& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return (int)terms_.size(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one());
  }

  Rational constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw std::logic_error("Polynomial: not a constant");
    return terms_[0].c;
  }

  long degree() const {  // -1 for the zero polynomial
    long d = -1;
    for (const auto& t : terms_) d = std::max(d, t.m.degree());
    return d;
  }

  long degree_in(int var) const {
    long d = -1;
    for (const auto& t : terms_) d = std::max(d, (long)t.m.exp(var));
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    long d = terms_[0].m.degree();
    for (const auto& t : terms_)
      if (t.m.degree() != d) return false;
    return true;
  }

  // Leading term under the given order (terms are stored grevlex-descending,
  // so grevlex is O(1) and other orders scan).
  const Term& leading_term(MonomialOrder o = MonomialOrder::GrevLex) const {
    if (terms_.empty()) throw std::logic_error("Polynomial: leading term of zero");
    if (o == MonomialOrder::GrevLex) return terms_.front();
    const Term* best = &terms_[0];
    for (const auto& t : terms_)
      if (monomial_cmp(t.m, best->m, o) > 0) best = &t;
    return *best;
  }

  // Sum of the terms of maximal total degree.
  Polynomial leading_form() const {
    if (terms_.empty()) return *this;
    long d = degree();
    Polynomial p(ring_);
    for (const auto& t : terms_)
      if (t.m.degree() == d) p.terms_.push_back(t);
    return p;  // already canonical (subsequence of a canonical vector)
  }

  Polynomial homogeneous_component(long d) const {
    Polynomial p(ring_);
    for (const auto& t : terms_)
      if (t.m.degree() == d) p.terms_.push_back(t);
    return p;
  }

  Rational coefficient(const Monomial& m) const {
    for (const auto& t : terms_)
      if (t.m == m) return t.c;
    return Rational(0);
  }

  // The polynomial q with f = ... + q * var^d + ... (q collects every term
  // whose exponent of `var` is exactly d, with that power removed).
  Polynomial coeff_of_power(int var, uint32_t d) const {
    Polynomial p(ring_);
    for (const auto& t : terms_) {
      if (t.m.exp(var) == d) {
        Monomial m = t.m;
        m.set_exp(var, 0);
        p.terms_.push_back({std::move(m), t.c});
      }
    }
    p.canonicalize();
    return p;
  }

  Polynomial operator-() const {
    Polynomial p(*this);
    for (auto& t : p.terms_) t.c = -t.c;
    return p;
  }

  Polynomial& operator+=(const Polynomial& o) {
    check_same_ring(o);
    *this = merge(*this, o, Rational(1));
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    check_same_ring(o);
    *this = merge(*this, o, Rational(-1));
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { a += b; return a; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { a -= b; return a; }

  Polynomial& operator*=(const Rational& c) {
    if (c == 0) { terms_.clear(); return *this; }
    for (auto& t : terms_) t.c *= c;
    return *this;
  }
  friend Polynomial operator*(Polynomial a, const Rational& c) { a *= c; return a; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { a *= c; return a; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_same_ring(b);
    // Multiplying by a single term preserves term order, so no re-sorting.
    if (a.terms_.empty() || b.terms_.empty()) return Polynomial(a.ring_);
    if (a.terms_.size() == 1 || b.terms_.size() == 1) {
      const Polynomial& single = a.terms_.size() == 1 ? a : b;
      const Polynomial& multi = a.terms_.size() == 1 ? b : a;
      const Term& s = single.terms_[0];
      Polynomial p(a.ring_);
      p.terms_.reserve(multi.terms_.size());
      for (const auto& t : multi.terms_) p.terms_.push_back({t.m.times(s.m), t.c * s.c});
      return p;
    }
    std::map<Monomial, Rational, MonomialGreater> acc;
    for (const auto& ta : a.terms_)
      for (const auto& tb : b.terms_) {
        Monomial m = ta.m.times(tb.m);
        auto it = acc.find(m);
        if (it == acc.end()) acc.emplace(std::move(m), ta.c * tb.c);
        else {
          it->second += ta.c * tb.c;
          if (it->second == 0) acc.erase(it);
        }
      }
    Polynomial p(a.ring_);
    p.terms_.reserve(acc.size());
    for (auto& kv : acc) p.terms_.push_back({kv.first, kv.second});
    return p;
  }
  Polynomial& operator*=(const Polynomial& o) { *this = *this * o; return *this; }

  Polynomial pow(uint32_t k) const {
    Polynomial result = constant(ring_, 1);
    Polynomial base = *this;
    while (k) {
      if (k & 1) result *= base;
      base = (k >>= 1) ? base * base : base;
    }
    return result;
  }

  bool operator==(const Polynomial& o) const {
    if (ring_ != o.ring_) return false;
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
      if (terms_[i].m != o.terms_[i].m || terms_[i].c != o.terms_[i].c) return false;
    return true;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Rational evaluate(const std::vector<Rational>& point) const {
    if ((int)point.size() != ring_.size())
      throw std::invalid_argument("Polynomial::evaluate: point dimension mismatch");
    Rational acc(0);
    for (const auto& t : terms_) {
      Rational v = t.c;
      for (int i = 0; i < ring_.size(); ++i) {
        uint32_t e = t.m.exp(i);
        if (!e) continue;
        Rational p = point[i];
        Rational pe(1);
        while (e) {
          if (e & 1) pe *= p;
          if (e >>= 1) p *= p;
        }
        v *= pe;
      }
      acc += v;
    }
    return acc;
  }

  // Substitutes polynomials (in this same ring) for the given variable
  // indices; unbound variables stay themselves.
  Polynomial specialize(const std::map<int, Polynomial>& images) const {
    for (const auto& kv : images) {
      if (kv.first < 0 || kv.first >= ring_.size())
        throw std::invalid_argument("Polynomial::specialize: variable index out of range");
      if (kv.second.ring() != ring_)
        throw std::invalid_argument("Polynomial::specialize: image in a different ring");
    }
    Polynomial out(ring_);
    for (const auto& t : terms_) {
      Monomial rest(ring_.size());
      Polynomial acc = constant(ring_, t.c);
      for (int i = 0; i < ring_.size(); ++i) {
        uint32_t e = t.m.exp(i);
        if (!e) continue;
        auto it = images.find(i);
        if (it == images.end()) rest.set_exp(i, e);
        else acc *= it->second.pow(e);
      }
      out += acc * from_term(ring_, rest, Rational(1));
    }
    return out;
  }

  Polynomial specialize(const std::map<std::string, Polynomial>& images) const {
    std::map<int, Polynomial> by_index;
    for (const auto& kv : images) by_index.emplace(ring_.index_of_checked(kv.first), kv.second);
    return specialize(by_index);
  }

  // Re-expresses the polynomial in another ring; every variable actually
  // used must exist there (matched by name).
  Polynomial mapped_to(const VarSet& target) const {
    std::vector<int> where(ring_.size(), -1);
    for (int i = 0; i < ring_.size(); ++i) where[i] = target.index_of(ring_.name(i));
    Polynomial out(target);
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      Monomial m(target.size());
      for (int i = 0; i < ring_.size(); ++i) {
        uint32_t e = t.m.exp(i);
        if (!e) continue;
        if (where[i] < 0)
          throw std::invalid_argument("Polynomial::mapped_to: variable '" + ring_.name(i) +
                                      "' missing from target ring");
        m.set_exp(where[i], e);
      }
      out.terms_.push_back({std::move(m), t.c});
    }
    out.canonicalize();
    return out;
  }

  // gcd of all coefficient numerators / lcm of denominators; 0 for the zero
  // polynomial. content() * primitive_part() == *this with the primitive
  // part integral and of positive leading coefficient.
  Rational content() const {
    if (terms_.empty()) return Rational(0);
    Int num(0), den(1);
    for (const auto& t : terms_) {
      num = int_gcd(num, rat_num(t.c));
      den = int_lcm(den, rat_den(t.c));
    }
    Rational c(num, den);
    if (terms_.front().c < 0) c = -c;
    return c;
  }

  Polynomial primitive_part() const {
    if (terms_.empty()) return *this;
    Rational c = content();
    Polynomial p(*this);
    for (auto& t : p.terms_) t.c /= c;
    return p;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
      Rational c = t.c;
      if (first) {
        if (c < 0) { os << "-"; c = -c; }
        first = false;
      } else {
        if (c < 0) { os << " - "; c = -c; }
        else os << " + ";
      }
      bool bare = t.m.is_one();
      if (c != 1 || bare) {
        os << to_string(c);
        if (!bare) os << "*";
      }
      if (!bare) {
        bool started = false;
        for (int i = 0; i < ring_.size(); ++i) {
          uint32_t e = t.m.exp(i);
          if (!e) continue;
          if (started) os << "*";
          started = true;
          os << ring_.name(i);
          if (e > 1) os << "^" << e;
        }
      }
    }
    return os.str();
  }

  // Parses a sum of terms: each term is an optional sign, then a rational
  // coefficient and/or '*'-joined variable powers, e.g. "y1^2*y2 - 3/2*t1 + 4".
  static Polynomial parse(const VarSet& ring, const std::string& text);

  // Raw access used by the rewriting engine (input must stay canonical).
  std::vector<Term>& mutable_terms() { return terms_; }
  void canonicalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
      return monomial_cmp(a.m, b.m, MonomialOrder::GrevLex) > 0;
    });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (t.c == 0) continue;
      if (!out.empty() && out.back().m == t.m) {
        out.back().c += t.c;
        if (out.back().c == 0) out.pop_back();
      } else {
        out.push_back(std::move(t));
      }
    }
    terms_ = std::move(out);
  }

 private:
  struct MonomialGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
      return monomial_cmp(a, b, MonomialOrder::GrevLex) > 0;
    }
  };

  void check_same_ring(const Polynomial& o) const {
    if (ring_ != o.ring_)
      throw std::invalid_argument("Polynomial: operands live in different rings");
  }

  // a + sign * b, both canonical.
  static Polynomial merge(const Polynomial& a, const Polynomial& b, const Rational& sign) {
    Polynomial out(a.ring_);
    out.terms_.reserve(a.terms_.size() + b.terms_.size());
    size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      int c;
      if (i >= a.terms_.size()) c = -1;
      else if (j >= b.terms_.size()) c = 1;
      else c = monomial_cmp(a.terms_[i].m, b.terms_[j].m, MonomialOrder::GrevLex);
      if (c > 0) {
        out.terms_.push_back(a.terms_[i++]);
      } else if (c < 0) {
        out.terms_.push_back({b.terms_[j].m, sign * b.terms_[j].c});
        ++j;
      } else {
        Rational s = a.terms_[i].c + sign * b.terms_[j].c;
        if (s != 0) out.terms_.push_back({a.terms_[i].m, std::move(s)});
        ++i; ++j;
      }
    }
    return out;
  }

  VarSet ring_;
  std::vector<Term> terms_;
};

namespace detail {

class PolyParser {
 public:
  PolyParser(const VarSet& ring, const std::string& s) : ring_(ring), s_(s) {}

  Polynomial run() {
    Polynomial acc(ring_);
    skip_ws();
    if (pos_ >= s_.size()) throw std::invalid_argument("polynomial parse: empty input");
    bool first = true;
    while (true) {
      skip_ws();
      if (pos_ >= s_.size()) {
        if (first) throw std::invalid_argument("polynomial parse: empty input");
        break;
      }
      int sign = 1;
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-' between terms");
      }
      acc += parse_term(sign);
      first = false;
    }
    return acc;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace((unsigned char)s_[pos_])) ++pos_;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("polynomial parse: " + why + " at position " +
                                std::to_string(pos_) + " in '" + s_ + "'");
  }

  Polynomial parse_term(int sign) {
    Rational coeff(sign);
    Monomial m(ring_.size());
    bool saw_factor = false;
    while (true) {
      skip_ws();
      if (pos_ >= s_.size()) break;
      char c = s_[pos_];
      if (std::isdigit((unsigned char)c)) {
        coeff *= parse_number();
        saw_factor = true;
      } else if (std::isalpha((unsigned char)c) || c == '_') {
        auto [var, e] = parse_varpow();
        m.set_exp(var, m.exp(var) + e);
        saw_factor = true;
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '*') { ++pos_; continue; }
      break;
    }
    if (!saw_factor) fail("empty term");
    return Polynomial::from_term(ring_, std::move(m), std::move(coeff));
  }

  Rational parse_number() {
    std::string digits = take_digits();
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '/') {
      size_t save = pos_++;
      skip_ws();
      if (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) {
        std::string den = take_digits();
        if (Int(den) == 0) fail("zero denominator");
        return Rational(Int(digits), Int(den));
      }
      pos_ = save;  // the '/' belongs to something else; not our grammar anyway
      fail("expected digits after '/'");
    }
    return Rational(Int(digits));
  }

  std::string take_digits() {
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  std::pair<int, uint32_t> parse_varpow() {
    size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum((unsigned char)s_[pos_]) || s_[pos_] == '_'))
      ++pos_;
    std::string name = s_.substr(start, pos_ - start);
    int var = ring_.index_of(name);
    if (var < 0) fail("unknown variable '" + name + "'");
    uint32_t e = 1;
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      skip_ws();
      if (pos_ >= s_.size() || !std::isdigit((unsigned char)s_[pos_])) fail("expected exponent digits");
      e = (uint32_t)std::stoul(take_digits());
    }
    return {var, e};
  }

  const VarSet& ring_;
  const std::string& s_;
  size_t pos_ = 0;
};

}  // namespace detail

inline Polynomial Polynomial::parse(const VarSet& ring, const std::string& text) {
  return detail::PolyParser(ring, text).run();
}

// Division with remainder of P by Q viewed as univariate polynomials in the
// variable `zvar` with polynomial coefficients; Q's leading coefficient in
// zvar must be a nonzero constant. Returns {quotient, remainder} with
// deg_z(remainder) < deg_z(Q).
struct DivModResult {
  Polynomial quotient;
  Polynomial remainder;
};

inline DivModResult poly_divmod_in_z(const Polynomial& P, const Polynomial& Q, int zvar) {
  if (P.ring() != Q.ring()) throw std::invalid_argument("poly_divmod_in_z: ring mismatch");
  long dq = Q.degree_in(zvar);
  if (dq < 0) throw std::invalid_argument("poly_divmod_in_z: division by zero polynomial");
  Polynomial lead = Q.coeff_of_power(zvar, (uint32_t)dq);
  if (!lead.is_constant())
    throw std::invalid_argument("poly_divmod_in_z: leading coefficient in the division variable must be constant");
  Rational lc = lead.constant_value();
  const VarSet& R = P.ring();
  Polynomial quot(R), rem = P;
  while (!rem.is_zero()) {
    long d = rem.degree_in(zvar);
    if (d < dq) break;
    Polynomial step = rem.coeff_of_power(zvar, (uint32_t)d);
    step *= Rational(1) / lc;
    step *= Polynomial::var(R, zvar, (uint32_t)(d - dq));
    quot += step;
    rem -= step * Q;
    if (!rem.is_zero() && rem.degree_in(zvar) >= d)
      throw std::logic_error("poly_divmod_in_z: degree failed to drop");
  }
  return {std::move(quot), std::move(rem)};
}

// Exact division: quotient q with g = q*f, if one exists.
inline std::optional<Polynomial> try_exact_divide(const Polynomial& g, const Polynomial& f,
                                                  MonomialOrder order = MonomialOrder::GrevLex) {
  if (g.ring() != f.ring()) throw std::invalid_argument("try_exact_divide: ring mismatch");
  if (f.is_zero()) return g.is_zero() ? std::optional<Polynomial>(g) : std::nullopt;
  const VarSet& R = g.ring();
  Polynomial q(R), r = g;
  Term lf = f.leading_term(order);
  while (!r.is_zero()) {
    Term lr = r.leading_term(order);
    if (!lf.m.divides(lr.m)) return std::nullopt;
    Polynomial step = Polynomial::from_term(R, lr.m.divided_by(lf.m), lr.c / lf.c);
    q += step;
    r -= step * f;
  }
  return q;
}

// Free-function spellings of the core member operations.
inline Polynomial parse_poly(const VarSet& ring, const std::string& text) {
  return Polynomial::parse(ring, text);
}

inline Rational evaluate(const Polynomial& p, const std::vector<Rational>& point) {
  return p.evaluate(point);
}

inline Polynomial specialize(const Polynomial& p, const std::map<int, Polynomial>& images) {
  return p.specialize(images);
}

inline Polynomial specialize(const Polynomial& p, const std::map<std::string, Polynomial>& images) {
  return p.specialize(images);
}

inline Polynomial leading_form(const Polynomial& p) { return p.leading_form(); }

}  // namespace orbita
