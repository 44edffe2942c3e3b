#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbita {

// Exponent vector of fixed length (the ring's variable count).
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int nvars) : e_(nvars, 0) {}
  explicit Monomial(std::vector<uint32_t> exps) : e_(std::move(exps)) {}

  int nvars() const { return (int)e_.size(); }
  uint32_t exp(int i) const { return e_[i]; }
  void set_exp(int i, uint32_t v) { e_[i] = v; }
  const std::vector<uint32_t>& exps() const { return e_; }

  long degree() const {
    long d = 0;
    for (auto x : e_) d += x;
    return d;
  }

  bool is_one() const {
    for (auto x : e_) if (x) return false;
    return true;
  }

  Monomial times(const Monomial& o) const {
    Monomial r(*this);
    for (int i = 0; i < nvars(); ++i) r.e_[i] += o.e_[i];
    return r;
  }

  Monomial times_var(int i, uint32_t k = 1) const {
    Monomial r(*this);
    r.e_[i] += k;
    return r;
  }

  bool divides(const Monomial& o) const {
    for (int i = 0; i < nvars(); ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }

  // this / o; requires o.divides(*this).
  Monomial divided_by(const Monomial& o) const {
    Monomial r(*this);
    for (int i = 0; i < nvars(); ++i) {
      if (o.e_[i] > e_[i]) throw std::invalid_argument("Monomial: non-divisible quotient");
      r.e_[i] -= o.e_[i];
    }
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (int i = 0; i < a.nvars(); ++i)
      if (b.e_[i] > r.e_[i]) r.e_[i] = b.e_[i];
    return r;
  }

  static Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (int i = 0; i < a.nvars(); ++i)
      if (b.e_[i] < r.e_[i]) r.e_[i] = b.e_[i];
    return r;
  }

  // True when the two monomials share no variable.
  static Monomial one(int nvars) { return Monomial(nvars); }

  bool coprime_with(const Monomial& o) const {
    for (int i = 0; i < nvars(); ++i)
      if (e_[i] && o.e_[i]) return false;
    return true;
  }

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return e_ != o.e_; }

 private:
  std::vector<uint32_t> e_;
};

enum class MonomialOrder { GrevLex, Lex, DegLex };

inline const char* order_name(MonomialOrder o) {
  switch (o) {
    case MonomialOrder::GrevLex: return "grevlex";
    case MonomialOrder::Lex: return "lex";
    case MonomialOrder::DegLex: return "deglex";
  }
  return "?";
}

inline MonomialOrder order_from_name(const std::string& s) {
  if (s == "grevlex") return MonomialOrder::GrevLex;
  if (s == "lex") return MonomialOrder::Lex;
  if (s == "deglex") return MonomialOrder::DegLex;
  throw std::invalid_argument("unknown monomial order '" + s + "'");
}

// Returns <0, 0, >0 as a < b, a == b, a > b under the given order.
inline int monomial_cmp(const Monomial& a, const Monomial& b, MonomialOrder o) {
  int n = a.nvars();
  switch (o) {
    case MonomialOrder::Lex: {
      for (int i = 0; i < n; ++i) {
        if (a.exp(i) != b.exp(i)) return a.exp(i) < b.exp(i) ? -1 : 1;
      }
      return 0;
    }
    case MonomialOrder::DegLex: {
      long da = a.degree(), db = b.degree();
      if (da != db) return da < db ? -1 : 1;
      for (int i = 0; i < n; ++i) {
        if (a.exp(i) != b.exp(i)) return a.exp(i) < b.exp(i) ? -1 : 1;
      }
      return 0;
    }
    case MonomialOrder::GrevLex: {
      long da = a.degree(), db = b.degree();
      if (da != db) return da < db ? -1 : 1;
      // Equal degree: the monomial whose last nonzero entry of a-b is
      // negative is the greater one.
      for (int i = n - 1; i >= 0; --i) {
        if (a.exp(i) != b.exp(i)) return a.exp(i) < b.exp(i) ? 1 : -1;
      }
      return 0;
    }
  }
  return 0;
}

inline bool degree_compatible(MonomialOrder o) { return o != MonomialOrder::Lex; }

struct MonomialLess {
  MonomialOrder order;
  bool operator()(const Monomial& a, const Monomial& b) const {
    return monomial_cmp(a, b, order) < 0;
  }
};

}  // namespace orbita
