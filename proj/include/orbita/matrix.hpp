#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "orbita/families.hpp"

namespace orbita {

// Square matrix of polynomials over a shared ring.
class MatrixPoly {
 public:
  MatrixPoly() = default;
  MatrixPoly(VarSet ring, int n)
      : ring_(std::move(ring)), n_(n), e_((size_t)n * (size_t)n, Polynomial(ring_)) {
    if (n < 0) throw std::invalid_argument("MatrixPoly: negative size");
  }

  static MatrixPoly identity(const VarSet& ring, int n) {
    MatrixPoly m(ring, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Polynomial::constant(ring, Rational(1));
    return m;
  }

  static MatrixPoly scalar(const VarSet& ring, int n, const Polynomial& s) {
    MatrixPoly m(ring, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = s;
    return m;
  }

  int size() const { return n_; }
  const VarSet& ring() const { return ring_; }

  Polynomial& at(int i, int j) {
    check(i, j);
    return e_[(size_t)i * n_ + j];
  }
  const Polynomial& at(int i, int j) const {
    check(i, j);
    return e_[(size_t)i * n_ + j];
  }

  MatrixPoly transpose() const {
    MatrixPoly m(ring_, n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) m.at(j, i) = at(i, j);
    return m;
  }

  // Principal submatrix on the given 0-based indices, in the given order.
  MatrixPoly submatrix(const std::vector<int>& idx) const {
    MatrixPoly m(ring_, (int)idx.size());
    for (size_t i = 0; i < idx.size(); ++i)
      for (size_t j = 0; j < idx.size(); ++j) m.at((int)i, (int)j) = at(idx[i], idx[j]);
    return m;
  }

  bool operator==(const MatrixPoly& o) const {
    return n_ == o.n_ && ring_ == o.ring_ && e_ == o.e_;
  }
  bool operator!=(const MatrixPoly& o) const { return !(*this == o); }

  MatrixPoly operator-() const {
    MatrixPoly m(ring_, n_);
    for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = -e_[i];
    return m;
  }

  MatrixPoly operator+(const MatrixPoly& o) const {
    match(o);
    MatrixPoly m(ring_, n_);
    for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] + o.e_[i];
    return m;
  }

  MatrixPoly operator-(const MatrixPoly& o) const {
    match(o);
    MatrixPoly m(ring_, n_);
    for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] - o.e_[i];
    return m;
  }

  MatrixPoly operator*(const MatrixPoly& o) const {
    match(o);
    MatrixPoly m(ring_, n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        Polynomial acc(ring_);
        for (int k = 0; k < n_; ++k) acc += at(i, k) * o.at(k, j);
        m.at(i, j) = std::move(acc);
      }
    return m;
  }

  // Row-major text: one row per line, entries in the polynomial grammar.
  std::string str() const {
    std::ostringstream os;
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) {
        if (j) os << ", ";
        os << at(i, j).str();
      }
      os << "\n";
    }
    return os.str();
  }

 private:
  void check(int i, int j) const {
    if (i < 0 || i >= n_ || j < 0 || j >= n_)
      throw std::out_of_range("MatrixPoly: index out of range");
  }
  void match(const MatrixPoly& o) const {
    if (n_ != o.n_ || ring_ != o.ring_)
      throw std::invalid_argument("MatrixPoly: size or ring mismatch");
  }

  VarSet ring_;
  int n_ = 0;
  std::vector<Polynomial> e_;
};

// Determinant by expansion along the top remaining row, memoized on the set
// of remaining columns.
inline Polynomial det(const MatrixPoly& M) {
  const int n = M.size();
  if (n > 62) throw std::invalid_argument("det: size too large");
  std::map<uint64_t, Polynomial> memo;
  auto rec = [&](auto&& self, uint64_t mask) -> Polynomial {
    if (mask == 0) return Polynomial::constant(M.ring(), Rational(1));
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    int row = n - __builtin_popcountll(mask);
    Polynomial acc(M.ring());
    int pos = 0;
    for (int j = 0; j < n; ++j) {
      if (!(mask & (1ULL << j))) continue;
      const Polynomial& a = M.at(row, j);
      if (!a.is_zero()) {
        Polynomial sub = self(self, mask & ~(1ULL << j));
        acc += (pos % 2 == 0) ? a * sub : -(a * sub);
      }
      ++pos;
    }
    memo.emplace(mask, acc);
    return acc;
  };
  return rec(rec, n == 0 ? 0 : ((n == 62 ? (1ULL << 62) : (1ULL << n)) - 1));
}

// Pfaffian of a skew-symmetric matrix of even size, by recursive expansion
// along the first remaining row, memoized on the set of remaining indices.
inline Polynomial pfaffian(const MatrixPoly& M) {
  const int n = M.size();
  if (n % 2 != 0) throw std::invalid_argument("pfaffian: odd size");
  if (n > 62) throw std::invalid_argument("pfaffian: size too large");
  for (int i = 0; i < n; ++i) {
    if (!M.at(i, i).is_zero()) throw std::invalid_argument("pfaffian: nonzero diagonal");
    for (int j = i + 1; j < n; ++j)
      if (M.at(i, j) != -M.at(j, i)) throw std::invalid_argument("pfaffian: not skew-symmetric");
  }
  std::map<uint64_t, Polynomial> memo;
  auto rec = [&](auto&& self, uint64_t mask) -> Polynomial {
    if (mask == 0) return Polynomial::constant(M.ring(), Rational(1));
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    int i = __builtin_ctzll(mask);
    uint64_t rest = mask & ~(1ULL << i);
    Polynomial acc(M.ring());
    int k = 0;
    for (int j = i + 1; j < n; ++j) {
      if (!(rest & (1ULL << j))) continue;
      const Polynomial& a = M.at(i, j);
      if (!a.is_zero()) {
        Polynomial sub = self(self, rest & ~(1ULL << j));
        acc += (k % 2 == 0) ? a * sub : -(a * sub);
      }
      ++k;
    }
    memo.emplace(mask, acc);
    return acc;
  };
  return rec(rec, n == 0 ? 0 : (1ULL << n) - 1);
}

// Bilinear form conventions: block-diagonal J_o / J_s matrices, with a final
// 1 for odd orthogonal spaces.
enum class FormFamily { OrthogonalEven, OrthogonalOdd, Symplectic };

inline std::string form_family_name(FormFamily f) {
  switch (f) {
    case FormFamily::OrthogonalEven: return "orthogonal-even";
    case FormFamily::OrthogonalOdd: return "orthogonal-odd";
    case FormFamily::Symplectic: return "symplectic";
  }
  throw std::logic_error("form_family_name: bad enum");
}

struct FormConvention {
  FormFamily family = FormFamily::Symplectic;
  int N = 0;

  void validate() const {
    if (N < 2) throw std::invalid_argument("FormConvention: N must be >= 2");
    bool even = (N % 2 == 0);
    if (family == FormFamily::OrthogonalEven && !even)
      throw std::invalid_argument("FormConvention: orthogonal-even needs even N");
    if (family == FormFamily::OrthogonalOdd && even)
      throw std::invalid_argument("FormConvention: orthogonal-odd needs odd N");
    if (family == FormFamily::Symplectic && !even)
      throw std::invalid_argument("FormConvention: symplectic needs even N");
  }

  int pairs() const { return N / 2; }
  bool symplectic() const { return family == FormFamily::Symplectic; }
  bool orthogonal() const { return !symplectic(); }

  // dim so_N = N(N-1)/2; dim sp_N = N(N+1)/2
  int lie_algebra_dim() const {
    return symplectic() ? N * (N + 1) / 2 : N * (N - 1) / 2;
  }

  std::string str() const { return form_family_name(family) + " N=" + std::to_string(N); }

  bool operator==(const FormConvention& o) const { return family == o.family && N == o.N; }
};

inline FormConvention orthogonal_form(int N) {
  FormConvention c{N % 2 == 0 ? FormFamily::OrthogonalEven : FormFamily::OrthogonalOdd, N};
  c.validate();
  return c;
}

inline FormConvention symplectic_form(int N) {
  FormConvention c{FormFamily::Symplectic, N};
  c.validate();
  return c;
}

// The form matrix: diag(J_o,...,J_o), diag(J_o,...,J_o,1), or diag(J_s,...).
inline MatrixPoly form_matrix(const FormConvention& conv, const VarSet& ring) {
  conv.validate();
  MatrixPoly J(ring, conv.N);
  Polynomial one = Polynomial::constant(ring, Rational(1));
  for (int i = 0; i + 1 < conv.N; i += 2) {
    J.at(i, i + 1) = one;
    J.at(i + 1, i) = conv.symplectic() ? -one : one;
  }
  if (conv.N % 2 == 1) J.at(conv.N - 1, conv.N - 1) = one;
  return J;
}

namespace detail {

// Free-entry names for the generic element: the paired diagonal variables
// y_1..y_n first, then the remaining entries of the form matrix Z in
// row-major order.
inline std::vector<std::string> entry_names(const FormConvention& conv) {
  conv.validate();
  const int N = conv.N, n = conv.pairs();
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("y" + std::to_string(i));
  bool symp = conv.symplectic();
  for (int r = 0; r < N; ++r)
    for (int c = symp ? r : r + 1; c < N; ++c) {
      bool pair_slot = (c == r + 1) && (r % 2 == 0) && (r / 2 < n);
      if (pair_slot) continue;
      names.push_back("z" + std::to_string(r + 1) + "_" + std::to_string(c + 1));
    }
  return names;
}

}  // namespace detail

inline VarSet entry_ring(const FormConvention& conv) { return VarSet(detail::entry_names(conv)); }

inline VarSet entry_ring_t(const FormConvention& conv) {
  auto names = detail::entry_names(conv);
  names.push_back("t");
  return VarSet(names);
}

inline VarSet restricted_ring(const FormConvention& conv, bool with_t = false) {
  std::vector<std::string> names;
  for (int i = 1; i <= conv.pairs(); ++i) names.push_back("y" + std::to_string(i));
  if (with_t) names.push_back("t");
  return VarSet(names);
}

// Generic element of the classical Lie algebra for the form: A = J * Z with
// Z skew-symmetric (orthogonal) or symmetric (symplectic), so that
// A^T J + J A = 0. The paired slots of Z are chosen so that the diagonal of
// A reads (y_1, -y_1, ..., y_n, -y_n(, 0)). Cached per convention.
inline MatrixPoly generic_element(const FormConvention& conv) {
  conv.validate();
  static std::mutex mu;
  static std::map<std::pair<int, int>, MatrixPoly> cache;
  std::pair<int, int> key{(int)conv.family, conv.N};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  const VarSet R = entry_ring(conv);
  const int N = conv.N, n = conv.pairs();
  const bool symp = conv.symplectic();
  MatrixPoly Z(R, N);
  int zi = n;
  for (int r = 0; r < N; ++r)
    for (int c = symp ? r : r + 1; c < N; ++c) {
      bool pair_slot = (c == r + 1) && (r % 2 == 0) && (r / 2 < n);
      Polynomial v = pair_slot ? Polynomial::var(R, r / 2) : Polynomial::var(R, zi++);
      if (pair_slot && !symp) v = -v;
      Z.at(r, c) = v;
      if (c != r) Z.at(c, r) = symp ? v : -v;
    }
  MatrixPoly A = form_matrix(conv, R) * Z;
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(key, A);
  return A;
}

// Set every off-diagonal free entry (the z variables) to zero and keep the
// paired diagonal variables y_1..y_n (and t, when present).
inline Polynomial restrict_diagonal(const Polynomial& p, const FormConvention& conv) {
  const VarSet& R = p.ring();
  std::map<int, Polynomial> images;
  for (int i = 0; i < R.size(); ++i)
    if (!R.name(i).empty() && R.name(i)[0] == 'z') images.emplace(i, Polynomial(R));
  Polynomial cut = p.specialize(images);
  return cut.mapped_to(restricted_ring(conv, R.contains("t")));
}

// Symplectic Pfaffian with respect to an explicit skew form matrix J with
// det J = 1: pf(J X), defined when J X = X^T J.
inline Polynomial symplectic_pfaffian(const MatrixPoly& X, const MatrixPoly& J) {
  if (X.size() != J.size() || X.ring() != J.ring())
    throw std::invalid_argument("symplectic_pfaffian: size or ring mismatch");
  if (J * X != X.transpose() * J)
    throw std::invalid_argument("symplectic_pfaffian: conjugation condition fails");
  return pfaffian(J * X);
}

inline Polynomial symplectic_pfaffian(const MatrixPoly& X, const FormConvention& conv) {
  if (!conv.symplectic())
    throw std::invalid_argument("symplectic_pfaffian: convention must be symplectic");
  conv.validate();
  if (X.size() != conv.N) throw std::invalid_argument("symplectic_pfaffian: size mismatch");
  return symplectic_pfaffian(X, form_matrix(conv, X.ring()));
}

// sPf of the principal submatrix of t*Id - Y^2 on the index pairs of L,
// for Y the generic symplectic element. Lives in the entry ring with t.
inline Polynomial spf_minor(const FormConvention& conv, const std::vector<int>& L) {
  if (!conv.symplectic()) throw std::invalid_argument("spf_minor: convention must be symplectic");
  conv.validate();
  const int n = conv.pairs();
  validate_index_set(L, n);
  if (L.empty()) throw std::invalid_argument("spf_minor: empty index set");
  const VarSet Rt = entry_ring_t(conv);
  const int tvar = Rt.index_of_checked("t");

  MatrixPoly Y0 = generic_element(conv);
  MatrixPoly Y(Rt, conv.N);
  for (int i = 0; i < conv.N; ++i)
    for (int j = 0; j < conv.N; ++j) Y.at(i, j) = Y0.at(i, j).mapped_to(Rt);

  MatrixPoly M = MatrixPoly::scalar(Rt, conv.N, Polynomial::var(Rt, tvar)) - Y * Y;
  std::vector<int> idx;
  for (int i : L) {
    idx.push_back(2 * i - 2);
    idx.push_back(2 * i - 1);
  }
  MatrixPoly sub = M.submatrix(idx);
  FormConvention subconv = symplectic_form(2 * (int)L.size());
  return symplectic_pfaffian(sub, form_matrix(subconv, Rt));
}

// Pfaffians of the principal pair-submatrices of the form matrix J*A of a
// generic orthogonal element, over all index sets of size l+1. The diagonal
// restriction of the member on S is the signed square-free monomial y_S.
inline GeneratorFamily rank_pfaffian_generators(const FormConvention& conv, int l) {
  if (!conv.orthogonal())
    throw std::invalid_argument("rank_pfaffian_generators: convention must be orthogonal");
  conv.validate();
  const int n = conv.pairs();
  if (l < 0 || l > n - 1)
    throw std::invalid_argument("rank_pfaffian_generators: need 0 <= l <= n-1");
  MatrixPoly A = generic_element(conv);
  MatrixPoly Z = form_matrix(conv, A.ring()) * A;  // skew-symmetric form matrix of A
  GeneratorFamily fam(A.ring());
  for (const auto& S : subsets_of_size(n, l + 1)) {
    std::vector<int> idx;
    for (int i : S) {
      idx.push_back(2 * i - 2);
      idx.push_back(2 * i - 1);
    }
    fam.add("pf" + index_set_str(S), pfaffian(Z.submatrix(idx)));
  }
  return fam;
}

// Coefficient generators from symplectic Pfaffian minors for an even
// partition lambda of 2n: for each L, the t^d coefficients (d < d_l/2) of
// the sign-normalized diagonal restriction of sPf_L, which is certified to
// equal the product of (t - y_i^2) over L. For n <= 3 the family is also
// certified to generate the squared Tanisaki ideal of the matching datum.
inline GeneratorFamily typeC_minor_coeff_generators(const Partition& lambda) {
  validate_partition(lambda);
  if (lambda.empty()) throw std::invalid_argument("typeC_minor_coeff_generators: empty partition");
  for (int part : lambda)
    if (part % 2 != 0)
      throw std::invalid_argument("typeC_minor_coeff_generators: odd part present");
  const Partition b = undouble_partition(dual_partition(lambda));
  const int n = partition_sum(lambda) / 2;
  const FormConvention conv = symplectic_form(2 * n);
  const VarSet Ry = VarSet::y_ring(n);
  const VarSet Ryt = restricted_ring(conv, true);
  const int tvar = Ryt.index_of_checked("t");

  std::vector<std::pair<std::string, Polynomial>> raw;
  for (int l = 1; l <= n; ++l) {
    long dl = d_l(lambda, n, l);
    if (dl % 2 != 0) throw std::logic_error("typeC_minor_coeff_generators: odd tail sum");
    for (const auto& L : subsets_of_size(n, l)) {
      Polynomial r = restrict_diagonal(spf_minor(conv, L), conv);
      Polynomial direct = Polynomial::constant(Ryt, Rational(1));
      for (int i : L)
        direct *= Polynomial::var(Ryt, tvar) - Polynomial::var(Ryt, i - 1, 2);
      if (r == -direct) r = -r;
      if (r != direct)
        throw std::logic_error("typeC_minor_coeff_generators: restriction identity fails");
      for (long d = 0; d < dl / 2; ++d) {
        Polynomial coeff = r.coeff_of_power(tvar, (uint32_t)d);
        if (coeff.is_zero()) continue;
        raw.emplace_back("L=" + index_set_str(L) + " t^" + std::to_string(d),
                         coeff.mapped_to(Ry));
      }
    }
  }
  GeneratorFamily fam = pruned_family(Ry, std::move(raw));
  if (n <= 3) {
    LeviDatum levi{Family::C, n, 0, b};
    if (!ideal_equal(fam.as_ideal(), tanisaki_ideal(levi).as_ideal()))
      throw std::logic_error("typeC_minor_coeff_generators: Tanisaki certification fails");
  }
  return fam;
}

}  // namespace orbita
