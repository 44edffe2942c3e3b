#pragma once

// Check catalog and report machinery for the orbit-hikita command line tool.
//
// A check is a named, parameterized verification unit: it computes exact
// quantities (Groebner dimensions, Pfaffian identities, orbit evaluations)
// and compares them with the expected values recorded in the catalog.  Every
// outcome carries the computed value, the expected value with a provenance
// tag ("stated" for claims taken from the source material, "derived" for
// values this tool certifies through an independent route, "direct" for
// elementary arithmetic facts), and witnesses for anything that went wrong.
//
// Status semantics:
//   PASS         computed agrees with expected
//   FAIL         an identity this tool is responsible for does not hold,
//                or the run errored
//   DISCREPANCY  the computation finished but contradicts a stated claim
//                (recorded honestly, does not gate the exit code by default)
//   SKIP         a resource limit stopped the computation (never used for
//                mathematical disagreement)
//
// Reports are deterministic: the JSON emitted for a given (version, seed,
// limits, check list) is byte-identical across runs; timing fields are
// zeroed unless timings are explicitly requested.

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "orbita/equivariant.hpp"
#include "orbita/matrix.hpp"

namespace orbita {

inline constexpr const char* kToolVersion = "0.1.0";

using Json = nlohmann::ordered_json;

enum class CheckStatus { Pass, Fail, Discrepancy, Skip };

inline const char* check_status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Discrepancy: return "DISCREPANCY";
    case CheckStatus::Skip: return "SKIP";
  }
  return "?";
}

// A single check invocation: catalog name, ordered key=value parameters,
// Groebner limits and the seed for any randomized sampling inside the check.
struct CheckRequest {
  std::string name;
  std::vector<std::pair<std::string, std::string>> params;
  GbLimits lim{};
  unsigned long long seed = 42;
};

struct CheckOutcome {
  CheckStatus status = CheckStatus::Fail;
  Json computed = Json::object();
  Json expected = Json::object();  // {"value": ..., "provenance": ...}
  std::vector<std::string> witnesses;
  long long millis = 0;  // measured wall time; reports zero it unless asked
};

// Canonical catalog names.  "CONJ-A≠0" and "CONJ-A!=0" are accepted as
// aliases for CONJ-A-NOT-0.
inline const std::vector<std::string>& check_catalog() {
  static const std::vector<std::string> names = {
      "SQ-TANISAKI",  "UNIFORM-A0", "BI1",        "B1EQ2",         "CONJ-A-NOT-0",
      "REMARK-12",    "E2P-H2P",    "PF-SQUARE",  "SPF-SQUARE",    "SPF-MINOR",
      "PF-RANK",      "TYPEC-FLAT", "TYPEC-NONFLAT", "EX-333",     "TWO-ROW-D",
      "VERY-EVEN",    "VK-DIM",     "APPENDIX-A", "FLAG-EVAL",     "FREE-RANK"};
  return names;
}

inline std::string canonical_check_name(const std::string& name) {
  if (name == "CONJ-A≠" "0" || name == "CONJ-A!=0") return "CONJ-A-NOT-0";
  return name;
}

namespace checkdetail {

inline std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

inline const std::string* find_param(const CheckRequest& req, const std::string& key) {
  for (const auto& kv : req.params)
    if (kv.first == key) return &kv.second;
  return nullptr;
}

inline std::string get_param(const CheckRequest& req, const std::string& key) {
  const std::string* v = find_param(req, key);
  if (!v)
    throw std::invalid_argument(req.name + ": missing parameter '" + key + "'");
  return *v;
}

inline long get_long(const CheckRequest& req, const std::string& key) {
  const std::string text = trim(get_param(req, key));
  try {
    size_t pos = 0;
    long v = std::stol(text, &pos);
    if (pos != text.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument(req.name + ": parameter '" + key + "'='" + text +
                                "' is not an integer");
  }
}

inline int get_int(const CheckRequest& req, const std::string& key) {
  return (int)get_long(req, key);
}

// Parse a comma-separated integer list such as "3,1".  Empty text gives the
// empty list.
inline std::vector<int> parse_int_list(const std::string& text_in, const std::string& what) {
  std::vector<int> out;
  std::string text = trim(text_in);
  if (text.empty()) return out;
  std::istringstream is(text);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    tok = trim(tok);
    try {
      size_t pos = 0;
      out.push_back(std::stoi(tok, &pos));
      if (pos != tok.size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw std::invalid_argument(what + ": bad integer list entry '" + tok + "'");
    }
  }
  return out;
}

inline std::string int_list_str(const std::vector<int>& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  return os.str();
}

inline unsigned long long binom_u64(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (unsigned long long)(n - k + i) / (unsigned long long)i;
  return r;
}

inline Json dim_json(const std::optional<unsigned long long>& d) {
  if (d) return Json(*d);
  return Json("infinite");
}

inline Json expected_json(Json value, const char* provenance) {
  Json e = Json::object();
  e["value"] = std::move(value);
  e["provenance"] = provenance;
  return e;
}

inline Rational rand_rational(std::mt19937_64& rng) {
  long num = (long)(rng() % 13) - 6;
  long den = 1 + (long)(rng() % 4);
  return Rational(num) / Rational(den);
}

inline MatrixPoly random_skew(const VarSet& R, int n, std::mt19937_64& rng) {
  MatrixPoly M(R, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Polynomial v = Polynomial::constant(R, rand_rational(rng));
      M.at(i, j) = v;
      M.at(j, i) = -v;
    }
  return M;
}

// Specialize the trailing parameter variables of a generator family built
// over Q[y_1..y_n, t_1..t_k]; zero specializations are dropped.
inline std::vector<Polynomial> specialize_family(const GeneratorFamily& fam, int n,
                                                 const std::vector<Rational>& tvals) {
  std::vector<Polynomial> out;
  for (const auto& g : fam.polys()) {
    Polynomial s = detail::specialize_params(g, n, tvals);
    if (!s.is_zero()) out.push_back(s);
  }
  return out;
}

inline LeviDatum make_levi(Family f, int n, int a, Partition b) {
  LeviDatum levi{f, n, a, std::move(b)};
  levi.validate();
  return levi;
}

// ---------------------------------------------------------------------------
// Individual checks
// ---------------------------------------------------------------------------

// SQ-TANISAKI{n,b}: for the zero-Levi datum with composition b of n, the
// squared-variable Tanisaki family has quotient dimension equal to the orbit
// cardinality, agrees with the t=0 specialization of the uniform family, and
// the generic specialization cuts out exactly the orbit.
inline CheckOutcome check_sq_tanisaki(const CheckRequest& req) {
  CheckOutcome out;
  const int n = get_int(req, "n");
  std::vector<int> comp = parse_int_list(get_param(req, "b"), req.name);
  if (comp.empty()) throw std::invalid_argument(req.name + ": empty composition");
  Partition part = comp;
  std::sort(part.begin(), part.end(), std::greater<int>());
  LeviDatum levi = make_levi(Family::C, n, 0, part);
  const unsigned long long orbit = orbit_size(levi);
  out.expected = expected_json(Json(orbit), "stated");

  Ideal T = tanisaki_ideal(levi).as_ideal(MonomialOrder::GrevLex, req.lim);
  const auto dim = quotient_dimension(T);

  GeneratorFamily U = uniform_generators_a0(levi);
  const int k = (int)part.size();
  Ideal U0(VarSet::y_ring(n),
           specialize_family(U, n, std::vector<Rational>(k, Rational(0))),
           MonomialOrder::GrevLex, req.lim);
  const bool certified = ideal_equal(T, U0);

  const std::vector<Rational> tv = default_tvals(k);
  std::vector<Polynomial> spec = specialize_family(U, n, tv);
  Ideal US(VarSet::y_ring(n), spec, MonomialOrder::GrevLex, req.lim);
  const auto sdim = quotient_dimension(US);
  PointSet pts = weyl_orbit(levi);
  const bool vanish = vanishes_on(spec, pts);

  out.computed["dimension"] = dim_json(dim);
  out.computed["initial_certified"] = certified;
  out.computed["specialized_dimension"] = dim_json(sdim);
  out.computed["vanishes_on_orbit"] = vanish;

  bool ok = true;
  if (!dim || *dim != orbit) {
    ok = false;
    out.witnesses.push_back("quotient dimension " + dim_json(dim).dump() +
                            " != orbit size " + std::to_string(orbit));
  }
  if (!certified) {
    ok = false;
    out.witnesses.push_back("t=0 specialization of the uniform family differs from the "
                            "squared-variable Tanisaki ideal");
  }
  if (!sdim || *sdim != orbit) {
    ok = false;
    out.witnesses.push_back("specialized quotient dimension " + dim_json(sdim).dump() +
                            " != orbit size " + std::to_string(orbit));
  }
  if (!vanish) {
    ok = false;
    auto w = vanish_failure(spec, pts);
    std::string detail = "(unknown)";
    if (w)
      detail = "generator " + std::to_string(w->poly_index) + " at point " +
               std::to_string(w->point_index) + " evaluates to " + to_string(w->value);
    out.witnesses.push_back("specialized generator does not vanish on the orbit: " + detail);
  }
  out.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
  return out;
}

// UNIFORM-A0{n,b}: the generic specialization of the uniform family equals
// the vanishing ideal of the orbit, and the t=0 specialization equals the
// initial-form ideal of that vanishing ideal.
inline CheckOutcome check_uniform_a0(const CheckRequest& req) {
  CheckOutcome out;
  const int n = get_int(req, "n");
  Partition part = parse_int_list(get_param(req, "b"), req.name);
  LeviDatum levi = make_levi(Family::C, n, 0, part);
  const int k = (int)part.size();
  GeneratorFamily U = uniform_generators_a0(levi);

  PointSet pts = weyl_orbit(levi);
  Ideal V = vanishing_ideal(pts, VarSet::y_ring(n), MonomialOrder::GrevLex, req.lim);

  Ideal US(VarSet::y_ring(n), specialize_family(U, n, default_tvals(k)),
           MonomialOrder::GrevLex, req.lim);
  const bool generic_match = ideal_equal(US, V);

  Ideal U0(VarSet::y_ring(n),
           specialize_family(U, n, std::vector<Rational>(k, Rational(0))),
           MonomialOrder::GrevLex, req.lim);
  const bool initial_match = ideal_equal(U0, initial_form_ideal(V));

  out.computed["generic_match"] = generic_match;
  out.computed["initial_match"] = initial_match;
  out.expected = expected_json(Json(true), "stated");
  if (!generic_match)
    out.witnesses.push_back("generic specialization differs from the orbit vanishing ideal");
  if (!initial_match)
    out.witnesses.push_back("t=0 specialization differs from the initial-form ideal");
  out.status = (generic_match && initial_match) ? CheckStatus::Pass : CheckStatus::Fail;
  return out;
}

// BI1{n,k}: the quotient dimension of the one-step family equals
// n! 2^k / (n-k)!, and when the matching orbit is small enough the ideal
// equals the initial-form ideal of the orbit vanishing ideal.
inline CheckOutcome check_bi1(const CheckRequest& req) {
  CheckOutcome out;
  const int n = get_int(req, "n");
  const int k = get_int(req, "k");
  if (k < 1 || k > n)
    throw std::invalid_argument(req.name + ": need 1 <= k <= n");
  GeneratorFamily fam = i_nak(n, n - k, k);
  Ideal I = fam.as_ideal(MonomialOrder::GrevLex, req.lim);
  const auto dim = quotient_dimension(I);
  const unsigned long long expect =
      factorial_u64(n) * (1ull << k) / factorial_u64(n - k);
  out.expected = expected_json(Json(expect), "stated");

  bool bm_checked = false, bm_match = true;
  if (expect <= 500) {
    LeviDatum levi = make_levi(Family::B, n, n - k, Partition(k, 1));
    PointSet pts = weyl_orbit(levi);
    Ideal V = vanishing_ideal(pts, VarSet::y_ring(n), MonomialOrder::GrevLex, req.lim);
    bm_checked = true;
    bm_match = ideal_equal(initial_form_ideal(V), I);
  }

  out.computed["dimension"] = dim_json(dim);
  out.computed["interpolation_checked"] = bm_checked;
  out.computed["interpolation_match"] = bm_match;
  bool ok = dim && *dim == expect && bm_match;
  if (!dim || *dim != expect)
    out.witnesses.push_back("quotient dimension " + dim_json(dim).dump() + " != " +
                            std::to_string(expect));
  if (!bm_match)
    out.witnesses.push_back("ideal differs from the initial-form ideal of the orbit "
                            "vanishing ideal");
  out.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
  return out;
}

// B1EQ2{n,a,k}: quotient dimension of the candidate family equals
// n! 2^k / a!.  For a == 1 the equality is conjectural in general; a
// mismatch is then recorded as a DISCREPANCY rather than a failure.
inline CheckOutcome check_b1eq2(const CheckRequest& req) {
  CheckOutcome out;
  const int n = get_int(req, "n");
  const int a = get_int(req, "a");
  const int k = get_int(req, "k");
  GeneratorFamily fam = i_nak(n, a, k);
  Ideal I = fam.as_ideal(MonomialOrder::GrevLex, req.lim);
  const auto dim = quotient_dimension(I);
  const unsigned long long expect = factorial_u64(n) * (1ull << k) / factorial_u64(a);
  out.expected = expected_json(Json(expect), "stated");
  out.computed["dimension"] = dim_json(dim);
  out.computed["conjectural"] = (a == 1);
  if (dim && *dim == expect) {
    out.status = CheckStatus::Pass;
  } else {
    out.witnesses.push_back("quotient dimension " + dim_json(dim).dump() + " != " +
                            std::to_string(expect));
    out.status = (a == 1) ? CheckStatus::Discrepancy : CheckStatus::Fail;
  }
  return out;
}

// CONJ-A-NOT-0{n,a,b}: the conjectural generator family lies inside the
// initial-form ideal of the orbit vanishing ideal, has quotient dimension
// equal to the orbit cardinality, and is stable under raising the power-sum
// degree cap.  A computational disagreement is a DISCREPANCY (the claim is
// conjectural).
inline CheckOutcome check_conj_a_not_0(const CheckRequest& req) {
  CheckOutcome out;
  const int n = get_int(req, "n");
  const int a = get_int(req, "a");
  Partition part = parse_int_list(get_param(req, "b"), req.name);
  LeviDatum levi = make_levi(Family::C, n, a, part);
  const unsigned long long orbit = orbit_size(levi);
  out.expected = expected_json(Json(orbit), "stated");

  GeneratorFamily G = conjectural_generators(levi);
  Ideal GI = G.as_ideal(MonomialOrder::GrevLex, req.lim);
  const auto dim = quotient_dimension(GI);

  PointSet pts = weyl_orbit(levi);
  Ideal V = vanishing_ideal(pts, VarSet::y_ring(n), MonomialOrder::GrevLex, req.lim);
  Ideal gr = initial_form_ideal(V);
  bool contained = true;
  for (const auto& item : G.items()) {
    if (!gr.contains(item.second)) {
      contained = false;
      out.witnesses.push_back("generator '" + item.first +
                              "' is not in the initial-form ideal of the orbit");
      break;
    }
  }

  GeneratorFamily G2 = conjectural_generators(levi, default_h_cap(levi) + 2);
  const bool cap_stable = ideal_equal(GI, G2.as_ideal(MonomialOrder::GrevLex, req.lim));

  out.computed["generators_in_initial"] = contained;
  out.computed["dimension"] = dim_json(dim);
  out.computed["cap_stable"] = cap_stable;
  if (!dim || *dim != orbit)
    out.witnesses.push_back("quotient dimension " + dim_json(dim).dump() +
                            " != orbit size " + std::to_string(orbit));
  if (!cap_stable)
    out.witnesses.push_back("raising the power-sum degree cap changes the ideal");
  const bool ok = contained && dim && *dim == orbit && cap_stable;
  out.status = ok ? CheckStatus::Pass : CheckStatus::Discrepancy;
  return out;
}

// REMARK-12: the quotient by the (3,1,1) family has dimension 12 and its
// filtration by powers of the last variable has graded slices (5,4,3).
inline CheckOutcome check_remark_12(const CheckRequest& req) {
  CheckOutcome out;
  GeneratorFamily fam = i_nak(3, 1, 1);
  const VarSet R = VarSet::y_ring(3);
  Ideal I = fam.as_ideal(MonomialOrder::GrevLex, req.lim);
  const auto dim = quotient_dimension(I);

  std::vector<unsigned long long> cumulative, slices;
  unsigned long long prev = 0;
  for (int r = 1; r <= 3; ++r) {
    std::vector<Polynomial> gens = fam.polys();
    gens.push_back(Polynomial::var(R, 2, (uint32_t)r));
    const auto d = quotient_dimension(Ideal(R, gens, MonomialOrder::GrevLex, req.lim));
    if (!d) {
      out.witnesses.push_back("augmented ideal at power " + std::to_string(r) +
                              " has infinite quotient");
      out.status = CheckStatus::Fail;
      return out;
    }
    cumulative.push_back(*d);
    slices.push_back(*d - prev);
    prev = *d;
  }

  out.computed["dimension"] = dim_json(dim);
  out.computed["cumulative"] = cumulative;
  out.computed["slices"] = slices;
  out.expected = expected_json(Json::array({5, 4, 3}), "stated");
  const bool ok = dim && *dim == 12 && slices == std::vector<unsigned long long>{5, 4, 3};
  if (!ok)
    out.witnesses.push_back("graded slices " + Json(slices).dump() +
                            " or dimension " + dim_json(dim).dump() + " off (want (5,4,3), 12)");
  out.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
  return out;
}

// E2P-H2P{n}: in the quotient by (e_1(y^2),...,e_n(y^2)), every partial
// elementary symmetric function in squares equals (-1)^p times the partial
// complete symmetric function in squares of the complementary variables.
inline CheckOutcome check_e2p_h2p(const CheckRequest& req) {
  CheckOutcome out;
  const int n = get_int(req, "n");
  if (n < 1) throw std::invalid_argument(req.name + ": need n >= 1");
  const VarSet R = VarSet::y_ring(n);
  std::vector<Polynomial> xs;
  for (int i = 0; i < n; ++i) xs.push_back(Polynomial::var(R, i, 2));
  std::vector<Polynomial> gens;
  for (int p = 1; p <= n; ++p) gens.push_back(elem_sym(R, xs, p));
  Ideal I(R, gens, MonomialOrder::GrevLex, req.lim);

  int identities = 0;
  bool ok = true;
  for (int l = 1; l <= n && ok; ++l) {
    for (const auto& L : subsets_of_size(n, l)) {
      const std::vector<int> C = complement_set(L, n);
      for (int p = 1; p <= l; ++p) {
        Polynomial lhs = partial_elem_sym_sq(R, L, p);
        Polynomial rhs = partial_complete_sym_sq(R, C, p);
        Polynomial f = (p % 2 == 0) ? lhs - rhs : lhs + rhs;
        ++identities;
        if (!I.contains(f)) {
          ok = false;
          out.witnesses.push_back("identity fails for L=" + index_set_str(L) +
                                  ", p=" + std::to_string(p));
          break;
        }
      }
      if (!ok) break;
    }
  }
  out.computed["identities"] = identities;
  out.computed["all_in_ideal"] = ok;
  out.expected = expected_json(Json(true), "stated");
  out.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
  return out;
}

// PF-SQUARE: on seeded random rational skew-symmetric matrices of sizes
// 2,4,6,8, the Pfaffian squares to the determinant.
inline CheckOutcome check_pf_square(const CheckRequest& req) {
  CheckOutcome out;
  std::mt19937_64 rng(req.seed);
  const VarSet R({"c"});
  int checked = 0;
  bool ok = true;
  for (int N : {2, 4, 6, 8}) {
    for (int trial = 0; trial < 25; ++trial) {
      MatrixPoly M = random_skew(R, N, rng);
      Polynomial p = pfaffian(M);
      ++checked;
      if (p * p != det(M)) {
        ok = false;
        out.witnesses.push_back("pf^2 != det for size " + std::to_string(N) +
                                ", trial " + std::to_string(trial));
        break;
      }
    }
    if (!ok) break;
  }
  out.computed["matrices"] = checked;
  out.computed["identity_holds"] = ok;
  out.expected = expected_json(Json(true), "derived");
  out.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
  return out;
}

// SPF-SQUARE: on seeded random numeric symplectic squares the symplectic
// Pfaffian squares to the determinant, and on the 4x4 worked example it
// agrees with the recorded square root up to one global sign.
inline CheckOutcome check_spf_square(const CheckRequest& req) {
  CheckOutcome out;
  std::mt19937_64 rng(req.seed);
  int done = 0;
  bool ok = true;
  for (int N : {4, 6, 8}) {
    FormConvention conv = symplectic_form(N);
    MatrixPoly G = generic_element(conv);
    const VarSet& R = G.ring();
    for (int trial = 0; trial < 17 && done < 50 && ok; ++trial, ++done) {
      std::map<int, Polynomial> sub;
      for (int v = 0; v < R.size(); ++v)
        sub.emplace(v, Polynomial::constant(R, rand_rational(rng)));
      MatrixPoly Y(R, N);
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) Y.at(i, j) = G.at(i, j).specialize(sub);
      MatrixPoly X = Y * Y;
      Polynomial s = symplectic_pfaffian(X, conv);
      if (s * s != det(X)) {
        ok = false;
        out.witnesses.push_back("sPf^2 != det for size " + std::to_string(N) +
                                ", trial " + std::to_string(trial));
      }
    }
    if (!ok) break;
  }

  // 4x4 worked example, defined up to one global sign.
  const VarSet RE({"x11", "x12", "x14", "x21", "x22", "x23"});
  auto mat = [&](std::vector<std::vector<std::string>> rows) {
    MatrixPoly M(RE, (int)rows.size());
    for (int i = 0; i < M.size(); ++i)
      for (int j = 0; j < M.size(); ++j) M.at(i, j) = Polynomial::parse(RE, rows[i][j]);
    return M;
  };
  MatrixPoly X = mat({{"x11", "x12", "0", "x14"},
                      {"x21", "x22", "-x14", "0"},
                      {"0", "x23", "x11", "x21"},
                      {"-x23", "0", "x12", "x22"}});
  MatrixPoly J = mat({{"0", "0", "1", "0"},
                      {"0", "0", "0", "1"},
                      {"-1", "0", "0", "0"},
                      {"0", "-1", "0", "0"}});
  Polynomial spf = symplectic_pfaffian(X, J);
  Polynomial root = Polynomial::parse(RE, "x23*x14 + x11*x22 - x12*x21");
  std::string sign;
  if (spf == root) {
    sign = "+1";
  } else if (spf == -root) {
    sign = "-1";
  } else {
    ok = false;
    sign = "none";
    out.witnesses.push_back("worked example does not match the recorded root up to sign");
  }

  out.computed["matrices"] = done;
  out.computed["identity_holds"] = ok;
  out.computed["example_sign"] = sign;
  out.expected = expected_json(Json(true), "derived");
  out.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
  return out;
}

// SPF-MINOR{n}: for the symplectic form on 2n letters, the diagonal
// restriction of every symplectic Pfaffian minor equals, up to sign, the
// product of (t - y_i^2) over the index set.
inline CheckOutcome check_spf_minor(const CheckRequest& req) {
  CheckOutcome out;
  const int n = get_int(req, "n");
  if (n < 1) throw std::invalid_argument(req.name + ": need n >= 1");
  FormConvention conv = symplectic_form(2 * n);
  const VarSet Ryt = restricted_ring(conv, true);
  const int tvar = Ryt.index_of_checked("t");
  int checked = 0;
  bool ok = true;
  for (int l = 1; l <= n && ok; ++l) {
    for (const auto& L : subsets_of_size(n, l)) {
      Polynomial r = restrict_diagonal(spf_minor(conv, L), conv);
      Polynomial direct = Polynomial::constant(Ryt, Rational(1));
      for (int i : L)
        direct *= Polynomial::var(Ryt, tvar) - Polynomial::var(Ryt, i - 1, 2);
      ++checked;
      if (r != direct && r != -direct) {
        ok = false;
        out.witnesses.push_back("restriction of sPf minor differs from +/- product for L=" +
                                index_set_str(L));
        break;
      }
    }
  }
  out.computed["minors_checked"] = checked;
  out.computed["identity_holds"] = ok;
  out.expected = expected_json(Json(true), "stated");
  out.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
  return out;
}

// PF-RANK{N,l}: the rank Pfaffian generators for the orthogonal form on N
// letters restrict on the diagonal to +/- the squarefree monomials of degree
// l+1.
inline CheckOutcome check_pf_rank(const CheckRequest& req) {
  CheckOutcome out;
  const int N = get_int(req, "N");
  const int l = get_int(req, "l");
  FormConvention conv = orthogonal_form(N);
  const int n = conv.pairs();
  const VarSet Ry = restricted_ring(conv);
  GeneratorFamily fam = rank_pfaffian_generators(conv, l);
  const auto sets = subsets_of_size(n, l + 1);
  bool ok = fam.size() == sets.size();
  if (!ok)
    out.witnesses.push_back("generator count " + std::to_string(fam.size()) + " != " +
                            std::to_string(sets.size()));
  for (size_t s = 0; ok && s < sets.size(); ++s) {
    Polynomial r = restrict_diagonal(fam.items()[s].second, conv);
    Polynomial expect = monomial_product(Ry, sets[s]);
    if (r != expect && r != -expect) {
      ok = false;
      out.witnesses.push_back("restriction differs from +/- monomial for S=" +
                              index_set_str(sets[s]));
    }
  }
  out.computed["generators"] = fam.size();
  out.computed["identity_holds"] = ok;
  out.expected = expected_json(Json(binom_u64(n, l + 1)), "stated");
  out.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
  return out;
}

// TYPEC-FLAT{lambda}: for an even partition lambda of 2n, the minor
// coefficient family equals the squared-variable Tanisaki ideal of the
// matching zero-Levi datum.
inline CheckOutcome check_typec_flat(const CheckRequest& req) {
  CheckOutcome out;
  Partition lambda = parse_int_list(get_param(req, "lambda"), req.name);
  GeneratorFamily fam = typeC_minor_coeff_generators(lambda);
  int sum = 0;
  for (int p : lambda) sum += p;
  const int n = sum / 2;
  Partition b = undouble_partition(dual_partition(lambda));
  LeviDatum levi = make_levi(Family::C, n, 0, b);
  const bool match = ideal_equal(fam.as_ideal(MonomialOrder::GrevLex, req.lim),
                                 tanisaki_ideal(levi).as_ideal(MonomialOrder::GrevLex, req.lim));
  out.computed["match"] = match;
  out.computed["levi_b"] = int_list_str(b);
  out.expected = expected_json(Json(true), "stated");
  if (!match)
    out.witnesses.push_back("minor coefficient ideal differs from the Tanisaki ideal");
  out.status = match ? CheckStatus::Pass : CheckStatus::Fail;
  return out;
}

// TYPEC-NONFLAT{n,a,b}: with a >= 1, every squarefree monomial of degree
// n-a+1 vanishes at every point of the orbit (an evaluation statement; the
// monomials are extra generators beyond the flat family).
inline CheckOutcome check_typec_nonflat(const CheckRequest& req) {
  CheckOutcome out;
  const int n = get_int(req, "n");
  const int a = get_int(req, "a");
  Partition part = parse_int_list(get_param(req, "b"), req.name);
  if (a < 1) throw std::invalid_argument(req.name + ": need a >= 1");
  LeviDatum levi = make_levi(Family::C, n, a, part);
  PointSet pts = weyl_orbit(levi);
  const auto sets = subsets_of_size(n, n - a + 1);
  bool ok = true;
  for (const auto& K : sets) {
    for (size_t p = 0; p < pts.size() && ok; ++p) {
      Rational prod(1);
      for (int i : K) prod *= pts.at(p)[i - 1];
      if (prod != 0) {
        ok = false;
        out.witnesses.push_back("monomial y_" + index_set_str(K) +
                                " is nonzero at orbit point index " + std::to_string(p));
      }
    }
    if (!ok) break;
  }
  out.computed["sets"] = sets.size();
  out.computed["points"] = pts.size();
  out.computed["all_vanish"] = ok;
  out.expected = expected_json(Json(0), "stated");
  out.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
  return out;
}

// EX-333{variant}: normal form of y1^2*y2^2 modulo the four-variable
// candidate family.  variant=cube uses cubes with one power sum; this tool
// derives that the normal form is nonzero, so a zero reduction is a FAIL.
// variant=fifth uses fifth powers with two power sums as stated in the
// source; a zero reduction there contradicts the stated claim and is
// recorded as a DISCREPANCY.
inline CheckOutcome check_ex_333(const CheckRequest& req) {
  CheckOutcome out;
  const std::string variant = get_param(req, "variant");
  GeneratorFamily fam;
  const char* provenance = nullptr;
  if (variant == "cube") {
    fam = i_nak(4, 2, 1);
    provenance = "derived";
  } else if (variant == "fifth") {
    fam = i_nak(4, 2, 2);
    provenance = "stated";
  } else {
    throw std::invalid_argument(req.name + ": variant must be 'cube' or 'fifth'");
  }
  const VarSet R = VarSet::y_ring(4);
  Polynomial f = Polynomial::var(R, 0, 2) * Polynomial::var(R, 1, 2);
  Polynomial nf = normal_form(f, fam.as_ideal(MonomialOrder::GrevLex, req.lim));
  const bool zero = nf.is_zero();
  out.computed["normal_form"] = nf.str();
  out.computed["zero"] = zero;
  out.expected = expected_json(Json("nonzero"), provenance);
  if (!zero) {
    out.status = CheckStatus::Pass;
  } else {
    out.witnesses.push_back("y1^2*y2^2 reduces to zero modulo the " + variant + " family");
    out.status = (variant == "cube") ? CheckStatus::Fail : CheckStatus::Discrepancy;
  }
  return out;
}

// TWO-ROW-D{n,k}: quotient dimension of the two-row family equals the
// binomial partial sum over l = 0..k of C(n,l).
inline CheckOutcome check_two_row_d(const CheckRequest& req) {
  CheckOutcome out;
  const int n = get_int(req, "n");
  const int k = get_int(req, "k");
  Ideal I = two_row_ideal(n, k).as_ideal(MonomialOrder::GrevLex, req.lim);
  const auto dim = quotient_dimension(I);
  unsigned long long expect = 0;
  for (int l = 0; l <= k; ++l) expect += binom_u64(n, l);
  out.computed["dimension"] = dim_json(dim);
  out.expected = expected_json(Json(expect), "stated");
  const bool ok = dim && *dim == expect;
  if (!ok)
    out.witnesses.push_back("quotient dimension " + dim_json(dim).dump() + " != " +
                            std::to_string(expect));
  out.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
  return out;
}

// VERY-EVEN{k}: the very even family on 2k variables has quotient dimension
// 2^(2k-1), and equals the two-row family plus the k-set difference
// binomials y_L - y_{L^c}.
inline CheckOutcome check_very_even(const CheckRequest& req) {
  CheckOutcome out;
  const int k = get_int(req, "k");
  if (k < 1) throw std::invalid_argument(req.name + ": need k >= 1");
  const int n = 2 * k;
  const VarSet R = VarSet::y_ring(n);
  Ideal VE = very_even_ideal(k).as_ideal(MonomialOrder::GrevLex, req.lim);
  const auto dim = quotient_dimension(VE);
  const unsigned long long expect = 1ull << (2 * k - 1);

  std::vector<Polynomial> gens = two_row_ideal(n, k).polys();
  for (const auto& L : subsets_of_size(n, k))
    gens.push_back(monomial_product(R, L) - monomial_product(R, complement_set(L, n)));
  const bool combined_match =
      ideal_equal(Ideal(R, gens, MonomialOrder::GrevLex, req.lim), VE);

  out.computed["dimension"] = dim_json(dim);
  out.computed["combined_match"] = combined_match;
  out.expected = expected_json(Json(expect), "stated");
  if (!dim || *dim != expect)
    out.witnesses.push_back("quotient dimension " + dim_json(dim).dump() + " != " +
                            std::to_string(expect));
  if (!combined_match)
    out.witnesses.push_back("two-row family plus difference binomials differs from the "
                            "very even family");
  out.status = (dim && *dim == expect && combined_match) ? CheckStatus::Pass
                                                         : CheckStatus::Fail;
  return out;
}

// VK-DIM{n,k}: the span of the degree-k squarefree monomial orbit images has
// dimension C(n,k).
inline CheckOutcome check_vk_dim(const CheckRequest& req) {
  CheckOutcome out;
  const int n = get_int(req, "n");
  const int k = get_int(req, "k");
  const unsigned long long d = vk_span_dim(n, k);
  const unsigned long long expect = binom_u64(n, k);
  out.computed["dimension"] = d;
  out.expected = expected_json(Json(expect), "direct");
  const bool ok = d == expect;
  if (!ok)
    out.witnesses.push_back("span dimension " + std::to_string(d) + " != " +
                            std::to_string(expect));
  out.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
  return out;
}

// APPENDIX-A{case}: full verification of one equivariant kernel case: the
// stated generators vanish on the parameterized point family, the parameter
// specialization at the origin matches the stated initial ideal, and the
// fiber ranks at two generic parameter values and at the origin all equal
// the point count.  A finished computation that contradicts a stated value
// is a DISCREPANCY.
inline CheckOutcome check_appendix_a(const CheckRequest& req) {
  CheckOutcome out;
  KernelCase kc = kernel_case(get_param(req, "case"));
  KernelVerification v = verify_kernel_case(kc, req.lim);
  out.computed["points"] = v.family_size;
  out.computed["generators_vanish"] = v.generators_vanish;
  out.computed["initial_match"] = v.initial_match;
  out.computed["rank_generic"] = dim_json(v.rank_generic);
  out.computed["rank_generic_alt"] = dim_json(v.rank_generic_alt);
  out.computed["rank_origin"] = dim_json(v.rank_origin);
  out.computed["stated_initial_dimension"] = dim_json(v.stated_initial_dim);
  out.expected = expected_json(Json(v.family_size), "stated");

  if (!v.generators_vanish) {
    out.witnesses = v.vanish_witnesses;
    out.status = CheckStatus::Fail;
    return out;
  }
  if (v.all_pass()) {
    out.status = CheckStatus::Pass;
    return out;
  }
  if (!v.initial_match)
    out.witnesses.push_back("origin specialization differs from the stated initial ideal");
  auto rank_witness = [&](const char* label, const std::optional<unsigned long long>& r) {
    if (!r || *r != v.family_size)
      out.witnesses.push_back(std::string("fiber rank at ") + label + " is " +
                              dim_json(r).dump() + ", point family has " +
                              std::to_string(v.family_size));
  };
  rank_witness("generic parameters", v.rank_generic);
  rank_witness("alternate generic parameters", v.rank_generic_alt);
  rank_witness("the origin", v.rank_origin);
  if (v.stated_initial_dim && *v.stated_initial_dim != v.family_size)
    out.witnesses.push_back("stated initial ideal alone has dimension " +
                            std::to_string(*v.stated_initial_dim) + ", point family has " +
                            std::to_string(v.family_size));
  out.status = CheckStatus::Discrepancy;
  return out;
}

// FLAG-EVAL{family,n,a,b}: the flag-variety relations built from the signed
// weight list of the Levi datum vanish at every signed-permutation image of
// the symbolic base point (for family D with a = 0, at every even-signed
// image).
inline CheckOutcome check_flag_eval(const CheckRequest& req) {
  CheckOutcome out;
  const Family f = parse_family(get_param(req, "family"));
  const int n = get_int(req, "n");
  const int a = get_int(req, "a");
  Partition part = parse_int_list(get_param(req, "b"), req.name);
  LeviDatum levi = make_levi(f, n, a, part);
  const int k = (int)part.size();

  std::vector<std::string> tnames;
  for (int j = 1; j <= k; ++j) tnames.push_back("t" + std::to_string(j));
  const VarSet T(tnames);

  // symbolic base point: t_j repeated b_j times, then zeros
  std::vector<Polynomial> x;
  for (int j = 0; j < k; ++j)
    for (int r = 0; r < part[j]; ++r) x.push_back(Polynomial::var(T, j));
  for (int r = 0; r < a; ++r) x.push_back(Polynomial(T));

  WeightList wl;
  wl.params = T;
  for (const auto& xi : x) {
    wl.weights.push_back(xi);
    wl.weights.push_back(-xi);
  }
  if (f == Family::B) wl.weights.push_back(Polynomial(T));
  wl.validate();
  GeneratorFamily rel = flag_relations(wl, n);
  const VarSet& RT = rel.ring();

  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  const bool even_only = (f == Family::D && a == 0);
  long points = 0;
  bool ok = true;
  do {
    for (unsigned mask = 0; mask < (1u << n) && ok; ++mask) {
      if (even_only && __builtin_popcount(mask) % 2 != 0) continue;
      ++points;
      std::map<int, Polynomial> sub;
      for (int i = 0; i < n; ++i) {
        Polynomial img = x[perm[i]].mapped_to(RT);
        if (mask & (1u << i)) img = -img;
        sub.emplace(i, std::move(img));
      }
      for (const auto& item : rel.items()) {
        if (!item.second.specialize(sub).is_zero()) {
          ok = false;
          out.witnesses.push_back("relation '" + item.first +
                                  "' does not vanish at a signed image of the base point");
          break;
        }
      }
    }
  } while (ok && std::next_permutation(perm.begin(), perm.end()));

  out.computed["images"] = points;
  out.computed["relations"] = rel.size();
  out.computed["all_vanish"] = ok;
  out.expected = expected_json(Json(true), "derived");
  out.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
  return out;
}

// FREE-RANK{n,b}: the uniform family over the parameter ring has constant
// fiber rank across the origin and two distinct generic parameter samples,
// equal to the orbit cardinality of the zero-Levi datum.
inline CheckOutcome check_free_rank(const CheckRequest& req) {
  CheckOutcome out;
  const int n = get_int(req, "n");
  Partition part = parse_int_list(get_param(req, "b"), req.name);
  LeviDatum levi = make_levi(Family::C, n, 0, part);
  const int k = (int)part.size();
  GeneratorFamily U = uniform_generators_a0(levi);
  std::vector<int> param_vars;
  for (int j = 0; j < k; ++j) param_vars.push_back(n + j);

  const std::vector<Rational> origin(k, Rational(0));
  const std::vector<Rational> s1 = default_tvals(k);
  std::vector<Rational> s2 = default_tvals(k + 1);
  s2.erase(s2.begin());
  FiberRankResult r =
      fiber_rank_constancy(U.polys(), param_vars, {origin, s1, s2}, req.lim);

  const unsigned long long orbit = orbit_size(levi);
  Json fibers = Json::array();
  for (const auto& fb : r.fibers) {
    Json e = Json::object();
    e["sample"] = fb.first;
    e["rank"] = fb.second;
    fibers.push_back(std::move(e));
  }
  out.computed["fibers"] = std::move(fibers);
  out.computed["constant"] = r.constant;
  out.computed["common_rank"] = dim_json(r.common_rank);
  out.expected = expected_json(Json(orbit), "stated");
  const bool ok = r.constant && r.common_rank && *r.common_rank == orbit;
  if (!r.constant)
    out.witnesses.push_back(r.witness.empty() ? std::string("fiber ranks are not constant")
                                              : r.witness);
  else if (!ok)
    out.witnesses.push_back("constant fiber rank " + dim_json(r.common_rank).dump() +
                            " != orbit size " + std::to_string(orbit));
  out.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
  return out;
}

}  // namespace checkdetail

// Run one check.  Unknown names and malformed parameters throw
// std::invalid_argument; a Groebner resource limit produces a SKIP outcome
// with the reason recorded in the witnesses.
inline CheckOutcome run_check(const CheckRequest& req_in) {
  CheckRequest req = req_in;
  req.name = canonical_check_name(req.name);
  const auto start = std::chrono::steady_clock::now();
  CheckOutcome out;
  try {
    using namespace checkdetail;
    if (req.name == "SQ-TANISAKI") out = check_sq_tanisaki(req);
    else if (req.name == "UNIFORM-A0") out = check_uniform_a0(req);
    else if (req.name == "BI1") out = check_bi1(req);
    else if (req.name == "B1EQ2") out = check_b1eq2(req);
    else if (req.name == "CONJ-A-NOT-0") out = check_conj_a_not_0(req);
    else if (req.name == "REMARK-12") out = check_remark_12(req);
    else if (req.name == "E2P-H2P") out = check_e2p_h2p(req);
    else if (req.name == "PF-SQUARE") out = check_pf_square(req);
    else if (req.name == "SPF-SQUARE") out = check_spf_square(req);
    else if (req.name == "SPF-MINOR") out = check_spf_minor(req);
    else if (req.name == "PF-RANK") out = check_pf_rank(req);
    else if (req.name == "TYPEC-FLAT") out = check_typec_flat(req);
    else if (req.name == "TYPEC-NONFLAT") out = check_typec_nonflat(req);
    else if (req.name == "EX-333") out = check_ex_333(req);
    else if (req.name == "TWO-ROW-D") out = check_two_row_d(req);
    else if (req.name == "VERY-EVEN") out = check_very_even(req);
    else if (req.name == "VK-DIM") out = check_vk_dim(req);
    else if (req.name == "APPENDIX-A") out = check_appendix_a(req);
    else if (req.name == "FLAG-EVAL") out = check_flag_eval(req);
    else if (req.name == "FREE-RANK") out = check_free_rank(req);
    else
      throw std::invalid_argument("unknown check '" + req.name + "'");
  } catch (const GbLimitError& e) {
    out = CheckOutcome{};
    out.status = CheckStatus::Skip;
    out.witnesses.push_back(std::string("resource limit (") + limit_kind_name(e.kind) +
                            "): " + e.what());
  }
  out.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
                   .count();
  return out;
}

// ---------------------------------------------------------------------------
// Suites
// ---------------------------------------------------------------------------

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "paper-core", "properties", "conjecture-instances", "appendix-a", "all"};
  return names;
}

inline std::vector<CheckRequest> suite_requests(const std::string& suite,
                                                const GbLimits& lim = {},
                                                unsigned long long seed = 42) {
  using checkdetail::int_list_str;
  std::vector<CheckRequest> reqs;
  auto add = [&](const std::string& name,
                 std::vector<std::pair<std::string, std::string>> params) {
    reqs.push_back(CheckRequest{name, std::move(params), lim, seed});
  };

  const bool core = (suite == "paper-core" || suite == "all");
  const bool props = (suite == "properties" || suite == "all");
  const bool conj = (suite == "conjecture-instances" || suite == "all");
  const bool appx = (suite == "appendix-a" || suite == "all");
  if (!core && !props && !conj && !appx)
    throw std::invalid_argument("unknown suite '" + suite + "'");

  if (core) {
    for (int n = 2; n <= 4; ++n)
      for (const auto& comp : compositions_of(n))
        add("SQ-TANISAKI", {{"n", std::to_string(n)}, {"b", int_list_str(comp)}});
    for (int n = 2; n <= 4; ++n)
      for (const auto& part : partitions_of(n))
        add("UNIFORM-A0", {{"n", std::to_string(n)}, {"b", int_list_str(part)}});
    for (int n = 1; n <= 5; ++n)
      for (int k = 1; k <= n; ++k)
        add("BI1", {{"n", std::to_string(n)}, {"k", std::to_string(k)}});
    for (const auto& nak : std::vector<std::array<int, 3>>{
             {3, 1, 1}, {4, 1, 1}, {4, 2, 1}, {4, 1, 2}, {5, 2, 2}})
      add("B1EQ2", {{"n", std::to_string(nak[0])},
                    {"a", std::to_string(nak[1])},
                    {"k", std::to_string(nak[2])}});
    add("REMARK-12", {});
    for (int n = 2; n <= 5; ++n) add("E2P-H2P", {{"n", std::to_string(n)}});
    for (const char* lam : {"2,2", "4", "4,2,2", "2,2,2,2"})
      add("TYPEC-FLAT", {{"lambda", lam}});
    for (int n = 2; n <= 4; ++n)
      for (int a = 1; a <= n - 1; ++a)
        for (const auto& part : partitions_of(n - a))
          if (!part.empty())
            add("TYPEC-NONFLAT", {{"n", std::to_string(n)},
                                  {"a", std::to_string(a)},
                                  {"b", int_list_str(part)}});
    add("EX-333", {{"variant", "cube"}});
    add("EX-333", {{"variant", "fifth"}});
    for (int n = 1; n <= 6; ++n)
      for (int k = 0; k <= n; ++k)
        add("TWO-ROW-D", {{"n", std::to_string(n)}, {"k", std::to_string(k)}});
    for (int k = 1; k <= 2; ++k) add("VERY-EVEN", {{"k", std::to_string(k)}});
    for (int n = 1; n <= 6; ++n)
      for (int k = 1; k <= n; ++k)
        add("VK-DIM", {{"n", std::to_string(n)}, {"k", std::to_string(k)}});
  }

  if (props) {
    add("PF-SQUARE", {});
    add("SPF-SQUARE", {});
    for (int n = 1; n <= 3; ++n) add("SPF-MINOR", {{"n", std::to_string(n)}});
    for (int N = 3; N <= 8; ++N) {
      const int pairs = N / 2;
      for (int l = 0; l <= pairs - 1; ++l)
        add("PF-RANK", {{"N", std::to_string(N)}, {"l", std::to_string(l)}});
    }
    for (int n = 1; n <= 4; ++n)
      for (const auto& part : partitions_of(n))
        add("FREE-RANK", {{"n", std::to_string(n)}, {"b", int_list_str(part)}});
    for (const char* fam : {"B", "D"})
      for (int n = 1; n <= 4; ++n)
        for (int a = 0; a <= n - 1; ++a)
          for (const auto& part : partitions_of(n - a))
            if (!part.empty())
              add("FLAG-EVAL", {{"family", fam},
                                {"n", std::to_string(n)},
                                {"a", std::to_string(a)},
                                {"b", int_list_str(part)}});
  }

  if (conj) {
    for (const auto& inst : std::vector<std::tuple<int, int, const char*>>{
             {2, 1, "1"}, {3, 1, "2"}, {3, 1, "1,1"}, {3, 2, "1"}, {4, 1, "2,1"}})
      add("CONJ-A-NOT-0", {{"n", std::to_string(std::get<0>(inst))},
                           {"a", std::to_string(std::get<1>(inst))},
                           {"b", std::get<2>(inst)}});
  }

  if (appx) {
    for (const char* id : {"C:2n-2,1,1", "C:2,2,2", "C:4,3,3", "B:2,2,1",
                           "D:2,2,1,1", "D:3,2,2,1"})
      add("APPENDIX-A", {{"case", id}});
  }

  return reqs;
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

struct ReportEntry {
  CheckRequest request;
  CheckOutcome outcome;
};

struct Report {
  std::string version = kToolVersion;
  unsigned long long seed = 42;
  GbLimits limits{};
  bool timings = false;
  std::vector<ReportEntry> entries;

  int count(CheckStatus s) const {
    int c = 0;
    for (const auto& e : entries)
      if (e.outcome.status == s) ++c;
    return c;
  }
};

// Run a list of check requests, optionally on several worker threads.
// Checks are pure, so they may run concurrently; the report keeps the
// request order regardless of completion order.  Any exception escaping a
// check (bad parameters in a hand-built request, say) becomes a FAIL entry
// with the error text as witness; resource limits are already SKIPs.
inline Report run_requests(const std::vector<CheckRequest>& reqs, int workers = 1,
                           bool timings = false, unsigned long long seed = 42,
                           const GbLimits& lim = {}) {
  Report rep;
  rep.seed = seed;
  rep.limits = lim;
  rep.timings = timings;
  rep.entries.resize(reqs.size());
  for (size_t i = 0; i < reqs.size(); ++i) rep.entries[i].request = reqs[i];

  auto run_one = [&](size_t i) {
    try {
      rep.entries[i].outcome = run_check(reqs[i]);
    } catch (const std::exception& e) {
      CheckOutcome out;
      out.status = CheckStatus::Fail;
      out.witnesses.push_back(std::string("error: ") + e.what());
      rep.entries[i].outcome = std::move(out);
    }
  };

  if (workers <= 1 || reqs.size() <= 1) {
    for (size_t i = 0; i < reqs.size(); ++i) run_one(i);
  } else {
    std::atomic<size_t> next{0};
    const int count = std::min<int>(workers, (int)reqs.size());
    std::vector<std::thread> pool;
    pool.reserve(count);
    for (int w = 0; w < count; ++w)
      pool.emplace_back([&]() {
        for (;;) {
          const size_t i = next.fetch_add(1);
          if (i >= reqs.size()) return;
          run_one(i);
        }
      });
    for (auto& t : pool) t.join();
  }
  return rep;
}

inline Report run_suite(const std::string& suite, const GbLimits& lim = {},
                        unsigned long long seed = 42, int workers = 1,
                        bool timings = false) {
  return run_requests(suite_requests(suite, lim, seed), workers, timings, seed, lim);
}

inline Json check_json(const ReportEntry& e, bool timings) {
  Json j = Json::object();
  j["id"] = e.request.name;
  Json params = Json::object();
  for (const auto& kv : e.request.params) params[kv.first] = kv.second;
  j["params"] = std::move(params);
  j["status"] = check_status_name(e.outcome.status);
  j["computed"] = e.outcome.computed;
  j["expected"] = e.outcome.expected;
  j["witnesses"] = e.outcome.witnesses;
  j["millis"] = timings ? e.outcome.millis : 0;
  return j;
}

inline Json report_json(const Report& rep) {
  Json j = Json::object();
  j["version"] = rep.version;
  j["seed"] = rep.seed;
  Json lim = Json::object();
  lim["degree_cap"] = rep.limits.degree_cap;
  lim["pair_cap"] = rep.limits.pair_cap;
  lim["time_budget_ms"] = rep.limits.time_budget_ms;
  j["limits"] = std::move(lim);
  Json checks = Json::array();
  for (const auto& e : rep.entries) checks.push_back(check_json(e, rep.timings));
  j["checks"] = std::move(checks);
  Json summary = Json::object();
  summary["pass"] = rep.count(CheckStatus::Pass);
  summary["fail"] = rep.count(CheckStatus::Fail);
  summary["discrepancy"] = rep.count(CheckStatus::Discrepancy);
  summary["skip"] = rep.count(CheckStatus::Skip);
  j["summary"] = std::move(summary);
  return j;
}

inline std::string report_json_text(const Report& rep) {
  return report_json(rep).dump(2) + "\n";
}

inline std::string params_text(const CheckRequest& req) {
  std::ostringstream os;
  for (size_t i = 0; i < req.params.size(); ++i) {
    if (i) os << " ";
    os << req.params[i].first << "=" << req.params[i].second;
  }
  return os.str();
}

inline std::string report_text(const Report& rep) {
  std::ostringstream os;
  os << "orbit-hikita " << rep.version << "  seed " << rep.seed << "  limits degree="
     << rep.limits.degree_cap << " pairs=" << rep.limits.pair_cap
     << " time_ms=" << rep.limits.time_budget_ms << "\n";
  for (const auto& e : rep.entries) {
    os << std::left;
    std::string st = check_status_name(e.outcome.status);
    os << st << std::string(st.size() < 12 ? 12 - st.size() : 1, ' ');
    os << e.request.name;
    std::string ps = params_text(e.request);
    if (!ps.empty()) os << " {" << ps << "}";
    if (rep.timings) os << "  [" << e.outcome.millis << " ms]";
    os << "\n";
    for (const auto& w : e.outcome.witnesses) os << "             - " << w << "\n";
  }
  os << "summary: " << rep.count(CheckStatus::Pass) << " pass, "
     << rep.count(CheckStatus::Fail) << " fail, " << rep.count(CheckStatus::Discrepancy)
     << " discrepancy, " << rep.count(CheckStatus::Skip) << " skip\n";
  return os.str();
}

// Exit policy: failures always break the build; discrepancies and skips do
// so only under --strict.
inline int report_exit_code(const Report& rep, bool strict) {
  if (rep.count(CheckStatus::Fail) > 0) return 1;
  if (strict && (rep.count(CheckStatus::Discrepancy) > 0 || rep.count(CheckStatus::Skip) > 0))
    return 1;
  return 0;
}

// ---------------------------------------------------------------------------
// Ideal files
// ---------------------------------------------------------------------------

// Text format: optional "vars: y1 y2 ..." header naming the ring, comment
// lines starting with '#', then one generator per non-blank line.  Without a
// header the ring is inferred from the identifiers in order of first
// appearance.
inline GeneratorFamily parse_ideal_file(const std::string& text) {
  std::vector<std::string> poly_lines;
  std::optional<VarSet> ring;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    line = checkdetail::trim(line);
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("vars:", 0) == 0) {
      std::istringstream vs(line.substr(5));
      std::vector<std::string> names;
      std::string nm;
      while (vs >> nm) names.push_back(nm);
      if (names.empty()) throw std::invalid_argument("ideal file: empty vars header");
      ring = VarSet(names);
      continue;
    }
    poly_lines.push_back(line);
  }
  if (!ring) {
    std::vector<std::string> names;
    std::set<std::string> seen;
    for (const auto& pl : poly_lines) {
      for (size_t i = 0; i < pl.size();) {
        if (std::isalpha((unsigned char)pl[i]) || pl[i] == '_') {
          size_t j = i;
          while (j < pl.size() && (std::isalnum((unsigned char)pl[j]) || pl[j] == '_')) ++j;
          std::string id = pl.substr(i, j - i);
          if (seen.insert(id).second) names.push_back(id);
          i = j;
        } else {
          ++i;
        }
      }
    }
    if (names.empty()) throw std::invalid_argument("ideal file: no variables found");
    ring = VarSet(names);
  }
  GeneratorFamily fam(*ring);
  int idx = 0;
  for (const auto& pl : poly_lines)
    fam.add("g" + std::to_string(++idx), Polynomial::parse(*ring, pl));
  return fam;
}

}  // namespace orbita
