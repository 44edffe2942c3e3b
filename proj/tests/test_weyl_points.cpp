#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "orbita/points.hpp"
#include "orbita/weyl.hpp"

using namespace orbita;

TEST_CASE("dual partitions (pinned)") {
  CHECK(dual_partition({3, 3}) == Partition{2, 2, 2});
  CHECK(dual_partition({3, 3, 1, 1}) == Partition{4, 2, 2});
  CHECK(dual_partition({5, 3, 3}) == Partition{3, 3, 3, 1, 1});
  CHECK(dual_partition({}) == Partition{});
  CHECK(dual_partition(dual_partition({5, 3, 3})) == Partition{5, 3, 3});
  REQUIRE_THROWS_AS(validate_partition({1, 2}), std::invalid_argument);
  REQUIRE_THROWS_AS(validate_partition({2, 0}), std::invalid_argument);
}

TEST_CASE("dual partition is an involution (randomized)") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    Partition p;
    int len = (int)(rng() % 6);
    int cur = 1 + (int)(rng() % 9);
    for (int i = 0; i < len; ++i) {
      p.push_back(cur);
      int drop = (int)(rng() % 3);
      cur = std::max(1, cur - drop);
    }
    std::sort(p.begin(), p.end(), std::greater<int>());
    REQUIRE(dual_partition(dual_partition(p)) == p);
    REQUIRE(partition_sum(dual_partition(p)) == partition_sum(p));
  }
}

TEST_CASE("tail sums d_l (pinned)") {
  CHECK(d_l({4, 2, 2}, 4, 2) == 2);
  CHECK(d_l({4, 2, 2}, 4, 4) == 8);
  CHECK(d_l({4}, 2, 1) == 0);
  CHECK(d_l({4}, 2, 2) == 4);
  CHECK(d_l({2, 2}, 2, 1) == 2);
  REQUIRE_THROWS_AS(d_l({4, 2, 2}, 4, 0), std::invalid_argument);
  REQUIRE_THROWS_AS(d_l({4, 2, 2}, 4, 5), std::invalid_argument);
}

TEST_CASE("tail sums d_l: monotonicity and total sum (randomized)") {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 100; ++trial) {
    Partition p;
    int len = 1 + (int)(rng() % 5);
    int cur = 1 + (int)(rng() % 6);
    for (int i = 0; i < len; ++i) {
      p.push_back(cur);
      cur = std::max(1, cur - (int)(rng() % 3));
    }
    std::sort(p.begin(), p.end(), std::greater<int>());
    int n = len + (int)(rng() % 3);
    long prev = 0;
    for (int l = 1; l <= n; ++l) {
      long curd = d_l(p, n, l);
      REQUIRE(curd >= prev);  // tail sums grow with the tail
      prev = curd;
    }
    REQUIRE(d_l(p, n, n) == partition_sum(p));
  }
}

TEST_CASE("threshold counts d'_l (pinned)") {
  LeviDatum L523{Family::C, 5, 2, {3}};
  CHECK(d_prime_l(L523, 3) == 1);
  CHECK(d_prime_l(L523, 5) == 5);
  LeviDatum L312{Family::C, 3, 1, {2}};
  CHECK(d_prime_l(L312, 3) == 3);
  CHECK(d_prime_l(L312, 1) == 0);
  REQUIRE_THROWS_AS(d_prime_l(L312, 0), std::invalid_argument);
  REQUIRE_THROWS_AS(d_prime_l(L312, 4), std::invalid_argument);
}

TEST_CASE("generic points (pinned layouts and genericity errors)") {
  LeviDatum L312{Family::C, 3, 1, {2}};
  CHECK(generic_point(L312, {Rational(2)}) ==
        std::vector<Rational>{Rational(2), Rational(2), Rational(0)});
  LeviDatum L431{Family::B, 4, 0, {3, 1}};
  CHECK(generic_point(L431, {Rational(2), Rational(3)}) ==
        std::vector<Rational>{Rational(2), Rational(2), Rational(2), Rational(3)});
  // default block values are the first primes
  CHECK(generic_point(L431) ==
        std::vector<Rational>{Rational(2), Rational(2), Rational(2), Rational(3)});
  CHECK(default_tvals(4) ==
        std::vector<Rational>{Rational(2), Rational(3), Rational(5), Rational(7)});

  REQUIRE_THROWS_AS(generic_point(L431, {Rational(2), Rational(2)}), std::invalid_argument);
  REQUIRE_THROWS_AS(generic_point(L431, {Rational(2), Rational(-2)}), std::invalid_argument);
  REQUIRE_THROWS_AS(generic_point(L431, {Rational(0), Rational(2)}), std::invalid_argument);
  REQUIRE_THROWS_AS(generic_point(L431, {Rational(2)}), std::invalid_argument);
  REQUIRE_THROWS_AS(generic_point(LeviDatum{Family::B, 3, 1, {3}}), std::invalid_argument);
}

TEST_CASE("orbit sizes (pinned)") {
  LeviDatum L1{Family::C, 3, 1, {2}};
  REQUIRE(orbit_size(L1) == 12);
  REQUIRE(weyl_orbit(L1).size() == 12);

  LeviDatum L2{Family::C, 5, 2, {3}};
  REQUIRE(orbit_size(L2) == 80);
  REQUIRE(weyl_orbit(L2).size() == 80);

  LeviDatum L541{Family::B, 5, 4, {1}};
  REQUIRE(orbit_size(L541) == 10);

  REQUIRE(orbit_size(LeviDatum{Family::B, 4, 0, {3, 1}}) == 64);
  REQUIRE(orbit_size(LeviDatum{Family::C, 4, 0, {3, 1}}) == 64);

  // zeros make the D orbit agree with the full hyperoctahedral orbit
  REQUIRE(orbit_size(LeviDatum{Family::D, 3, 1, {2}}) == 12);
  REQUIRE(weyl_orbit(LeviDatum{Family::D, 3, 1, {2}}).size() == 12);

  // no zeros: the D orbit is half the size
  LeviDatum L3{Family::D, 2, 0, {1, 1}};
  REQUIRE(orbit_size(L3) == 4);
  PointSet dorb = weyl_orbit(L3);
  REQUIRE(dorb.size() == 4);
  for (const auto& p : dorb.points()) {
    int negs = 0;
    for (const auto& c : p)
      if (c < 0) ++negs;
    REQUIRE(negs % 2 == 0);
  }

  // single-block all-equal case in D: 2^(2k-1) points
  for (int k = 1; k <= 3; ++k) {
    LeviDatum Lk{Family::D, 2 * k, 0, {2 * k}};
    REQUIRE(orbit_size(Lk) == (1ULL << (2 * k - 1)));
    REQUIRE(weyl_orbit(Lk).size() == (1ULL << (2 * k - 1)));
  }
  // the k=1 orbit is exactly { (t,t), (-t,-t) }
  PointSet two = weyl_orbit(LeviDatum{Family::D, 2, 0, {2}}, {Rational(2)});
  REQUIRE(two.size() == 2);
  CHECK(two.at(0) == std::vector<Rational>{Rational(-2), Rational(-2)});
  CHECK(two.at(1) == std::vector<Rational>{Rational(2), Rational(2)});

  REQUIRE_THROWS_AS(orbit_size(LeviDatum{Family::B, 3, 1, {3}}), std::invalid_argument);
  // the size cap guards enumeration
  REQUIRE_THROWS_AS(weyl_orbit(L1, default_tvals(1), 5), std::invalid_argument);
}

namespace {

// Brute-force oracle: apply every signed permutation to x and deduplicate.
std::set<std::vector<Rational>> brute_orbit(const std::vector<Rational>& x, Family family) {
  int n = (int)x.size();
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::set<std::vector<Rational>> out;
  do {
    for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
      if (family == Family::D && (__builtin_popcountl(mask) & 1)) continue;
      std::vector<Rational> p(n);
      for (int i = 0; i < n; ++i) {
        p[i] = x[perm[i]];
        if (mask & (1UL << i)) p[i] = -p[i];
      }
      out.insert(std::move(p));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

TEST_CASE("orbits match the brute-force group action") {
  std::vector<LeviDatum> data = {
      {Family::B, 1, 0, {1}},    {Family::B, 1, 1, {}},     {Family::B, 2, 0, {2}},
      {Family::B, 2, 1, {1}},    {Family::B, 2, 0, {1, 1}}, {Family::B, 3, 0, {3}},
      {Family::B, 3, 1, {2}},    {Family::B, 3, 0, {2, 1}}, {Family::B, 3, 2, {1}},
      {Family::B, 3, 0, {1, 1, 1}}, {Family::B, 4, 2, {2}}, {Family::B, 4, 0, {2, 2}},
      {Family::B, 4, 1, {2, 1}}, {Family::B, 4, 0, {3, 1}}, {Family::B, 4, 4, {}},
  };
  for (LeviDatum L : data) {
    for (Family f : {Family::B, Family::C, Family::D}) {
      L.family = f;
      auto x = generic_point(L);
      auto fast = orbit_of_point(x, f);
      auto slow = brute_orbit(x, f);
      INFO(L.str());
      REQUIRE(fast.size() == slow.size());
      REQUIRE(std::set<std::vector<Rational>>(fast.begin(), fast.end()) == slow);
      REQUIRE(fast.size() == orbit_size(L));
      REQUIRE(weyl_orbit(L).size() == orbit_size(L));
    }
  }
}

TEST_CASE("point sets: canonical form and text format") {
  PointSet ps(2, {{Rational(1), Rational(0)}, {Rational(0), Rational(0)},
                  {Rational(1), Rational(0)}});
  REQUIRE(ps.size() == 2);  // duplicates collapse
  PointSet back = PointSet::parse(2, ps.str());
  REQUIRE(back == ps);
  PointSet commented = PointSet::parse(2, "# header\n 1/2, -3 \n\n0, 0 # origin\n");
  REQUIRE(commented.size() == 2);
  REQUIRE(commented.at(1) == std::vector<Rational>{Rational(1, 2), Rational(-3)});
  REQUIRE_THROWS_AS(PointSet(2, {{Rational(1)}}), std::invalid_argument);
  REQUIRE_THROWS_AS(PointSet::parse(2, "1, ,2\n"), std::invalid_argument);
}

TEST_CASE("vanishing ideal of two points (pinned)") {
  VarSet R = VarSet::y_ring(2);
  PointSet ps(2, {{Rational(0), Rational(0)}, {Rational(1), Rational(0)}});
  Ideal I = vanishing_ideal(ps, R);
  const auto& gb = I.basis();
  REQUIRE(gb.size() == 2);
  CHECK(gb[0] == Polynomial::parse(R, "y2"));
  CHECK(gb[1] == Polynomial::parse(R, "y1^2 - y1"));
  REQUIRE(quotient_dimension(I) == 2ULL);
  // the default-ring wrapper computes the same ideal
  Ideal W = vanishing_ideal_points(ps);
  REQUIRE(W.basis() == gb);
}

TEST_CASE("vanishing ideal edge cases") {
  VarSet R = VarSet::y_ring(2);
  SECTION("empty set gives the unit ideal") {
    Ideal I = vanishing_ideal(PointSet(2, {}), R);
    REQUIRE(I.is_unit_ideal());
    REQUIRE(quotient_dimension(I) == 0ULL);
  }
  SECTION("single point gives the maximal ideal at it") {
    PointSet ps(2, {{Rational(2, 3), Rational(-1)}});
    Ideal I = vanishing_ideal(ps, R);
    REQUIRE(quotient_dimension(I) == 1ULL);
    REQUIRE(ideal_equal(I, Ideal(R, {Polynomial::parse(R, "3*y1 - 2"),
                                     Polynomial::parse(R, "y2 + 1")})));
  }
  SECTION("point cap is enforced") {
    VarSet R1 = VarSet::y_ring(1);
    std::vector<std::vector<Rational>> many;
    for (int i = 0; i <= (int)kVanishingIdealPointCap; ++i) many.push_back({Rational(i)});
    REQUIRE_THROWS_AS(vanishing_ideal(PointSet(1, std::move(many)), R1),
                      std::invalid_argument);
  }
}

TEST_CASE("vanishing ideal: randomized properties") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 12; ++trial) {
    int n = 2 + (int)(rng() % 2);
    VarSet R = VarSet::y_ring(n);
    int npts = 1 + (int)(rng() % 12);
    std::vector<std::vector<Rational>> raw;
    for (int p = 0; p < npts; ++p) {
      std::vector<Rational> v;
      for (int i = 0; i < n; ++i)
        v.push_back(Rational((long)(rng() % 7) - 3, 1 + (long)(rng() % 2)));
      raw.push_back(std::move(v));
    }
    PointSet ps(n, std::move(raw));
    Ideal I = vanishing_ideal(ps, R);
    INFO("trial " << trial);
    // dimension equals the number of distinct points
    REQUIRE(quotient_dimension(I) == (unsigned long long)ps.size());
    // every basis element vanishes on the set
    REQUIRE(vanishes_on(I.basis(), ps));
    // normal form preserves values at the points
    Polynomial f(R);
    for (int t = 0; t < 5; ++t) {
      Monomial m(n);
      for (int v = 0; v < n; ++v) m.set_exp(v, (uint32_t)(rng() % 3));
      f += Polynomial::from_term(R, m, Rational((long)(rng() % 11) - 5));
    }
    Polynomial nf = normal_form(f, I);
    for (size_t p = 0; p < ps.size(); ++p)
      REQUIRE(nf.evaluate(ps.at(p)) == f.evaluate(ps.at(p)));
    // the produced basis really is a basis of an ideal containing itself:
    // recompute from generators and compare
    Ideal J(R, I.basis());
    REQUIRE(ideal_equal(I, J));
    REQUIRE(J.basis().size() == I.basis().size());
  }
}

TEST_CASE("vanishing ideal of an orbit is stable under the group") {
  // For an orbit point set, each coordinate sign change and swap permutes the
  // set, so evaluating any basis element at a transformed point still
  // vanishes.
  LeviDatum L{Family::C, 3, 1, {2}};
  PointSet ps = weyl_orbit(L);
  REQUIRE(ps.size() == 12);
  VarSet R = VarSet::y_ring(3);
  Ideal I = vanishing_ideal(ps, R);
  REQUIRE(quotient_dimension(I) == 12ULL);
  for (const auto& g : I.basis()) {
    for (const auto& p : ps.points()) {
      std::vector<Rational> flip = {-p[0], p[1], -p[2]};  // in the group
      std::vector<Rational> swapped = {p[1], p[0], p[2]};
      REQUIRE(g.evaluate(flip) == 0);
      REQUIRE(g.evaluate(swapped) == 0);
    }
  }
}
