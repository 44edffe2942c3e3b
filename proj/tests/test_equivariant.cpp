#include <catch2/catch_amalgamated.hpp>

#include "orbita/equivariant.hpp"

using namespace orbita;

namespace {

// Substitute a family point into a polynomial over Q[y..., params] and
// return the result (a polynomial in the parameters alone, inside the
// combined ring).
Polynomial at_point(const Polynomial& g, const std::vector<Polynomial>& pt) {
  const VarSet& R = g.ring();
  std::map<int, Polynomial> images;
  for (size_t i = 0; i < pt.size(); ++i) images.emplace((int)i, pt[i].mapped_to(R));
  return g.specialize(images);
}

bool has_point(const ParamPointFamily& fam, const std::vector<Polynomial>& pt) {
  for (const auto& p : fam.points)
    if (p == pt) return true;
  return false;
}

}  // namespace

TEST_CASE("fixed point families have the stated cardinalities") {
  struct Row {
    const char* id;
    size_t count;
    int n;
  };
  const Row rows[] = {
      {"C:2n-2,1,1", 8, 4},  {"C:2,2,2", 12, 3},      {"C:4,3,3", 80, 5},
      {"B:2,2,1", 4, 2},     {"D:2,2,1,1", 12, 3},    {"D:3,2,2,1", 24, 4},
      {"D:2n-3,1,1,1", 8, 4}};
  for (const auto& row : rows) {
    KernelCase kc = kernel_case(row.id);
    INFO(row.id);
    CHECK(kc.family.points.size() == row.count);
    CHECK(kc.n() == row.n);
    // coordinates are linear in the parameters and points are distinct
    // (enforced by construction; revalidate explicitly)
    REQUIRE_NOTHROW(kc.family.validate(row.count));
  }
  CHECK(kernel_case("C:2n-2,1,1?n=3").family.points.size() == 6);
  CHECK(kernel_case("C:2n-2,1,1?n=2").family.points.size() == 4);
  CHECK(kernel_case("D:2n-3,1,1,1?n=3").family.points.size() == 6);
  CHECK(kernel_case_ids().size() == 7);
  CHECK_THROWS_AS(kernel_case("E:1,1"), std::invalid_argument);
  CHECK_THROWS_AS(kernel_case("C:2n-2,1,1?n=1"), std::invalid_argument);
}

TEST_CASE("B:2,2,1 family consists of the four stated points") {
  KernelCase kc = kernel_case("B:2,2,1");
  const VarSet P = kc.family.params;
  Polynomial t0 = Polynomial::var(P, 0), h = Polynomial::var(P, 1);
  REQUIRE(kc.family.points.size() == 4);
  CHECK(has_point(kc.family, {t0 + h, t0 - h}));
  CHECK(has_point(kc.family, {-t0 + h, -t0 - h}));
  CHECK(has_point(kc.family, {t0 + h, -t0 + h}));
  CHECK(has_point(kc.family, {-t0 + h, t0 + h}));
  CHECK_FALSE(has_point(kc.family, {t0 - h, t0 + h}));
}

TEST_CASE("C:2,2,2 family obeys the chain and isotropy constraints") {
  KernelCase kc = kernel_case("C:2,2,2");
  const VarSet P = kc.family.params;
  Polynomial t0 = Polynomial::var(P, 0), h = Polynomial::var(P, 1);
  REQUIRE(kc.family.points.size() == 12);
  // descending chains and all-top arrangements are present
  CHECK(has_point(kc.family, {t0 + h, t0 - h, h}));
  CHECK(has_point(kc.family, {-t0 + h, -t0 - h, h}));
  CHECK(has_point(kc.family, {t0 + h, -t0 + h, h}));
  CHECK(has_point(kc.family, {h, t0 + h, t0 - h}));
  // a chain bottom may not precede its top, and no two coordinates may
  // sum to zero
  CHECK_FALSE(has_point(kc.family, {t0 - h, t0 + h, h}));
  CHECK_FALSE(has_point(kc.family, {t0 + h, h, -h}));
  CHECK_FALSE(has_point(kc.family, {h, -h, t0 + h}));
}

TEST_CASE("weight lists are closed under negation and flag pairing gives n values") {
  for (const auto& id : kernel_case_ids()) {
    KernelCase kc = kernel_case(id);
    INFO(id);
    REQUIRE_NOTHROW(kc.weights.validate());
    GeneratorFamily flags = flag_relations(kc.weights, kc.n());
    CHECK((int)flags.size() == kc.n());
  }

  const VarSet P = VarSet({"t0", "h"});
  Polynomial t0 = Polynomial::var(P, 0), h = Polynomial::var(P, 1);

  // {t0, -t0, 0} with n = 1: the lone zero weight is dropped
  WeightList w1{P, {t0, -t0, Polynomial(P)}};
  GeneratorFamily f1 = flag_relations(w1, 1);
  REQUIRE(f1.size() == 1);
  CHECK(f1.items()[0].second.str() == "y1^2 - t0^2");

  // unpaired nonzero weight
  WeightList bad{P, {t0, h}};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  CHECK_THROWS_AS(flag_relations(bad, 1), std::invalid_argument);

  // pair count must equal n
  WeightList w2{P, {t0, -t0, h, -h}};
  CHECK_THROWS_AS(flag_relations(w2, 3), std::invalid_argument);
  REQUIRE_NOTHROW(flag_relations(w2, 2));
}

TEST_CASE("flag relations vanish identically on every fixed point family") {
  for (const auto& id : kernel_case_ids()) {
    KernelCase kc = kernel_case(id);
    GeneratorFamily flags = flag_relations(kc.weights, kc.n());
    INFO(id);
    for (const auto& rel : flags.items())
      for (const auto& pt : kc.family.points) {
        INFO(rel.first);
        CHECK(at_point(rel.second, pt).is_zero());
      }
  }
}

TEST_CASE("B:2,2,1 kernel verification passes all four checks") {
  KernelVerification v = verify_kernel_case(kernel_case("B:2,2,1"));
  CHECK(v.generators_vanish);
  CHECK(v.vanish_witnesses.empty());
  CHECK(v.initial_match);
  REQUIRE(v.rank_generic);
  REQUIRE(v.rank_generic_alt);
  REQUIRE(v.rank_origin);
  REQUIRE(v.stated_initial_dim);
  CHECK(*v.rank_generic == 4);
  CHECK(*v.rank_generic_alt == 4);
  CHECK(*v.rank_origin == 4);
  CHECK(*v.stated_initial_dim == 4);
  CHECK(v.all_pass());
}

TEST_CASE("C:2,2,2 kernel verification passes with rank 12") {
  KernelVerification v = verify_kernel_case(kernel_case("C:2,2,2"));
  CHECK(v.generators_vanish);
  CHECK(v.initial_match);
  REQUIRE(v.rank_generic);
  REQUIRE(v.rank_generic_alt);
  REQUIRE(v.rank_origin);
  REQUIRE(v.stated_initial_dim);
  CHECK(*v.rank_generic == 12);
  CHECK(*v.rank_generic_alt == 12);
  CHECK(*v.rank_origin == 12);
  CHECK(*v.stated_initial_dim == 12);
  CHECK(v.all_pass());
}

TEST_CASE("D:2,2,1,1 kernel verification passes with rank 12") {
  KernelVerification v = verify_kernel_case(kernel_case("D:2,2,1,1"));
  CHECK(v.generators_vanish);
  CHECK(v.initial_match);
  REQUIRE(v.rank_generic);
  REQUIRE(v.rank_generic_alt);
  REQUIRE(v.rank_origin);
  REQUIRE(v.stated_initial_dim);
  CHECK(*v.rank_generic == 12);
  CHECK(*v.rank_generic_alt == 12);
  CHECK(*v.rank_origin == 12);
  CHECK(*v.stated_initial_dim == 12);
  CHECK(v.all_pass());
}

TEST_CASE("C:4,3,3 kernel verification records the dimension discrepancy") {
  KernelVerification v = verify_kernel_case(kernel_case("C:4,3,3"));
  CHECK(v.generators_vanish);
  CHECK(v.family_size == 80);
  REQUIRE(v.stated_initial_dim);
  // the stated specialized generators cut out a 131-dimensional quotient,
  // not one of dimension 80 = |family|
  CHECK(*v.stated_initial_dim == 131);
  REQUIRE(v.rank_generic);
  REQUIRE(v.rank_generic_alt);
  REQUIRE(v.rank_origin);
  // the stated product generators cut out a rank-288 family, constant
  // across fibers but well above the 80 fixed points
  CHECK(*v.rank_generic == 288);
  CHECK(*v.rank_generic_alt == 288);
  CHECK(*v.rank_origin == 288);
  CHECK_FALSE(v.initial_match);
  CHECK_FALSE(v.all_pass());
}

TEST_CASE("C:2n-2,1,1 kernel verification passes at n=4") {
  KernelVerification v = verify_kernel_case(kernel_case("C:2n-2,1,1?n=4"));
  CHECK(v.generators_vanish);
  CHECK(v.initial_match);
  REQUIRE(v.rank_generic);
  REQUIRE(v.rank_generic_alt);
  REQUIRE(v.rank_origin);
  REQUIRE(v.stated_initial_dim);
  CHECK(*v.rank_generic == 8);
  CHECK(*v.rank_generic_alt == 8);
  CHECK(*v.rank_origin == 8);
  CHECK(*v.stated_initial_dim == 8);
  CHECK(v.all_pass());
}

TEST_CASE("D:2n-3,1,1,1 kernel verification passes at n=4") {
  KernelVerification v = verify_kernel_case(kernel_case("D:2n-3,1,1,1?n=4"));
  CHECK(v.generators_vanish);
  CHECK(v.initial_match);
  REQUIRE(v.rank_generic);
  REQUIRE(v.rank_generic_alt);
  REQUIRE(v.rank_origin);
  REQUIRE(v.stated_initial_dim);
  CHECK(*v.rank_generic == 8);
  CHECK(*v.rank_generic_alt == 8);
  CHECK(*v.rank_origin == 8);
  CHECK(*v.stated_initial_dim == 8);
  CHECK(v.all_pass());
}

TEST_CASE("D:3,2,2,1 kernel verification is recorded honestly") {
  KernelVerification v = verify_kernel_case(kernel_case("D:3,2,2,1"));
  CHECK(v.generators_vanish);
  CHECK(v.family_size == 24);
  REQUIRE(v.rank_generic);
  REQUIRE(v.rank_generic_alt);
  REQUIRE(v.rank_origin);
  REQUIRE(v.stated_initial_dim);
  // the derivable generators (products plus the y1 and y4 cubics and the
  // power-sum lifts) leave a rank-28 family: the y2 and y3 cubic lifts are
  // not among them, and the verification records that honestly
  CHECK(*v.rank_generic == 28);
  CHECK(*v.rank_generic_alt == 28);
  CHECK(*v.rank_origin == 28);
  CHECK_FALSE(v.initial_match);
  CHECK(*v.stated_initial_dim == 24);
  CHECK_FALSE(v.all_pass());
}

TEST_CASE("fiber ranks of a zero-parameter-family are constant") {
  // one-parameter family from the t = 0 specialization module
  LeviDatum levi{Family::C, 2, 0, {2}};
  GeneratorFamily uf = uniform_generators_a0(levi);
  REQUIRE(uf.ring().size() == 3);  // y1, y2, t1
  FiberRankResult r = fiber_rank_constancy(
      uf.polys(), {2}, {{Rational(0)}, {Rational(2)}, {Rational(3)}});
  CHECK(r.constant);
  REQUIRE(r.common_rank);
  CHECK(*r.common_rank == 4);
  CHECK(r.fibers.size() == 3);

  // two-parameter family: the C:2,2,2 stated generators plus flag relations
  KernelCase kc = kernel_case("C:2,2,2");
  std::vector<Polynomial> gens = kc.stated_generators.polys();
  for (const auto& g : flag_relations(kc.weights, 3).polys()) gens.push_back(g);
  FiberRankResult r2 = fiber_rank_constancy(
      gens, {3, 4},
      {{Rational(0), Rational(0)}, {Rational(2), Rational(1)}, {Rational(5), Rational(1)}});
  CHECK(r2.constant);
  REQUIRE(r2.common_rank);
  CHECK(*r2.common_rank == 12);
}

TEST_CASE("fiber rank constancy detects a non-flat family") {
  VarSet R({"y1", "t"});
  Polynomial y1 = Polynomial::var(R, 0), t = Polynomial::var(R, 1);
  std::vector<Polynomial> gens = {y1 * y1 - t, y1 * y1 * y1};
  FiberRankResult r = fiber_rank_constancy(gens, {1}, {{Rational(0)}, {Rational(1)}});
  CHECK_FALSE(r.constant);
  CHECK_FALSE(r.common_rank);
  CHECK_FALSE(r.witness.empty());
  REQUIRE(r.fibers.size() == 2);
  CHECK(r.fibers[0].second == "2");
  CHECK(r.fibers[1].second == "0");
}

TEST_CASE("fiber rank constancy validates its inputs") {
  VarSet R({"y1", "t"});
  Polynomial y1 = Polynomial::var(R, 0), t = Polynomial::var(R, 1);
  std::vector<Polynomial> gens = {y1 * y1 - t};
  CHECK_THROWS_AS(fiber_rank_constancy(gens, {1}, {{Rational(0)}}), std::invalid_argument);
  CHECK_THROWS_AS(fiber_rank_constancy(gens, {1}, {{Rational(1)}, {Rational(2)}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(fiber_rank_constancy(gens, {}, {{Rational(0)}, {Rational(1)}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      fiber_rank_constancy(gens, {1}, {{Rational(0), Rational(0)}, {Rational(1)}}),
      std::invalid_argument);
  CHECK_THROWS_AS(fiber_rank_constancy(gens, {7}, {{Rational(0)}, {Rational(1)}}),
                  std::invalid_argument);
}
