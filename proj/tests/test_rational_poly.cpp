#include <catch2/catch_amalgamated.hpp>

#include "orbita/polynomial.hpp"

using namespace orbita;

TEST_CASE("varset basics") {
  VarSet R = VarSet::y_t_ring(2, 1);
  REQUIRE(R.size() == 3);
  REQUIRE(R.name(0) == "y1");
  REQUIRE(R.name(2) == "t1");
  REQUIRE(R.index_of("t1") == 2);
  REQUIRE(R.index_of("zz") == -1);
  REQUIRE_THROWS_AS(VarSet({"a", "a"}), std::invalid_argument);
  REQUIRE(VarSet::y_ring(2) == VarSet({"y1", "y2"}));
  REQUIRE(VarSet::y_ring(2) != VarSet::y_ring(3));
}

TEST_CASE("monomial order: grevlex tie-break") {
  // deg-equal monomials compare by the last nonzero entry of the exponent
  // difference being negative for the greater one.
  Monomial a({2, 1, 0}), b({1, 2, 0}), c({1, 1, 1});
  REQUIRE(monomial_cmp(a, b, MonomialOrder::GrevLex) > 0);
  REQUIRE(monomial_cmp(b, c, MonomialOrder::GrevLex) > 0);
  REQUIRE(monomial_cmp(a, a, MonomialOrder::GrevLex) == 0);
  // lex: earlier index is senior
  REQUIRE(monomial_cmp(a, b, MonomialOrder::Lex) > 0);
  Monomial d({0, 5, 0});
  REQUIRE(monomial_cmp(a, d, MonomialOrder::Lex) > 0);
  REQUIRE(monomial_cmp(a, d, MonomialOrder::DegLex) < 0);
  REQUIRE(Monomial::lcm(a, b) == Monomial({2, 2, 0}));
  REQUIRE(Monomial::gcd(a, b) == Monomial({1, 1, 0}));
  REQUIRE(a.coprime_with(Monomial({0, 0, 3})));
  REQUIRE_FALSE(a.coprime_with(b));
}

TEST_CASE("parse and print round-trip") {
  VarSet R = VarSet::y_t_ring(2, 1);
  Polynomial p = Polynomial::parse(R, "y1^2*y2 - 3/2*t1 + 4");
  REQUIRE(p.str() == "y1^2*y2 - 3/2*t1 + 4");
  REQUIRE(Polynomial::parse(R, p.str()) == p);

  REQUIRE(Polynomial::parse(R, "0").is_zero());
  REQUIRE(Polynomial::parse(R, "y1 - y1").is_zero());
  REQUIRE(Polynomial::parse(R, "2*y1 + 3*y1").str() == "5*y1");
  REQUIRE(Polynomial::parse(R, "-y1").str() == "-y1");
  REQUIRE(Polynomial::parse(R, " - 1/2 * y1 ^ 2 ").str() == "-1/2*y1^2");
  REQUIRE(Polynomial::parse(R, "y2*y1").str() == "y1*y2");

  REQUIRE_THROWS_AS(Polynomial::parse(R, "q1 + 2"), std::invalid_argument);
  REQUIRE_THROWS_AS(Polynomial::parse(R, ""), std::invalid_argument);
  REQUIRE_THROWS_AS(Polynomial::parse(R, "y1 y2"), std::invalid_argument);
}

TEST_CASE("arithmetic and canonical form") {
  VarSet R = VarSet::y_ring(3);
  auto P = [&](const char* s) { return Polynomial::parse(R, s); };
  Polynomial f = P("y1 + y2"), g = P("y1 - y2");
  REQUIRE(f * g == P("y1^2 - y2^2"));
  REQUIRE(f.pow(3) == P("y1^3 + 3*y1^2*y2 + 3*y1*y2^2 + y2^3"));
  REQUIRE((f - f).is_zero());
  REQUIRE(f.pow(0) == P("1"));
  // descending grevlex storage
  Polynomial h = P("y3 + y1^2*y2 + y1*y2^2 + 5");
  REQUIRE(h.terms()[0].m == Monomial({2, 1, 0}));
  REQUIRE(h.terms()[1].m == Monomial({1, 2, 0}));
  REQUIRE(h.terms()[2].m == Monomial({0, 0, 1}));
  REQUIRE(h.terms()[3].m.is_one());
  REQUIRE(h.degree() == 3);
  REQUIRE(h.degree_in(1) == 2);
  REQUIRE_FALSE(h.is_homogeneous());
  REQUIRE(h.leading_form() == P("y1^2*y2 + y1*y2^2"));
  REQUIRE(P("y1^2 + y2^2").is_homogeneous());
  // ring mismatch is an error
  VarSet R2 = VarSet::y_ring(2);
  REQUIRE_THROWS_AS(f + Polynomial::parse(R2, "y1"), std::invalid_argument);
}

TEST_CASE("leading terms under each order") {
  VarSet R = VarSet::y_ring(2);
  Polynomial f = Polynomial::parse(R, "y1^3 + y1*y2^3");
  REQUIRE(f.leading_term(MonomialOrder::Lex).m == Monomial({3, 0}));
  REQUIRE(f.leading_term(MonomialOrder::GrevLex).m == Monomial({1, 3}));
  REQUIRE(f.leading_term(MonomialOrder::DegLex).m == Monomial({1, 3}));
}

TEST_CASE("evaluate and specialize") {
  VarSet R = VarSet::y_t_ring(2, 1);
  Polynomial f = Polynomial::parse(R, "y1^2*y2 - t1 + 1/3");
  REQUIRE(f.evaluate({Rational(2), Rational(-1), Rational(5)}) ==
          Rational(-4) - 5 + Rational(1, 3));
  REQUIRE_THROWS_AS(f.evaluate({Rational(1)}), std::invalid_argument);

  std::map<std::string, Polynomial> im;
  im.emplace("t1", Polynomial::constant(R, Rational(7)));
  REQUIRE(f.specialize(im) == Polynomial::parse(R, "y1^2*y2 - 20/3"));
  std::map<std::string, Polynomial> im2;
  im2.emplace("y1", Polynomial::parse(R, "y2 + 1"));
  REQUIRE(f.specialize(im2) == Polynomial::parse(R, "y2^3 + 2*y2^2 + y2 - t1 + 1/3"));
}

TEST_CASE("content, primitive part, mapped_to") {
  VarSet R = VarSet::y_ring(2);
  Polynomial f = Polynomial::parse(R, "-4/3*y1^2 + 2*y2");
  REQUIRE(f.content() == Rational(-2, 3));
  REQUIRE(f.primitive_part() == Polynomial::parse(R, "2*y1^2 - 3*y2"));
  REQUIRE(f.primitive_part() * f.content() == f);

  VarSet S({"t1", "y2", "y1"});
  Polynomial g = f.mapped_to(S);
  REQUIRE(g.str() == "-4/3*y1^2 + 2*y2");
  REQUIRE(g.ring() == S);
  VarSet T({"y1"});
  REQUIRE_THROWS_AS(f.mapped_to(T), std::invalid_argument);
}

TEST_CASE("coeff_of_power extraction") {
  VarSet R = VarSet::y_z_ring(2);
  Polynomial f = Polynomial::parse(R, "z^2*y1 + z^2*y2^2 + z - 5*y1");
  int z = R.index_of("z");
  REQUIRE(f.coeff_of_power(z, 2) == Polynomial::parse(R, "y2^2 + y1"));
  REQUIRE(f.coeff_of_power(z, 1) == Polynomial::parse(R, "1"));
  REQUIRE(f.coeff_of_power(z, 0) == Polynomial::parse(R, "-5*y1"));
  REQUIRE(f.coeff_of_power(z, 7).is_zero());
}

TEST_CASE("univariate-in-z division with remainder") {
  // Frozen example: P = (z^2-y1^2)(z^2-y2^2), Q = (z^2-t1^2)^2 gives
  // remainder z^2*(2 t1^2 - y1^2 - y2^2) + y1^2 y2^2 - t1^4.
  VarSet R(std::vector<std::string>{"y1", "y2", "t1", "z"});
  auto P = [&](const char* s) { return Polynomial::parse(R, s); };
  Polynomial p = P("z^2 - y1^2") * P("z^2 - y2^2");
  Polynomial q = P("z^2 - t1^2").pow(2);
  auto [quot, rem] = poly_divmod_in_z(p, q, R.index_of("z"));
  REQUIRE(quot == P("1"));
  REQUIRE(rem == P("2*t1^2*z^2 - y1^2*z^2 - y2^2*z^2 + y1^2*y2^2 - t1^4"));
  REQUIRE(quot * q + rem == p);
  REQUIRE(rem.degree_in(R.index_of("z")) < q.degree_in(R.index_of("z")));

  // Division by a polynomial whose z-leading coefficient is non-constant is rejected.
  REQUIRE_THROWS_AS(poly_divmod_in_z(p, P("y1*z - 1"), R.index_of("z")),
                    std::invalid_argument);
  // Generic shape: quotient picks up the full co-factor.
  auto dm = poly_divmod_in_z(p, P("z^2 - y1^2"), R.index_of("z"));
  REQUIRE(dm.quotient == P("z^2 - y2^2"));
  REQUIRE(dm.remainder.is_zero());
}

TEST_CASE("rational parsing") {
  REQUIRE(parse_rational("3/4") == Rational(3, 4));
  REQUIRE(parse_rational("-6/8") == Rational(-3, 4));
  REQUIRE(parse_rational("12") == Rational(12));
  REQUIRE_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_rational("x"), std::invalid_argument);
  REQUIRE(to_string(Rational(-3, 4)) == "-3/4");
  REQUIRE(to_string(Rational(5)) == "5");
}
