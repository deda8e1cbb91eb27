#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sheun/lambda_poly.hpp"
#include "sheun/poly.hpp"
#include "sheun/ratfunc.hpp"
#include "sheun/rational.hpp"

using namespace sheun;

TEST_CASE("rational parse and print round-trip in lowest terms") {
  CHECK(rat_str(rat_parse("3/4")) == "3/4");
  CHECK(rat_str(rat_parse("-7/2")) == "-7/2");
  CHECK(rat_str(rat_parse("4/8")) == "1/2");
  CHECK(rat_str(rat_parse("0/9")) == "0");
  CHECK(rat_str(rat_parse("17")) == "17");
  // only "p" or "p/q" with a leading '-' on p; anything else fails loudly
  CHECK_THROWS_AS(rat_parse("-6/-4"), std::invalid_argument);
  CHECK_THROWS_AS(rat_parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(rat_parse("3/0"), std::invalid_argument);
  CHECK_THROWS_AS(rat_parse(""), std::invalid_argument);
  CHECK(rat(3, 6) == rat(1, 2));
  CHECK(is_zero(rat(0, 5)));
  CHECK_FALSE(is_zero(rat(1, 5)));
}

TEST_CASE("poly normal form prunes trailing zeros") {
  Poly p(std::vector<Rational>{Rational(1), Rational(0), Rational(0)});
  CHECK(p.degree() == 0);
  CHECK(p == Poly(Rational(1)));
  CHECK(Poly().is_zero());
  CHECK(Poly().degree() == -1);
  CHECK((Poly::x() - Poly::x()).is_zero());
}

TEST_CASE("poly shift round-trips and composes additively") {
  Poly p(std::vector<Rational>{rat(1, 3), Rational(-2), Rational(0), Rational(5)});
  CHECK(p.shifted(rat(7, 2)).shifted(rat(-7, 2)) == p);
  CHECK(p.shifted(Rational(1)).shifted(Rational(2)) == p.shifted(Rational(3)));
  // (x+1)^2 = x^2 + 2x + 1
  Poly sq = Poly::x() * Poly::x();
  CHECK(sq.shifted(Rational(1)) ==
        Poly(std::vector<Rational>{Rational(1), Rational(2), Rational(1)}));
}

TEST_CASE("poly divmod and gcd") {
  Poly x = Poly::x();
  Poly a = x * x - Poly(Rational(1));       // x^2 - 1
  Poly b = x - Poly(Rational(1));            // x - 1
  auto [q, r] = poly_divmod(a, b);
  CHECK(q == x + Poly(Rational(1)));
  CHECK(r.is_zero());
  CHECK(poly_gcd(a, b) == b.monic());
  // coprime inputs give the unit gcd
  CHECK(poly_gcd(x, x + Poly(Rational(1))) == Poly(Rational(1)));
  CHECK(poly_gcd(Poly(), Poly()) == Poly());
}

TEST_CASE("ratfunc basis-coefficient identities") {
  Poly x = Poly::x();
  Poly four_x = x * Rational(4);
  RatFunc inv4x(Poly(Rational(1)), four_x);  // 1/(4x)

  // (1/(4x)) * 4x = 1
  CHECK(inv4x * RatFunc(four_x) == RatFunc(Rational(1)));

  // (2x-1)/(4x) + (2x+1)/(4x) = 1
  RatFunc f(x * Rational(2) - Poly(Rational(1)), four_x);
  RatFunc g(x * Rational(2) + Poly(Rational(1)), four_x);
  CHECK(f + g == RatFunc(Rational(1)));
}

TEST_CASE("ratfunc normal form: coprime, monic denominator") {
  Poly x = Poly::x();
  // (x^2-1)/(x-1) reduces to x+1
  RatFunc h(x * x - Poly(Rational(1)), x - Poly(Rational(1)));
  CHECK(h.is_poly());
  CHECK(h.num() == x + Poly(Rational(1)));
  // (2x)/(2x^2) reduces to 1/x with monic denominator
  RatFunc k(x * Rational(2), x * x * Rational(2));
  CHECK(k.num() == Poly(Rational(1)));
  CHECK(k.den() == x);
}

TEST_CASE("ratfunc field axioms on sampled values") {
  Poly x = Poly::x();
  RatFunc f(Poly(Rational(3)), x + Poly(Rational(1)));
  RatFunc g(x, x * x + Poly(Rational(2)));
  RatFunc h(x - Poly(rat(1, 2)), Poly(Rational(4)));
  CHECK((f + g) + h == f + (g + h));
  CHECK((f * g) * h == f * (g * h));
  CHECK(f * (g + h) == f * g + f * h);
  CHECK((f + g) - g == f);
  CHECK(f / g * g == f);
  CHECK(f + (-f) == RatFunc());
  CHECK(f - f == RatFunc());
}

TEST_CASE("ratfunc shift is a homomorphism") {
  Poly x = Poly::x();
  RatFunc f(x * Rational(2) - Poly(Rational(1)), x * Rational(4));
  RatFunc g(Poly(Rational(1)), x + Poly(Rational(3)));
  Rational c = rat(5, 2);
  CHECK((f + g).shifted(c) == f.shifted(c) + g.shifted(c));
  CHECK((f * g).shifted(c) == f.shifted(c) * g.shifted(c));
  CHECK(f.shifted(c).shifted(-c) == f);
}

TEST_CASE("lambda embed doubles exponents, extract halves them") {
  LambdaPoly q = LambdaPoly::monomial(2, rat(3, 2)) + LambdaPoly(Rational(5));
  Poly p = lambda_embed(q);  // 3/2 x^4 + 5
  CHECK(p.degree() == 4);
  CHECK(p.coeff(4) == rat(3, 2));
  CHECK(p.coeff(0) == Rational(5));
  CHECK(p.coeff(2) == Rational(0));
  CHECK(lambda_extract(p) == q);
}

TEST_CASE("lambda extract rejects odd-degree part") {
  CHECK_THROWS_AS(lambda_extract(Poly::monomial(3)), OddPartPresent);
  CHECK_THROWS_AS(lambda_extract(Poly::x()), OddPartPresent);
  CHECK(lambda_extract(Poly()) == LambdaPoly());
}

TEST_CASE("lambda poly arithmetic mirrors poly arithmetic") {
  LambdaPoly l = LambdaPoly::lambda();
  LambdaPoly q = l * l - l * Rational(2) + LambdaPoly(Rational(1));
  CHECK(q.degree() == 2);
  CHECK(q.eval(Rational(1)) == Rational(0));
  CHECK(q.eval(Rational(3)) == Rational(4));
  CHECK(q.lead() == Rational(1));
  CHECK(lambda_extract(lambda_embed(q)) == q);
  CHECK(q.str() == "lambda^2 - 2*lambda + 1");
}
