#include "artin/error.hpp"
#include "artin/polynomial.hpp"

#include <gtest/gtest.h>

using namespace artin;

namespace {

const VarList XY{"X", "Y"};

Polynomial P(const std::string &s) { return parse_polynomial(s, XY); }

Monomial M(std::uint32_t a, std::uint32_t b) { return Monomial(std::vector<std::uint32_t>{a, b}); }

} // namespace

TEST(Rational, ParsesFractionsAndSigns) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-4"), Rational(-4));
  EXPECT_EQ(to_string(parse_rational("10/4")), "5/2");
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("1.5"), Error);
  EXPECT_THROW(parse_rational(""), Error);
}

TEST(Monomial, Arithmetic) {
  EXPECT_EQ(M(2, 1) * M(1, 3), M(3, 4));
  EXPECT_EQ(M(3, 4) / M(1, 3), M(2, 1));
  EXPECT_TRUE(M(1, 1).divides(M(2, 1)));
  EXPECT_FALSE(M(0, 2).divides(M(2, 1)));
  EXPECT_EQ(lcm(M(3, 1), M(1, 2)), M(3, 2));
  EXPECT_EQ(M(3, 2).degree(), 5u);
}

TEST(MonomialOrder, GrevlexRanksLaterVariablesHigher) {
  auto o = MonomialOrder::grevlex(2);
  EXPECT_TRUE(o.less(M(1, 0), M(0, 1)));  // X < Y
  EXPECT_TRUE(o.less(M(0, 2), M(3, 0)));  // degree first
  EXPECT_TRUE(o.less(M(2, 0), M(1, 1)));  // X^2 < XY
  EXPECT_TRUE(o.less(M(1, 1), M(0, 2)));
  auto l = MonomialOrder::lex(2);
  EXPECT_TRUE(l.less(M(5, 0), M(0, 1)));
  EXPECT_TRUE(l.less(M(1, 1), M(0, 2)));
}

TEST(MonomialOrder, GrevlexThreeVariablesReverseTieBreak) {
  auto o = MonomialOrder::grevlex(3);
  auto m = [](std::uint32_t a, std::uint32_t b, std::uint32_t c) { return Monomial(std::vector<std::uint32_t>{a, b, c}); };
  // same degree: the one with the larger power of the lowest variable X is smaller
  EXPECT_TRUE(o.less(m(1, 0, 1), m(0, 2, 0)));
  EXPECT_TRUE(o.less(m(2, 0, 0), m(0, 1, 1)));
}

TEST(Polynomial, ParseAndPrint) {
  EXPECT_EQ(P("3*X^2*Y^2 + 5*Y^4").to_string(), "5*Y^4 + 3*X^2*Y^2");
  EXPECT_EQ(P("X^4/5").to_string(), "1/5*X^4");
  EXPECT_EQ(P("-X").to_string(), "-X");
  EXPECT_EQ(P("X - X").to_string(), "0");
  EXPECT_EQ(P("2*(X+Y)").to_string(), P("2*X + 2*Y").to_string());
  EXPECT_EQ(P("(X+Y)^2"), P("X^2 + 2*X*Y + Y^2"));
  EXPECT_EQ(P("  X ^ 2  *  Y "), P("X^2*Y"));
}

TEST(Polynomial, ParseErrors) {
  EXPECT_THROW(P("Z"), Error);
  EXPECT_THROW(P("X +"), Error);
  EXPECT_THROW(P("X^"), Error);
  EXPECT_THROW(P("1/0*X"), Error);
  try {
    P("X*W");
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::Parse);
  }
}

TEST(Polynomial, ArithmeticAndDegree) {
  auto f = P("X^4 + X^2*Y^3 + Y^5");
  EXPECT_EQ(f.total_degree(), 5);
  EXPECT_FALSE(f.is_homogeneous());
  EXPECT_TRUE(P("X^2 - Y^2").is_homogeneous());
  EXPECT_EQ(Polynomial(XY).total_degree(), -1);
  EXPECT_EQ(P("X+1") * P("X-1"), P("X^2 - 1"));
  EXPECT_EQ(power(P("X+Y"), 3), P("X^3 + 3*X^2*Y + 3*X*Y^2 + Y^3"));
  EXPECT_EQ(f.coefficient(M(2, 3)), Rational(1));
  EXPECT_EQ(f.leading_monomial(MonomialOrder::grevlex(2)), M(0, 5));
  EXPECT_EQ(P("2*X^3 + X*Y").leading_coefficient(MonomialOrder::grevlex(2)), Rational(2));
}

TEST(Polynomial, PartialDerivatives) {
  auto f = P("X^4 + X^2*Y^3 + Y^5");
  EXPECT_EQ(partial_derivative(f, 0), P("4*X^3 + 2*X*Y^3"));
  EXPECT_EQ(partial_derivative(f, 1), P("3*X^2*Y^2 + 5*Y^4"));
  EXPECT_TRUE(partial_derivative(P("7"), 0).is_zero());
}

TEST(Polynomial, MismatchedVariablesRejected) {
  Polynomial a = P("X"), b = parse_polynomial("X", VarList{"X"});
  EXPECT_THROW(a + b, Error);
}
