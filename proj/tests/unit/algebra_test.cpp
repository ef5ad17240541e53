#include "artin/berger.hpp"
#include "artin/error.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace artin;

TEST(Algebra, ExampleDimensionAndProducts) {
  auto a = example_algebra();
  EXPECT_EQ(a->dim(), 12u);
  EXPECT_TRUE(a->basis()[0].is_one());
  EXPECT_EQ(a->multiply(elem(a, "X"), elem(a, "X^3")), elem(a, "X^4"));
  // X^4 + X^2*Y^3 + Y^5 reduces to X^4/5
  EXPECT_EQ(elem(a, "X^4 + X^2*Y^3 + Y^5"), elem(a, "1/5*X^4"));
  EXPECT_EQ(a->power(elem(a, "X"), 5), zero_vec(12));
  EXPECT_EQ(a->to_polynomial(elem(a, "Y^4")), parse_polynomial("-3/5*X^2*Y^2", kXY));
}

TEST(Algebra, TrivialAndInfiniteRejected) {
  try {
    make_algebra(kX, {"X", "X - 1"});
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::TrivialAlgebra);
  }
  try {
    make_algebra(kXY, {"X^2"});
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::NotZeroDimensional);
  }
}

TEST(Algebra, RationalsWithNoVariables) {
  auto q = build_algebra({}, {});
  EXPECT_EQ(q->dim(), 1u);
  EXPECT_TRUE(is_local_over_q(*q));
  EXPECT_EQ(socle(*q).dim(), 1u);
  EXPECT_EQ(embedding_dimension(*q), 0u);
}

TEST(Algebra, SplitAlgebraIsNotLocal) {
  auto a = make_algebra(kX, {"X^2 - X"});
  EXPECT_EQ(nilradical(*a).dim(), 0u);
  EXPECT_FALSE(is_local_over_q(*a));
  EXPECT_THROW(maximal_ideal(*a), Error);
  EXPECT_EQ(reduced_quotient(a).algebra->dim(), 2u);
}

TEST(Algebra, FieldExtensionIsNotLocalOverQ) {
  // Q(i) is local, but its residue field is not Q
  auto a = make_algebra(kX, {"X^2 + 1"});
  EXPECT_EQ(nilradical(*a).dim(), 0u);
  EXPECT_FALSE(is_local_over_q(*a));
}

TEST(Algebra, ShiftedLocalAlgebraHasResidue) {
  auto a = make_algebra(kX, {"X^3 - 3*X^2 + 3*X - 1"});
  EXPECT_TRUE(is_local_over_q(*a));
  EXPECT_EQ(residue(*a, elem(a, "X")), Rational(1));
  EXPECT_EQ(residue(*a, elem(a, "X^2 + 2")), Rational(3));
  EXPECT_TRUE(nilradical(*a).contains(elem(a, "X - 1")));
  EXPECT_EQ(socle(*a), Subspace::span(3, {elem(a, "(X - 1)^2")}));
}

TEST(Algebra, MixedAlgebraNilradical) {
  // Q[X]/(X^2 (X-1)) = Q[X]/X^2 x Q
  auto a = make_algebra(kX, {"X^3 - X^2"});
  auto n = nilradical(*a);
  EXPECT_EQ(n.dim(), 1u);
  EXPECT_TRUE(n.contains(elem(a, "X^2 - X")));
  EXPECT_FALSE(is_local_over_q(*a));
}

TEST(Algebra, ExampleSocleAndEmbedding) {
  auto a = example_algebra();
  EXPECT_TRUE(is_local_over_q(*a));
  EXPECT_EQ(maximal_ideal(*a).dim(), 11u);
  EXPECT_EQ(socle(*a), Subspace::span(12, {elem(a, "X^4")}));
  EXPECT_TRUE(is_gorenstein(*a));
  EXPECT_EQ(embedding_dimension(*a), 2u);
  EXPECT_FALSE(is_principal_ideal_algebra(*a));
  EXPECT_FALSE(grading_info(*a).is_standard_graded);
  EXPECT_THROW(euler_derivation(*a, a->one()), Error);
}

TEST(Algebra, QAlgebraDimensionsAndSocle) {
  for (unsigned r = 1; r <= 5; ++r) {
    auto q = q_algebra(r);
    EXPECT_EQ(q->dim(), 2 * r + 1);
    auto soc = socle(*q);
    EXPECT_EQ(soc.dim(), 2u);
    EXPECT_TRUE(soc.contains(q->power(q->variable(0), r)));
    EXPECT_FALSE(is_gorenstein(*q));
  }
}

TEST(Algebra, GradedComponentsOfMaximalIdealPower) {
  auto a = make_algebra(kXY, {"X^4", "X^3*Y", "X^2*Y^2", "X*Y^3", "Y^4"});
  auto info = grading_info(*a);
  ASSERT_TRUE(info.is_standard_graded);
  ASSERT_EQ(info.components.size(), 4u);
  for (std::size_t d = 0; d < 4; ++d)
    EXPECT_EQ(info.components[d].dim(), d + 1);
  EXPECT_EQ(info.nilpotency_index, 3u);
  EXPECT_EQ(degree_component(*a, 2).size(), 3u);
  auto e = euler_derivation(*a, elem(a, "X^2 + 3*X*Y + Y"));
  EXPECT_EQ(e, elem(a, "2*X^2 + 6*X*Y + Y"));
}

TEST(Algebra, PrincipalDetection) {
  auto a = make_algebra(kX, {"X^3"});
  EXPECT_TRUE(is_principal_ideal_algebra(*a));
  EXPECT_EQ(embedding_dimension(*a), 1u);
  auto b = make_algebra(kXY, {"Y - X^2", "X^4"});
  EXPECT_TRUE(is_principal_ideal_algebra(*b));
}

TEST(Algebra, MapsAndQuotients) {
  auto a = make_algebra(kX, {"X^3"});
  auto b = make_algebra(kX, {"X^2"});
  auto h = AlgebraMap::from_variable_images(a, b, {b->variable(0)});
  EXPECT_EQ(h.apply(elem(a, "1 + X + X^2")), elem(b, "1 + X"));
  try {
    AlgebraMap::from_variable_images(a, b, {b->one()});
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::RelationViolated);
  }
  auto id = AlgebraMap::identity(a);
  auto comp = id.then(h);
  EXPECT_EQ(comp.apply(elem(a, "X^2")), zero_vec(2));
  EXPECT_THROW(h.then(id), Error);

  auto ex = example_algebra();
  auto q = quotient_algebra(ex, {elem(ex, "X^3")});
  // by hand: 1, X, Y, X^2, XY, Y^2, X^2Y, XY^2, Y^3, X^2Y^2
  EXPECT_EQ(q.algebra->dim(), 10u);
  EXPECT_TRUE(is_zero(q.projection.apply(elem(ex, "X^4"))));
}

TEST(Algebra, EvaluateAndProductSubspace) {
  auto a = make_algebra(kXY, {"X^2", "Y^2"});
  auto b = make_algebra(kX, {"X^3"});
  EXPECT_EQ(evaluate(parse_polynomial("X*Y + 1", kXY), *b, {b->variable(0), b->variable(0)}), elem(b, "X^2 + 1"));
  auto m = maximal_ideal(*a);
  auto m2 = product(*a, m, m);
  EXPECT_EQ(m2, Subspace::span(4, {elem(a, "X*Y")}));
}
