#include "artin/berger.hpp"
#include "artin/error.hpp"
#include "artin/kahler.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace artin;

namespace {

TruncatedHom monomial_hom(const AlgebraPtr &a, unsigned n, unsigned ex, unsigned ey) {
  return TruncatedHom::make(a, n, {TruncPoly::monomial(n, ex, 1), TruncPoly::monomial(n, ey, 1)});
}

// Image of A_i under X -> t^ex, Y -> t^ey: distinct surviving exponents of
// the degree-i basis monomials.
std::size_t expected_rank(const ArtinAlgebra &a, unsigned n, unsigned ex, unsigned ey, unsigned deg) {
  std::set<unsigned> exps;
  for (const auto &m : a.basis())
    if (m.degree() == deg && m[0] * ex + m[1] * ey <= n)
      exps.insert(m[0] * ex + m[1] * ey);
  return exps.size();
}

AlgebraPtr max_ideal_power4() { return make_algebra(kXY, {"X^4", "X^3*Y", "X^2*Y^2", "X*Y^3", "Y^4"}); }

template <class F> ErrorCode code_of(F &&f) {
  try {
    f();
  } catch (const Error &e) {
    return e.code();
  }
  return static_cast<ErrorCode>(-1);
}

} // namespace

TEST(Berger, QAlgebraPresentation) {
  auto q = q_algebra(3);
  EXPECT_EQ(q->dim(), 7u);
  EXPECT_TRUE(is_zero(q->power(q->variable(0), 4)));
  EXPECT_FALSE(is_zero(q->power(q->variable(0), 3)));
  EXPECT_TRUE(is_zero(q->multiply(q->power(q->variable(0), 3), q->variable(1))));
  EXPECT_EQ(code_of([] { q_algebra(0); }), ErrorCode::InvalidArgument);
}

TEST(Berger, ImageDimensionMatchesExponentCount) {
  auto a = max_ideal_power4();
  for (unsigned ex = 1; ex <= 5; ++ex)
    for (unsigned ey = 1; ey <= 5; ++ey)
      for (unsigned n = 1; n <= 16; ++n) {
        if (4 * std::min(ex, ey) <= n)
          continue; // degree-4 relations would survive
        auto h = monomial_hom(a, n, ex, ey);
        for (unsigned d = 1; d <= 3; ++d)
          EXPECT_EQ(image_dimension(h, d), expected_rank(*a, n, ex, ey, d)) << ex << " " << ey << " " << n;
      }
}

TEST(Berger, DegreeThreeWitnessForMaximalIdealPower) {
  auto a = max_ideal_power4();
  auto h = monomial_hom(a, 15, 4, 5);
  EXPECT_EQ(image_dimension(h, 3), 4u);
  auto rep = critical_degree(a, {h});
  EXPECT_EQ(rep.lower_bound, 3u);
  EXPECT_EQ(rep.upper_bound, 3u);
  EXPECT_TRUE(rep.exact());
}

TEST(Berger, TangentWitnessAchievesDegreeOne) {
  for (auto a : {max_ideal_power4(), q_algebra(1), q_algebra(4), make_algebra(kXY, {"X^2 - Y^2", "X*Y"})}) {
    auto w = tangent_witness(a);
    EXPECT_EQ(w.truncation(), 3u);
    EXPECT_GE(image_dimension(w, 1), 2u);
  }
  // the witness alone already certifies degree 1
  auto rep = critical_degree(q_algebra(3), {});
  EXPECT_EQ(rep.lower_bound, 1u);
  EXPECT_EQ(rep.homs_examined, 1u);
}

TEST(Berger, CriticalDegreeOfQ2) {
  auto q = q_algebra(2);
  auto h = monomial_hom(q, 5, 2, 3);
  EXPECT_EQ(image_dimension(h, 2), 2u);
  auto rep = critical_degree(q, {h});
  EXPECT_EQ(rep.lower_bound, 2u);
  EXPECT_EQ(rep.witnesses.at(2), h);

  SearchOptions opt;
  opt.n_max = 12;
  opt.budget = 200;
  auto searched = critical_degree_search(q, opt);
  EXPECT_EQ(searched.lower_bound, 2u);
  EXPECT_EQ(searched.witnesses.at(2).to_string(), "N=5: X->t^2, Y->t^3");
}

TEST(Berger, CriticalDegreePreconditions) {
  EXPECT_EQ(code_of([] { critical_degree(example_algebra(), {}); }), ErrorCode::NotGraded);
  EXPECT_EQ(code_of([] { critical_degree(make_algebra(kX, {"X^3"}), {}); }), ErrorCode::PrincipalAlgebra);
}

TEST(Berger, SurjectionToQ) {
  auto q = q_algebra(2);
  auto h = monomial_hom(q, 5, 2, 3);
  auto s = surjection_to_q(q, h, 2);
  EXPECT_TRUE(s.iso_check);
  EXPECT_EQ(s.nu_x, TruncValue::finite(2));
  EXPECT_EQ(s.nu_y, TruncValue::finite(3));
  ASSERT_TRUE(s.surjection);
  EXPECT_EQ(s.q->dim(), 5u);
  EXPECT_EQ(s.quotient->dim(), 5u);

  // the same hom sees only degree 1 of Q(2) at truncation 3
  auto small = monomial_hom(q, 3, 2, 3);
  EXPECT_EQ(code_of([&] { surjection_to_q(q, small, 2); }), ErrorCode::WitnessInsufficient);

  // a bigger algebra maps onto Q(1)
  auto a = max_ideal_power4();
  auto s1 = surjection_to_q(a, tangent_witness(a), 1);
  EXPECT_TRUE(s1.iso_check);
  EXPECT_EQ(s1.quotient->dim(), 3u);
}

TEST(Berger, OmegaWitness) {
  auto q = q_algebra(3);
  auto m = kahler_module(q);
  auto w = omega_witness(m, q->variable(0), q->variable(1), 3);
  EXPECT_FALSE(w.is_zero());
  // x^{r-1}(x dy - y dx) by hand
  auto dx = differential(m, q->variable(0)), dy = differential(m, q->variable(1));
  auto x2 = q->power(q->variable(0), 2);
  auto expected = act(q->multiply(x2, q->variable(0)), dy) - act(q->multiply(x2, q->variable(1)), dx);
  EXPECT_EQ(w.coords, expected.coords);
  EXPECT_EQ(code_of([&] { omega_witness(m, elem(q, "X^2"), q->variable(1), 1); }), ErrorCode::NotDegreeOne);
  auto ex = example_algebra();
  EXPECT_EQ(code_of([&] { omega_witness(kahler_module(ex), ex->variable(0), ex->variable(1), 1); }),
            ErrorCode::NotGraded);
}

TEST(Berger, MembershipCheckReportsViolations) {
  auto a = make_algebra(kX, {"X^3"});
  auto m = kahler_module(a);
  auto h = TruncatedHom::make(a, 5, {TruncPoly::monomial(5, 2, 1)});
  auto rep = tau_membership_check(differential(m, a->variable(0)), {h});
  EXPECT_FALSE(rep.all_killed);
  ASSERT_EQ(rep.violations.size(), 1u);
  EXPECT_EQ(rep.violations[0], h);
  EXPECT_TRUE(rep.witness_nonzero);
}

TEST(Berger, OmegaKilledByFoundHoms) {
  auto q = q_algebra(2);
  auto m = kahler_module(q);
  SearchOptions opt;
  opt.n_max = 12;
  opt.budget = 100;
  auto homs = search_homs(q, opt);
  auto rep = tau_membership_check(omega_witness(m, q->variable(0), q->variable(1), 2), homs);
  EXPECT_TRUE(rep.all_killed);
  EXPECT_EQ(rep.homs_tested, homs.size());
  EXPECT_GE(rep.homs_tested, 100u);
}

TEST(Berger, SocleGenerator) {
  auto g = make_algebra(kXY, {"X^2 - Y^2", "X*Y"});
  auto s = socle_generator(*g);
  EXPECT_EQ(Subspace::span(g->dim(), {s}), socle(*g));
  EXPECT_EQ(code_of([] { socle_generator(*q_algebra(2)); }), ErrorCode::NotGorenstein);
  EXPECT_EQ(code_of([] { socle_generator(*make_algebra(kX, {"X^3"})); }), ErrorCode::PrincipalAlgebra);
}

TEST(Berger, SocleKillOnGorensteinAlgebras) {
  for (auto a : {make_algebra(kXY, {"X^2 - Y^2", "X*Y"}), make_algebra(kXY, {"X^3", "Y^2"})}) {
    SearchOptions opt;
    opt.budget = 100;
    auto homs = search_homs(a, opt);
    auto kill = socle_kill_check(a, homs);
    EXPECT_TRUE(kill.all_killed);
    EXPECT_TRUE(kill.witness_nonzero);
    auto form = tau_witness_gorenstein(kahler_module(a), homs);
    EXPECT_TRUE(form.witness_nonzero);
    EXPECT_TRUE(form.all_killed);
  }
}

TEST(Berger, ExampleSocleDifferentialVanishes) {
  auto a = example_algebra();
  auto rep = tau_witness_gorenstein(kahler_module(a), {});
  EXPECT_FALSE(rep.witness_nonzero);
  EXPECT_FALSE(rep.note.empty());
}
