#include <fstream>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "blocklat/error.hpp"
#include "blocklat/ratfunc.hpp"
#include "helpers.hpp"

using namespace blocklat;
using namespace blocklat::test;

namespace
{

Rational eval(Poly const &p, Rational const &t)
{
  Rational r = 0;
  for (auto i = p.coeffs().size(); i-- > 0;)
    r = r * t + p.coeffs()[i];
  return r;
}

std::optional<Rational> eval(RatFunc const &f, Rational const &t)
{
  Rational d = eval(f.den(), t);
  if (d == 0)
    return std::nullopt;
  return eval(f.num(), t) / d;
}

RatFunc P(char const *text) { return parse_expr(text); }

RatFunc random_ratfunc(std::mt19937 &rng)
{
  std::uniform_int_distribution<int> coef(-3, 3), deg(0, 2);
  auto poly = [&](bool nonzero) {
    std::vector<Rational> c(deg(rng) + 1);
    for (auto &x : c)
      x = coef(rng);
    if (nonzero && c.back() == 0)
      c.back() = 1;
    return Poly(c);
  };
  return RatFunc(poly(false), poly(true));
}

} // namespace

TEST(Poly, Arithmetic)
{
  auto z = Poly::z();
  auto one = Poly::constant(1);
  EXPECT_EQ((z + one) * (z - one), z * z - one);
  EXPECT_EQ(Poly().degree(), -1);
  EXPECT_EQ((z - z).degree(), -1);
  EXPECT_EQ(z.pow(3).derivative(), Rational(3) * z.pow(2));

  auto d = divmod(z.pow(3) + one, z + one);
  EXPECT_EQ(d.quotient, z * z - z + one);
  EXPECT_TRUE(d.remainder.is_zero());

  EXPECT_EQ(gcd(z * z - one, z * z + Rational(2) * z + one), z + one);
  EXPECT_EQ(gcd(Poly(), Poly()), Poly());
  EXPECT_EQ(compose(z * z, z + one), z * z + Rational(2) * z + one);
}

TEST(Poly, ChebyshevSmall)
{
  EXPECT_EQ(to_string(chebyshev(0)), "1");
  EXPECT_EQ(to_string(chebyshev(1)), "z");
  EXPECT_EQ(to_string(chebyshev(3)), "4*z^3 - 3*z");
  EXPECT_EQ(chebyshev(6), P("32*z^6-48*z^4+18*z^2-1").num());
}

TEST(PolyProperty, ChebyshevComposition)
{
  for (std::size_t m = 0; m <= 6; ++m)
    for (std::size_t n = 0; n <= 6; ++n)
      EXPECT_EQ(compose(chebyshev(m), chebyshev(n)), chebyshev(m * n))
        << m << " " << n;
}

TEST(PolyProperty, ChebyshevDihedral)
{
  auto j = P("(z+1/z)/2");
  for (std::size_t n = 1; n <= 6; ++n) {
    auto lhs = compose(RatFunc(chebyshev(n)), j);
    EXPECT_EQ(lhs, klein(KleinKind::dihedral, n)) << n;
    // cos(n t) = T_n(cos t) at z = 2: T_n(5/4) = (2^n + 2^-n)/2
    Rational two_n = 1;
    for (std::size_t i = 0; i < n; ++i)
      two_n *= 2;
    EXPECT_EQ(eval(chebyshev(n), Rational(5, 4)), (two_n + 1 / two_n) / 2);
  }
}

TEST(RatFunc, CanonicalForm)
{
  auto f = P("(2*z+2)/(4*z^2-4)");
  EXPECT_EQ(f.num(), Poly::constant(Rational(1, 2)));
  EXPECT_EQ(f.den(), P("z-1").num());
  EXPECT_EQ(f.degree(), 1u);
  EXPECT_TRUE(P("7").is_constant());
  EXPECT_TRUE(P("z^2/3").is_polynomial());
  EXPECT_EQ(P("z^-2"), P("1/z^2"));
  EXPECT_THROW(RatFunc(Poly::z(), Poly()), Error);
}

TEST(RatFunc, Mobius)
{
  auto m = P("(2*z+1)/(z-3)");
  EXPECT_EQ(compose(m, m.mobius_inverse()), RatFunc::z());
  EXPECT_EQ(compose(m.mobius_inverse(), m), RatFunc::z());
  EXPECT_THROW(P("z^2").mobius_inverse(), PreconditionError);
}

TEST(RatFunc, Composition)
{
  EXPECT_EQ(compose(P("z^2"), P("z+1")), P("z^2+2*z+1"));
  EXPECT_EQ(compose(P("1/z"), P("1/z")), P("z"));
  EXPECT_EQ(compose_all({P("z+1"), P("z^2"), P("2*z")}), P("4*z^2+1"));
  EXPECT_EQ(P("z^2 o z+1"), P("(z+1)^2"));
  EXPECT_EQ(parse_chain("z^2 o z+1 o 3*z").size(), 3u);
}

TEST(RatFuncProperty, CompositionAgreesWithEvaluation)
{
  std::mt19937 rng(20261016);
  for (int trial = 0; trial < 200; ++trial) {
    auto f = random_ratfunc(rng), g = random_ratfunc(rng);
    if (g.is_constant())
      continue;
    auto fg = compose(f, g);
    for (int t = -4; t <= 4; ++t) {
      auto gt = eval(g, t);
      if (!gt)
        continue;
      auto lhs = eval(f, *gt), rhs = eval(fg, t);
      if (lhs && rhs)
        EXPECT_EQ(*lhs, *rhs) << to_string(f) << " o " << to_string(g);
    }
  }
}

TEST(RatFuncProperty, DegreeMultipliesAndAssociates)
{
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    auto f = random_ratfunc(rng), g = random_ratfunc(rng),
         h = random_ratfunc(rng);
    if (f.is_constant() || g.is_constant() || h.is_constant())
      continue;
    EXPECT_EQ(compose(f, g).degree(), f.degree() * g.degree());
    EXPECT_EQ(compose(compose(f, g), h), compose(f, compose(g, h)));
  }
}

TEST(RatFuncProperty, PrintParseRoundTrip)
{
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    auto f = random_ratfunc(rng);
    EXPECT_EQ(parse_expr(to_string(f)), f) << to_string(f);
  }
  EXPECT_EQ(to_string(P("-z^3/64 + z")), "-1/64*z^3 + z");
}

TEST(RatFunc, ParseErrors)
{
  try {
    parse_expr("z +");
    FAIL();
  } catch (ParseError const &e) {
    EXPECT_EQ(e.position(), 3u);
    EXPECT_FALSE(e.expected().empty());
  }
  EXPECT_THROW(parse_expr("0^0"), ParseError);
  EXPECT_THROW(parse_expr("1/(z-z)"), ParseError);
  EXPECT_THROW(parse_expr("(z"), ParseError);
  EXPECT_THROW(parse_expr("y"), ParseError);
  EXPECT_EQ(parse_expr("x^2"), parse_expr("z^2"));
}

TEST(RatFunc, KleinFunctions)
{
  EXPECT_EQ(klein(KleinKind::cyclic, 5), P("z^5"));
  EXPECT_EQ(klein(KleinKind::a4).degree(), 12u);
  EXPECT_EQ(klein(KleinKind::s4).degree(), 24u);
  EXPECT_EQ(klein(KleinKind::a4), P("-(1/64)*z^3*(z^3-8)^3/(z^3+1)^3"));
}

TEST(RatFunc, PoleCount)
{
  EXPECT_EQ(pole_count(P("z^3")), 1u);           // infinity
  EXPECT_EQ(pole_count(P("1/z^2")), 1u);
  EXPECT_EQ(pole_count(P("z+1/z")), 2u);
  EXPECT_EQ(pole_count(P("1/(z^2+1)^4")), 2u);
  EXPECT_EQ(pole_count(P("-(1/27)*(z^4+2*z^2-3)^3/(z^2+1)^4")), 3u);
}

TEST(RatFunc, VerifyCompositionReportsMismatch)
{
  auto r = verify_composition({P("z^2"), P("z^2")}, P("z^5"));
  EXPECT_FALSE(r.equal);
  ASSERT_TRUE(r.mismatch);
  EXPECT_FALSE(r.mismatch->in_denominator);
  EXPECT_EQ(describe(*r.mismatch),
            "numerator coefficient of z^4: expected 0, got 1");

  auto ok = verify_composition({P("z"), P("z^2")}, P("z^2"));
  EXPECT_TRUE(ok.equal);
  EXPECT_EQ(ok.degenerate, (std::vector<std::size_t>{0}));
}

TEST(RatFunc, ThreePoleCounterexample)
{
  auto r = verify_three_pole_counterexample();
  EXPECT_TRUE(r.verified());
  EXPECT_EQ(r.poles, 3u);
  EXPECT_EQ(r.long_chain.size(), 3u);
  EXPECT_EQ(r.short_chain.size(), 2u);
  EXPECT_EQ(r.long_degree, 12u);
  EXPECT_EQ(r.short_degree, 12u);
  EXPECT_EQ(r.target.degree(), 12u);
}

TEST(RatFunc, EquivalenceCertificate)
{
  // (z+1)^2 o (z^3-1) == z^2 o z^3 with mu = z+1
  EXPECT_TRUE(equivalence_certificate({P("(z+1)^2"), P("z^3-1")},
                                      {P("z^2"), P("z^3")}, {P("z+1")}));
  EXPECT_FALSE(equivalence_certificate({P("(z+1)^2"), P("z^3-1")},
                                       {P("z^2"), P("z^3")}, {P("2*z")}));
  EXPECT_THROW(equivalence_certificate({P("z^2")}, {P("z^2"), P("z")}, {}),
               PreconditionError);
  EXPECT_THROW(equivalence_certificate({P("z^2"), P("z^3")},
                                       {P("z^2"), P("z^3")}, {P("z^2")}),
               PreconditionError);
  EXPECT_FALSE(equivalence_certificate({P("z^2"), P("z^3")},
                                       {P("z^2"), P("z^2")}, {P("z")}));
}

TEST(RatFunc, AppendixScenario)
{
  std::ifstream in(data_path("appendix.scn"));
  ASSERT_TRUE(in);
  std::stringstream buf;
  buf << in.rdbuf();
  auto lines = run_scenario(buf.str());
  EXPECT_EQ(lines.size(), 15u);
  for (auto const &l : lines)
    EXPECT_TRUE(l.passed) << l.line << ": " << l.text << " " << l.detail;
}

TEST(RatFunc, ScenarioErrors)
{
  auto r = run_scenario("# c\n\nVERIFY z^2 o z^2 == z^5\n");
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].line, 3u);
  EXPECT_FALSE(r[0].passed);

  try {
    run_scenario("VERIFY z == z\nVERIFY z +\n");
    FAIL();
  } catch (ParseError const &e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(run_scenario("CHECK z == z\n"), ParseError);
}
