#include <gtest/gtest.h>

#include "abeldense/error.hpp"
#include "abeldense/rational.hpp"

using namespace abeldense;

TEST(Rational, ParsesLiterals) {
  EXPECT_EQ(parse_rational("3/4"), Rational(3, 4));
  EXPECT_EQ(parse_rational("-2"), Rational(-2));
  EXPECT_EQ(parse_rational("0.125"), Rational(1, 8));
  EXPECT_EQ(parse_rational("-1e-3"), Rational(-1, 1000));
  EXPECT_EQ(parse_rational("6/8"), Rational(3, 4));
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("abc"), ParseError);
  EXPECT_THROW(parse_rational(""), ParseError);
}

TEST(Rational, PrintsLowestTerms) {
  EXPECT_EQ(to_string(parse_rational("10/4")), "5/2");
  EXPECT_EQ(to_string(make_rational(4, 2)), "2");
  EXPECT_THROW(make_rational(1, 0), InputError);
}

TEST(Rational, FloorAndRound) {
  EXPECT_EQ(floor_div(-7, 2), Integer(-4));
  EXPECT_EQ(floor_div(7, 2), Integer(3));
  EXPECT_EQ(round_nearest(Rational(5, 2)), Integer(3));
  EXPECT_EQ(round_nearest(Rational(-5, 2)), Integer(-2));
  EXPECT_EQ(exact_rational(0.5), Rational(1, 2));
}

TEST(Rational, PrimitiveAndCleared) {
  const RationalVector v{Rational(-2, 3), Rational(4, 3)};
  EXPECT_EQ(primitive_integer_vector(v), (IntegerVector{1, -2}));
  EXPECT_EQ(clear_denominators(v), (IntegerVector{-2, 4}));
  EXPECT_EQ(lcm_of_denominators({Rational(1, 4), Rational(1, 6)}), Integer(12));
}

TEST(Rational, RankDeterminantInverse) {
  const RationalMatrix m = RationalMatrix::from_rows({{1, 2}, {3, 4}});
  EXPECT_EQ(rational_rank(m), 2u);
  EXPECT_EQ(determinant(m), Rational(-2));
  const auto inv = inverse(m);
  ASSERT_TRUE(inv);
  EXPECT_EQ(*inv * m, RationalMatrix::identity(2));
  const RationalMatrix s = RationalMatrix::from_rows({{1, 2}, {2, 4}});
  EXPECT_EQ(rational_rank(s), 1u);
  EXPECT_FALSE(inverse(s));
  const auto ns = nullspace(s);
  ASSERT_EQ(ns.size(), 1u);
  EXPECT_EQ(multiply(s, ns[0]), (RationalVector{0, 0}));
}

TEST(Rational, IntegerDeterminantBareiss) {
  const IntegerMatrix m = IntegerMatrix::from_rows({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}});
  EXPECT_EQ(determinant(m), Integer(4));
}

TEST(Rational, HermiteFormIsUnimodularTransform) {
  const IntegerMatrix m = IntegerMatrix::from_rows({{4, 6}, {6, 9}, {2, 3}});
  const HermiteForm h = hermite_normal_form(m);
  EXPECT_EQ(h.rank, 1u);
  EXPECT_EQ(h.u * m, h.h);
  EXPECT_EQ(abs(determinant(h.u)), Integer(1));
}

TEST(Rational, IntegerKernel) {
  const IntegerMatrix m = IntegerMatrix::from_rows({{1, 1, 1}});
  const auto k = integer_kernel(m);
  ASSERT_EQ(k.size(), 2u);
  for (const auto& v : k) EXPECT_EQ(v[0] + v[1] + v[2], Integer(0));
}
