#include <gtest/gtest.h>

#include <algorithm>

#include "abeldense/construct.hpp"
#include "abeldense/density.hpp"
#include "abeldense/error.hpp"
#include "oracles.hpp"

using namespace abeldense;

namespace {

SymVector vec(const BasisPtr& b, std::initializer_list<const char*> xs) {
  SymVector v;
  for (const char* x : xs) v.push_back(parse_symreal(x, b));
  return v;
}

}  // namespace

TEST(LineSemigroup, Examples) {
  const BasisPtr b = sqrt_primes(1);
  auto r = [&](const char* s) { return parse_symreal(s, b); };
  LineClass c = classify_line_semigroup({r("1"), r("-1")});
  EXPECT_EQ(c.kind, LineKind::discrete_cyclic);
  EXPECT_EQ(*c.generator, r("1"));
  EXPECT_EQ(classify_line_semigroup({r("1"), r("-sqrt2")}).kind, LineKind::dense_in_r);
  c = classify_line_semigroup({r("2/3"), r("1/2"), r("5")});
  EXPECT_EQ(c.kind, LineKind::one_sided_discrete);
  EXPECT_EQ(c.sign, Sign::positive);
  c = classify_line_semigroup({r("3/2"), r("-5/2")});
  EXPECT_EQ(c.kind, LineKind::discrete_cyclic);
  EXPECT_EQ(*c.generator, r("1/2"));
  // The oracle agrees: least positive element 1 in units of 1/2.
  EXPECT_EQ(oracle::integer_line({3, -5}, 200).min_positive, 1);
}

TEST(LineSemigroup, IrrationalMultiplesOfOneSymbol) {
  const BasisPtr b = sqrt_primes(1);
  const LineClass c = classify_line_semigroup({parse_symreal("sqrt2", b), parse_symreal("-3*sqrt2", b)});
  EXPECT_EQ(c.kind, LineKind::discrete_cyclic);
  EXPECT_EQ(*c.generator, parse_symreal("sqrt2", b));
}

TEST(Cone, Examples) {
  const BasisPtr b = sqrt_primes(1);
  ConeResult r = cone_is_dense({vec(b, {"1", "0"}), vec(b, {"0", "1"}), vec(b, {"-1", "-1"})}, 2);
  ASSERT_TRUE(r.dense);
  EXPECT_EQ(r.lambda.size(), 3u);
  r = cone_is_dense({vec(b, {"1", "0"}), vec(b, {"0", "1"}), vec(b, {"1", "1"})}, 2);
  EXPECT_FALSE(r.dense);
  EXPECT_EQ(r.form.size(), 2u);
  r = cone_is_dense({vec(b, {"1", "0"}), vec(b, {"-1", "0"})}, 2);
  EXPECT_FALSE(r.dense);
  EXPECT_EQ(r.form[0], Integer(0));
}

TEST(DenseRn, Examples) {
  const BasisPtr b = sqrt_primes(2);
  GeneratorSet a{vec(b, {"1", "0"}), vec(b, {"0", "1"}), vec(b, {"-sqrt2", "-sqrt3"})};
  DensityVerdict v = check_dense_rn(a, 2);
  EXPECT_EQ(v.verdict, Verdict::dense);
  EXPECT_TRUE(verify_certificate(a, 2, v));

  a = {vec(b, {"1", "0"}), vec(b, {"0", "1"}), vec(b, {"-1/2", "-1/2"})};
  v = check_dense_rn(a, 2);
  EXPECT_EQ(v.verdict, Verdict::not_dense);
  EXPECT_EQ(v.failed_clause, "b");
  EXPECT_EQ(v.certificate.kind, CertificateKind::integer_form);
  EXPECT_EQ(v.certificate.form, (IntegerVector{1, 1}));
  EXPECT_TRUE(verify_certificate(a, 2, v));
  // The oracle's shortest integral forms are (+-1, +-1); (1, 1) is among them.
  const auto forms = oracle::integral_forms_2d({{2, 0}, {0, 2}, {-1, -1}}, 2, 4);
  ASSERT_EQ(forms.size(), 4u);
  EXPECT_NE(std::find(forms.begin(), forms.end(), std::vector<std::int64_t>{1, 1}), forms.end());
  // A doubled form is also accepted by the verifier.
  DensityVerdict doubled = v;
  doubled.certificate.form = {2, 2};
  EXPECT_TRUE(verify_certificate(a, 2, doubled));

  a = {vec(b, {"1"})};
  v = check_dense_rn(a, 1);
  EXPECT_EQ(v.verdict, Verdict::not_dense);
  EXPECT_EQ(v.failed_clause, "a");
  EXPECT_TRUE(verify_certificate(a, 1, v));
}

TEST(DenseRn, EmptySetCarriesNonzeroForm) {
  const DensityVerdict v = check_dense_rn({}, 2);
  EXPECT_EQ(v.verdict, Verdict::not_dense);
  EXPECT_TRUE(verify_certificate({}, 2, v));
}

TEST(DenseRn, MismatchedDimension) {
  const BasisPtr b = sqrt_primes(1);
  EXPECT_THROW(check_dense_rn({vec(b, {"1", "0"})}, 3), InputError);
}

TEST(DenseRn, WithoutRationalBasis) {
  const BasisPtr b = sqrt_primes(2);
  const GeneratorSet a{vec(b, {"sqrt2"}), vec(b, {"-sqrt3"})};
  const DensityVerdict v = check_dense_rn(a, 1);
  EXPECT_NE(v.verdict, Verdict::not_dense);
  EXPECT_TRUE(verify_certificate(a, 1, v));
  const GeneratorSet c{vec(b, {"sqrt2"}), vec(b, {"-2*sqrt2"})};
  // sqrt2 Z is closed, but no integer form takes integer values on it.
  const DensityVerdict w = check_dense_rn(c, 1);
  EXPECT_EQ(w.verdict, Verdict::inconclusive);
  EXPECT_FALSE(w.search_bound.empty());
  EXPECT_EQ(classify_line_semigroup({c[0][0], c[1][0]}).kind,
            LineKind::discrete_cyclic);
}

TEST(Structured, Examples) {
  const BasisPtr b = sqrt_primes(2);
  const GeneratorSet e{vec(b, {"1", "0"}), vec(b, {"0", "1"})};
  DensityVerdict v = check_dense_rn_structured(e, vec(b, {"-sqrt2", "-sqrt3"}));
  EXPECT_EQ(v.verdict, Verdict::dense);
  v = check_dense_rn_structured(e, vec(b, {"-1/2", "-sqrt2"}));
  EXPECT_EQ(v.verdict, Verdict::not_dense);
  EXPECT_EQ(v.failed_clause, "b");
  v = check_dense_rn_structured({vec(b, {"1", "0"}), vec(b, {"2", "0"})}, vec(b, {"-sqrt2", "-sqrt3"}));
  EXPECT_EQ(v.verdict, Verdict::not_dense);
  EXPECT_EQ(v.failed_clause, "a");
}

TEST(Structured, AgreesWithGeneralCheck) {
  const BasisPtr b = sqrt_primes(3);
  const GeneratorSet e{vec(b, {"1", "1"}), vec(b, {"0", "2"})};
  for (const char* last : {"-sqrt2", "sqrt2", "-1/3", "-sqrt2 - sqrt3"}) {
    const SymVector v_last = vec(b, {last, "-sqrt5"});
    GeneratorSet all = e;
    all.push_back(v_last);
    EXPECT_EQ(check_dense_rn_structured(e, v_last).verdict, check_dense_rn(all, 2).verdict) << last;
  }
}

TEST(GroupExp, Examples) {
  const BasisPtr b = sqrt_primes(2);
  AbelianGroupSpec s = connected_spec(2, 1, {{1, 0}});
  GeneratorSet w{vec(b, {"0", "1"}), vec(b, {"-sqrt2", "-sqrt3"})};
  DensityVerdict v = check_dense_group_exp(s, w);
  EXPECT_EQ(v.verdict, Verdict::dense);
  EXPECT_TRUE(verify_group_certificate(s, w, v));

  // alpha_1 is a torus coordinate, so its sign is free.
  w = {vec(b, {"0", "1"}), vec(b, {"sqrt2", "-sqrt3"})};
  EXPECT_EQ(check_dense_group_exp(s, w).verdict, Verdict::dense);

  s = connected_spec(1, 0);
  w = {vec(b, {"1"}), vec(b, {"-sqrt2"})};
  EXPECT_EQ(check_dense_group_exp(s, w).verdict, Verdict::dense);

  s = connected_spec(2, 2);
  w = {vec(b, {"sqrt2", "sqrt3"})};
  v = check_dense_group_exp(s, w);
  EXPECT_EQ(v.verdict, Verdict::dense);
  EXPECT_TRUE(verify_group_certificate(s, w, v));

  w = {vec(b, {"1/2", "sqrt3"})};
  v = check_dense_group_exp(s, w);
  EXPECT_EQ(v.verdict, Verdict::not_dense);
  EXPECT_TRUE(verify_group_certificate(s, w, v));
}

TEST(GroupExp, RejectsBadSpecs) {
  EXPECT_THROW(connected_spec(2, 2, {{1, 0}, {2, 0}}).validate(), InputError);
  EXPECT_THROW(connected_spec(1, 2).validate(), InputError);
  AbelianGroupSpec s = connected_spec(1, 0);
  s.component_count = 2;
  EXPECT_THROW(s.validate(), InputError);
}

TEST(MinGenerators, Examples) {
  EXPECT_EQ(min_generators(connected_spec(3, 1)), 3u);
  EXPECT_EQ(min_generators(connected_spec(0, 0)), 0u);
  AbelianGroupSpec s = connected_spec(1, 0);
  s.component_count = 2;
  s.component_gens = 1;
  EXPECT_EQ(min_generators(s), 2u);
  for (std::size_t n = 1; n <= 8; ++n)
    for (std::size_t t = 0; t < n; ++t) EXPECT_EQ(min_generators(connected_spec(n, t)), n - t + 1);
}

TEST(DenseRn, AddingGeneratorKeepsDensity) {
  const BasisPtr b = sqrt_primes(3);
  GeneratorSet a{vec(b, {"1", "0"}), vec(b, {"0", "1"}), vec(b, {"-sqrt2", "-sqrt3"})};
  ASSERT_EQ(check_dense_rn(a, 2).verdict, Verdict::dense);
  for (const char* x : {"1/2", "-sqrt5", "0"}) {
    GeneratorSet more = a;
    more.push_back(vec(b, {x, "1"}));
    EXPECT_EQ(check_dense_rn(more, 2).verdict, Verdict::dense) << x;
  }
}

TEST(DenseRn, IrrationalHalfSpaceAndHyperplane) {
  const BasisPtr b = sqrt_primes(3);
  // x_1 = -4 x_2 on every generator: (1, 4) vanishes on A.
  GeneratorSet a{vec(b, {"-4*sqrt3 + 4", "sqrt3 - 1"}), vec(b, {"8*sqrt5", "-2*sqrt5"})};
  DensityVerdict v = check_dense_rn(a, 2);
  EXPECT_EQ(v.verdict, Verdict::not_dense);
  EXPECT_EQ(v.certificate.kind, CertificateKind::nonnegative_form);
  EXPECT_TRUE(verify_certificate(a, 2, v));
  // Strictly inside x_1 + x_2 > 0, no rational member.
  a = {vec(b, {"sqrt2", "1 - sqrt2"}), vec(b, {"-sqrt3", "2*sqrt3"}), vec(b, {"sqrt5", "-sqrt5 + 1/2"})};
  v = check_dense_rn(a, 2);
  EXPECT_EQ(v.verdict, Verdict::not_dense);
  EXPECT_TRUE(verify_certificate(a, 2, v));
}
