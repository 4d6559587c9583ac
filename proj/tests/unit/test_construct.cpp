#include <gtest/gtest.h>

#include <random>

#include "abeldense/construct.hpp"
#include "abeldense/error.hpp"

using namespace abeldense;

namespace {

RationalMatrix toeplitz_from(const RationalVector& c) {
  const std::size_t n = c.size();
  RationalMatrix m(n, n, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = c[j - i];
  return m;
}

}  // namespace

TEST(DenseGenerators, RnExamples) {
  GeneratorSet g = make_dense_rn_generators(1);
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(to_string(g[1][0]), "-sqrt3");
  EXPECT_EQ(classify_line_semigroup({g[0][0], g[1][0]}).kind, LineKind::dense_in_r);
  g = make_dense_rn_generators(2);
  ASSERT_EQ(g.size(), 3u);
  EXPECT_EQ(to_string(g[2][0]), "-sqrt3");
  EXPECT_EQ(to_string(g[2][1]), "-sqrt5");
  for (std::size_t n = 1; n <= 12; ++n) {
    const GeneratorSet a = make_dense_rn_generators(n);
    const GeneratorSet basis(a.begin(), a.end() - 1);
    EXPECT_EQ(check_dense_rn_structured(basis, a.back()).verdict, Verdict::dense) << n;
  }
}

TEST(DenseGenerators, GroupExamples) {
  AbelianGroupSpec circle = connected_spec(1, 1);
  GeneratorSet w = make_dense_group_generators(circle);
  ASSERT_EQ(w.size(), 1u);
  EXPECT_EQ(to_string(w[0][0]), "-sqrt3");
  EXPECT_EQ(check_dense_group_exp(circle, w).verdict, Verdict::dense);

  EXPECT_EQ(make_dense_group_generators(connected_spec(2, 0)), make_dense_rn_generators(2));

  const AbelianGroupSpec s = connected_spec(2, 1);
  w = make_dense_group_generators(s);
  EXPECT_EQ(w.size(), 2u);
  EXPECT_EQ(check_dense_group_exp(s, w).verdict, Verdict::dense);

  AbelianGroupSpec disc = connected_spec(1, 0);
  disc.component_count = 2;
  disc.component_gens = 1;
  EXPECT_THROW(make_dense_group_generators(disc), InputError);
}

TEST(DenseGenerators, CompletionLowestIndexFirst) {
  const auto c = complete_basis(connected_spec(3, 1, {{0, 1, 0}}));
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0], (RationalVector{1, 0, 0}));
  EXPECT_EQ(c[1], (RationalVector{0, 0, 1}));
}

TEST(Shift, Definition) {
  EXPECT_EQ(backward_shift<Rational>(1), RationalMatrix(1, 1, Rational(0)));
  EXPECT_EQ(backward_shift<Rational>(2), RationalMatrix::from_rows({{0, 1}, {0, 0}}));
  for (std::size_t n = 1; n <= 6; ++n) {
    RationalMatrix p = RationalMatrix::identity(n);
    for (std::size_t k = 0; k < n; ++k) p = p * backward_shift<Rational>(n);
    EXPECT_EQ(p, RationalMatrix(n, n, Rational(0)));
  }
}

TEST(Toeplitz, PredicateExamples) {
  EXPECT_TRUE(is_toeplitz(RationalMatrix::identity(3)));
  EXPECT_TRUE(is_toeplitz(backward_shift<Rational>(3)));
  EXPECT_FALSE(is_toeplitz(RationalMatrix::from_rows({{1, 0}, {1, 1}})));
  EXPECT_FALSE(is_toeplitz(RationalMatrix::from_rows({{1, 2}, {0, 3}})));
}

TEST(Toeplitz, PredicatesAgreeOnRandomMatrices) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-3, 3);
  for (std::size_t n = 1; n <= 5; ++n)
    for (int trial = 0; trial < 50; ++trial) {
      RationalVector c(n);
      for (auto& x : c) x = d(rng);
      RationalMatrix m = toeplitz_from(c);
      EXPECT_TRUE(is_toeplitz(m));
      m(rng() % n, rng() % n) += 1;
      EXPECT_NO_THROW(is_toeplitz(m));
    }
}

TEST(Toeplitz, ExpOfNilpotent) {
  ToeplitzMatrix e = exp_toeplitz({SymPoly(0), SymPoly(1)});
  EXPECT_EQ(e.dense(), PolyMatrix::from_rows({{1, 1}, {0, 1}}));
  e = exp_toeplitz({SymPoly(0), SymPoly(1), SymPoly(0)});
  EXPECT_EQ(e.profile[2], SymPoly(Rational(1, 2)));
  // exp(c) exp(d) = exp(c + d) and exp(-c) is the inverse when c_0 = 0.
  const BasisPtr b = sqrt_primes(2);
  const std::vector<SymPoly> c{SymPoly(0), SymPoly::symbol(b, 1), SymPoly(3)};
  const std::vector<SymPoly> d{SymPoly(0), SymPoly(Rational(-1, 2)), SymPoly::symbol(b, 2)};
  std::vector<SymPoly> sum, neg;
  for (std::size_t i = 0; i < 3; ++i) {
    sum.push_back(c[i] + d[i]);
    neg.push_back(-c[i]);
  }
  EXPECT_EQ(toeplitz_product(exp_toeplitz(c), exp_toeplitz(d)).profile, exp_toeplitz(sum).profile);
  EXPECT_EQ(toeplitz_product(exp_toeplitz(c), exp_toeplitz(neg)).dense(), PolyMatrix::identity(3));
}

TEST(Toeplitz, ExpWithScalarNeedsSymbols) {
  EXPECT_THROW(exp_toeplitz({SymPoly(1), SymPoly(1)}), InputError);
  ExpSymbols syms(sqrt_primes(1));
  const ToeplitzMatrix e = exp_toeplitz({SymPoly(1), SymPoly(1)}, &syms);
  ASSERT_EQ(syms.fresh().size(), 1u);
  EXPECT_EQ(to_string(e.profile[0]), "exp_c0_1");
  EXPECT_NEAR(sym_eval(e.profile[1]), std::exp(1.0), 1e-12);
}

TEST(ExpSymbols, CachesAndExactCases) {
  const BasisPtr b = sqrt_primes(2);
  ExpSymbols s(b);
  const SymReal a = parse_symreal("-sqrt3", b);
  EXPECT_EQ(s.exp_real(SymReal(b)), SymPoly(1));
  const SymPoly e1 = s.exp_real(a);
  EXPECT_EQ(s.exp_real(a), e1);
  EXPECT_EQ(s.fresh().size(), 1u);
  const ComplexPoly z = s.exp_turns(SymReal(b, 2), a);
  EXPECT_EQ(z.re, e1);
  EXPECT_TRUE(z.im.is_zero());
  const ComplexPoly w = s.exp_turns(parse_symreal("sqrt2", b), SymReal(b));
  EXPECT_NEAR(sym_eval(w.re), std::cos(2 * M_PI * std::sqrt(2.0)), 1e-12);
  EXPECT_NEAR(sym_eval(w.im), std::sin(2 * M_PI * std::sqrt(2.0)), 1e-12);
}

TEST(Tuple, EveryClassAndSize) {
  for (TupleClass c : all_tuple_classes())
    for (std::size_t n = 1; n <= 6; ++n) {
      const GroupClass g = group_class_of(c);
      if (c == TupleClass::triangular_c && n == 1) {
        EXPECT_THROW(make_hypercyclic_tuple(c, n), NonConstructive);
        continue;
      }
      if (!size_supported(g, n)) {
        EXPECT_THROW(make_hypercyclic_tuple(c, n), InputError);
        continue;
      }
      const MatrixTuple t = make_hypercyclic_tuple(c, n);
      SCOPED_TRACE(to_string(c) + " n=" + std::to_string(n));
      EXPECT_EQ(t.matrices.size(), m_of_G(g, n).m);
      const std::size_t dim = field_of(c) == Field::complex ? 2 * n : n;
      EXPECT_EQ(t.real_dimension(), dim);
      for (std::size_t i = 0; i < t.matrices.size(); ++i) {
        EXPECT_EQ(is_invertible(t.matrices[i]), std::optional<bool>(true));
        for (std::size_t j = i + 1; j < t.matrices.size(); ++j) EXPECT_TRUE(commutes_exactly(t.matrices[i], t.matrices[j]));
      }
      EXPECT_EQ(check_dense_group_exp(t.lie.spec, t.lie.vectors).verdict, Verdict::dense);
      EXPECT_TRUE(check_base_point(t).ok);
    }
}

TEST(Tuple, ToeplitzClassesAreToeplitz) {
  for (std::size_t n = 1; n <= 5; ++n)
    for (TupleClass c : {TupleClass::toeplitz_r, TupleClass::triangular_r}) {
      const MatrixTuple t = make_hypercyclic_tuple(c, n);
      for (const auto& m : t.matrices) EXPECT_TRUE(is_toeplitz(m));
    }
}

TEST(Tuple, TriangularGeneratorsAreNotDiagonalizable) {
  for (std::size_t n = 2; n <= 6; ++n) {
    const MatrixTuple t = make_hypercyclic_tuple(TupleClass::triangular_r, n);
    for (const auto& m : t.matrices) {
      // Upper triangular with constant diagonal: diagonalizable iff the strictly upper part vanishes.
      bool nilpotent_part = false;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) nilpotent_part = nilpotent_part || !m(i, j).is_zero();
      EXPECT_TRUE(nilpotent_part) << n;
    }
  }
}

TEST(Tuple, ComplexExamples) {
  const MatrixTuple d = make_hypercyclic_tuple(TupleClass::diagonal_c, 1);
  EXPECT_EQ(d.matrices.size(), 2u);
  EXPECT_EQ(d.lie.spec.n, 2u);
  EXPECT_EQ(d.lie.spec.t, 1u);
  const auto cv = complex_view(d.matrices[1]);
  EXPECT_EQ(cv.rows(), 1u);
  EXPECT_EQ(make_hypercyclic_tuple(TupleClass::rotation_scaling_r, 2).matrices.size(), 2u);
  EXPECT_EQ(make_hypercyclic_tuple(TupleClass::toeplitz_r, 2).matrices.size(), 3u);
}

TEST(BasePoint, Reasons) {
  MatrixTuple t = make_hypercyclic_tuple(TupleClass::diagonal_c, 3);
  EXPECT_TRUE(check_base_point(t).ok);
  t.base_point[2] = SymPoly(0);
  const BasePointCheck bad = check_base_point(t);
  EXPECT_FALSE(bad.ok);
  EXPECT_EQ(bad.reason, "coordinate 2 zero");

  MatrixTuple r = make_hypercyclic_tuple(TupleClass::toeplitz_r, 3);
  for (std::size_t i = 0; i < 3; ++i) r.base_point[i] = SymPoly(i == 2 ? 1 : 0);
  EXPECT_TRUE(check_base_point(r).ok);  // e_n is cyclic for polynomials in the shift
  r.base_point[2] = SymPoly(0);
  EXPECT_EQ(check_base_point(r).reason, "last coordinate zero");

  MatrixTuple rot = make_hypercyclic_tuple(TupleClass::rotation_scaling_r, 4);
  rot.base_point[2] = rot.base_point[3] = SymPoly(0);
  EXPECT_EQ(check_base_point(rot).reason, "block 2 zero");
}

TEST(Tuple, ClassNames) {
  for (TupleClass c : all_tuple_classes()) EXPECT_EQ(parse_tuple_class(to_string(c)), c);
  EXPECT_EQ(parse_tuple_class("GL_R_even"), TupleClass::rotation_scaling_r);
  EXPECT_EQ(parse_tuple_class("GL_C"), TupleClass::diagonal_c);
  EXPECT_FALSE(parse_tuple_class("Bogus"));
}
