#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "abeldense/error.hpp"
#include "abeldense/orbit.hpp"
#include "oracles.hpp"

using namespace abeldense;

TEST(Orbit, GeometricOrbit) {
  const OrbitCloud c = enumerate_orbit({FloatMatrix(1, 1, 2.0)}, {1.0}, 3);
  ASSERT_EQ(c.points.size(), 4u);
  std::vector<double> xs;
  for (const auto& p : c.points) xs.push_back(p[0]);
  EXPECT_EQ(xs, (std::vector<double>{1, 2, 4, 8}));
}

TEST(Orbit, IdentityFixesPoint) {
  const auto id = FloatMatrix::identity(2, 0.0, 1.0);
  const OrbitCloud c = enumerate_orbit({id, id}, {0.3, -0.4}, 5);
  EXPECT_EQ(c.points.size(), oracle::multi_exponent_count(2, 5));
  for (const auto& p : c.points) EXPECT_EQ(p, (FloatVector{0.3, -0.4}));
}

TEST(Orbit, CountMatchesBinomial) {
  const MatrixTuple t = make_hypercyclic_tuple(TupleClass::rotation_scaling_r, 2);
  const OrbitCloud c = enumerate_orbit(t, 60);
  EXPECT_EQ(c.points.size(), 1891u);
  EXPECT_EQ(orbit_size(2, 60), oracle::multi_exponent_count(2, 60));
  EXPECT_EQ(orbit_size(3, 17), oracle::multi_exponent_count(3, 17));
}

TEST(Orbit, RejectsNonCommuting) {
  const FloatMatrix a = FloatMatrix::from_rows({{1, 1}, {0, 1}});
  const FloatMatrix b = FloatMatrix::from_rows({{1, 0}, {1, 1}});
  EXPECT_THROW(enumerate_orbit({a, b}, {1, 0}, 2), InputError);
}

TEST(Orbit, GeneratorOrderDoesNotMatter) {
  const MatrixTuple t = make_hypercyclic_tuple(TupleClass::diagonal_c, 2);
  std::vector<FloatMatrix> ms;
  for (const auto& m : t.matrices) ms.push_back(float_matrix(m));
  const FloatVector x = unit_base_point(t);
  auto sorted = [](OrbitCloud c) {
    std::sort(c.points.begin(), c.points.end());
    return c.points;
  };
  const auto a = sorted(enumerate_orbit(ms, x, 12));
  std::reverse(ms.begin(), ms.end());
  const auto b = sorted(enumerate_orbit(ms, x, 12));
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t d = 0; d < a[i].size(); ++d) EXPECT_NEAR(a[i][d], b[i][d], 1e-9 * std::max(1.0, std::abs(a[i][d])));
}

TEST(Orbit, FlagsExtremeNorms) {
  const OrbitCloud c = enumerate_orbit({FloatMatrix(1, 1, 1e7)}, {1.0}, 3);
  EXPECT_EQ(c.overflow_count, 2u);
  const OrbitCloud d = enumerate_orbit({FloatMatrix(1, 1, 1e-7)}, {1.0}, 3);
  EXPECT_EQ(d.underflow_count, 2u);
}

TEST(Coverage, SaturatedAndEmpty) {
  OrbitCloud all;
  all.dimension = 2;
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j) all.points.push_back({-0.9 + 0.2 * i, -0.9 + 0.2 * j});
  CoverageReport r = coverage(all, Box::cube(2), 10);
  EXPECT_DOUBLE_EQ(r.hit_fraction, 1.0);
  EXPECT_EQ(r.hint, OrbitHint::looks_dense);

  OrbitCloud none;
  none.dimension = 2;
  r = coverage(none, Box::cube(2), 10);
  EXPECT_DOUBLE_EQ(r.hit_fraction, 0.0);
  EXPECT_EQ(r.hint, OrbitHint::looks_nowhere_dense);
  EXPECT_THROW(coverage(none, Box::cube(2), 1), InputError);
}

TEST(Coverage, HalfSpaceAndSubBox) {
  OrbitCloud upper;
  upper.dimension = 2;
  for (int i = 0; i < 10; ++i)
    for (int j = 5; j < 10; ++j) upper.points.push_back({-0.9 + 0.2 * i, -0.9 + 0.2 * j});
  CoverageReport r = coverage(upper, Box::cube(2), 10);
  EXPECT_DOUBLE_EQ(r.hit_fraction_positive_halfspace, 1.0);
  EXPECT_DOUBLE_EQ(r.hit_fraction_negative_halfspace, 0.0);
  EXPECT_EQ(r.hint, OrbitHint::looks_half_space);

  OrbitCloud corner;
  corner.dimension = 2;
  for (int i = 0; i < 5; ++i)
    for (int j = 5; j < 10; ++j) corner.points.push_back({-0.9 + 0.2 * i, -0.9 + 0.2 * j});
  r = coverage(corner, Box::cube(2), 10);
  EXPECT_EQ(r.hint, OrbitHint::looks_somewhere_dense);
}

TEST(Coverage, MonotoneInBudget) {
  const MatrixTuple t = make_hypercyclic_tuple(TupleClass::diagonal_c, 1);
  double last = 0;
  for (std::size_t L : {50, 60, 100, 110, 200}) {
    const double h = coverage(enumerate_orbit(t, L), Box::cube(2), 10).hit_fraction;
    EXPECT_GE(h, last);
    last = h;
  }
}

TEST(Coverage, DiagonalComplexTupleLooksDense) {
  const MatrixTuple t = make_hypercyclic_tuple(TupleClass::diagonal_c, 1);
  const OrbitCloud c = enumerate_orbit(t, 1414);
  ASSERT_GE(c.points.size(), 1000000u);
  const CoverageReport r = coverage(c, Box::cube(2), 10);
  EXPECT_GE(r.hit_fraction, 0.98);
}

TEST(Orbit, DumpFormat) {
  const OrbitCloud c = enumerate_orbit({FloatMatrix(1, 1, 2.0)}, {1.0}, 2);
  std::ostringstream os;
  write_dump(os, c);
  EXPECT_EQ(os.str(), "# n=1 k=1 L=2\n1\n2\n4\n");
}

TEST(Coverage, BrokenTupleMatchesNotDenseCertificate) {
  const MatrixTuple t = make_hypercyclic_tuple(TupleClass::diagonal_c, 1);
  MatrixTuple broken = t;
  broken.matrices.pop_back();
  GeneratorSet w = t.lie.vectors;
  w.pop_back();
  const GeneratorSet all = group_verification_set(t.lie.spec, w);
  const DensityVerdict v = check_dense_rn(all, t.lie.spec.n);
  EXPECT_EQ(v.verdict, Verdict::not_dense);
  EXPECT_TRUE(verify_certificate(all, t.lie.spec.n, v));
  EXPECT_LE(coverage(enumerate_orbit(broken, 446), Box::cube(2), 10).hit_fraction, 0.5);
}
