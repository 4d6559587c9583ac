#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "abeldense/rational.hpp"

namespace abeldense {

struct LllResult {
  // Rows are the reduced basis.
  IntegerMatrix basis;
  // Unimodular U with U * input = basis.
  IntegerMatrix transform;
};

// Exact rational LLL on the rows of b. Throws InputError for dependent rows
// or delta outside (1/4, 1).
LllResult lll_reduce(const IntegerMatrix& b, const Rational& delta = Rational(99, 100));

struct RationalLllResult {
  RationalMatrix basis;
  IntegerMatrix transform;
};
RationalLllResult lll_reduce(const RationalMatrix& b, const Rational& delta = Rational(99, 100));

// Lovasz and size conditions at delta, checked exactly.
bool is_lll_reduced(const RationalMatrix& b, const Rational& delta = Rational(99, 100));

struct RelationSearchResult {
  bool found = false;
  IntegerVector relation;
  double residual = 0.0;
  double height_bound = 0.0;
};

// Integer relation among xs from the lattice (e_i, round(x_i / tol)).
// found == false is not a proof of independence.
RelationSearchResult find_integer_relation(const std::vector<double>& xs, double height_bound, double tol);

struct KroneckerOptions {
  std::uint64_t brute_force_limit = 1000000;
  // Largest multiplier tried by the lattice stage.
  double lattice_limit = 1e15;
};

struct KroneckerResult {
  Integer m;
  std::vector<double> distances;
  double error = 0.0;
  // "brute_force" (m is minimal) or "lattice" (m is valid, not necessarily minimal).
  std::string strategy;
};

// m >= 1 with max_i dist(m r_i - y_i, Z) < eps, verified exactly against the
// given rationals. Throws NotFound when 1, r_1, ..., r_n have a relation of
// height <= 1000 (float check) or the budget is exhausted, and
// InputError for eps outside (0, 1/2).
KroneckerResult kronecker_approximate(const RationalVector& r, const RationalVector& y, const Rational& eps,
                                      const KroneckerOptions& opts = {});
KroneckerResult kronecker_approximate(const std::vector<double>& r, const std::vector<double>& y, double eps,
                                      const KroneckerOptions& opts = {});

// Distance from x to the nearest integer.
Rational distance_to_integer(const Rational& x);

}  // namespace abeldense
