#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "abeldense/matrix.hpp"

namespace abeldense {

using Rational = mpq_class;
using Integer = mpz_class;
using RationalMatrix = Matrix<Rational>;
using IntegerMatrix = Matrix<Integer>;
using RationalVector = std::vector<Rational>;
using IntegerVector = std::vector<Integer>;

// "3", "-2", "3/4", "0.125", "-1e-3"; decimals are read exactly.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// num/den in lowest terms; InputError when den is zero.
Rational make_rational(const Integer& num, const Integer& den);

// Exact rational value of a finite double.
Rational exact_rational(double x);
// Nearest rational with denominator 2^bits.
Rational dyadic_approximation(double x, unsigned bits);

Integer floor_div(const Integer& a, const Integer& b);
Integer round_nearest(const Rational& q);
Integer lcm_of_denominators(const RationalVector& v);

// Scales v by a positive rational so the result is a primitive integer vector
// (gcd 1) whose first nonzero entry is positive. Zero maps to zero.
IntegerVector primitive_integer_vector(const RationalVector& v);
// Scales v by the lcm of its denominators; keeps direction and sign.
IntegerVector clear_denominators(const RationalVector& v);

RationalVector to_rational(const IntegerVector& v);

// Rank over Q by fraction-free (Bareiss) elimination on the integerized rows.
std::size_t rational_rank(const RationalMatrix& m);
// Bareiss determinant.
Rational determinant(const RationalMatrix& m);
Integer determinant(const IntegerMatrix& m);

// Basis of {x : m x = 0}, read off the reduced row echelon form.
std::vector<RationalVector> nullspace(const RationalMatrix& m);
// Unique solution of a square nonsingular system; nullopt when singular.
std::optional<RationalVector> solve(const RationalMatrix& a, const RationalVector& b);
std::optional<RationalMatrix> inverse(const RationalMatrix& a);

RationalVector multiply(const RationalMatrix& a, const RationalVector& x);
Rational dot(const RationalVector& a, const RationalVector& b);

// Row-style Hermite normal form: unimodular U with U * m = H, H in echelon
// form with positive pivots and entries above each pivot reduced into
// [0, pivot).
struct HermiteForm {
  IntegerMatrix h;
  IntegerMatrix u;
  std::size_t rank = 0;
};
HermiteForm hermite_normal_form(const IntegerMatrix& m);

// Z-basis of the lattice {z in Z^cols : m z = 0}.
std::vector<IntegerVector> integer_kernel(const IntegerMatrix& m);

}  // namespace abeldense
