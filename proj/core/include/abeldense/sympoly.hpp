#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "abeldense/symreal.hpp"

namespace abeldense {

// Sorted symbol indices with multiplicity; empty is the constant monomial.
// Index 0 ("1") never occurs.
using Monomial = std::vector<std::uint32_t>;

// Formal polynomial over Q in the symbols of a basis. Formal zero implies
// true zero, so exact identities (commutators, products) can be checked.
// The converse fails (sqrt2*sqrt2 - 2), which sign checks handle through
// the dead zone.
class SymPoly {
 public:
  SymPoly() = default;
  SymPoly(int c) : SymPoly(Rational(c)) {}  // NOLINT: implicit for Matrix<SymPoly>
  SymPoly(const Rational& c);              // NOLINT
  SymPoly(const SymReal& x);               // NOLINT
  static SymPoly symbol(BasisPtr basis, std::size_t index);

  const BasisPtr& basis() const noexcept { return basis_; }
  const std::map<Monomial, Rational>& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t degree() const;
  std::optional<Rational> constant_value() const;
  // Degree <= 1 polynomials as SymReal over the given basis.
  std::optional<SymReal> to_symreal(const BasisPtr& basis) const;
  long double evaluate() const;

  SymPoly operator-() const;
  SymPoly& operator+=(const SymPoly& o);
  SymPoly& operator-=(const SymPoly& o);
  SymPoly& operator*=(const SymPoly& o);

  friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
  friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
  friend SymPoly operator*(SymPoly a, const SymPoly& b) { return a *= b; }
  friend bool operator==(const SymPoly& a, const SymPoly& b);
  friend bool operator!=(const SymPoly& a, const SymPoly& b) { return !(a == b); }

 private:
  void adopt_basis(const BasisPtr& other);
  void add_term(const Monomial& m, const Rational& c);

  BasisPtr basis_;
  std::map<Monomial, Rational> terms_;
};

Sign sym_sign(const SymPoly& p, double dead_zone = default_dead_zone());
double sym_eval(const SymPoly& p);

struct ComplexPoly {
  SymPoly re;
  SymPoly im;
};

// Terms joined by + or -; each term a product of rational literals and
// symbols, symbols optionally raised to a nonnegative integer power:
// "3/4", "-1/3*sqrt5", "2*sqrt2*exp_c0_1^2". Unknown symbols are parse errors.
SymPoly parse_sympoly(std::string_view text, const BasisPtr& basis);
// Same grammar plus the reserved unit "i" marking imaginary terms.
ComplexPoly parse_complex(std::string_view text, const BasisPtr& basis);

std::string to_string(const SymPoly& p);
// "re + im*i"; pure real or pure imaginary entries omit the other part.
std::string to_string(const ComplexPoly& z);

}  // namespace abeldense
