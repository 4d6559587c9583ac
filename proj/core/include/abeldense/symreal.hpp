#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "abeldense/rational.hpp"

namespace abeldense {

struct Symbol {
  std::string name;
  double value = 0.0;
};

// Ordered symbols declared Q-linearly independent. Symbol 0 is always "1".
class SymbolBasis {
 public:
  explicit SymbolBasis(std::vector<Symbol> extra);

  std::size_t size() const noexcept { return symbols_.size(); }
  const Symbol& symbol(std::size_t i) const { return symbols_.at(i); }
  const std::vector<Symbol>& symbols() const noexcept { return symbols_; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  // True when every symbol of *this appears at the same index in other.
  bool is_prefix_of(const SymbolBasis& other) const;

 private:
  std::vector<Symbol> symbols_;
};

using BasisPtr = std::shared_ptr<const SymbolBasis>;

BasisPtr make_basis(std::vector<Symbol> extra = {});
// 1, sqrt2, sqrt3, sqrt5, ... with k irrational symbols.
BasisPtr sqrt_primes(std::size_t k);
BasisPtr extend_basis(const BasisPtr& base, const std::vector<Symbol>& extra);
std::vector<unsigned> first_primes(std::size_t k);

// Of two bases, the one the other is a prefix of; InputError otherwise.
BasisPtr common_basis(const BasisPtr& a, const BasisPtr& b);

class SymReal {
 public:
  SymReal() = default;
  explicit SymReal(BasisPtr basis);
  SymReal(BasisPtr basis, const Rational& q);
  SymReal(BasisPtr basis, RationalVector coeffs);
  static SymReal symbol(BasisPtr basis, std::size_t index, const Rational& coef = 1);

  const BasisPtr& basis() const noexcept { return basis_; }
  const RationalVector& coeffs() const noexcept { return coeffs_; }
  const Rational& coeff(std::size_t i) const { return coeffs_.at(i); }

  bool is_zero() const;
  bool is_rational() const;
  Rational rational_part() const { return coeffs_.empty() ? Rational(0) : coeffs_[0]; }

  // Same value over a basis this one's basis is a prefix of.
  SymReal rebase(const BasisPtr& wider) const;

  SymReal operator-() const;
  SymReal& operator+=(const SymReal& o);
  SymReal& operator-=(const SymReal& o);
  SymReal& operator*=(const Rational& q);
  SymReal& operator/=(const Rational& q);

  friend SymReal operator+(SymReal a, const SymReal& b) { return a += b; }
  friend SymReal operator-(SymReal a, const SymReal& b) { return a -= b; }
  friend SymReal operator*(SymReal a, const Rational& q) { return a *= q; }
  friend SymReal operator*(const Rational& q, SymReal a) { return a *= q; }
  friend SymReal operator/(SymReal a, const Rational& q) { return a /= q; }
  friend bool operator==(const SymReal& a, const SymReal& b);

 private:
  BasisPtr basis_;
  RationalVector coeffs_;
};

using SymVector = std::vector<SymReal>;

enum class Sign { negative = -1, zero = 0, positive = 1 };

constexpr double kDefaultDeadZone = 1e-9;

// Dead zone used when none is passed; per thread, kDefaultDeadZone unless a
// DeadZoneScope is active.
double default_dead_zone() noexcept;

class DeadZoneScope {
 public:
  explicit DeadZoneScope(double dead_zone);
  ~DeadZoneScope();
  DeadZoneScope(const DeadZoneScope&) = delete;
  DeadZoneScope& operator=(const DeadZoneScope&) = delete;

 private:
  double saved_;
};

double sym_eval(const SymReal& x);
// Exact zero test, float shadow otherwise; AmbiguousSign inside the dead zone.
Sign sym_sign(const SymReal& x, double dead_zone = default_dead_zone());

struct Independence {
  bool independent = true;
  // Primitive integer relation, first nonzero entry positive; empty when independent.
  IntegerVector witness;
};
Independence is_q_independent(const std::vector<SymReal>& xs);

// Columns are the coefficient vectors of xs over their common basis.
RationalMatrix coefficient_matrix(const std::vector<SymReal>& xs, BasisPtr* basis_out = nullptr);

SymReal parse_symreal(std::string_view text, const BasisPtr& basis);
std::string to_string(const SymReal& x);

SymReal dot(const RationalVector& l, const SymVector& v);

}  // namespace abeldense
