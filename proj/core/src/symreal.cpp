#include "abeldense/symreal.hpp"

#include <cmath>
#include <set>
#include <sstream>

#include "abeldense/error.hpp"
#include "abeldense/sympoly.hpp"

namespace abeldense {

SymbolBasis::SymbolBasis(std::vector<Symbol> extra) {
  symbols_.reserve(extra.size() + 1);
  symbols_.push_back({"1", 1.0});
  std::set<std::string> seen{"1"};
  for (auto& s : extra) {
    if (s.name.empty()) throw InputError("empty symbol name");
    if (s.name == "i") throw InputError("symbol name 'i' is reserved for the imaginary unit");
    if (!seen.insert(s.name).second) throw InputError("duplicate symbol '" + s.name + "'");
    if (!std::isfinite(s.value)) throw InputError("symbol '" + s.name + "' has a non-finite value");
    symbols_.push_back(std::move(s));
  }
}

std::optional<std::size_t> SymbolBasis::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < symbols_.size(); ++i)
    if (symbols_[i].name == name) return i;
  return std::nullopt;
}

bool SymbolBasis::is_prefix_of(const SymbolBasis& other) const {
  if (size() > other.size()) return false;
  for (std::size_t i = 0; i < size(); ++i) {
    if (symbols_[i].name != other.symbols_[i].name || symbols_[i].value != other.symbols_[i].value) return false;
  }
  return true;
}

BasisPtr make_basis(std::vector<Symbol> extra) { return std::make_shared<const SymbolBasis>(std::move(extra)); }

std::vector<unsigned> first_primes(std::size_t k) {
  std::vector<unsigned> primes;
  for (unsigned c = 2; primes.size() < k; ++c) {
    bool prime = true;
    for (unsigned p : primes) {
      if (p * p > c) break;
      if (c % p == 0) {
        prime = false;
        break;
      }
    }
    if (prime) primes.push_back(c);
  }
  return primes;
}

BasisPtr sqrt_primes(std::size_t k) {
  std::vector<Symbol> syms;
  for (unsigned p : first_primes(k)) syms.push_back({"sqrt" + std::to_string(p), std::sqrt(static_cast<double>(p))});
  return make_basis(std::move(syms));
}

BasisPtr extend_basis(const BasisPtr& base, const std::vector<Symbol>& extra) {
  std::vector<Symbol> all(base->symbols().begin() + 1, base->symbols().end());
  all.insert(all.end(), extra.begin(), extra.end());
  return make_basis(std::move(all));
}

BasisPtr common_basis(const BasisPtr& a, const BasisPtr& b) {
  if (!a) return b;
  if (!b || a == b) return a;
  if (a->is_prefix_of(*b)) return b;
  if (b->is_prefix_of(*a)) return a;
  throw InputError("values live over incompatible symbol bases");
}

SymReal::SymReal(BasisPtr basis) : basis_(std::move(basis)), coeffs_(basis_->size(), Rational(0)) {}

SymReal::SymReal(BasisPtr basis, const Rational& q) : SymReal(std::move(basis)) { coeffs_[0] = q; }

SymReal::SymReal(BasisPtr basis, RationalVector coeffs) : basis_(std::move(basis)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != basis_->size()) throw InputError("coefficient count does not match the symbol basis");
}

SymReal SymReal::symbol(BasisPtr basis, std::size_t index, const Rational& coef) {
  SymReal x(std::move(basis));
  x.coeffs_.at(index) = coef;
  return x;
}

bool SymReal::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool SymReal::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

SymReal SymReal::rebase(const BasisPtr& wider) const {
  if (wider == basis_) return *this;
  if (!basis_->is_prefix_of(*wider)) throw InputError("cannot rebase onto an unrelated symbol basis");
  RationalVector c = coeffs_;
  c.resize(wider->size(), Rational(0));
  return SymReal(wider, std::move(c));
}

SymReal SymReal::operator-() const {
  SymReal r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

SymReal& SymReal::operator+=(const SymReal& o) {
  BasisPtr b = common_basis(basis_, o.basis_);
  if (b != basis_) *this = rebase(b);
  const SymReal other = o.rebase(b);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

SymReal& SymReal::operator-=(const SymReal& o) { return *this += -o; }

SymReal& SymReal::operator*=(const Rational& q) {
  for (auto& c : coeffs_) c *= q;
  return *this;
}

SymReal& SymReal::operator/=(const Rational& q) {
  if (q == 0) throw InputError("division of a symbolic real by zero");
  for (auto& c : coeffs_) c /= q;
  return *this;
}

bool operator==(const SymReal& a, const SymReal& b) {
  BasisPtr basis = common_basis(a.basis_, b.basis_);
  return a.rebase(basis).coeffs_ == b.rebase(basis).coeffs_;
}

double sym_eval(const SymReal& x) {
  long double s = 0;
  for (std::size_t i = 0; i < x.coeffs().size(); ++i) {
    if (x.coeffs()[i] == 0) continue;
    s += static_cast<long double>(x.coeffs()[i].get_d()) * x.basis()->symbol(i).value;
  }
  return static_cast<double>(s);
}

namespace {
thread_local double current_dead_zone = kDefaultDeadZone;
}  // namespace

double default_dead_zone() noexcept { return current_dead_zone; }

DeadZoneScope::DeadZoneScope(double dead_zone) : saved_(current_dead_zone) {
  if (!(dead_zone >= 0)) throw InputError("dead zone must be nonnegative");
  current_dead_zone = dead_zone;
}

DeadZoneScope::~DeadZoneScope() { current_dead_zone = saved_; }

Sign sym_sign(const SymReal& x, double dead_zone) {
  if (x.is_zero()) return Sign::zero;
  if (x.is_rational()) return sgn(x.coeffs()[0]) > 0 ? Sign::positive : Sign::negative;
  const double v = sym_eval(x);
  if (!(std::fabs(v) >= dead_zone)) {
    std::ostringstream os;
    os << "sign of " << to_string(x) << " is ambiguous: shadow " << v << " lies inside the dead zone " << dead_zone;
    throw AmbiguousSign(os.str(), v);
  }
  return v > 0 ? Sign::positive : Sign::negative;
}

RationalMatrix coefficient_matrix(const std::vector<SymReal>& xs, BasisPtr* basis_out) {
  BasisPtr basis;
  for (const auto& x : xs) basis = common_basis(basis, x.basis());
  const std::size_t rows = basis ? basis->size() : 0;
  RationalMatrix m(rows, xs.size(), Rational(0));
  for (std::size_t j = 0; j < xs.size(); ++j) {
    const SymReal x = xs[j].rebase(basis);
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = x.coeffs()[i];
  }
  if (basis_out) *basis_out = basis;
  return m;
}

Independence is_q_independent(const std::vector<SymReal>& xs) {
  Independence out;
  if (xs.empty()) return out;
  const RationalMatrix m = coefficient_matrix(xs);
  if (rational_rank(m) == xs.size()) return out;
  const auto ns = nullspace(m);
  out.independent = false;
  out.witness = primitive_integer_vector(ns.front());
  return out;
}

SymReal parse_symreal(std::string_view text, const BasisPtr& basis) {
  const SymPoly p = parse_sympoly(text, basis);
  auto x = p.to_symreal(basis);
  if (!x) throw ParseError("expected a linear combination of symbols in '" + std::string(text) + "'", 0, 0);
  return *x;
}

std::string to_string(const SymReal& x) {
  return to_string(SymPoly(x));
}

SymReal dot(const RationalVector& l, const SymVector& v) {
  if (l.size() != v.size() || v.empty()) throw InputError("dot product dimension mismatch");
  SymReal s(v.front().basis());
  for (std::size_t i = 0; i < l.size(); ++i)
    if (l[i] != 0) s += v[i] * l[i];
  return s;
}

}  // namespace abeldense
