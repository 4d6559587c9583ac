#include "abeldense/sympoly.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

#include "abeldense/error.hpp"

namespace abeldense {

SymPoly::SymPoly(const Rational& c) {
  if (c != 0) terms_[{}] = c;
}

SymPoly::SymPoly(const SymReal& x) : basis_(x.basis()) {
  for (std::size_t i = 0; i < x.coeffs().size(); ++i) {
    if (x.coeffs()[i] == 0) continue;
    if (i == 0)
      terms_[{}] = x.coeffs()[i];
    else
      terms_[{static_cast<std::uint32_t>(i)}] = x.coeffs()[i];
  }
}

SymPoly SymPoly::symbol(BasisPtr basis, std::size_t index) {
  if (index >= basis->size()) throw InputError("symbol index out of range");
  SymPoly p;
  p.basis_ = std::move(basis);
  if (index == 0)
    p.terms_[{}] = 1;
  else
    p.terms_[{static_cast<std::uint32_t>(index)}] = 1;
  return p;
}

std::size_t SymPoly::degree() const {
  std::size_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.size());
  return d;
}

std::optional<Rational> SymPoly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (degree() > 0) return std::nullopt;
  return terms_.begin()->second;
}

std::optional<SymReal> SymPoly::to_symreal(const BasisPtr& basis) const {
  if (degree() > 1) return std::nullopt;
  BasisPtr b = common_basis(basis, basis_);
  if (b != basis) throw InputError("polynomial uses symbols outside the requested basis");
  SymReal x(basis);
  RationalVector c(basis->size(), Rational(0));
  for (const auto& [m, q] : terms_) c[m.empty() ? 0 : m[0]] = q;
  return SymReal(basis, std::move(c));
}

long double SymPoly::evaluate() const {
  long double s = 0;
  for (const auto& [m, c] : terms_) {
    long double t = c.get_d();
    for (auto idx : m) t *= basis_->symbol(idx).value;
    s += t;
  }
  return s;
}

void SymPoly::adopt_basis(const BasisPtr& other) { basis_ = common_basis(basis_, other); }

void SymPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SymPoly SymPoly::operator-() const {
  SymPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
  adopt_basis(o.basis_);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& o) {
  adopt_basis(o.basis_);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

SymPoly& SymPoly::operator*=(const SymPoly& o) {
  adopt_basis(o.basis_);
  std::map<Monomial, Rational> lhs;
  lhs.swap(terms_);
  for (const auto& [ma, ca] : lhs) {
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m;
      m.reserve(ma.size() + mb.size());
      std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
      add_term(m, ca * cb);
    }
  }
  return *this;
}

bool operator==(const SymPoly& a, const SymPoly& b) {
  if (a.basis_ && b.basis_) common_basis(a.basis_, b.basis_);
  return a.terms_ == b.terms_;
}

double sym_eval(const SymPoly& p) { return static_cast<double>(p.evaluate()); }

Sign sym_sign(const SymPoly& p, double dead_zone) {
  if (p.is_zero()) return Sign::zero;
  if (auto c = p.constant_value()) return sgn(*c) > 0 ? Sign::positive : Sign::negative;
  const double v = sym_eval(p);
  if (!(std::fabs(v) >= dead_zone)) {
    std::ostringstream os;
    os << "sign of " << to_string(p) << " is ambiguous: shadow " << v << " lies inside the dead zone " << dead_zone;
    throw AmbiguousSign(os.str(), v);
  }
  return v > 0 ? Sign::positive : Sign::negative;
}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Parser {
 public:
  Parser(std::string_view text, const BasisPtr& basis, bool allow_i)
      : s_(text), basis_(basis), allow_i_(allow_i) {}

  ComplexPoly parse() {
    ComplexPoly out;
    skip_ws();
    if (pos_ == s_.size()) fail("empty expression");
    bool first = true;
    while (true) {
      skip_ws();
      int sign = 1;
      if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      bool imaginary = false;
      SymPoly term = parse_term(imaginary);
      if (sign < 0) term = -term;
      (imaginary ? out.im : out.re) += term;
      first = false;
      skip_ws();
      if (pos_ == s_.size()) break;
    }
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, 0, pos_ + 1); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  SymPoly parse_term(bool& imaginary) {
    SymPoly term(1);
    bool any = false;
    while (true) {
      skip_ws();
      if (pos_ == s_.size()) fail("expected a factor");
      SymPoly f = parse_factor(imaginary);
      term *= f;
      any = true;
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (!any) fail("expected a factor");
    return term;
  }

  SymPoly parse_factor(bool& imaginary) {
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
      if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E') && pos_ + 1 < s_.size() &&
          (std::isdigit(static_cast<unsigned char>(s_[pos_ + 1])) || s_[pos_ + 1] == '-' || s_[pos_ + 1] == '+')) {
        ++pos_;
        if (s_[pos_] == '-' || s_[pos_] == '+') ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      }
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        if (pos_ == s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected a denominator");
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      }
      try {
        return SymPoly(parse_rational(s_.substr(start, pos_ - start)));
      } catch (const ParseError&) {
        const std::string bad(s_.substr(start, pos_ - start));
        pos_ = start;
        fail("invalid number '" + bad + "'");
      }
    }
    if (c == '(') fail("parentheses are not supported");
    if (!ident_start(c)) fail(std::string("unexpected character '") + c + "'");
    const std::size_t start = pos_;
    while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
    const std::string_view name = s_.substr(start, pos_ - start);
    if (name == "i") {
      if (!allow_i_) {
        pos_ = start;
        fail("imaginary unit 'i' not allowed in a real entry");
      }
      if (imaginary) {
        pos_ = start;
        fail("repeated imaginary unit");
      }
      imaginary = true;
      return SymPoly(1);
    }
    auto idx = basis_ ? basis_->index_of(name) : std::nullopt;
    if (!idx) {
      pos_ = start;
      fail("unknown symbol '" + std::string(name) + "'");
    }
    SymPoly sym = SymPoly::symbol(basis_, *idx);
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      skip_ws();
      const std::size_t es = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (es == pos_) fail("expected an exponent");
      const unsigned long e = std::stoul(std::string(s_.substr(es, pos_ - es)));
      if (e > 64) fail("exponent too large");
      SymPoly p = SymPoly(1);
      for (unsigned long k = 0; k < e; ++k) p *= sym;
      return p;
    }
    return sym;
  }

  std::string_view s_;
  BasisPtr basis_;
  bool allow_i_;
  std::size_t pos_ = 0;
};

std::string monomial_text(const Monomial& m, const BasisPtr& basis) {
  std::string out;
  for (std::size_t k = 0; k < m.size();) {
    std::size_t run = 1;
    while (k + run < m.size() && m[k + run] == m[k]) ++run;
    if (!out.empty()) out += "*";
    out += basis->symbol(m[k]).name;
    if (run > 1) out += "^" + std::to_string(run);
    k += run;
  }
  return out;
}

}  // namespace

SymPoly parse_sympoly(std::string_view text, const BasisPtr& basis) {
  ComplexPoly z = Parser(text, basis, false).parse();
  return z.re;
}

ComplexPoly parse_complex(std::string_view text, const BasisPtr& basis) {
  return Parser(text, basis, true).parse();
}

std::string to_string(const SymPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  // Constant first, then by degree and index.
  std::vector<std::pair<Monomial, Rational>> ordered(p.terms().begin(), p.terms().end());
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const auto& a, const auto& b) { return a.first.size() < b.first.size(); });
  for (const auto& [m, c] : ordered) {
    Rational mag = abs(c);
    const bool neg = sgn(c) < 0;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (m.empty()) {
      out += to_string(mag);
    } else {
      if (mag != 1) out += to_string(mag) + "*";
      out += monomial_text(m, p.basis());
    }
  }
  return out;
}

std::string to_string(const ComplexPoly& z) {
  if (z.im.is_zero()) return to_string(z.re);
  // i is distributed over each imaginary term so the text stays in the grammar.
  std::string im_part;
  for (const auto& [m, c] : z.im.terms()) {
    std::string t;
    const bool neg = sgn(c) < 0;
    const Rational mag = abs(c);
    if (m.empty()) {
      t = mag == 1 ? "i" : to_string(mag) + "*i";
    } else {
      t = (mag == 1 ? "" : to_string(mag) + "*") + monomial_text(m, z.im.basis()) + "*i";
    }
    if (im_part.empty())
      im_part = (neg ? "-" : "") + t;
    else
      im_part += (neg ? " - " : " + ") + t;
  }
  if (z.re.is_zero()) return im_part;
  if (im_part[0] == '-') return to_string(z.re) + " - " + im_part.substr(1);
  return to_string(z.re) + " + " + im_part;
}

}  // namespace abeldense
