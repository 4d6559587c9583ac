#include "abeldense/rational.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "abeldense/error.hpp"

namespace abeldense {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

Integer parse_integer(std::string_view s) {
  if (s.empty()) throw ParseError("empty integer", 0, 0);
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (!all_digits(s.substr(start))) throw ParseError("invalid integer '" + std::string(s) + "'", 0, 0);
  Integer z;
  z.set_str(std::string(s[0] == '+' ? s.substr(1) : s), 10);
  return z;
}

Integer pow10(unsigned long e) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, e);
  return p;
}

// Integerizes each row by its denominators; rank is unchanged.
IntegerMatrix integerize_rows(const RationalMatrix& m) {
  IntegerMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Rational scaled = m(i, j) * Rational(l);
      out(i, j) = scaled.get_num();
    }
  }
  return out;
}

// In-place Bareiss elimination; returns rank. Tracks row swaps in *sign.
std::size_t bareiss(IntegerMatrix& a, int* sign) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  Integer prev = 1;
  std::size_t r = 0;
  if (sign) *sign = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      a.swap_rows(piv, r);
      if (sign) *sign = -*sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer t = a(r, c) * a(i, j) - a(i, c) * a(r, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty rational literal", 0, 0);

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", 0, 0);
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  bool negative = false;
  std::string_view s = text;
  if (s[0] == '-' || s[0] == '+') {
    negative = s[0] == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    Integer ez = parse_integer(s.substr(e + 1));
    if (!ez.fits_slong_p()) throw ParseError("exponent out of range", 0, 0);
    exponent = ez.get_si();
    s = s.substr(0, e);
  }
  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view ip = s.substr(0, dot);
    std::string_view fp = s.substr(dot + 1);
    if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)) || (ip.empty() && fp.empty()))
      throw ParseError("invalid number '" + std::string(text) + "'", 0, 0);
    digits = std::string(ip) + std::string(fp);
    exponent -= static_cast<long>(fp.size());
  } else {
    if (!all_digits(s)) throw ParseError("invalid number '" + std::string(text) + "'", 0, 0);
    digits = std::string(s);
  }
  Integer mant(digits.empty() ? "0" : digits, 10);
  if (negative) mant = -mant;
  Rational q(mant);
  if (exponent > 0) q *= Rational(pow10(static_cast<unsigned long>(exponent)));
  if (exponent < 0) q /= Rational(pow10(static_cast<unsigned long>(-exponent)));
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }
std::string to_string(const Integer& z) { return z.get_str(10); }

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw InputError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational exact_rational(double x) {
  if (!std::isfinite(x)) throw InputError("non-finite value has no rational form");
  Rational q(x);
  q.canonicalize();
  return q;
}

Rational dyadic_approximation(double x, unsigned bits) {
  Rational exact = exact_rational(x);
  Integer scale = 1;
  scale <<= bits;
  Integer n = round_nearest(exact * Rational(scale));
  Rational q(n, scale);
  q.canonicalize();
  return q;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer round_nearest(const Rational& q) {
  // floor(q + 1/2)
  Rational shifted = q + Rational(1, 2);
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
  return out;
}

Integer lcm_of_denominators(const RationalVector& v) {
  Integer l = 1;
  for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  return l;
}

IntegerVector clear_denominators(const RationalVector& v) {
  const Integer l = lcm_of_denominators(v);
  IntegerVector out;
  out.reserve(v.size());
  for (const auto& q : v) {
    Rational s = q * Rational(l);
    out.push_back(s.get_num());
  }
  return out;
}

IntegerVector primitive_integer_vector(const RationalVector& v) {
  IntegerVector z = clear_denominators(v);
  Integer g = 0;
  for (const auto& e : z) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
  if (g == 0) return z;
  int sign = 0;
  for (const auto& e : z) {
    if (e != 0) {
      sign = sgn(e);
      break;
    }
  }
  for (auto& e : z) {
    mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), g.get_mpz_t());
    if (sign < 0) e = -e;
  }
  return z;
}

RationalVector to_rational(const IntegerVector& v) {
  RationalVector out;
  out.reserve(v.size());
  for (const auto& z : v) out.emplace_back(z);
  return out;
}

std::size_t rational_rank(const RationalMatrix& m) {
  IntegerMatrix a = integerize_rows(m);
  return bareiss(a, nullptr);
}

Integer determinant(const IntegerMatrix& m) {
  if (!m.square()) throw InputError("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  IntegerMatrix a = m;
  int sign = 1;
  if (bareiss(a, &sign) < a.rows()) return 0;
  Integer d = a(a.rows() - 1, a.cols() - 1);
  return sign < 0 ? Integer(-d) : d;
}

Rational determinant(const RationalMatrix& m) {
  if (!m.square()) throw InputError("determinant of a non-square matrix");
  Integer scale = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    scale *= l;
  }
  Rational d(determinant(integerize_rows(m)), scale);
  d.canonicalize();
  return d;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RationalMatrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, c) == 0) ++piv;
    if (piv == a.rows()) continue;
    a.swap_rows(piv, r);
    const Rational p = a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) /= p;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::vector<RationalVector> nullspace(const RationalMatrix& m) {
  RationalMatrix a = m;
  const auto pivots = rref(a);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<RationalVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RationalVector x(m.cols(), Rational(0));
    x[f] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = -a(k, f);
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<RationalVector> solve(const RationalMatrix& a, const RationalVector& b) {
  if (!a.square() || b.size() != a.rows()) throw InputError("solve: shape mismatch");
  const std::size_t n = a.rows();
  RationalMatrix aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  const auto pivots = rref(aug);
  if (pivots.size() < n || (n > 0 && pivots.back() >= n)) return std::nullopt;
  RationalVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug(i, n);
  return x;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& a) {
  if (!a.square()) throw InputError("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  RationalMatrix aug(n, 2 * n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  const auto pivots = rref(aug);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] >= n)) return std::nullopt;
  RationalMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

RationalVector multiply(const RationalMatrix& a, const RationalVector& x) {
  if (a.cols() != x.size()) throw InputError("matrix-vector dimension mismatch");
  RationalVector y(a.rows(), Rational(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
  return y;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw InputError("dot product dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

HermiteForm hermite_normal_form(const IntegerMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  HermiteForm out{m, IntegerMatrix::identity(rows, Integer(0), Integer(1)), 0};
  IntegerMatrix& h = out.h;
  IntegerMatrix& u = out.u;

  auto row_axpy = [&](std::size_t dst, const Integer& q, std::size_t src) {
    // row dst -= q * row src
    for (std::size_t j = 0; j < cols; ++j) h(dst, j) -= q * h(src, j);
    for (std::size_t j = 0; j < rows; ++j) u(dst, j) -= q * u(src, j);
  };
  auto swap = [&](std::size_t a, std::size_t b) {
    h.swap_rows(a, b);
    u.swap_rows(a, b);
  };
  auto negate = [&](std::size_t a) {
    for (std::size_t j = 0; j < cols; ++j) h(a, j) = -h(a, j);
    for (std::size_t j = 0; j < rows; ++j) u(a, j) = -u(a, j);
  };

  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // Euclid on column c over rows r..rows-1.
    while (true) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i) {
        if (h(i, c) == 0) continue;
        if (best == rows || abs(h(i, c)) < abs(h(best, c))) best = i;
      }
      if (best == rows) break;
      swap(r, best);
      bool done = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (h(i, c) == 0) continue;
        Integer q = floor_div(h(i, c), h(r, c));
        row_axpy(i, q, r);
        if (h(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) negate(r);
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = floor_div(h(i, c), h(r, c));
      if (q != 0) row_axpy(i, q, r);
    }
    ++r;
  }
  out.rank = r;
  return out;
}

std::vector<IntegerVector> integer_kernel(const IntegerMatrix& m) {
  const HermiteForm hf = hermite_normal_form(m.transpose());
  std::vector<IntegerVector> basis;
  for (std::size_t i = hf.rank; i < hf.u.rows(); ++i) basis.push_back(hf.u.row(i));
  return basis;
}

}  // namespace abeldense
