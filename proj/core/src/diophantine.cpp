#include "abeldense/diophantine.hpp"

#include <cmath>
#include <sstream>

#include "abeldense/error.hpp"

namespace abeldense {

namespace {

Rational inner(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

struct GramSchmidt {
  std::vector<RationalVector> bstar;
  RationalMatrix mu;
  RationalVector norms;

  // Recomputes rows from index `from` onward.
  void update(const std::vector<RationalVector>& b, std::size_t from) {
    const std::size_t m = b.size();
    if (bstar.size() != m) {
      bstar.assign(m, {});
      mu = RationalMatrix(m, m, Rational(0));
      norms.assign(m, Rational(0));
      from = 0;
    }
    for (std::size_t i = from; i < m; ++i) {
      bstar[i] = b[i];
      for (std::size_t j = 0; j < i; ++j) {
        mu(i, j) = inner(b[i], bstar[j]) / norms[j];
        if (mu(i, j) == 0) continue;
        for (std::size_t k = 0; k < bstar[i].size(); ++k) bstar[i][k] -= mu(i, j) * bstar[j][k];
      }
      norms[i] = inner(bstar[i], bstar[i]);
      if (norms[i] == 0) throw InputError("lattice basis vectors are linearly dependent");
    }
  }
};

RationalLllResult lll_core(std::vector<RationalVector> b, const Rational& delta) {
  if (!(delta > Rational(1, 4) && delta < 1)) throw InputError("LLL parameter delta must lie in (1/4, 1)");
  const std::size_t m = b.size();
  IntegerMatrix u = IntegerMatrix::identity(m, Integer(0), Integer(1));
  GramSchmidt gs;
  if (m > 0) gs.update(b, 0);
  std::size_t k = 1;
  while (k < m) {
    for (std::size_t jj = k; jj-- > 0;) {
      const Integer q = round_nearest(gs.mu(k, jj));
      if (q == 0) continue;
      const Rational qr(q);
      for (std::size_t c = 0; c < b[k].size(); ++c) b[k][c] -= qr * b[jj][c];
      for (std::size_t c = 0; c < m; ++c) u(k, c) -= q * u(jj, c);
      for (std::size_t i = 0; i < jj; ++i) gs.mu(k, i) -= qr * gs.mu(jj, i);
      gs.mu(k, jj) -= qr;
    }
    const Rational mk = gs.mu(k, k - 1);
    if (gs.norms[k] >= (delta - mk * mk) * gs.norms[k - 1]) {
      ++k;
    } else {
      std::swap(b[k], b[k - 1]);
      u.swap_rows(k, k - 1);
      gs.update(b, k - 1);
      k = k > 1 ? k - 1 : 1;
    }
  }
  RationalLllResult out;
  out.basis = RationalMatrix::from_rows(b);
  if (m == 0) out.basis = RationalMatrix(0, 0);
  out.transform = std::move(u);
  return out;
}

}  // namespace

RationalLllResult lll_reduce(const RationalMatrix& b, const Rational& delta) {
  std::vector<RationalVector> rows;
  for (std::size_t i = 0; i < b.rows(); ++i) rows.push_back(b.row(i));
  RationalLllResult r = lll_core(std::move(rows), delta);
  if (b.rows() == 0) r.basis = b;
  return r;
}

LllResult lll_reduce(const IntegerMatrix& b, const Rational& delta) {
  std::vector<RationalVector> rows;
  for (std::size_t i = 0; i < b.rows(); ++i) rows.push_back(to_rational(b.row(i)));
  RationalLllResult r = lll_core(std::move(rows), delta);
  LllResult out;
  out.basis = IntegerMatrix(b.rows(), b.cols());
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out.basis(i, j) = r.basis(i, j).get_num();
  out.transform = std::move(r.transform);
  return out;
}

bool is_lll_reduced(const RationalMatrix& b, const Rational& delta) {
  std::vector<RationalVector> rows;
  for (std::size_t i = 0; i < b.rows(); ++i) rows.push_back(b.row(i));
  GramSchmidt gs;
  if (rows.empty()) return true;
  gs.update(rows, 0);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (abs(gs.mu(i, j)) > Rational(1, 2)) return false;
  for (std::size_t k = 1; k < rows.size(); ++k) {
    const Rational mk = gs.mu(k, k - 1);
    if (gs.norms[k] < (delta - mk * mk) * gs.norms[k - 1]) return false;
  }
  return true;
}

RelationSearchResult find_integer_relation(const std::vector<double>& xs, double height_bound, double tol) {
  if (xs.size() < 2) throw InputError("relation search needs at least two values");
  if (!(height_bound >= 1)) throw InputError("height bound must be at least 1");
  if (!(tol > 0)) throw InputError("tolerance must be positive");
  RelationSearchResult out;
  out.height_bound = height_bound;
  const std::size_t d = xs.size();
  const Rational scale = exact_rational(1.0 / tol);
  IntegerMatrix b(d, d + 1, Integer(0));
  for (std::size_t i = 0; i < d; ++i) {
    b(i, i) = 1;
    b(i, d) = round_nearest(exact_rational(xs[i]) * scale);
  }
  const LllResult red = lll_reduce(b);
  for (std::size_t i = 0; i < d; ++i) {
    RationalVector cand;
    for (std::size_t j = 0; j < d; ++j) cand.emplace_back(red.basis(i, j));
    const IntegerVector rel = primitive_integer_vector(cand);
    bool zero = true, small = true;
    long double residual = 0;
    for (std::size_t j = 0; j < d; ++j) {
      if (rel[j] != 0) zero = false;
      if (abs(rel[j]) > Integer(std::floor(height_bound))) small = false;
      residual += static_cast<long double>(rel[j].get_d()) * xs[j];
    }
    if (zero || !small) continue;
    if (std::fabs(static_cast<double>(residual)) < tol) {
      out.found = true;
      out.relation = rel;
      out.residual = std::fabs(static_cast<double>(residual));
      return out;
    }
  }
  return out;
}

Rational distance_to_integer(const Rational& x) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  Rational frac = x - Rational(f);
  Rational other = Rational(1) - frac;
  return frac < other ? frac : other;
}

namespace {

bool verify_multiplier(const Integer& m, const RationalVector& r, const RationalVector& y, const Rational& eps,
                       KroneckerResult& out) {
  if (m < 1) return false;
  std::vector<double> dist;
  Rational worst = 0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    const Rational d = distance_to_integer(Rational(m) * r[i] - y[i]);
    if (!(d < eps)) return false;
    if (d > worst) worst = d;
    dist.push_back(d.get_d());
  }
  out.m = m;
  out.distances = std::move(dist);
  out.error = worst.get_d();
  return true;
}

// Nearest-plane approximation of target in the lattice spanned by basis
// rows; returns integer coefficients against those rows.
IntegerVector babai(const RationalMatrix& basis, const RationalVector& target) {
  std::vector<RationalVector> rows;
  for (std::size_t i = 0; i < basis.rows(); ++i) rows.push_back(basis.row(i));
  GramSchmidt gs;
  gs.update(rows, 0);
  RationalVector t = target;
  IntegerVector coef(rows.size(), Integer(0));
  for (std::size_t i = rows.size(); i-- > 0;) {
    const Integer c = round_nearest(inner(t, gs.bstar[i]) / gs.norms[i]);
    coef[i] = c;
    if (c == 0) continue;
    const Rational cr(c);
    for (std::size_t k = 0; k < t.size(); ++k) t[k] -= cr * rows[i][k];
  }
  return coef;
}

}  // namespace

KroneckerResult kronecker_approximate(const RationalVector& r, const RationalVector& y, const Rational& eps,
                                      const KroneckerOptions& opts) {
  if (r.empty() || r.size() != y.size()) throw InputError("r and y must be nonempty and of equal length");
  if (!(eps > 0 && eps < Rational(1, 2))) throw InputError("eps must lie in (0, 1/2)");
  const std::size_t n = r.size();
  KroneckerResult out;

  // Values with a small integer relation to 1 cannot be approximated densely.
  {
    std::vector<double> xs{1.0};
    for (const auto& q : r) xs.push_back(q.get_d());
    const RelationSearchResult rel = find_integer_relation(xs, 1000, 1e-12);
    if (rel.found) {
      std::ostringstream os;
      os << "1 and r look Q-dependent (relation";
      for (const auto& z : rel.relation) os << ' ' << z.get_str();
      os << ")";
      throw NotFound(os.str(), 0);
    }
  }

  // Brute force with a long double filter and exact confirmation.
  {
    std::vector<long double> step(n), pos(n);
    for (std::size_t i = 0; i < n; ++i) {
      const Rational fr = r[i] - Rational(floor_div(r[i].get_num(), r[i].get_den()));
      step[i] = fr.get_d();
      const Rational fy = -y[i] - Rational(floor_div(Integer(-y[i].get_num()), y[i].get_den()));
      pos[i] = fy.get_d();
    }
    const long double slack = eps.get_d() + 1e-9L;
    for (std::uint64_t m = 1; m <= opts.brute_force_limit; ++m) {
      bool close = true;
      for (std::size_t i = 0; i < n; ++i) {
        long double p = pos[i] + step[i];
        if (p >= 1) p -= 1;
        pos[i] = p;
        const long double d = p < 0.5L ? p : 1 - p;
        if (d >= slack) close = false;
      }
      if (close && verify_multiplier(Integer(static_cast<unsigned long>(m)), r, y, eps, out)) {
        out.strategy = "brute_force";
        return out;
      }
      if ((m & 0xFFFFF) == 0) {
        // Resynchronize the running fractions with exact arithmetic.
        for (std::size_t i = 0; i < n; ++i) {
          Rational x = Rational(Integer(static_cast<unsigned long>(m))) * r[i] - y[i];
          pos[i] = Rational(x - Rational(floor_div(x.get_num(), x.get_den()))).get_d();
        }
      }
    }
  }

  // Lattice stage: rows (K r, c) and K e_i; target (K y, 0).
  const Rational k_scale = Rational(1) / eps;
  double mmax = std::max(10.0 * static_cast<double>(opts.brute_force_limit), 1e6);
  for (; mmax <= opts.lattice_limit; mmax *= 10) {
    const Rational c = k_scale * eps / exact_rational(mmax);
    RationalMatrix b(n + 1, n + 1, Rational(0));
    for (std::size_t i = 0; i < n; ++i) b(0, i) = k_scale * r[i];
    b(0, n) = c;
    for (std::size_t i = 0; i < n; ++i) b(i + 1, i) = k_scale;
    const RationalLllResult red = lll_reduce(b);
    RationalVector target(n + 1, Rational(0));
    for (std::size_t i = 0; i < n; ++i) target[i] = k_scale * y[i];
    const IntegerVector coef = babai(red.basis, target);
    Integer m0 = 0;
    for (std::size_t i = 0; i <= n; ++i) m0 += coef[i] * red.transform(i, 0);
    std::vector<Integer> candidates{m0};
    for (std::size_t i = 0; i <= n; ++i) {
      candidates.push_back(m0 + red.transform(i, 0));
      candidates.push_back(m0 - red.transform(i, 0));
    }
    for (const auto& m : candidates) {
      if (verify_multiplier(m, r, y, eps, out)) {
        out.strategy = "lattice";
        return out;
      }
    }
  }
  throw NotFound("no multiplier found within the search budget", static_cast<unsigned long long>(opts.lattice_limit));
}

KroneckerResult kronecker_approximate(const std::vector<double>& r, const std::vector<double>& y, double eps,
                                      const KroneckerOptions& opts) {
  RationalVector rq, yq;
  for (double v : r) rq.push_back(exact_rational(v));
  for (double v : y) yq.push_back(exact_rational(v));
  return kronecker_approximate(rq, yq, exact_rational(eps), opts);
}

}  // namespace abeldense
