#include "abeldense/density.hpp"

#include <algorithm>

#include "abeldense/diophantine.hpp"
#include "abeldense/error.hpp"
#include "abeldense/lp.hpp"
#include "abeldense/sympoly.hpp"

namespace abeldense {

namespace {

constexpr unsigned kPrecisionSteps[] = {8, 16, 24, 32, 40};

BasisPtr set_basis(const GeneratorSet& a) {
  BasisPtr b;
  for (const auto& v : a)
    for (const auto& x : v) b = common_basis(b, x.basis());
  if (!b) b = make_basis();
  return b;
}

void check_dimensions(const GeneratorSet& a, std::size_t n) {
  for (const auto& v : a)
    if (v.size() != n) throw InputError("generator of dimension " + std::to_string(v.size()) + " in R^" + std::to_string(n));
}

GeneratorSet rebased(const GeneratorSet& a, const BasisPtr& basis) {
  GeneratorSet out = a;
  for (auto& v : out)
    for (auto& x : v) x = x.rebase(basis);
  return out;
}

bool is_rational(const SymVector& v) {
  return std::all_of(v.begin(), v.end(), [](const SymReal& x) { return x.is_rational(); });
}

RationalVector rational_values(const SymVector& v) {
  RationalVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.rational_part());
  return out;
}

// Symbol-k coefficients of each entry.
RationalVector component(const SymVector& v, std::size_t k) {
  RationalVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.coeff(k));
  return out;
}

Rational approximate(const SymReal& x, unsigned bits) {
  if (x.is_rational()) return x.rational_part();
  return dyadic_approximation(sym_eval(x), bits);
}

SymVector apply(const RationalMatrix& m, const SymVector& v, const BasisPtr& basis) {
  SymVector out(m.rows(), SymReal(basis));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) out[i] += v[j] * m(i, j);
  return out;
}

// A subset of A that is a rational basis of R^n, chosen greedily in index
// order, with coordinates of every other generator in that basis.
struct RationalBasis {
  std::vector<std::size_t> basis_idx;
  std::vector<std::size_t> other_idx;
  RationalMatrix inv;                // inverse of the matrix with basis columns
  std::vector<SymVector> coords;     // per other generator
};

std::optional<RationalBasis> find_rational_basis(const GeneratorSet& a, std::size_t n, const BasisPtr& basis) {
  RationalBasis rb;
  std::vector<RationalVector> cols;
  for (std::size_t j = 0; j < a.size() && cols.size() < n; ++j) {
    if (!is_rational(a[j])) continue;
    cols.push_back(rational_values(a[j]));
    RationalMatrix m(n, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
      for (std::size_t i = 0; i < n; ++i) m(i, c) = cols[c][i];
    if (rational_rank(m) < cols.size()) {
      cols.pop_back();
      continue;
    }
    rb.basis_idx.push_back(j);
  }
  if (cols.size() < n) return std::nullopt;
  return std::optional<RationalBasis>([&] {
    RationalMatrix m(n, n);
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t i = 0; i < n; ++i) m(i, c) = cols[c][i];
    rb.inv = *inverse(m);
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (std::find(rb.basis_idx.begin(), rb.basis_idx.end(), j) != rb.basis_idx.end()) continue;
      rb.other_idx.push_back(j);
      rb.coords.push_back(apply(rb.inv, a[j], basis));
    }
    return rb;
  }());
}

// The form with values z on the basis vectors: l = B^{-T} z.
RationalVector form_from_basis_values(const RationalBasis& rb, const RationalVector& z) {
  const std::size_t n = z.size();
  RationalVector l(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) l[i] += rb.inv(k, i) * z[k];
  return l;
}

bool nonnegative_on(const RationalVector& l, const GeneratorSet& a) {
  for (const auto& v : a)
    if (sym_sign(dot(l, v)) == Sign::negative) return false;
  return true;
}

bool integral_on(const RationalVector& l, const GeneratorSet& a) {
  for (const auto& v : a) {
    const SymReal x = dot(l, v);
    if (!x.is_rational() || x.rational_part().get_den() != 1) return false;
  }
  return true;
}

bool is_zero_vector(const IntegerVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& z) { return z == 0; });
}

// mu > 0 with C mu < 0 componentwise, C the coordinates of the non-basis
// generators. LP on approximations, each candidate verified exactly.
struct MuSearch {
  std::optional<RationalVector> mu;
  bool strictly_infeasible_everywhere = true;
};

MuSearch search_mu(const std::vector<SymVector>& coords, std::size_t n) {
  MuSearch out;
  const std::size_t p = coords.size();
  if (p == 0) return out;
  for (unsigned bits : kPrecisionSteps) {
    // Variables: mu (p), t, s (n), u (p), w.
    const std::size_t nv = p + 1 + n + p + 1;
    const std::size_t nr = n + p + 1;
    RationalMatrix a(nr, nv, Rational(0));
    RationalVector b(nr, Rational(0));
    RationalVector c(nv, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < p; ++j) a(i, j) = approximate(coords[j][i], bits);
      a(i, p) = 1;
      a(i, p + 1 + i) = 1;
    }
    for (std::size_t j = 0; j < p; ++j) {
      a(n + j, j) = 1;
      a(n + j, p) = -1;
      a(n + j, p + 1 + n + j) = -1;
    }
    for (std::size_t j = 0; j < p; ++j) a(n + p, j) = 1;
    a(n + p, nv - 1) = 1;
    b[n + p] = 1;
    c[p] = 1;
    const LpResult r = solve_lp(a, b, c);
    if (r.status != LpStatus::optimal || r.value <= 0) continue;
    out.strictly_infeasible_everywhere = false;
    RationalVector mu(r.x.begin(), r.x.begin() + static_cast<std::ptrdiff_t>(p));
    bool ok = std::all_of(mu.begin(), mu.end(), [](const Rational& q) { return q > 0; });
    for (std::size_t i = 0; ok && i < n; ++i) {
      SymVector row;
      for (std::size_t j = 0; j < p; ++j) row.push_back(coords[j][i]);
      if (sym_sign(dot(mu, row)) != Sign::negative) ok = false;
    }
    if (ok) {
      out.mu = std::move(mu);
      return out;
    }
  }
  return out;
}

// Nonzero y >= 0 (values on basis vectors) with y.C_j >= 0 for all j.
std::optional<RationalVector> search_basis_form(const std::vector<SymVector>& coords, std::size_t n) {
  const std::size_t p = coords.size();
  // Coordinate forms first: a row of C with no negative entry.
  for (std::size_t i = 0; i < n; ++i) {
    bool ok = true;
    for (std::size_t j = 0; ok && j < p; ++j)
      if (sym_sign(coords[j][i]) == Sign::negative) ok = false;
    if (ok) {
      RationalVector y(n, Rational(0));
      y[i] = 1;
      return y;
    }
  }
  for (unsigned bits : kPrecisionSteps) {
    // Variables: y (n), tau, v (p). Rows: y.C_j - tau - v_j = 0, sum y = 1.
    const std::size_t nv = n + 1 + p;
    RationalMatrix a(p + 1, nv, Rational(0));
    RationalVector b(p + 1, Rational(0));
    RationalVector c(nv, Rational(0));
    for (std::size_t j = 0; j < p; ++j) {
      for (std::size_t i = 0; i < n; ++i) a(j, i) = approximate(coords[j][i], bits);
      a(j, n) = -1;
      a(j, n + 1 + j) = -1;
    }
    for (std::size_t i = 0; i < n; ++i) a(p, i) = 1;
    b[p] = 1;
    c[n] = 1;
    const LpResult r = solve_lp(a, b, c);
    if (r.status != LpStatus::optimal) continue;
    RationalVector y(r.x.begin(), r.x.begin() + static_cast<std::ptrdiff_t>(n));
    bool ok = true;
    for (std::size_t j = 0; ok && j < p; ++j) {
      try {
        if (sym_sign(dot(y, coords[j])) == Sign::negative) ok = false;
      } catch (const AmbiguousSign&) {
        ok = false;
      }
    }
    if (ok) return y;
  }
  return std::nullopt;
}

// Lattice of z in Z^n with z.C_j in Z for every non-basis generator j.
std::vector<IntegerVector> form_lattice(const std::vector<SymVector>& coords, std::size_t n, const BasisPtr& basis) {
  std::vector<RationalVector> e_rows;
  std::vector<RationalVector> r_rows;
  for (const auto& cj : coords) {
    for (std::size_t k = 1; k < basis->size(); ++k) {
      RationalVector row = component(cj, k);
      if (std::any_of(row.begin(), row.end(), [](const Rational& q) { return q != 0; })) e_rows.push_back(row);
    }
    r_rows.push_back(component(cj, 0));
  }
  Integer d = 1;
  for (const auto& r : r_rows) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), lcm_of_denominators(r).get_mpz_t());
  const std::size_t p = r_rows.size();
  IntegerMatrix m(e_rows.size() + p, n + p, Integer(0));
  for (std::size_t i = 0; i < e_rows.size(); ++i) {
    IntegerVector row = clear_denominators(e_rows[i]);
    for (std::size_t j = 0; j < n; ++j) m(i, j) = row[j];
  }
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Rational s = r_rows[i][j] * Rational(d);
      m(e_rows.size() + i, j) = s.get_num();
    }
    m(e_rows.size() + i, n + i) = -d;
  }
  std::vector<IntegerVector> out;
  for (const auto& k : integer_kernel(m)) out.emplace_back(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(n));
  return out;
}

IntegerVector normalize_sign(IntegerVector v) {
  for (const auto& e : v) {
    if (e == 0) continue;
    if (e < 0)
      for (auto& x : v) x = -x;
    break;
  }
  return v;
}

Integer norm2(const IntegerVector& v) {
  Integer s = 0;
  for (const auto& e : v) s += e * e;
  return s;
}

// Shortest nonzero vector among small combinations of an LLL-reduced basis;
// ties go to the lexicographically largest after sign normalization.
IntegerVector short_lattice_vector(const std::vector<IntegerVector>& gens) {
  IntegerMatrix b = IntegerMatrix::from_rows(gens);
  const LllResult red = lll_reduce(b);
  std::vector<IntegerVector> rows;
  for (std::size_t i = 0; i < red.basis.rows(); ++i) rows.push_back(red.basis.row(i));
  const std::size_t r = rows.size();
  const std::size_t n = rows.front().size();
  IntegerVector best;
  auto consider = [&](IntegerVector v) {
    if (is_zero_vector(v)) return;
    v = normalize_sign(std::move(v));
    if (best.empty() || norm2(v) < norm2(best) || (norm2(v) == norm2(best) && v > best)) best = std::move(v);
  };
  if (r <= 6) {
    std::vector<int> coef(r, -1);
    while (true) {
      IntegerVector v(n, Integer(0));
      for (std::size_t i = 0; i < r; ++i)
        if (coef[i] != 0)
          for (std::size_t j = 0; j < n; ++j) v[j] += coef[i] * rows[i][j];
      consider(std::move(v));
      std::size_t k = 0;
      while (k < r && coef[k] == 1) coef[k++] = -1;
      if (k == r) break;
      ++coef[k];
    }
  } else {
    for (const auto& row : rows) consider(row);
  }
  return best;
}

DensityVerdict not_dense(const std::string& clause, CertificateKind kind, IntegerVector form, std::string reason) {
  DensityVerdict v;
  v.verdict = Verdict::not_dense;
  v.failed_clause = clause;
  v.certificate.kind = kind;
  v.certificate.form = std::move(form);
  v.reason = std::move(reason);
  return v;
}

DensityVerdict inconclusive(std::string bound, std::string reason) {
  DensityVerdict v;
  v.verdict = Verdict::inconclusive;
  v.search_bound = std::move(bound);
  v.reason = std::move(reason);
  return v;
}

std::string bound_text() { return "lp precision 2^-" + std::to_string(kPrecisionSteps[std::size(kPrecisionSteps) - 1]); }

// Forms for sets without a rational basis; only NotDense can be decided.
DensityVerdict check_without_basis(const GeneratorSet& a, std::size_t n, const BasisPtr& basis) {
  // Rational forms vanishing on A: every symbol component must vanish.
  {
    std::vector<RationalVector> rows;
    for (const auto& v : a)
      for (std::size_t k = 0; k < basis->size(); ++k) rows.push_back(component(v, k));
    RationalMatrix m(rows.size(), n, Rational(0));
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = rows[i][j];
    const auto ker = nullspace(m);
    if (!ker.empty())
      return not_dense("a", CertificateKind::nonnegative_form, clear_denominators(ker.front()),
                       "a nonzero rational form vanishes on A");
  }

  GeneratorSet rational_vecs, irrational_vecs;
  for (const auto& v : a) (is_rational(v) ? rational_vecs : irrational_vecs).push_back(v);

  // Forms vanishing on the rational generators.
  RationalMatrix rt(rational_vecs.size(), n, Rational(0));
  for (std::size_t i = 0; i < rational_vecs.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) rt(i, j) = rational_vecs[i][j].rational_part();
  for (const auto& l0 : nullspace(rt)) {
    for (int s : {1, -1}) {
      RationalVector l = l0;
      if (s < 0)
        for (auto& q : l) q = -q;
      bool ok = true;
      for (const auto& v : irrational_vecs) {
        try {
          if (sym_sign(dot(l, v)) == Sign::negative) ok = false;
        } catch (const AmbiguousSign&) {
          ok = false;
        }
        if (!ok) break;
      }
      if (ok) return not_dense("a", CertificateKind::nonnegative_form, clear_denominators(l), "generators lie in a closed half-space");
    }
  }

  // Max-margin separating form on approximations: l.a_j >= s, |l_i| <= 1,
  // maximize s. Columns: l+ (n), l- (n), s, slack per generator (m), box slack (n).
  for (unsigned bits : kPrecisionSteps) {
    const std::size_t m = a.size();
    const std::size_t nv = 3 * n + 1 + m;
    RationalMatrix lp(m + n, nv, Rational(0));
    RationalVector b(m + n, Rational(0));
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t i = 0; i < n; ++i) {
        const Rational q = approximate(a[j][i], bits);
        lp(j, i) = q;
        lp(j, n + i) = -q;
      }
      lp(j, 2 * n) = -1;
      lp(j, 2 * n + 1 + j) = -1;
    }
    for (std::size_t i = 0; i < n; ++i) {
      lp(m + i, i) = 1;
      lp(m + i, n + i) = 1;
      lp(m + i, 2 * n + 1 + m + i) = 1;
      b[m + i] = 1;
    }
    RationalVector c(nv, Rational(0));
    c[2 * n] = 1;
    const LpResult r = solve_lp(lp, b, c);
    if (r.status != LpStatus::optimal || r.value <= 0) continue;
    RationalVector l(n);
    for (std::size_t i = 0; i < n; ++i) l[i] = r.x[i] - r.x[n + i];
    bool ok = true;
    try {
      ok = nonnegative_on(l, a);
    } catch (const AmbiguousSign&) {
      ok = false;
    }
    if (ok && !is_zero_vector(clear_denominators(l)))
      return not_dense("a", CertificateKind::nonnegative_form, clear_denominators(l), "separating form found");
  }

  // Rational forms with integer values: irrational parts vanish.
  std::vector<RationalVector> e_rows;
  for (const auto& v : a)
    for (std::size_t k = 1; k < basis->size(); ++k) e_rows.push_back(component(v, k));
  RationalMatrix e(e_rows.size(), n, Rational(0));
  for (std::size_t i = 0; i < e_rows.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) e(i, j) = e_rows[i][j];
  const auto ker = nullspace(e);
  if (!ker.empty()) {
    IntegerVector l1 = primitive_integer_vector(ker.front());
    RationalVector values;
    for (const auto& v : a) values.push_back(dot(to_rational(l1), rational_values(v)));
    const Integer d = lcm_of_denominators(values);
    for (auto& x : l1) x *= d;
    return not_dense("b", CertificateKind::integer_form, l1, "rational form with integer values");
  }
  return inconclusive(bound_text(), "no rational basis among the generators and no rational certificate found");
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::dense: return "Dense";
    case Verdict::not_dense: return "NotDense";
    case Verdict::inconclusive: return "Inconclusive";
  }
  return "?";
}

std::string to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::none: return "none";
    case CertificateKind::positive_combination: return "positive_combination";
    case CertificateKind::nonnegative_form: return "nonnegative_form";
    case CertificateKind::integer_form: return "integer_form";
  }
  return "?";
}

std::string to_string(LineKind k) {
  switch (k) {
    case LineKind::dense_in_r: return "DenseInR";
    case LineKind::discrete_cyclic: return "DiscreteCyclic";
    case LineKind::one_sided_discrete: return "OneSidedDiscrete";
  }
  return "?";
}

SymVector rational_vector(const BasisPtr& basis, const RationalVector& v) {
  SymVector out;
  out.reserve(v.size());
  for (const auto& q : v) out.emplace_back(basis, q);
  return out;
}

LineClass classify_line_semigroup(const std::vector<SymReal>& gens, double dead_zone) {
  if (gens.empty()) throw InputError("classify_line_semigroup needs at least one generator");
  bool pos = false, neg = false;
  for (const auto& g : gens) {
    switch (sym_sign(g, dead_zone)) {
      case Sign::zero: throw InputError("zero generator; drop zeros first");
      case Sign::positive: pos = true; break;
      case Sign::negative: neg = true; break;
    }
  }
  LineClass out;
  if (!(pos && neg)) {
    out.kind = LineKind::one_sided_discrete;
    out.sign = pos ? Sign::positive : Sign::negative;
    return out;
  }
  if (rational_rank(coefficient_matrix(gens)) >= 2) {
    out.kind = LineKind::dense_in_r;
    return out;
  }
  // All generators are rational multiples q_i of x0.
  const SymReal& x0 = gens.front();
  std::size_t k = 0;
  while (x0.coeffs()[k] == 0) ++k;
  Integer num_gcd = 0, den_lcm = 1;
  for (const auto& g : gens) {
    const SymReal gr = g.rebase(common_basis(g.basis(), x0.basis()));
    Rational q = gr.coeff(k) / x0.coeff(k);
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den_mpz_t());
  }
  SymReal g = x0 * make_rational(num_gcd, den_lcm);
  if (sym_sign(g, dead_zone) == Sign::negative) g = -g;
  out.kind = LineKind::discrete_cyclic;
  out.generator = g;
  return out;
}

ConeResult cone_is_dense(const GeneratorSet& a_in, std::size_t n) {
  if (n == 0) throw InputError("ambient dimension must be at least 1");
  if (a_in.empty()) throw InputError("empty generator set");
  check_dimensions(a_in, n);
  const BasisPtr basis = set_basis(a_in);
  const GeneratorSet a = rebased(a_in, basis);
  ConeResult out;
  const auto rb = find_rational_basis(a, n, basis);
  if (!rb) {
    DensityVerdict v = check_without_basis(a, n, basis);
    if (v.verdict == Verdict::not_dense && v.certificate.kind == CertificateKind::nonnegative_form) {
      out.form = v.certificate.form;
      return out;
    }
    out.decided = false;
    out.search_bound = bound_text();
    return out;
  }
  const MuSearch ms = search_mu(rb->coords, n);
  if (ms.mu) {
    out.dense = true;
    out.lambda.assign(a.size(), SymReal(basis));
    for (std::size_t i = 0; i < n; ++i) {
      SymVector row;
      for (const auto& cj : rb->coords) row.push_back(cj[i]);
      out.lambda[rb->basis_idx[i]] = -dot(*ms.mu, row);
    }
    for (std::size_t j = 0; j < rb->other_idx.size(); ++j) out.lambda[rb->other_idx[j]] = SymReal(basis, (*ms.mu)[j]);
    return out;
  }
  if (auto y = search_basis_form(rb->coords, n)) {
    out.form = clear_denominators(form_from_basis_values(*rb, *y));
    return out;
  }
  out.decided = false;
  out.search_bound = bound_text();
  return out;
}

DensityVerdict check_dense_rn(const GeneratorSet& a_in, std::size_t n) {
  if (n == 0) throw InputError("ambient dimension must be at least 1");
  if (a_in.empty()) {
    IntegerVector e1(n, Integer(0));
    e1[0] = 1;
    return not_dense("a", CertificateKind::nonnegative_form, e1, "empty set");
  }
  check_dimensions(a_in, n);
  const BasisPtr basis = set_basis(a_in);
  const GeneratorSet a = rebased(a_in, basis);
  const auto rb = find_rational_basis(a, n, basis);
  if (!rb) return check_without_basis(a, n, basis);

  const MuSearch ms = search_mu(rb->coords, n);
  if (!ms.mu) {
    if (auto y = search_basis_form(rb->coords, n))
      return not_dense("a", CertificateKind::nonnegative_form, clear_denominators(form_from_basis_values(*rb, *y)),
                       "0 is not interior to the convex hull: a nonzero form is nonnegative on A");
    return inconclusive(bound_text(), "cone interiority undecided at the final precision");
  }

  const auto lattice = form_lattice(rb->coords, n, basis);
  if (!lattice.empty()) {
    const IntegerVector z = short_lattice_vector(lattice);
    DensityVerdict v = not_dense("b", CertificateKind::integer_form,
                                 clear_denominators(form_from_basis_values(*rb, to_rational(z))),
                                 "a nonzero form takes integer values on A");
    v.certificate.lattice_rank = lattice.size();
    return v;
  }

  DensityVerdict v;
  v.verdict = Verdict::dense;
  v.certificate.kind = CertificateKind::positive_combination;
  v.certificate.basis_indices = rb->basis_idx;
  v.certificate.lambda.assign(a.size(), SymReal(basis));
  for (std::size_t i = 0; i < n; ++i) {
    SymVector row;
    for (const auto& cj : rb->coords) row.push_back(cj[i]);
    v.certificate.lambda[rb->basis_idx[i]] = -dot(*ms.mu, row);
  }
  for (std::size_t j = 0; j < rb->other_idx.size(); ++j)
    v.certificate.lambda[rb->other_idx[j]] = SymReal(basis, (*ms.mu)[j]);
  v.certificate.lattice_rank = 0;
  v.reason = "0 is interior to the convex hull and only the zero form is integral on A";
  return v;
}

namespace {

// Shared core of the structured checks: basis columns (rational), the last
// vector, and the index from which coordinate signs are constrained.
DensityVerdict structured_core(const std::vector<RationalVector>& basis_cols, const SymVector& last, std::size_t sign_from,
                               const BasisPtr& basis) {
  const std::size_t n = last.size();
  RationalMatrix m(n, n, Rational(0));
  for (std::size_t c = 0; c < basis_cols.size(); ++c)
    for (std::size_t i = 0; i < n; ++i) m(i, c) = basis_cols[c][i];

  if (rational_rank(m) < n) {
    RationalVector l = nullspace(m.transpose()).front();
    if (sym_sign(dot(l, last)) == Sign::negative)
      for (auto& q : l) q = -q;
    return not_dense("a", CertificateKind::nonnegative_form, clear_denominators(l), "the basis vectors are linearly dependent");
  }
  const RationalMatrix inv = *inverse(m);
  const SymVector alpha = apply(inv, last, basis);
  for (std::size_t i = sign_from; i < n; ++i) {
    if (sym_sign(alpha[i]) != Sign::negative) {
      DensityVerdict v = not_dense("b", CertificateKind::nonnegative_form, clear_denominators(inv.row(i)),
                                   "coordinate alpha_" + std::to_string(i + 1) + " is not negative");
      v.certificate.alpha = alpha;
      return v;
    }
  }
  std::vector<SymReal> with_one{SymReal(basis, Rational(1))};
  with_one.insert(with_one.end(), alpha.begin(), alpha.end());
  const Independence ind = is_q_independent(with_one);
  if (!ind.independent) {
    RationalVector z(n);
    for (std::size_t i = 0; i < n; ++i) z[i] = ind.witness[i + 1];
    RationalVector l(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) l[i] += inv(k, i) * z[k];
    DensityVerdict v = not_dense("b", CertificateKind::integer_form, clear_denominators(l),
                                 "1 and the coordinates alpha are linearly dependent over Q");
    v.certificate.alpha = alpha;
    v.certificate.lattice_rank = 1;
    return v;
  }
  DensityVerdict v;
  v.verdict = Verdict::dense;
  v.certificate.kind = CertificateKind::positive_combination;
  v.certificate.alpha = alpha;
  v.reason = "basis with negative, Q-independent coordinates";
  return v;
}

}  // namespace

DensityVerdict check_dense_rn_structured(const GeneratorSet& v_in, const SymVector& v_last) {
  const std::size_t n = v_last.size();
  if (v_in.size() != n) throw InputError("structured check needs exactly n basis vectors");
  GeneratorSet all = v_in;
  all.push_back(v_last);
  check_dimensions(all, n);
  const BasisPtr basis = set_basis(all);
  all = rebased(all, basis);
  if (!std::all_of(all.begin(), all.end() - 1, is_rational)) return check_dense_rn(all, n);

  std::vector<RationalVector> cols;
  for (std::size_t i = 0; i < n; ++i) cols.push_back(rational_values(all[i]));
  DensityVerdict v = structured_core(cols, all.back(), 0, basis);
  if (v.verdict == Verdict::dense) {
    for (std::size_t i = 0; i < n; ++i) {
      v.certificate.lambda.push_back(-v.certificate.alpha[i]);
      v.certificate.basis_indices.push_back(i);
    }
    v.certificate.lambda.emplace_back(basis, Rational(1));
  }
  return v;
}

void AbelianGroupSpec::validate() const {
  if (t > n) throw InputError("torus dimension exceeds the group dimension");
  if (gamma_basis.size() != t) throw InputError("lattice basis must have exactly t vectors");
  for (const auto& g : gamma_basis)
    if (g.size() != n) throw InputError("lattice vector of the wrong dimension");
  if (t > 0) {
    RationalMatrix m = RationalMatrix::from_rows(gamma_basis);
    if (rational_rank(m) != t) throw InputError("lattice basis is rank-deficient");
  }
  if (component_count == 0) throw InputError("component count must be at least 1");
  if ((component_gens == 0) != (component_count == 1))
    throw InputError("component generator count must be 0 exactly when the group is connected");
}

AbelianGroupSpec connected_spec(std::size_t n, std::size_t t, std::vector<RationalVector> gamma_basis) {
  AbelianGroupSpec s;
  s.n = n;
  s.t = t;
  if (t > n) throw InputError("torus dimension exceeds the group dimension");
  if (gamma_basis.empty() && t > 0) {
    for (std::size_t i = 0; i < t; ++i) {
      RationalVector e(n, Rational(0));
      e[i] = 1;
      gamma_basis.push_back(e);
    }
  }
  s.gamma_basis = std::move(gamma_basis);
  s.validate();
  return s;
}

GeneratorSet group_verification_set(const AbelianGroupSpec& spec, const GeneratorSet& w) {
  BasisPtr basis = set_basis(w);
  GeneratorSet out = rebased(w, basis);
  for (const auto& g : spec.gamma_basis) out.push_back(rational_vector(basis, g));
  for (const auto& g : spec.gamma_basis) {
    RationalVector neg = g;
    for (auto& q : neg) q = -q;
    out.push_back(rational_vector(basis, neg));
  }
  return out;
}

DensityVerdict check_dense_group_exp(const AbelianGroupSpec& spec, const GeneratorSet& w_in) {
  spec.validate();
  const std::size_t n = spec.n;
  const std::size_t t = spec.t;
  if (w_in.size() != n + 1 - t)
    throw InputError("expected " + std::to_string(n + 1 - t) + " Lie algebra vectors, got " + std::to_string(w_in.size()));
  check_dimensions(w_in, n);
  if (n == 0) {
    DensityVerdict v;
    v.verdict = Verdict::dense;
    v.reason = "trivial group";
    return v;
  }
  const BasisPtr basis = set_basis(w_in);
  const GeneratorSet w = rebased(w_in, basis);
  const GeneratorSet full = group_verification_set(spec, w);
  if (!std::all_of(w.begin(), w.end() - 1, is_rational)) return check_dense_rn(full, n);

  std::vector<RationalVector> cols = spec.gamma_basis;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) cols.push_back(rational_values(w[i]));
  DensityVerdict v = structured_core(cols, w.back(), t, basis);
  if (v.verdict != Verdict::dense) return v;

  // Positive combination over W, Gamma, -Gamma.
  const auto& alpha = v.certificate.alpha;
  const std::size_t wn = w.size();
  auto& lambda = v.certificate.lambda;
  lambda.assign(full.size(), SymReal(basis));
  for (std::size_t i = 0; i + 1 < wn; ++i) lambda[i] = -alpha[t + i];
  lambda[wn - 1] = SymReal(basis, Rational(1));
  for (std::size_t k = 0; k < t; ++k) {
    const SymReal one(basis, Rational(1));
    if (sym_sign(alpha[k]) == Sign::negative) {
      lambda[wn + k] = one - alpha[k];
      lambda[wn + t + k] = one;
    } else {
      lambda[wn + k] = one;
      lambda[wn + t + k] = one + alpha[k];
    }
  }
  for (std::size_t i = 0; i + 1 < wn; ++i) v.certificate.basis_indices.push_back(i);
  for (std::size_t k = 0; k < t; ++k) v.certificate.basis_indices.push_back(wn + k);
  return v;
}

std::size_t min_generators(const AbelianGroupSpec& spec) {
  spec.validate();
  if (spec.n == 0) return spec.component_gens;
  return std::max(spec.n - spec.t + 1, spec.component_gens);
}

bool verify_certificate(const GeneratorSet& a_in, std::size_t n, const DensityVerdict& v) {
  try {
    check_dimensions(a_in, n);
    const BasisPtr basis = set_basis(a_in);
    const GeneratorSet a = rebased(a_in, basis);
    const Certificate& c = v.certificate;
    switch (v.verdict) {
      case Verdict::inconclusive:
        return !v.search_bound.empty();
      case Verdict::not_dense: {
        if (c.form.size() != n || is_zero_vector(c.form)) return false;
        const RationalVector l = to_rational(c.form);
        if (c.kind == CertificateKind::nonnegative_form) return nonnegative_on(l, a);
        if (c.kind == CertificateKind::integer_form) return integral_on(l, a);
        return false;
      }
      case Verdict::dense: {
        if (c.kind != CertificateKind::positive_combination || c.lambda.size() != a.size()) return false;
        for (const auto& lam : c.lambda)
          if (sym_sign(lam) != Sign::positive) return false;
        for (std::size_t i = 0; i < n; ++i) {
          SymPoly s;
          for (std::size_t j = 0; j < a.size(); ++j) s += SymPoly(c.lambda[j]) * SymPoly(a[j][i]);
          if (!s.is_zero()) return false;
        }
        if (c.basis_indices.size() != n) return false;
        RationalMatrix m(n, n);
        for (std::size_t k = 0; k < n; ++k) {
          const std::size_t idx = c.basis_indices[k];
          if (idx >= a.size() || !is_rational(a[idx])) return false;
          for (std::size_t i = 0; i < n; ++i) m(i, k) = a[idx][i].rational_part();
        }
        if (rational_rank(m) != n) return false;
        const RationalMatrix inv = *inverse(m);
        std::vector<SymVector> coords;
        for (std::size_t j = 0; j < a.size(); ++j)
          if (std::find(c.basis_indices.begin(), c.basis_indices.end(), j) == c.basis_indices.end())
            coords.push_back(apply(inv, a[j], basis));
        return form_lattice(coords, n, basis).empty();
      }
    }
  } catch (const std::exception&) {
    return false;
  }
  return false;
}

bool verify_group_certificate(const AbelianGroupSpec& spec, const GeneratorSet& w, const DensityVerdict& v) {
  if (spec.n == 0) return v.verdict == Verdict::dense;
  return verify_certificate(group_verification_set(spec, w), spec.n, v);
}

}  // namespace abeldense
