#include "abeldense/construct.hpp"

#include <cmath>
#include <numbers>

#include "abeldense/error.hpp"

namespace abeldense {

namespace {

struct ClassName {
  TupleClass c;
  const char* name;
  GroupClass group;
  Field field;
};

constexpr ClassName kClassNames[] = {
    {TupleClass::diagonal_c, "DiagonalC", GroupClass::diag_complex_to_gl, Field::complex},
    {TupleClass::rotation_scaling_r, "RotationScalingR", GroupClass::gl_real_even, Field::real},
    {TupleClass::odd_r, "OddR", GroupClass::gl_real_odd, Field::real},
    {TupleClass::toeplitz_c, "ToeplitzC", GroupClass::toeplitz_complex, Field::complex},
    {TupleClass::toeplitz_r, "ToeplitzR", GroupClass::toeplitz_real, Field::real},
    {TupleClass::triangular_r, "TriangularR", GroupClass::triangular_real, Field::real},
    {TupleClass::triangular_c, "TriangularC", GroupClass::triangular_complex, Field::complex},
    {TupleClass::diagonal_r, "DiagonalR", GroupClass::diagonal_real, Field::real},
};

const ClassName& class_entry(TupleClass c) {
  for (const auto& e : kClassNames)
    if (e.c == c) return e;
  throw std::logic_error("unregistered tuple class");
}

ComplexPoly cmul(const ComplexPoly& x, const ComplexPoly& y) {
  return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}

ComplexPoly cadd(const ComplexPoly& x, const ComplexPoly& y) { return {x.re + y.re, x.im + y.im}; }

ComplexPoly cscale(const ComplexPoly& x, const Rational& q) { return {x.re * SymPoly(q), x.im * SymPoly(q)}; }

void put_complex(PolyMatrix& m, std::size_t i, std::size_t j, const ComplexPoly& z) {
  m(2 * i, 2 * j) = z.re;
  m(2 * i, 2 * j + 1) = -z.im;
  m(2 * i + 1, 2 * j) = z.im;
  m(2 * i + 1, 2 * j + 1) = z.re;
}

template <typename T, typename Mul, typename Add>
std::vector<T> truncated_product(const std::vector<T>& a, const std::vector<T>& b, Mul mul, Add add) {
  const std::size_t n = a.size();
  std::vector<T> r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; i + j < n; ++j) r[i + j] = add(r[i + j], mul(a[i], b[j]));
  return r;
}

// sum_{k<n} p^k / k! for a profile with p_0 = 0.
template <typename T, typename Mul, typename Add, typename Scale>
std::vector<T> truncated_exp(const std::vector<T>& p, const T& one, Mul mul, Add add, Scale scale) {
  const std::size_t n = p.size();
  std::vector<T> result(n), power(n);
  if (n == 0) return result;
  power[0] = one;
  result[0] = one;
  Integer fact = 1;
  for (std::size_t k = 1; k < n; ++k) {
    power = truncated_product(power, p, mul, add);
    fact *= static_cast<unsigned long>(k);
    const Rational inv(Integer(1), fact);
    for (std::size_t i = 0; i < n; ++i) result[i] = add(result[i], scale(power[i], inv));
  }
  return result;
}

const auto kPolyMul = [](const SymPoly& a, const SymPoly& b) { return a * b; };
const auto kPolyAdd = [](const SymPoly& a, const SymPoly& b) { return a + b; };
const auto kPolyScale = [](const SymPoly& a, const Rational& q) { return a * SymPoly(q); };

SymReal linear(const SymPoly& p, const BasisPtr& basis) {
  BasisPtr b = common_basis(basis, p.basis());
  auto x = p.to_symreal(b);
  if (!x) throw InputError("exponent must be a linear symbolic value");
  return *x;
}

std::size_t complex_coords(TupleClass c, std::size_t n) {
  switch (c) {
    case TupleClass::diagonal_c: return n;
    case TupleClass::rotation_scaling_r: return n / 2;
    case TupleClass::odd_r: return (n - 1) / 2;
    default: return 0;
  }
}

PolyMatrix lie_matrix(TupleClass c, std::size_t n, const SymVector& v, ExpSymbols& syms) {
  const BasisPtr& basis = syms.basis();
  switch (c) {
    case TupleClass::diagonal_c:
    case TupleClass::rotation_scaling_r:
    case TupleClass::odd_r: {
      const std::size_t k = complex_coords(c, n);
      const std::size_t dim = c == TupleClass::diagonal_c ? 2 * n : n;
      PolyMatrix m(dim, dim, SymPoly(0));
      for (std::size_t i = 0; i < k; ++i) put_complex(m, i, i, syms.exp_turns(v[i], v[k + i]));
      if (c == TupleClass::odd_r) m(dim - 1, dim - 1) = syms.exp_real(v[2 * k]);
      return m;
    }
    case TupleClass::diagonal_r: {
      PolyMatrix m(n, n, SymPoly(0));
      for (std::size_t i = 0; i < n; ++i) m(i, i) = syms.exp_real(v[i]);
      return m;
    }
    case TupleClass::toeplitz_r:
    case TupleClass::triangular_r: {
      std::vector<SymPoly> profile(v.begin(), v.end());
      return exp_toeplitz(profile, &syms).dense();
    }
    case TupleClass::toeplitz_c: {
      // v = (theta0, a0, a1, b1, ..., a_{n-1}, b_{n-1})
      std::vector<ComplexPoly> p(n);
      for (std::size_t k = 1; k < n; ++k) p[k] = {SymPoly(v[2 * k]), SymPoly(v[2 * k + 1])};
      std::vector<ComplexPoly> e = truncated_exp(p, ComplexPoly{SymPoly(1), SymPoly(0)}, cmul, cadd, cscale);
      const ComplexPoly s = syms.exp_turns(v[0], v[1]);
      PolyMatrix m(2 * n, 2 * n, SymPoly(0));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) put_complex(m, i, j, cmul(s, e[j - i]));
      return m;
    }
    case TupleClass::triangular_c: {
      // v = (theta_1..theta_k, thetaT, a_1..a_k, aT0, aT1, bT1), k = n - 2
      const std::size_t k = n - 2;
      PolyMatrix m(2 * n, 2 * n, SymPoly(0));
      for (std::size_t i = 0; i < k; ++i) put_complex(m, i, i, syms.exp_turns(v[i], v[k + 1 + i]));
      const ComplexPoly s = syms.exp_turns(v[k], v[2 * k + 1]);
      const ComplexPoly p1{SymPoly(v[2 * k + 2]), SymPoly(v[2 * k + 3])};
      put_complex(m, k, k, s);
      put_complex(m, k + 1, k + 1, s);
      put_complex(m, k, k + 1, cmul(s, p1));
      return m;
    }
  }
  (void)basis;
  throw std::logic_error("unhandled tuple class");
}

std::vector<SymPoly> base_point_for(TupleClass c, std::size_t n) {
  auto complex_point = [](const std::vector<Rational>& re) {
    std::vector<SymPoly> x;
    for (const auto& q : re) {
      x.emplace_back(q);
      x.emplace_back(0);
    }
    return x;
  };
  switch (c) {
    case TupleClass::diagonal_c: return complex_point(std::vector<Rational>(n, Rational(1)));
    case TupleClass::rotation_scaling_r:
    case TupleClass::odd_r:
    case TupleClass::diagonal_r: return std::vector<SymPoly>(n, SymPoly(1));
    case TupleClass::toeplitz_r:
    case TupleClass::triangular_r: {
      std::vector<SymPoly> x;
      for (std::size_t k = 1; k <= n; ++k) x.emplace_back(make_rational(Integer(static_cast<unsigned long>(k)), Integer(static_cast<unsigned long>(n))));
      return x;
    }
    case TupleClass::toeplitz_c: {
      std::vector<Rational> re;
      for (std::size_t k = 1; k <= n; ++k) re.push_back(make_rational(Integer(static_cast<unsigned long>(k)), Integer(static_cast<unsigned long>(n))));
      return complex_point(re);
    }
    case TupleClass::triangular_c: {
      std::vector<Rational> re(n - 2, Rational(1));
      re.emplace_back(1, 2);
      re.emplace_back(1);
      return complex_point(re);
    }
  }
  throw std::logic_error("unhandled tuple class");
}

bool complex_zero(const std::vector<SymPoly>& x, std::size_t i) { return x[2 * i].is_zero() && x[2 * i + 1].is_zero(); }

}  // namespace

std::string to_string(TupleClass c) { return class_entry(c).name; }

std::optional<TupleClass> parse_tuple_class(std::string_view name) {
  for (const auto& e : kClassNames)
    if (name == e.name) return e.c;
  if (auto g = parse_group_class(name)) {
    switch (*g) {
      case GroupClass::gl_complex:
      case GroupClass::diag_complex_to_gl: return TupleClass::diagonal_c;
      case GroupClass::gl_real_even: return TupleClass::rotation_scaling_r;
      case GroupClass::gl_real_odd: return TupleClass::odd_r;
      case GroupClass::toeplitz_complex: return TupleClass::toeplitz_c;
      case GroupClass::toeplitz_real: return TupleClass::toeplitz_r;
      case GroupClass::triangular_real: return TupleClass::triangular_r;
      case GroupClass::triangular_complex: return TupleClass::triangular_c;
      case GroupClass::diagonal_real: return TupleClass::diagonal_r;
    }
  }
  return std::nullopt;
}

GroupClass group_class_of(TupleClass c) { return class_entry(c).group; }
Field field_of(TupleClass c) { return class_entry(c).field; }

const std::vector<TupleClass>& all_tuple_classes() {
  static const std::vector<TupleClass> v = [] {
    std::vector<TupleClass> out;
    for (const auto& e : kClassNames) out.push_back(e.c);
    return out;
  }();
  return v;
}

std::size_t ExpSymbols::add(const std::string& name, double value, const std::string& meaning) {
  if (!std::isfinite(value)) throw InputError("exponential overflows: " + meaning);
  basis_ = extend_basis(basis_, {{name, value}});
  fresh_.emplace_back(name, meaning);
  return basis_->size() - 1;
}

SymPoly ExpSymbols::exp_real(const SymReal& a) {
  if (a.is_zero()) return SymPoly(1);
  const std::string key = "r:" + to_string(a);
  auto it = cache_.find(key);
  if (it == cache_.end()) {
    const std::string k = std::to_string(++counter_);
    const std::size_t idx = add("exp_c0_" + k, std::exp(sym_eval(a)), "exp(" + to_string(a) + ")");
    it = cache_.emplace(key, std::vector<std::size_t>{idx}).first;
  }
  return SymPoly::symbol(basis_, it->second[0]);
}

ComplexPoly ExpSymbols::exp_turns(const SymReal& theta, const SymReal& a) {
  if (theta.is_rational() && theta.rational_part().get_den() == 1) return {exp_real(a), SymPoly(0)};
  const std::string key = "c:" + to_string(theta) + ";" + to_string(a);
  auto it = cache_.find(key);
  if (it == cache_.end()) {
    const std::string k = std::to_string(++counter_);
    const double mag = std::exp(sym_eval(a));
    const double ang = 2 * std::numbers::pi * sym_eval(theta);
    const std::string arg = "exp(" + to_string(a) + ") * ";
    const std::size_t re = add("expre_c0_" + k, mag * std::cos(ang), arg + "cos(2 pi (" + to_string(theta) + "))");
    const std::size_t im = add("expim_c0_" + k, mag * std::sin(ang), arg + "sin(2 pi (" + to_string(theta) + "))");
    it = cache_.emplace(key, std::vector<std::size_t>{re, im}).first;
  }
  return {SymPoly::symbol(basis_, it->second[0]), SymPoly::symbol(basis_, it->second[1])};
}

GeneratorSet make_dense_rn_generators(std::size_t n) {
  if (n == 0) throw InputError("dimension must be at least 1");
  return make_dense_group_generators(connected_spec(n, 0));
}

std::vector<RationalVector> complete_basis(const AbelianGroupSpec& spec) {
  spec.validate();
  std::vector<RationalVector> rows = spec.gamma_basis;
  std::vector<RationalVector> added;
  for (std::size_t i = 0; i < spec.n && rows.size() < spec.n; ++i) {
    RationalVector e(spec.n, Rational(0));
    e[i] = 1;
    rows.push_back(e);
    if (rational_rank(RationalMatrix::from_rows(rows)) < rows.size()) {
      rows.pop_back();
      continue;
    }
    added.push_back(e);
  }
  return added;
}

GeneratorSet make_dense_group_generators(const AbelianGroupSpec& spec, const std::vector<RationalVector>& completion_in) {
  spec.validate();
  if (spec.component_count != 1) throw InputError("dense generators are constructed for connected groups only");
  const std::size_t n = spec.n;
  if (n == 0) return {SymVector{}};
  const std::vector<RationalVector> completion = completion_in.empty() ? complete_basis(spec) : completion_in;
  std::vector<RationalVector> all = spec.gamma_basis;
  all.insert(all.end(), completion.begin(), completion.end());
  if (all.size() != n || rational_rank(RationalMatrix::from_rows(all)) != n)
    throw InputError("lattice basis and completion do not form a basis");

  // alpha_i = -sqrt(p_i) for the odd primes 3, 5, 7, ...; basis index i + 2.
  const BasisPtr basis = sqrt_primes(n + 1);
  GeneratorSet w;
  for (const auto& c : completion) w.push_back(rational_vector(basis, c));
  SymVector last(n, SymReal(basis));
  for (std::size_t i = 0; i < n; ++i) {
    const SymReal alpha = SymReal::symbol(basis, i + 2, Rational(-1));
    for (std::size_t k = 0; k < n; ++k)
      if (all[i][k] != 0) last[k] += alpha * all[i][k];
  }
  w.push_back(std::move(last));
  return w;
}

AbelianGroupSpec tuple_spec(TupleClass c, std::size_t n) {
  switch (c) {
    case TupleClass::diagonal_c: return connected_spec(2 * n, n);
    case TupleClass::rotation_scaling_r: return connected_spec(n, n / 2);
    case TupleClass::odd_r: return connected_spec(n, (n - 1) / 2);
    case TupleClass::toeplitz_c: return connected_spec(2 * n, 1);
    case TupleClass::toeplitz_r:
    case TupleClass::triangular_r:
    case TupleClass::diagonal_r: return connected_spec(n, 0);
    case TupleClass::triangular_c: return connected_spec(2 * n, n - 1);
  }
  throw std::logic_error("unhandled tuple class");
}

MatrixTuple make_hypercyclic_tuple(TupleClass c, std::size_t n) {
  if (c == TupleClass::triangular_c && n == 1)
    throw NonConstructive("a 1x1 complex triangular matrix is diagonal; no non-diagonalizable tuple exists");
  const GroupCount count = m_of_G(group_class_of(c), n);

  MatrixTuple t;
  t.field = field_of(c);
  t.size = n;
  t.tuple_class = c;
  t.lie.spec = tuple_spec(c, n);

  std::vector<RationalVector> completion;
  if (c == TupleClass::triangular_r && n >= 2) {
    // e_1 + e_2 first so every generator has a nonzero nilpotent part.
    for (std::size_t i = 0; i < n; ++i) {
      RationalVector e(n, Rational(0));
      e[i] = 1;
      if (i == 0) e[1] = 1;
      completion.push_back(e);
    }
  }
  t.lie.vectors = make_dense_group_generators(t.lie.spec, completion);

  ExpSymbols syms(t.lie.vectors.front().empty() ? sqrt_primes(1) : t.lie.vectors.front().front().basis());
  for (const auto& w : t.lie.vectors) t.matrices.push_back(lie_matrix(c, n, w, syms));
  t.basis = syms.basis();
  t.fresh_symbols = syms.fresh();
  t.base_point = base_point_for(c, n);
  if (t.matrices.size() != count.m) throw std::logic_error("constructed tuple size differs from m(G)");
  t.notes.push_back("square roots of distinct primes are Q-independent (classical)");
  if (!t.fresh_symbols.empty())
    t.notes.push_back("exponential symbols are declared Q-independent of the other symbols, not proven");
  return t;
}

PolyMatrix ToeplitzMatrix::dense() const {
  const std::size_t n = profile.size();
  PolyMatrix m(n, n, SymPoly(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = profile[j - i];
  return m;
}

ToeplitzMatrix toeplitz_product(const ToeplitzMatrix& a, const ToeplitzMatrix& b) {
  if (a.profile.size() != b.profile.size()) throw InputError("Toeplitz size mismatch");
  return {truncated_product(a.profile, b.profile, kPolyMul, kPolyAdd)};
}

ToeplitzMatrix exp_toeplitz(const std::vector<SymPoly>& c, ExpSymbols* symbols) {
  const std::size_t n = c.size();
  if (n == 0) return {};
  std::vector<SymPoly> p = c;
  p[0] = SymPoly(0);
  std::vector<SymPoly> e = truncated_exp(p, SymPoly(1), kPolyMul, kPolyAdd, kPolyScale);
  if (!c[0].is_zero()) {
    if (!symbols) throw InputError("exp of a nonzero diagonal needs an exponential symbol table");
    const SymPoly s = symbols->exp_real(linear(c[0], symbols->basis()));
    for (auto& x : e) x = x * s;
  }
  return {e};
}

bool commutes_exactly(const PolyMatrix& a, const PolyMatrix& b) {
  const PolyMatrix d = a * b - b * a;
  for (const auto& x : d.data())
    if (!x.is_zero()) return false;
  return true;
}

std::optional<bool> is_invertible(const PolyMatrix& m) {
  if (!m.square()) return false;
  const std::size_t n = m.rows();
  std::vector<std::size_t> block(n);
  std::vector<std::size_t> starts;
  for (std::size_t i = 0; i < n;) {
    starts.push_back(i);
    const bool two = i + 1 < n && !m(i + 1, i).is_zero();
    block[i] = starts.size() - 1;
    if (two) block[i + 1] = starts.size() - 1;
    i += two ? 2 : 1;
  }
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (block[r] > block[c] && !m(r, c).is_zero()) return std::nullopt;
  for (std::size_t b = 0; b < starts.size(); ++b) {
    const std::size_t i = starts[b];
    const bool two = b + 1 < starts.size() ? starts[b + 1] - i == 2 : n - i == 2;
    const SymPoly det = two ? m(i, i) * m(i + 1, i + 1) - m(i, i + 1) * m(i + 1, i) : m(i, i);
    if (sym_sign(det) == Sign::zero) return false;
  }
  return true;
}

BasePointCheck check_base_point(const MatrixTuple& t) {
  const auto& x = t.base_point;
  const std::size_t n = t.size;
  auto fail = [](std::string reason) { return BasePointCheck{false, std::move(reason)}; };
  switch (t.tuple_class) {
    case TupleClass::diagonal_c:
      for (std::size_t i = 0; i < n; ++i)
        if (complex_zero(x, i)) return fail("coordinate " + std::to_string(i + 1) + " zero");
      break;
    case TupleClass::rotation_scaling_r:
    case TupleClass::odd_r: {
      const std::size_t k = complex_coords(t.tuple_class, n);
      for (std::size_t i = 0; i < k; ++i)
        if (complex_zero(x, i)) return fail("block " + std::to_string(i + 1) + " zero");
      if (t.tuple_class == TupleClass::odd_r && x[n - 1].is_zero()) return fail("coordinate " + std::to_string(n) + " zero");
      break;
    }
    case TupleClass::diagonal_r:
      for (std::size_t i = 0; i < n; ++i)
        if (x[i].is_zero()) return fail("coordinate " + std::to_string(i + 1) + " zero");
      break;
    case TupleClass::toeplitz_r:
    case TupleClass::triangular_r:
      if (x[n - 1].is_zero()) return fail("last coordinate zero");
      break;
    case TupleClass::toeplitz_c:
      if (complex_zero(x, n - 1)) return fail("last coordinate zero");
      break;
    case TupleClass::triangular_c:
      for (std::size_t i = 0; i + 2 < n; ++i)
        if (complex_zero(x, i)) return fail("coordinate " + std::to_string(i + 1) + " zero");
      if (complex_zero(x, n - 1)) return fail("last coordinate zero");
      break;
  }
  return {};
}

Matrix<ComplexPoly> complex_view(const PolyMatrix& m) {
  if (m.rows() % 2 || m.cols() % 2) throw InputError("real representation of odd size");
  Matrix<ComplexPoly> out(m.rows() / 2, m.cols() / 2);
  for (std::size_t i = 0; i < out.rows(); ++i)
    for (std::size_t j = 0; j < out.cols(); ++j) out(i, j) = {m(2 * i, 2 * j), m(2 * i + 1, 2 * j)};
  return out;
}

std::vector<ComplexPoly> complex_view(const std::vector<SymPoly>& v) {
  if (v.size() % 2) throw InputError("real representation of odd size");
  std::vector<ComplexPoly> out;
  for (std::size_t i = 0; i < v.size(); i += 2) out.push_back({v[i], v[i + 1]});
  return out;
}

}  // namespace abeldense
