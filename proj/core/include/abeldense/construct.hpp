#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "abeldense/density.hpp"
#include "abeldense/matrix.hpp"
#include "abeldense/sympoly.hpp"
#include "abeldense/tables.hpp"

namespace abeldense {

using PolyMatrix = Matrix<SymPoly>;

enum class TupleClass {
  diagonal_c,
  rotation_scaling_r,
  odd_r,
  toeplitz_c,
  toeplitz_r,
  triangular_r,
  triangular_c,
  diagonal_r,
};

enum class Field { real, complex };

std::string to_string(TupleClass c);
// Accepts tuple class names (DiagonalC, ...) and group class names (GL_R_even, ...).
std::optional<TupleClass> parse_tuple_class(std::string_view name);
GroupClass group_class_of(TupleClass c);
Field field_of(TupleClass c);
const std::vector<TupleClass>& all_tuple_classes();

// Fresh symbols for exponentials of symbolic reals, cached by argument.
// e^a is "exp_c0_<k>"; e^a cos(2 pi theta) and e^a sin(2 pi theta) are
// "expre_c0_<k>" and "expim_c0_<k>". Their Q-independence is declared.
class ExpSymbols {
 public:
  explicit ExpSymbols(BasisPtr basis) : basis_(std::move(basis)) {}

  SymPoly exp_real(const SymReal& a);
  ComplexPoly exp_turns(const SymReal& theta, const SymReal& a);

  const BasisPtr& basis() const noexcept { return basis_; }
  // Names of symbols introduced so far, with what they stand for.
  const std::vector<std::pair<std::string, std::string>>& fresh() const noexcept { return fresh_; }

 private:
  std::size_t add(const std::string& name, double value, const std::string& meaning);

  BasisPtr basis_;
  std::map<std::string, std::vector<std::size_t>> cache_;
  std::vector<std::pair<std::string, std::string>> fresh_;
  std::size_t counter_ = 0;
};

struct LieData {
  AbelianGroupSpec spec;
  GeneratorSet vectors;  // W: exp of these generate the semigroup
};

struct MatrixTuple {
  Field field = Field::real;
  std::size_t size = 0;  // n: complex size for complex classes
  TupleClass tuple_class = TupleClass::diagonal_r;
  BasisPtr basis;
  // Real representation: complex entries become 2x2 blocks [[re, -im], [im, re]].
  std::vector<PolyMatrix> matrices;
  std::vector<SymPoly> base_point;
  LieData lie;
  std::vector<std::pair<std::string, std::string>> fresh_symbols;
  std::vector<std::string> notes;

  std::size_t real_dimension() const { return base_point.size(); }
};

// Raised when a class/size has a tabulated count but no certified construction.
class NonConstructive : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

GeneratorSet make_dense_rn_generators(std::size_t n);
// Lie algebra vectors: completion of the lattice basis (lowest standard index
// first, or the given completion) plus sum alpha_i b_i with alpha_i = -sqrt(p_i).
GeneratorSet make_dense_group_generators(const AbelianGroupSpec& spec,
                                         const std::vector<RationalVector>& completion = {});
// Standard-vector completion of the lattice basis to a basis of R^n.
std::vector<RationalVector> complete_basis(const AbelianGroupSpec& spec);

AbelianGroupSpec tuple_spec(TupleClass c, std::size_t n);
MatrixTuple make_hypercyclic_tuple(TupleClass c, std::size_t n);

template <typename T>
Matrix<T> backward_shift(std::size_t n) {
  Matrix<T> m(n, n, T(0));
  for (std::size_t i = 1; i < n; ++i) m(i - 1, i) = T(1);
  return m;
}

template <typename T>
bool toeplitz_commutes_with_shift(const Matrix<T>& m) {
  if (!m.square()) return false;
  const Matrix<T> s = backward_shift<T>(m.rows());
  return m * s == s * m;
}

template <typename T>
bool toeplitz_polynomial_in_shift(const Matrix<T>& m) {
  if (!m.square()) return false;
  const std::size_t n = m.rows();
  Matrix<T> p(n, n, T(0));
  Matrix<T> power = Matrix<T>::identity(n, T(0), T(1));
  const Matrix<T> s = backward_shift<T>(n);
  for (std::size_t k = 0; k < n; ++k) {
    const T c = m(0, k);
    if (!(c == T(0)))
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (!(power(i, j) == T(0))) p(i, j) += c * power(i, j);
    power = power * s;
  }
  return p == m;
}

template <typename T>
bool toeplitz_constant_diagonals(const Matrix<T>& m) {
  if (!m.square()) return false;
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i > j && !(m(i, j) == T(0))) return false;
      if (i + 1 < n && j + 1 < n && !(m(i + 1, j + 1) == m(i, j))) return false;
    }
  return true;
}

// Common value of the three predicates; std::logic_error if they disagree.
template <typename T>
bool is_toeplitz(const Matrix<T>& m) {
  const bool a = toeplitz_commutes_with_shift(m);
  const bool b = toeplitz_polynomial_in_shift(m);
  const bool c = toeplitz_constant_diagonals(m);
  if (a != b || b != c) throw std::logic_error("Toeplitz predicates disagree");
  return a;
}

// Upper triangular Toeplitz matrix a_ij = profile[j - i].
struct ToeplitzMatrix {
  std::vector<SymPoly> profile;
  PolyMatrix dense() const;
};

ToeplitzMatrix toeplitz_product(const ToeplitzMatrix& a, const ToeplitzMatrix& b);
// exp(c0 I + N) = e^{c0} sum_{k<n} N^k / k!. A nonzero c0 needs symbols and
// must be a linear SymReal value.
ToeplitzMatrix exp_toeplitz(const std::vector<SymPoly>& c, ExpSymbols* symbols = nullptr);

bool commutes_exactly(const PolyMatrix& a, const PolyMatrix& b);
// Determinant sign via the block-triangular structure; nullopt when the
// matrix is not block triangular with 1x1/2x2 diagonal blocks.
std::optional<bool> is_invertible(const PolyMatrix& m);

struct BasePointCheck {
  bool ok = true;
  std::string reason;
};
BasePointCheck check_base_point(const MatrixTuple& t);

// Complex n x n view of a real representation (complex classes only).
Matrix<ComplexPoly> complex_view(const PolyMatrix& m);
std::vector<ComplexPoly> complex_view(const std::vector<SymPoly>& v);

}  // namespace abeldense
